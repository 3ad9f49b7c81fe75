"""Dev check: zeta(3) graph weight via iterated pushforward.

Graph (3,2): interior x, y, z; boundary 0, 1; edges yx, y0, xy, x1, zx, z1.
Expected integral: (1 - 2t) * zeta3/(2 pi i)^3.
"""
import sys
import time

from mzvq.coeffring import LABELS, Mzv, TPoly, load_reduction_table, \
    default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior

table = load_reduction_table(default_table_path())

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})

REALS = ("0", "1")


def cj(s):
    return s if s in REALS else ("~" + s if not s.startswith("~") else s[1:])


def propagator(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog(cj(p), s)) * inv2pi
    if cj(s) == s:
        return hol
    anti = (Expr.dlog(p, cj(s)) - Expr.dlog(cj(p), cj(s))) * inv2pi
    return hol * one_minus_t + anti * t


EDGES = [("y", "x"), ("y", "0"), ("x", "y"), ("x", "1"),
         ("z", "x"), ("z", "1")]

omega = Expr.const(1)
for a, b in EDGES:
    omega = omega * propagator(a, b)

order = sys.argv[1:] or ["y", "z", "x"]
staircase = [v for v in ("x", "y", "z") if v not in order or True]
cur = omega
remaining = ["x", "y", "z"]
for var in order:
    remaining.remove(var)
    config = Config(reals=REALS, interior=tuple(remaining))
    t0 = time.time()
    cur = forget_interior(cur, var, config, table)
    print(f"eliminated {var} in {time.time()-t0:.2f}s, "
          f"{len(cur.terms)} terms")

print("result:", cur)
z3n = LABELS["z3"]
want = Expr({((), ()): TPoly({0: z3n, 1: -2 * z3n})})
print("want  :", want)
print("match :", cur == want)
