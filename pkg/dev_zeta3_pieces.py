"""Per-piece values of the final pushforward stage of the zeta3 wheel."""
from mzvq.coeffring import LABELS, Mzv, TPoly, load_reduction_table, \
    default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior, reduce_logs
from mzvq.constants import resolve_constants

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

cur = omega
cur = forget_interior(cur, "y", Config(reals=REALS, interior=("x", "z")),
                      table)
print("after y:", len(cur.terms), "terms")
cur = forget_interior(cur, "z", Config(reals=REALS, interior=("x",)), table)
print("after z:", len(cur.terms), "terms")

pieces = {}
cfg = Config(reals=REALS, interior=())
final = forget_interior(cur, "x", cfg, table, pieces=pieces)
print("final:", final)

for key in sorted(pieces, key=str):
    e = reduce_logs(resolve_constants(pieces[key], table), cfg)
    print(key, "->", e)
