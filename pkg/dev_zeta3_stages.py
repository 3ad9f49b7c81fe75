"""Isolate the zeta3 pipeline stages against the factorized form."""
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


config_x = Config(reals=REALS, interior=("x",))

# mu: tadpole pushforward over y (verified against the paper lemma)
tad = (propagator("y", "x") * propagator("y", "0") * propagator("x", "y"))
mu = forget_interior(tad, "y", config_x, table)
print("mu terms:", len(mu.terms))

# nu: wedge pushforward over z (verified)
wedge = propagator("z", "x") * propagator("z", "1")
nu = forget_interior(wedge, "z", config_x, table)
print("nu:", nu)

target = mu * propagator("x", "1") * nu

# pipeline stages
omega = Expr.const(1)
for a, b in [("y", "x"), ("y", "0"), ("x", "y"), ("x", "1"),
             ("z", "x"), ("z", "1")]:
    omega = omega * propagator(a, b)

s1 = forget_interior(omega, "y", Config(reals=REALS, interior=("x", "z")),
                     table)
s2 = forget_interior(s1, "z", config_x, table)
print("stage2 == factorized:", s2 == target)
if s2 != target:
    diff = s2 - target
    print("diff terms:", len(diff.terms))
    for k, v in sorted(diff.terms.items())[:10]:
        print("  ", k, v)

final_t = forget_interior(target, "x", Config(reals=REALS, interior=()),
                          table)
z3n = LABELS["z3"]
want = Expr({((), ()): TPoly({0: z3n, 1: -2 * z3n})})
print("final from factorized:", final_t)
print("matches zeta3 golden :", final_t == want)
