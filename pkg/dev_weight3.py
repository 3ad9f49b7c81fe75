"""Dev checks at weight 3: HKR m=3 (1/6) and Bernoulli n=2 (1/12)."""
from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior

table = load_reduction_table(default_table_path())
inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def cj(s, reals):
    if s in reals:
        return s
    return s[1:] if s.startswith("~") else "~" + s


def prop(p, s, reals):
    hol = (Expr.dlog(p, s) - Expr.dlog(cj(p, reals), s)) * inv2pi
    sb = cj(s, reals)
    if sb == s:
        return hol
    anti = (Expr.dlog(p, sb) - Expr.dlog(cj(p, reals), sb)) * inv2pi
    return hol * one_minus_t + anti * t


# HKR m=3: one interior vertex, edges to reals 0, 1, 2
reals3 = ("0", "1", "2")
omega = Expr.const(1)
for q in reals3:
    omega = omega * prop("z", q, reals3)
res = forget_interior(omega, "z", Config(reals=reals3, interior=()), table)
print("HKR3 result:", res)
print("HKR3 want  : 1/6")

# Bernoulli n=2: vertices z1, z2; edges z2>z1, z2>0, z1>0, z1>1
reals2 = ("0", "1")
omega = (prop("z2", "z1", reals2) * prop("z2", "0", reals2)
         * prop("z1", "0", reals2) * prop("z1", "1", reals2))
s1 = forget_interior(omega, "z2", Config(reals=reals2, interior=("z1",)),
                     table)
print("B2 stage1 terms:", len(s1.terms))
res = forget_interior(s1, "z1", Config(reals=reals2, interior=()), table)
print("B2 result:", res)
print("B2 want  : 1/12")
