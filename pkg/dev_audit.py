"""Numeric audit: quad_fibre sanity on the wedge, then the B2 chain."""
import cmath
import sys

from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior
from mzvq.numoracle import NumericContext, quad_fibre

table = load_reduction_table(default_table_path())
ctx = NumericContext()

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def cj(s, reals):
    if s in reals:
        return s
    return s[1:] if s.startswith("~") else "~" + s


def prop(p, s, reals):
    hol = (Expr.dlog(p, s, ) - Expr.dlog(cj(p, reals), s)) * inv2pi
    sb = cj(s, reals)
    if sb == s:
        return hol
    anti = (Expr.dlog(p, sb) - Expr.dlog(cj(p, reals), sb)) * inv2pi
    return hol * one_minus_t + anti * t


which = sys.argv[1] if len(sys.argv) > 1 else "wedge"

if which == "wedge":
    # wedge with interior x and real 0, harmonic t=1/2
    reals = ("0",)
    omega = prop("z", "x", reals) * prop("z", "0", reals)
    x = 0.4 + 0.8j
    val = quad_fibre(omega, "z", {"x": x, "0": 0.0 + 0j}, 0.5, ctx)
    golden = cmath.log((x - 0) / (0 - x.conjugate())) / (1j * cmath.pi)
    print("wedge quad :", val)
    print("wedge gold :", golden)
    print("diff       :", abs(val - golden))
elif which == "b2":
    reals = ("0", "1")
    omega = (prop("z2", "z1", reals) * prop("z2", "0", reals)
             * prop("z1", "0", reals) * prop("z1", "1", reals))
    s1 = forget_interior(omega, "z2", Config(reals=reals, interior=("z1",)),
                         table)
    tv = float(sys.argv[2]) if len(sys.argv) > 2 else 0.0
    val = quad_fibre(s1, "z1", {"0": 0j, "1": 1.0 + 0j}, tv, ctx)
    print("B2 stage1 numeric over H:", val)
    print("want 1/12 =", 1.0 / 12)
