"""Does fibre_components reproduce the two-form? Numeric comparison."""
import cmath

from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config, fibre_components
from mzvq.pushforward import forget_interior
from mzvq.numoracle import NumericContext, eval_expr, _two_form_integrand, \
    _positions

table = load_reduction_table(default_table_path())
ctx = NumericContext()
TV = 0.0

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})

REALS = ("0", "1")


def cj(s):
    if s in REALS:
        return s
    return s[1:] if s.startswith("~") else "~" + s


def prop(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog(cj(p), s)) * inv2pi
    sb = cj(s)
    if sb == s:
        return hol
    anti = (Expr.dlog(p, sb) - Expr.dlog(cj(p), sb)) * inv2pi
    return hol * one_minus_t + anti * t


omega = (prop("z2", "z1") * prop("z2", "0")
         * prop("z1", "0") * prop("z1", "1"))
s1 = forget_interior(omega, "z2", Config(reals=REALS, interior=("z1",)),
                     table)

BASEPTS = {"0": 0j, "1": 1 + 0j}
f_int = _two_form_integrand(s1, "z1", _positions(dict(BASEPTS)), TV, ctx)

comps = fibre_components(s1, "z1")
print("component keys:", sorted(comps.keys(), key=str))

for z in (0.37 + 0.61j, -0.8 + 1.3j, 1.9 + 0.45j):
    assign = dict(BASEPTS)
    assign["z1"] = z
    assign["~z1"] = z.conjugate()
    total = 0j
    for (tt, s), pieces in comps.items():
        if tt is None or s is None:
            continue
        carrier = Expr()
        for base_slots, atoms, c in pieces:
            assert not base_slots, f"base slots left: {base_slots}"
            carrier = carrier + Expr.term(c, (), atoms)
        cval = eval_expr(carrier, {"0": 0j, "1": 1 + 0j, "z1": z}, TV, ctx)
        tpos = assign[tt] if tt != "z1" else z
        # component dlog(~z1 - t) ^ dlog(z1 - s)
        # dz coeff of dlog(~z1-t): 0 unless t == z1 (pair z1,~z1)
        zb = z.conjugate()
        if tt == "z1":
            a1 = -1.0 / (zb - z)
            b1 = 1.0 / (zb - z)
        else:
            a1 = 0.0
            b1 = 1.0 / (zb - assign[tt])
        a2 = 1.0 / (z - assign[s])
        b2 = 0.0
        total += cval * (a1 * b2 - b1 * a2)
    ref = f_int(z)
    print(f"recon at {z}: {total:.8f} vs omega {ref:.8f} "
          f"diff {abs(total-ref):.2e}")
