"""Same audit as dev_audit4 but on the verified one-real wedge."""
import cmath
from fractions import Fraction

from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import _restriction, _primitive
from mzvq.svcalculus import sv_primitive
from mzvq.numoracle import NumericContext, eval_expr, _two_form_integrand, \
    _positions
from mzvq.words import decompose_left
from mzvq.constants import binary_value

table = load_reduction_table(default_table_path())
ctx = NumericContext()
TV = 0.5
TWO_I_PI = 2j * cmath.pi
X = 0.4 + 0.8j

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def prop(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog("~" + p, s)) * inv2pi
    if s == "0":
        return hol
    sb = "~" + s
    anti = (Expr.dlog(p, sb) - Expr.dlog("~" + p, sb)) * inv2pi
    return hol * one_minus_t + anti * t


cfg = Config(reals=("0",), interior=("x",))
omega = prop("z", "x") * prop("z", "0")
alpha = sv_primitive(omega, "z", ("x",), check=True)
print("alpha keys:", sorted(alpha.keys()))

BASEPTS = {"0": 0j, "x": X, "~x": X.conjugate()}


def ev(expr, z):
    assign = dict(BASEPTS)
    assign["z"] = z
    return eval_expr(expr, assign, TV, ctx)


f_int = _two_form_integrand(omega, "z", _positions({"0": 0j, "x": X}),
                            TV, ctx)
for z in (0.9 + 1.4j, -0.6 + 0.5j):
    h = 1e-5
    total = 0j
    for s, A in alpha.items():
        Au = (ev(A, z + h) - ev(A, z - h)) / (2 * h)
        Av = (ev(A, z + 1j * h) - ev(A, z - 1j * h)) / (2 * h)
        dz_A = (Au - 1j * Av) / 2
        dzb_A = (Au + 1j * Av) / 2
        if s == "~z":
            total += (-dz_A - dzb_A) / (z - z.conjugate())
        else:
            total += -dzb_A / (z - BASEPTS[s])
    ref = f_int(z)
    print(f"A: d(alpha) at {z}: {total:.8f} vs omega {ref:.8f} "
          f"diff {abs(total-ref):.2e}")

delta = 1e-6
rest = {"0": _restriction(alpha, "z", (), cfg, table),
        None: _restriction(alpha, "z", ("0",), cfg, table)}
for q, x in {"0": 0.43, None: -0.71}.items():
    zz = x + 1j * delta
    lhs = 0j
    for s, A in alpha.items():
        if s == "~z":
            continue
        lhs += ev(A, zz) / (zz - BASEPTS[s])
    rhs = 0j
    for s, B in rest[q].items():
        if s == "~z":
            print(f"B: interval {q}: restriction still has ~z key!")
            continue
        rhs += ev(B, zz) / (zz - BASEPTS[s])
    print(f"B: interval {q} at x={x}: alpha {lhs:.8f} vs beta {rhs:.8f} "
          f"diff {abs(lhs-rhs):.2e}")

import mpmath as mp
for q, (x1, x2) in {"0": (0.9, 1.7), None: (-1.4, -0.5)}.items():
    f = _primitive(rest[q], "z")
    dF = ev(f, x2 + 1j * delta) - ev(f, x1 + 1j * delta)

    def integrand(xx):
        zz = complex(xx) + 1j * delta
        tot = 0j
        for s, B in rest[q].items():
            if s == "~z":
                continue
            tot += ev(B, zz) / (zz - BASEPTS[s])
        return mp.mpc(tot)

    ref = complex(mp.quad(integrand, [x1, x2]))
    print(f"C: interval {q}: f({x2})-f({x1}) = {dF:.8f} vs quad {ref:.8f} "
          f"diff {abs(dF-ref):.2e}")
