"""Per-component numeric audit of the final B2 pushforward stage (t=0)."""
import cmath
from fractions import Fraction

from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config, conj
from mzvq.pushforward import (forget_interior, _restriction, _primitive,
                              boundary_contribution, _base_reg)
from mzvq.svcalculus import sv_primitive
from mzvq.numoracle import NumericContext, eval_expr, _two_form_integrand, \
    _positions
from mzvq.words import decompose_left
from mzvq.constants import binary_value

table = load_reduction_table(default_table_path())
ctx = NumericContext()
TV = 0.0
TWO_I_PI = 2j * cmath.pi

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


from dev_zeta3_stage2 import cur2 as s1
cfg = Config(reals=REALS, interior=())
alpha = sv_primitive(s1, "x", (), table, check=True)
print("alpha keys:", sorted(alpha.keys()))

BASEPTS = {"0": 0j, "1": 1 + 0j}


def ev(expr, z):
    assign = dict(BASEPTS)
    assign["x"] = z
    return eval_expr(expr, assign, TV, ctx)


# --- Check A: d(alpha) == omega_s1 on the fibre --------------------------
f_int = _two_form_integrand(s1, "x", _positions(dict(BASEPTS)), TV, ctx)
for z in (0.37 + 0.61j, -0.8 + 1.3j, 1.9 + 0.45j):
    h = 1e-5
    total = 0j
    for s, A in alpha.items():
        Au = (ev(A, z + h) - ev(A, z - h)) / (2 * h)
        Av = (ev(A, z + 1j * h) - ev(A, z - 1j * h)) / (2 * h)
        dz_A = (Au - 1j * Av) / 2
        dzb_A = (Au + 1j * Av) / 2
        if s == "~x":
            total += (-dz_A - dzb_A) / (z - z.conjugate())
        else:
            total += -dzb_A / (z - BASEPTS[s])
    ref = f_int(z)
    print(f"A: d(alpha) at {z}: {total:.8f} vs omega {ref:.8f} "
          f"diff {abs(total-ref):.2e}")

# --- Check B: restrictions agree with alpha on each interval -------------
delta = 1e-6
rest = {}
for i, q in enumerate(REALS):
    crossed = tuple(reversed(REALS[i + 1:]))
    rest[q] = _restriction(alpha, "x", crossed, cfg, table)
rest[None] = _restriction(alpha, "x", tuple(reversed(REALS)), cfg, table)

samples = {"0": 0.43, "1": 1.57, None: -0.71}
for q, x in samples.items():
    z = x + 1j * delta
    lhs = 0j
    for s, A in alpha.items():
        if s == "~x":
            continue  # dlog(z - zbar) pulls back to zero on the axis
        lhs += ev(A, z) / (z - BASEPTS[s])
    rhs = 0j
    for s, B in rest[q].items():
        if s == "~x":
            print(f"B: interval {q}: restriction still has ~x key!")
            continue
        rhs += ev(B, z) / (z - BASEPTS[s])
    print(f"B: interval {q} at x={x}: alpha {lhs:.8f} vs beta {rhs:.8f} "
          f"diff {abs(lhs-rhs):.2e}")

# --- Check C: primitives integrate the restrictions ----------------------
import mpmath as mp
for q, (x1, x2) in {"0": (0.3, 0.6), "1": (1.3, 1.9),
                    None: (-1.4, -0.5)}.items():
    f = _primitive(rest[q], "x")
    dF = ev(f, x2 + 1j * delta) - ev(f, x1 + 1j * delta)

    def integrand(x):
        z = complex(x) + 1j * delta
        tot = 0j
        for s, B in rest[q].items():
            if s == "~x":
                continue
            tot += ev(B, z) / (z - BASEPTS[s])
        return mp.mpc(tot)

    ref = complex(mp.quad(integrand, [x1, x2]))
    print(f"C: interval {q}: f({x2})-f({x1}) = {dF:.8f} vs quad {ref:.8f} "
          f"diff {abs(dF-ref):.2e}")

# --- Check D: graded endpoint reconstruction -----------------------------
def graded_reconstruction(f, point, side, dlt):
    """Full value of f near the point from the shuffle decomposition,
    resolving point atoms as canonical right values."""
    if side == "right":
        v = cmath.log(dlt) / TWO_I_PI
        z = float(BASEPTS[point].real) + dlt + 1j * delta
    else:
        v = (cmath.log(dlt) + 1j * cmath.pi) / TWO_I_PI
        z = float(BASEPTS[point].real) - dlt + 1j * delta
    total = 0j
    for (slots, atoms), c in f.terms.items():
        assert not slots
        coeff = complex(ctx.tpoly_numeric(c, TV))
        others = 1.0 + 0j
        word = None
        for a, w in atoms:
            if a == "x":
                word = w
            else:
                others *= complex(
                    ctx.mzv_numeric(binary_value(w, a, "right", table)))
        if word is None:
            total += coeff * others
            continue
        for j, vec in decompose_left({word: Fraction(1)}, point).items():
            for w2, cw in vec.items():
                val = complex(
                    ctx.mzv_numeric(binary_value(w2, point, "right", table))) \
                    if w2 else 1.0
                total += coeff * others * float(cw) * v ** j * val
    return total, z


for q in REALS:
    fq = _primitive(rest[q], "x")
    for side in ("right", "left"):
        dlt = 1e-4
        recon, z = graded_reconstruction(fq, q, side, dlt)
        direct = ev(fq, z)
        print(f"D: f_{q} {side} of {q}: recon {recon:.8f} vs "
              f"direct {direct:.8f} diff {abs(recon-direct):.2e}")

fref = _primitive(rest[None], "x")
recon, z = graded_reconstruction(fref, "0", "left", 1e-4)
direct = ev(fref, z)
print(f"D: f_ref left of 0: recon {recon:.8f} vs direct {direct:.8f} "
      f"diff {abs(recon-direct):.2e}")
