"""Fit the per-crossing correction of collided atoms in the x-atom basis."""
import numpy as np
from fractions import Fraction

from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr
from mzvq.modulipolylog import fibration_basis
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()

BASIS = [None, "z3", ("0",), ("1",), ("0", "0"), ("0", "1"),
         ("1", "0"), ("1", "1")]
NAMES = ["1", "z3h", "L0", "L1", "L00", "L01", "L10", "L11"]

QS = [0.05, 0.15, 0.28, 0.43, 0.55, 0.62, 0.77, 0.84, 0.93]
DLT = 1e-7
Z3H = 1.2020569031595943 / (2j * np.pi) ** 3


def basis_vals(z):
    out = []
    for b in BASIS:
        if b is None:
            out.append(1.0 + 0j)
        elif b == "z3":
            out.append(complex(Z3H))
        else:
            out.append(eval_expr(Expr.atom("x", b),
                                 {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx))
    return out


def fit(deltas, rows):
    A = np.array(rows)          # nq x nb complex
    b = np.array(deltas)
    M = np.vstack([A.real, A.imag])
    y = np.concatenate([b.real, b.imag])
    c, res, _, _ = np.linalg.lstsq(M, y, rcond=None)
    out = []
    ok = True
    for v in c:
        f = Fraction(v).limit_denominator(48)
        if abs(float(f) - v) > 2e-4:
            ok = False
        out.append(f)
    resid = np.abs(M @ np.array([float(f) for f in out]) - y).max()
    return out, ok, resid


SHAPES = [("0", "x"), ("1", "x"),
          ("0", "0", "x"), ("0", "1", "x"), ("1", "0", "x"), ("1", "1", "x"),
          ("0", "x", "0"), ("0", "x", "1"), ("1", "x", "0"), ("1", "x", "1"),
          ("0", "x", "x"), ("1", "x", "x")]

for w in SHAPES:
    F = Expr.atom("~x", w)
    R = fibration_basis(F.substitute({"~x": "x"}), ("x",), "oo", table)
    deltas, rows = [], []
    for q in QS:
        z = q + 1j * DLT
        o = eval_expr(F, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
        r = eval_expr(R, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
        deltas.append(o - r)
        rows.append(basis_vals(z))
    c, ok, resid = fit(deltas, rows)
    terms = " + ".join(f"({f})*{n}" for f, n in zip(c, NAMES) if f)
    print(f"{w}: {terms or '0'}   resid {resid:.1e} {'OK' if ok else 'BAD'}")
