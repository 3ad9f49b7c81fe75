"""Fit crossing corrections of constant-arg atoms with x letters."""
import numpy as np
from fractions import Fraction

from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr
from mzvq.modulipolylog import fibration_basis
from mzvq.numoracle import NumericContext, eval_expr

from dev_fit import basis_vals, fit, NAMES, QS, DLT

table = load_reduction_table(default_table_path())
ctx = NumericContext()

SHAPES = [("1", ("x",)), ("1", ("0", "x")), ("1", ("1", "x")),
          ("1", ("x", "0")), ("1", ("x", "1")), ("1", ("x", "x")),
          ("0", ("x",)), ("0", ("x", "1")), ("0", ("1", "x"))]

for a, w in SHAPES:
    F = Expr.atom(a, w)
    R = fibration_basis(F, ("x",), "oo", table)
    deltas, rows = [], []
    for q in QS:
        z = q + 1j * DLT
        o = eval_expr(F, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
        r = eval_expr(R, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
        deltas.append(o - r)
        rows.append(basis_vals(z))
    c, ok, resid = fit(deltas, rows)
    terms = " + ".join(f"({f})*{n}" for f, n in zip(c, NAMES) if f)
    print(f"{a} {w}: {terms or '0'}   resid {resid:.1e} {'OK' if ok else 'BAD'}")
