"""Axis identity with continuation: per-atom beta vs alpha on each interval."""
from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config, continue_loop
from mzvq.modulipolylog import fibration_basis
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()
config = Config(reals=("0", "1"), interior=())

SHAPES = [("~x", ("0", "x")), ("~x", ("1", "x")),
          ("~x", ("0", "1", "x")), ("~x", ("0", "x", "1")),
          ("~x", ("1", "1", "x")), ("~x", ("1", "x", "1")),
          ("~x", ("1", "0")), ("~x", ("0", "1"))]

CASES = [(0.43, ("1",)), (-0.71, ("1", "0"))]

for a, w in SHAPES:
    F = Expr.atom(a, w)
    line = f"{a} {w}:"
    for q, crossed in CASES:
        e = F
        for r in crossed:
            e = continue_loop(e, "~x", r, -1, config)
        e = e.substitute({"~x": "x"})
        R = fibration_basis(e, ("x",), "oo", table)
        vals = []
        for dlt in (1e-3, 1e-5, 1e-7):
            z = q + 1j * dlt
            o = eval_expr(F, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
            r_ = eval_expr(R, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
            vals.append(o - r_)
        drift = abs(vals[0] - vals[2])
        line += f"  q={q}: gap {vals[2]:.6f} (drift {drift:.1e})"
    print(line)
