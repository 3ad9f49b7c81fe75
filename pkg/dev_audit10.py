"""Axis identity of substitution + fibration basis, atom by atom."""
from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr
from mzvq.modulipolylog import fibration_basis
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()

SHAPES = [("~x", ("0", "x")), ("~x", ("1", "x")),
          ("~x", ("0", "1", "x")), ("~x", ("0", "x", "1")),
          ("~x", ("1", "1", "x")), ("~x", ("1", "x", "1")),
          ("~x", ("x", "0")), ("~x", ("x", "1"))]

for a, w in SHAPES:
    F = Expr.atom(a, w)
    sub = F.substitute({"~x": "x"})
    R = fibration_basis(sub, ("x",), "oo", table)
    bad = [k for k in R.terms for aa, ww in k[1] if "x" in ww]
    line = f"{a} {w}:"
    for q in (0.43, 1.57, -0.71):
        vals = []
        for dlt in (1e-3, 1e-5, 1e-7):
            z = q + 1j * dlt
            o = eval_expr(F, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
            r = eval_expr(R, {"0": 0j, "1": 1 + 0j, "x": z}, 0.0, ctx)
            vals.append(o - r)
        drift = abs(vals[0] - vals[2])
        line += f"  q={q}: gap {vals[2]:.6f} (drift {drift:.1e})"
    if bad:
        line += "  STILL HAS COLLISION ATOMS"
    print(line)
