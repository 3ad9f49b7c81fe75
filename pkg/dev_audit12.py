"""Decoupled continuation test: letter held at a fixed generic point."""
from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config, continue_loop
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()
config = Config(reals=("0", "1"), interior=())

SHAPES = [("~x", ("0", "y")), ("~x", ("1", "y")),
          ("~x", ("0", "1", "y")), ("~x", ("1", "1", "y")),
          ("~x", ("y", "0")), ("~x", ("0", "y", "1"))]

Y = 0.9 + 0.25j
CASES = [(0.43, ("1",)), (-0.71, ("1", "0"))]

for a, w in SHAPES:
    F = Expr.atom(a, w)
    line = f"{a} {w}:"
    for q, crossed in CASES:
        e = F
        for r in crossed:
            e = continue_loop(e, "~x", r, -1, config)
        for dlt in (1e-4,):
            z = q + 1j * dlt
            asg = {"0": 0j, "1": 1 + 0j, "x": z, "y": Y}
            o = eval_expr(F, asg, 0.0, ctx)
            r_ = eval_expr(e, asg, 0.0, ctx)
        line += f"  q={q}: gap {o - r_:.6f}"
    print(line)
