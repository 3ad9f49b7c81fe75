"""Validate the re-anchored interval basis against canonical numerics."""
from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.hyperlog import Expr
from mzvq.modulipolylog import crossed_basis
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()

PAIR_SHAPES = [("0", "x"), ("1", "x"),
               ("0", "0", "x"), ("0", "1", "x"), ("1", "0", "x"),
               ("1", "1", "x"),
               ("0", "x", "0"), ("0", "x", "1"), ("1", "x", "0"),
               ("1", "x", "1"),
               ("0", "x", "x"), ("1", "x", "x")]

LOWER_SHAPES = [("0",), ("1",), ("0", "0"), ("0", "1"), ("1", "0"),
                ("1", "1"), ("0", "0", "1"), ("0", "1", "0"),
                ("1", "0", "1"), ("1", "1", "0")]

CONST_SHAPES = [("1", ("x",)), ("1", ("0", "x")),
                ("1", ("x", "0")), ("1", ("x", "1")), ("1", ("x", "x")),
                ("0", ("x",)), ("0", ("x", "1")), ("0", ("1", "x"))]

DLT = 1e-7
CASES = [(("1",), [0.13, 0.43, 0.81]), (("1", "0"), [-0.45, -1.3])]


def check(F, label):
    line = f"{label}:"
    for crossed, qs in CASES:
        VF = crossed_basis(F, "x", crossed, table)
        worst = 0.0
        for q in qs:
            z = q + 1j * DLT
            asg = {"0": 0j, "1": 1 + 0j, "x": z}
            o = eval_expr(F, asg, 0.0, ctx)
            r = eval_expr(VF, asg, 0.0, ctx)
            worst = max(worst, abs(o - r))
        line += f"  {crossed}: {worst:.2e}"
    print(line)


print("== pair atoms ==")
for w in PAIR_SHAPES:
    check(Expr.atom("~x", w), f"~x {w}")

print("== lower-branch atoms ==")
for w in LOWER_SHAPES:
    check(Expr.atom("~x", w), f"~x {w}")

print("== constant-argument atoms ==")
for a, w in CONST_SHAPES:
    check(Expr.atom(a, w), f"{a} {w}")
