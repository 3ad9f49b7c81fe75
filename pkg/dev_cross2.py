"""Symbolic gap of the re-anchored basis versus fitted crossing targets."""
from fractions import Fraction

from mzvq.coeffring import load_reduction_table, default_table_path, Mzv
from mzvq.hyperlog import Expr
from mzvq.modulipolylog import crossed_basis, fibration_basis

table = load_reduction_table(default_table_path())


def L(*w):
    return Expr.atom("x", tuple(w))


def C(num, den=1):
    return Expr.const(Mzv.rational(Fraction(num, den)))


TARGETS = {
    ("0", "x"): Expr(),
    ("0", "0", "x"): Expr(),
    ("0", "x", "0"): Expr(),
    ("0", "x", "x"): Expr(),
    ("1", "x"): C(1, 2) - L("1"),
    ("0", "1", "x"): C(1, 2) * L("0") - L("0", "1") - L("1", "0"),
    ("1", "0", "x"): C(1, 12) - C(1, 2) * L("0") + L("0", "1"),
    ("1", "1", "x"): C(-1, 6) + C(1, 2) * L("1") - L("1", "1"),
    ("0", "x", "1"): C(-1, 24) - L("0", "0") + L("1", "0"),
    ("1", "x", "0"): C(-1, 12) + C(1, 2) * L("0") - L("0", "1"),
    ("1", "x", "1"): C(-1, 8) + C(1, 2) * L("1") - L("1", "1"),
    ("1", "x", "x"): C(-1, 8) + C(1, 2) * L("1") - L("1", "1"),
}

for w, target in TARGETS.items():
    F = Expr.atom("x", w)
    R = fibration_basis(F, ("x",), "oo", table)
    VF = crossed_basis(F, "x", ("1",), table)
    gap = (VF - R) - target
    print(f"{w}: {'OK' if not gap else gap}")
