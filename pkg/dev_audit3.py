"""forget_interior of the plain one-real wedge vs quad_fibre."""
from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior
from mzvq.numoracle import NumericContext, eval_expr

table = load_reduction_table(default_table_path())
ctx = NumericContext()

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def prop(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog("~" + p, s)) * inv2pi
    if s == "0":
        return hol
    sb = "~" + s if not s.startswith("~") else s[1:]
    anti = (Expr.dlog(p, sb) - Expr.dlog("~" + p, sb)) * inv2pi
    return hol * one_minus_t + anti * t


config = Config(reals=("0",), interior=("x",))
omega = prop("z", "x") * prop("z", "0")
total = forget_interior(omega, "z", config, table)
print("symbolic:", total)

half = Expr.atom("x", ("0",)) - Expr.atom("0", ("~x",))
print("equals (1/2ipi)log form:", total == half)
print("equals (1/ipi)log form :", total == half * 2)

x = 0.4 + 0.8j
num = eval_expr(total, {"x": x, "0": 0j}, 0.5, ctx)
print("symbolic numeric at t=1/2:", num)
print("quad reference          : -0.14758 (half) vs -0.29517 (full)")
