"""Dev check: tadpole pushforward (edges yx, y0, xy; forget y)."""
from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior, reduce_logs

table = load_reduction_table(default_table_path())

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def propagator(var, cvar, s, sb):
    hol = (Expr.dlog(var, s) - Expr.dlog(cvar, s)) * inv2pi
    if sb == s:
        return hol
    anti = (Expr.dlog(var, sb) - Expr.dlog(cvar, sb)) * inv2pi
    return hol * one_minus_t + anti * t


config = Config(reals=("0",), interior=("x",))
omega = (propagator("y", "~y", "x", "~x")
         * propagator("y", "~y", "0", "0")
         * propagator("x", "~x", "y", "~y"))

total = forget_interior(omega, "y", config, table)
print("total:", total)

L0x = Expr.atom("x", ("0",))
L0xb = Expr.atom("~x", ("0",))
Lxbx = Expr.atom("x", ("~x",))
coeff = (L0x - L0xb - Expr.const(Mzv.rational(1) / 2)) * t \
    - (Lxbx - L0x) * one_minus_t - (Lxbx - L0x) * t * (-2) * 0
# (1-2t) = one_minus_t - t
coeff = (L0x - L0xb - Expr.const(Mzv.rational(1) / 2)) * t \
    - (Lxbx - L0x) * (one_minus_t - t)
alpha_x0 = (Expr.dlog("x", "0") - Expr.dlog("~x", "0")) * inv2pi
want = reduce_logs(coeff * alpha_x0, config)
print("want :", want)
print("match:", total == want)
assert total == want
print("TADPOLE OK")
