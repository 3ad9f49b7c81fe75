"""Dev check: wedge pushforward with two interior endpoints, symbolic t."""
from mzvq.coeffring import Mzv, TPoly, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior

table = load_reduction_table(default_table_path())

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})


def propagator(var, s, config):
    cv = "~" + var
    sb = config.conj(s)
    hol = (Expr.dlog(var, s) - Expr.dlog(cv, s)) * inv2pi
    if sb == s:
        return hol
    anti = (Expr.dlog(var, sb) - Expr.dlog(cv, sb)) * inv2pi
    return hol * one_minus_t + anti * t


config = Config(reals=(), interior=("x", "y"))
omega = propagator("z", "x", config) * propagator("z", "y", config)

total = forget_interior(omega, "z", config, table)
want = Expr.atom("x", ("~y",)) - Expr.atom("y", ("~x",))
print("total:", total)
print("match:", total == want)
assert total == want
