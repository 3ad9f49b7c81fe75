"""Dev check: full wedge pushforward (worked example, t = 1/2)."""
from fractions import Fraction

from mzvq.coeffring import Mzv, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior, residue_at, \
    holomorphic_restriction, _primitive
from mzvq.svcalculus import sv_primitive

table = load_reduction_table(default_table_path())

half = Mzv.rational(Fraction(1, 2))
inv2pi = Mzv.two_i_pi_pow(-1)


def prop_half(var, s, sbar):
    cv = "~" + var
    e = (Expr.dlog(var, s) - Expr.dlog(cv, s)
         + Expr.dlog(var, sbar) - Expr.dlog(cv, sbar))
    return e * (half * inv2pi)


def prop_real(var, q):
    cv = "~" + var
    return (Expr.dlog(var, q) - Expr.dlog(cv, q)) * inv2pi


omega = prop_half("z", "x", "~x") * prop_real("z", "q") * 2
config = Config(reals=("q",), interior=("x",))

alpha = sv_primitive(omega, "z", config.interior)
print("alpha components:", sorted(alpha))

res = residue_at(alpha, "z", "x")
print("residue_at:", res)
assert res == Expr.atom("~x", ("q",)), "residue golden failed"

beta_q = holomorphic_restriction(alpha, "z", "q", config, table)
print("beta_q:")
for s, B in sorted(beta_q.items()):
    print("  ", s, B)
f_q = _primitive(beta_q, "z")
print("f_q:", f_q)
want_fq = (Expr.atom("z", ("x", "q")) + Expr.atom("z", ("~x", "q"))
           - 2 * Expr.atom("z", ("q", "x")) - Expr.atom("z", ("q", "~x")))
assert f_q == want_fq, "f_q golden failed"

beta_inf = holomorphic_restriction(alpha, "z", None, config, table)
f_inf = _primitive(beta_inf, "z")
want_finf = want_fq - Expr.atom("z", ("x",)) - Expr.atom("z", ("~x",))
print("f_inf ok:", f_inf == want_finf)
assert f_inf == want_finf, "f_inf golden failed"

total = forget_interior(omega, "z", config, table)
print("total:", total)
from mzvq.pushforward import reduce_logs
want = reduce_logs(
    3 * Expr.atom("x", ("q",)) - Expr.atom("~x", ("q",))
    - Expr.atom("q", ("x",)) - Expr.atom("q", ("~x",)) - 1, config)
print("match:", total == want)
assert total == want, "wedge total failed"
print("WEDGE OK")
