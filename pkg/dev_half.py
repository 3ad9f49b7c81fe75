"""Dev check: one interior vertex, edges to 0 and 1; weight should be 1/2."""
from mzvq.coeffring import Mzv, load_reduction_table, default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior

table = load_reduction_table(default_table_path())
inv2pi = Mzv.two_i_pi_pow(-1)


def prop(p, s):
    return (Expr.dlog(p, s) - Expr.dlog("~" + p, s)) * inv2pi


omega = prop("z", "0") * prop("z", "1")
config = Config(reals=("0", "1"), interior=())
res = forget_interior(omega, "z", config, table)
print("result:", res)
print("want  : 1/2")
