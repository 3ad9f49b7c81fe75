"""Stage-2 certification: cur2 = integral of cur1 over z, pointwise in x."""
import numpy as np

from mzvq.hyperlog import Config
from mzvq.numoracle import _two_form_integrand, _positions
from mzvq.pushforward import forget_interior
from dev_zeta3_num import omega, quad2d, table, REALS, TV, ctx
from dev_zeta3_stage1 import cur1, c1_sym

cur2 = forget_interior(cur1, "z", Config(reals=REALS, interior=("x",)),
                       table)
print("after z:", len(cur2.terms), "terms")

x = 0.4 + 0.8j
assign = _positions({"0": 0j, "1": 1 + 0j})
sym = _two_form_integrand(cur2, "x", assign, TV, ctx)(x)


def integrand(zs):
    return np.array([c1_sym(x, z) for z in zs])


num = quad2d(integrand, [0.0, 1.0, x.real], [x.imag], 14)
num2 = quad2d(integrand, [0.0, 1.0, x.real], [x.imag], 20)
print(f"x={x}: sym {sym:.7f} num {num2:.7f} "
      f"(conv {abs(num-num2):.1e}) diff {abs(sym-num2):.2e}")
