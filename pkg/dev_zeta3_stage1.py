"""Stage-1 certification: cur1 = integral of omega over y, pointwise in x,z."""
import numpy as np

from mzvq.hyperlog import Config
from mzvq.numoracle import NumericContext, _atom_values, _positions
from dev_zeta3_num import (omega, f6_vec, quad2d, table, REALS, TV, ctx,
                           COLS)
from mzvq.pushforward import forget_interior

cur1 = forget_interior(omega, "y", Config(reals=REALS, interior=("x", "z")),
                       table)
print("after y:", len(cur1.terms), "terms")

C4 = {"x": 0, "~x": 1, "z": 2, "~z": 3}


def c1_sym(x, z):
    assign = _positions({"0": 0j, "1": 1 + 0j, "x": x, "z": z})
    atom_vals = _atom_values(cur1, assign)
    total = 0j
    for (slots, atoms), c in cur1.terms.items():
        assert len(slots) == 4
        M = np.zeros((4, 4), complex)
        for i, (p, q) in enumerate(slots):
            d = 1.0 / (assign[p] - assign[q])
            if p in C4:
                M[i, C4[p]] += d
            if q in C4:
                M[i, C4[q]] -= d
        v = complex(ctx.tpoly_numeric(c, TV)) * np.linalg.det(M)
        for a, w in atoms:
            v *= atom_vals[(a, w)]
        total += v
    return total


for x, z in ((0.4 + 0.8j, 1.3 + 0.6j), (-0.6 + 0.5j, 0.7 + 1.1j),
             (0.8 + 0.3j, 0.2 + 0.9j)):
    num = quad2d(lambda ys: f6_vec(x, z, ys),
                 [0.0, 1.0, x.real, z.real], [x.imag, z.imag], 24)
    num2 = quad2d(lambda ys: f6_vec(x, z, ys),
                  [0.0, 1.0, x.real, z.real], [x.imag, z.imag], 32)
    sym = c1_sym(x, z)
    print(f"x={x} z={z}: sym {sym:.7f} num {num2:.7f} "
          f"(conv {abs(num-num2):.1e}) diff {abs(sym-num2):.2e}")
