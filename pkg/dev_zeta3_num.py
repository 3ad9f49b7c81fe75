"""Numeric certification of the zeta3 wheel stages.

Compares the symbolic two-form in x (after eliminating y and z) against
a direct 4-dim quadrature of the top coefficient of omega over (y, z).
"""
import math
import sys

import numpy as np

from mzvq.coeffring import Mzv, TPoly, load_reduction_table, \
    default_table_path
from mzvq.hyperlog import Expr, Config
from mzvq.pushforward import forget_interior
from mzvq.numoracle import NumericContext, _two_form_integrand, _positions

table = load_reduction_table(default_table_path())
ctx = NumericContext()
TV = 0.0

inv2pi = Mzv.two_i_pi_pow(-1)
t = TPoly({1: Mzv.rational(1)})
one_minus_t = TPoly({0: Mzv.rational(1), 1: Mzv.rational(-1)})

REALS = ("0", "1")


def cj(s):
    return s if s in REALS else ("~" + s if not s.startswith("~") else s[1:])


def propagator(p, s):
    hol = (Expr.dlog(p, s) - Expr.dlog(cj(p), s)) * inv2pi
    if cj(s) == s:
        return hol
    anti = (Expr.dlog(p, cj(s)) - Expr.dlog(cj(p), cj(s))) * inv2pi
    return hol * one_minus_t + anti * t


EDGES = [("y", "x"), ("y", "0"), ("x", "y"), ("x", "1"),
         ("z", "x"), ("z", "1")]

omega = Expr.const(1)
for a, b in EDGES:
    omega = omega * propagator(a, b)

# numeric terms of omega at t = TV: (coeff, slots)
TERMS = []
for (slots, atoms), c in omega.terms.items():
    assert not atoms and len(slots) == 6
    TERMS.append((complex(ctx.tpoly_numeric(c, TV)), slots))
print(len(TERMS), "omega terms")

SYMS = ("x", "~x", "y", "~y", "z", "~z", "0", "1")
COLS = {"x": 0, "~x": 1, "y": 2, "~y": 3, "z": 4, "~z": 5}


def f6_vec(x, z, ys):
    """Top coefficient of omega over dx^dxb^dy^dyb^dz^dzb, vectorized in y."""
    n = len(ys)
    pos = {"x": np.full(n, x), "~x": np.full(n, x.conjugate()),
           "z": np.full(n, z), "~z": np.full(n, z.conjugate()),
           "y": ys, "~y": ys.conjugate(),
           "0": np.zeros(n, complex), "1": np.ones(n, complex)}
    total = np.zeros(n, complex)
    M = np.zeros((n, 6, 6), complex)
    for c, slots in TERMS:
        M[:] = 0
        for i, (p, q) in enumerate(slots):
            d = 1.0 / (pos[p] - pos[q])
            if p in COLS:
                M[:, i, COLS[p]] += d
            if q in COLS:
                M[:, i, COLS[q]] -= d
        total += c * np.linalg.det(M)
    return total


def legendre_nodes(nn, cache={}):
    if nn in cache:
        return cache[nn]
    xs, ws = np.polynomial.legendre.leggauss(nn)
    cache[nn] = (0.5 * (1 + xs), 0.5 * ws)
    return cache[nn]


def quad2d(f, cuts_u, cuts_v, n):
    """Integral over the upper half plane of f, with the -2i measure.

    f maps an array of complex points to an array of values.
    """
    xs, ws = legendre_nodes(n)
    u_edges = [None] + sorted(set(cuts_u)) + [None]
    v_edges = sorted(set(cuts_v) | {0.0}) + [None]
    total = 0j
    for i in range(len(u_edges) - 1):
        ulo, uhi = u_edges[i], u_edges[i + 1]
        for j in range(len(v_edges) - 1):
            vlo, vhi = v_edges[j], v_edges[j + 1]
            if ulo is None and uhi is None:
                u = xs / (1 - xs * xs)
                du = (1 + xs * xs) / (1 - xs * xs) ** 2
            elif uhi is None:
                u = ulo + xs / (1 - xs)
                du = 1.0 / (1 - xs) ** 2
            elif ulo is None:
                u = uhi - xs / (1 - xs)
                du = 1.0 / (1 - xs) ** 2
            else:
                u = ulo + (uhi - ulo) * xs
                du = np.full(n, uhi - ulo)
            if vhi is None:
                v = vlo + xs / (1 - xs)
                dv = 1.0 / (1 - xs) ** 2
            else:
                v = vlo + (vhi - vlo) * xs
                dv = np.full(n, vhi - vlo)
            uu, vv = np.meshgrid(u, v, indexing="ij")
            ww = np.outer(ws * du, ws * dv)
            zz = (uu + 1j * vv).ravel()
            total += np.dot(ww.ravel(), f(zz))
    return total * (-2j)


def f2_num(x, n_out=14, n_in=20):
    cuts_u = [0.0, 1.0, x.real]
    cuts_v = [x.imag]

    def outer(zs):
        out = np.empty(len(zs), complex)
        for k, z in enumerate(zs):
            out[k] = quad2d(lambda ys: f6_vec(x, z, ys),
                            cuts_u + [z.real], cuts_v + [z.imag], n_in)
        return out

    return quad2d(outer, cuts_u, cuts_v, n_out)


if __name__ == "__main__":
    cur = forget_interior(omega, "y",
                          Config(reals=REALS, interior=("x", "z")), table)
    print("after y:", len(cur.terms))
    cur = forget_interior(cur, "z", Config(reals=REALS, interior=("x",)),
                          table)
    print("after z:", len(cur.terms))

    for x in (0.4 + 0.8j, -0.6 + 0.5j):
        assign = _positions({"0": 0j, "1": 1 + 0j})
        fs = _two_form_integrand(cur, "x", assign, TV, ctx)(x)
        fn = f2_num(x)
        fn2 = f2_num(x, n_out=18, n_in=26)
        print(f"x={x}: sym {fs:.6f} num {fn:.6f} num2 {fn2:.6f} "
              f"diff {abs(fs-fn2):.2e}")
