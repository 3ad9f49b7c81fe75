"""Numeric validation of binary_value (infinity-based atom values at 0, 1).

Integrates the hyperlogarithm ODE system along the canonical path from a
large base point Lambda down the real axis, with upper half-circle
detours at crossed marked points.  Initial condition at Lambda:
L_w(Lambda) = (log(Lambda)/2 pi i)^n / n!.
"""
import itertools

import mpmath as mp

from mzvq.coeffring import load_reduction_table, default_table_path
from mzvq.constants import binary_value

mp.mp.dps = 25
TWO_I_PI = 2j * mp.pi
LAM = mp.mpf("1e7")

table = load_reduction_table(default_table_path())

POINTS = {"0": mp.mpf(0), "1": mp.mpf(1)}


def suffixes(word):
    return [word[i:] for i in range(len(word) + 1)]


def path_value(words, path, frac="0.03"):
    """Integrate along a piecewise-linear path given by waypoints.

    Adaptive step: h <= frac * distance to nearest marked point.
    Initial condition at path[0] = Lambda (large real).
    """
    sufs = []
    for w in words:
        for s in suffixes(w):
            if s not in sufs:
                sufs.append(s)
    sufs.sort(key=len)
    cur = {(): mp.mpc(1)}
    for s in sufs:
        if s:
            n = len(s)
            cur[s] = (mp.log(path[0]) / TWO_I_PI) ** n / mp.factorial(n)

    def deriv(z, c):
        out = {(): mp.mpc(0)}
        for s in sufs:
            if not s:
                continue
            a = POINTS[s[0]]
            out[s] = c[s[1:]] / (z - a) / TWO_I_PI
        return out

    frac = mp.mpf(frac)
    for z0, z1 in zip(path[:-1], path[1:]):
        total = abs(z1 - z0)
        direction = (z1 - z0) / total
        done = mp.mpf(0)
        z = z0
        while done < total:
            dist = min(abs(z - a) for a in POINTS.values())
            h = min(total - done, max(frac * dist, mp.mpf("1e-9")))
            hd = h * direction
            k1 = deriv(z, cur)
            c2 = {s: cur[s] + hd / 2 * k1[s] for s in cur}
            k2 = deriv(z + hd / 2, c2)
            c3 = {s: cur[s] + hd / 2 * k2[s] for s in cur}
            k3 = deriv(z + hd / 2, c3)
            c4 = {s: cur[s] + hd * k3[s] for s in cur}
            k4 = deriv(z + hd, c4)
            cur = {s: cur[s] + hd / 6 * (k1[s] + 2 * k2[s] + 2 * k3[s]
                                         + k4[s]) for s in cur}
            z = z + hd
            done += h
    return cur


def check(point, side):
    d = mp.mpf("1e-7")
    if point == "1":
        if side == "right":
            path = [LAM, 1 + d]
        else:
            path = [LAM, 1 + d, 1 + d * 1j, 1 - d]
    else:
        # to 0: cross 1 through the upper half-plane
        dd = mp.mpf("0.2")
        base = [LAM, 1 + dd, 1 + dd * 1j, 1 - dd, mp.mpf(0) + d]
        if side == "right":
            path = base
        else:
            path = base + [d * 1j, -d]
    words = []
    for n in range(1, 5):
        for w in itertools.product("01", repeat=n):
            if w[0] != point:
                words.append(w)
    cur = path_value(words, path)
    bad = 0
    for w in words:
        sym = binary_value(w, point, side, table).numeric(mp)
        num = cur[w]
        err = abs(sym - num)
        if err > 1e-4:
            bad += 1
            print(f"  MISMATCH {point} {side} {''.join(w)}: "
                  f"sym={mp.nstr(sym, 8)} num={mp.nstr(num, 8)}")
    print(f"point {point} side {side}: {len(words)} words, {bad} mismatches")


check("1", "right")
check("1", "left")
check("0", "right")
check("0", "left")
