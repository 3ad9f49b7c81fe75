"""Floating-point cross-checks for the symbolic engine.

Hyperlogarithms are evaluated by integrating their defining first order
ODE system along a straight path from a large real base point, with the
initial condition fixed by the tangential base point at +infinity:
L_w(base) = (log(base) / 2 pi i)^n / n! for a word of length n.
Two-forms on the fibre are integrated over the upper half-plane by
adaptive quadrature after splitting the domain at the singular points.

The oracle works in double precision and is a cross-check only; exact
results always come from the symbolic side.
"""

import random

from .coeffring import Mzv, TPoly
from .hyperlog import Expr, is_conj, conj


class SingularPath(Exception):
    """A letter lies on (or too close to) the integration path."""


class NoConvergence(Exception):
    """The adaptive quadrature failed to reach the target accuracy."""


_BASE = 1.0e6
_TWO_I_PI = 2j * 3.141592653589793


def _zeta_series(n, terms=20000):
    """Partial sum of the defining series with Euler-Maclaurin tail."""
    total = 0.0
    for k in range(terms - 1, 0, -1):
        total += 1.0 / k ** n
    K = float(terms)
    total += K ** (1 - n) / (n - 1) + 0.5 * K ** (-n) \
        - n / 12.0 * K ** (-n - 1)
    return total


def _zeta_3_5_series(terms=3000):
    """Double zeta value zeta(3,5) = sum over m > k of m^-5 k^-3."""
    total = 0.0
    inner = 0.0
    for m in range(2, terms):
        inner += 1.0 / (m - 1) ** 3
        total += inner / float(m) ** 5
    return total


class NumericContext:
    """Numeric constants and settings for the oracle."""

    def __init__(self, precision=1.0e-9, seed=0):
        self.precision = precision
        self.rng = random.Random(seed)
        self.zeta = {n: _zeta_series(n) for n in (2, 3, 5, 7)}
        self.zeta_3_5 = _zeta_3_5_series()
        import math
        self.pi = math.pi

    def mzv_numeric(self, mzv):
        """Evaluate an Mzv coefficient using the series constants."""
        total = 0j
        zmap = {1: self.zeta[3], 2: self.zeta[5], 3: self.zeta[7]}
        for (j, a, b, c, d, e), q in mzv.terms.items():
            v = float(q) * self.pi ** a
            v *= self.zeta[3] ** b * self.zeta[5] ** c * self.zeta[7] ** d
            v *= self.zeta_3_5 ** e
            total += v * (1j) ** j
        return total

    def tpoly_numeric(self, tp, t_value):
        total = 0j
        for k, v in tp.coeffs.items():
            total += self.mzv_numeric(v) * float(t_value) ** k
        return total


def _suffix_closure(words):
    out = []
    for w in words:
        for i in range(len(w), -1, -1):
            s = w[i:]
            if s not in out:
                out.append(s)
    out.sort(key=len)
    return out


def _detour_path(target, letters, side):
    """Waypoints from the base point to the target.

    Letters lying close to the straight segment get half-circle detours
    through the upper (side +1) or lower (side -1) half-plane, matching
    the canonical path convention for plain and conjugated arguments.
    """
    z0 = complex(_BASE)
    z1 = complex(target)
    span = z1 - z0
    length = abs(span)
    if length == 0:
        return [z0]
    u = span / length
    hops = []
    for a in letters:
        a = complex(a)
        # projection parameter along the segment and offset from it
        tpar = ((a - z0) / u).real
        if tpar <= 0 or tpar >= length:
            continue
        off = abs(a - (z0 + tpar * u))
        gap = min((abs(a - b) for b in letters if b != a), default=length)
        gap = min(gap, abs(a - z1))
        r = min(0.1, 0.25 * gap) if gap > 0 else 0.1
        if off < 0.5 * r:
            hops.append((tpar, a, r))
    hops.sort()
    path = [z0]
    for tpar, a, r in hops:
        path.extend([a - r * u, a + 1j * side * r, a + r * u])
    path.append(z1)
    return path


def _ode_solve(words, letters, target, frac=0.05, side=1):
    """Values of hyperlogs for the given words at the target point.

    words: tuples of numeric letter positions (outermost first).
    Integrates along the canonical path from the real base point, with
    step size proportional to the distance to the nearest letter.
    """
    sufs = _suffix_closure(words)
    import cmath
    base_log = cmath.log(_BASE) / _TWO_I_PI
    cur = {(): 1.0 + 0j}
    for s in sufs:
        if s:
            n = len(s)
            f = 1.0
            for k in range(1, n + 1):
                f *= k
            cur[s] = base_log ** n / f

    def deriv(z, c):
        out = {(): 0j}
        for s in sufs:
            if not s:
                continue
            d = z - s[0]
            if d == 0:
                raise SingularPath("letter on the integration path")
            out[s] = c[s[1:]] / d / _TWO_I_PI
        return out

    path = _detour_path(target, letters, side)
    for w0, w1 in zip(path[:-1], path[1:]):
        total = abs(w1 - w0)
        if total == 0:
            continue
        direction = (w1 - w0) / total
        done = 0.0
        z = w0
        while done < total:
            dist = min((abs(z - a) for a in letters), default=total)
            if dist < 1e-13:
                raise SingularPath("letter on the integration path")
            h = min(total - done, max(frac * dist, 1e-12))
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
            z += hd
            done += h
    return cur


def eval_hyperlog(word, z, ctx=None):
    """Value of the hyperlogarithm with the given numeric letters at z.

    word is a tuple of numeric letter positions, outermost first; the
    path is the straight segment from the real base point.
    """
    word = tuple(complex(a) for a in word)
    letters = set(word)
    vals = _ode_solve([word], letters, complex(z))
    return vals[word]


def _positions(assign):
    """Extend an assignment of symbols to points with their conjugates."""
    full = dict(assign)
    for s, v in list(assign.items()):
        full[conj(s)] = v.conjugate() if isinstance(v, complex) else v
    return full


def _atom_values(expr, assign, extra=()):
    """Evaluate every atom of expr numerically, sharing ODE solves."""
    by_arg = {}
    for (slots, atoms), c in expr.terms.items():
        for a, w in atoms:
            by_arg.setdefault(a, set()).add(w)
    values = {}
    for a, words in by_arg.items():
        target = assign[a]
        numeric_words = []
        for w in words:
            numeric_words.append(tuple(assign[s] for s in w))
        letters = set(x for w in numeric_words for x in w)
        letters.update(extra)
        side = -1 if a.startswith("~") else 1
        sols = _ode_solve(sorted(numeric_words, key=len), letters, target,
                          side=side)
        for w, nw in zip(words, numeric_words):
            values[(a, w)] = sols[nw]
    return values


def eval_expr(expr, assign, t_value, ctx):
    """Numeric value of a zero-form (no slots) at the given points."""
    assign = _positions(assign)
    atom_vals = _atom_values(expr, assign)
    total = 0j
    for (slots, atoms), c in expr.terms.items():
        assert not slots, "eval_expr expects a zero-form"
        v = ctx.tpoly_numeric(c, t_value)
        for a, w in atoms:
            v *= atom_vals[(a, w)]
        total += v
    return total


def _slot_components(slot, var, cvar, assign):
    """dz and dzbar coefficients of dlog(p - q) as functions on the fibre."""
    p, q = slot
    d = assign[p] - assign[q]
    a = ((1 if p == var else 0) - (1 if q == var else 0)) / d
    b = ((1 if p == cvar else 0) - (1 if q == cvar else 0)) / d
    return a, b


def _two_form_integrand(omega, var, assign, t_value, ctx):
    """Returns f(z) with omega = f dz wedge dzbar, z the fibre variable."""
    cvar = conj(var)
    coeffs = {k: ctx.tpoly_numeric(c, t_value) for k, c in omega.terms.items()}

    def f(z):
        local = dict(assign)
        local[var] = z
        local[cvar] = z.conjugate()
        atom_vals = _atom_values(omega, local)
        total = 0j
        for (slots, atoms), c in coeffs.items():
            assert len(slots) == 2, "two-form term must have two slots"
            a1, b1 = _slot_components(slots[0], var, cvar, local)
            a2, b2 = _slot_components(slots[1], var, cvar, local)
            v = c * (a1 * b2 - b1 * a2)
            for a, w in atoms:
                v *= atom_vals[(a, w)]
            total += v
        return total

    return f


def quad_fibre(omega, var, assign, t_value, ctx, depth=9):
    """Integral of a two-form over the upper half-plane fibre.

    assign maps the fixed punctures (not var) to numeric positions.
    Uses adaptive Gauss-Legendre product quadrature on subdomains split
    at the singular points, with a rational compactification of the
    unbounded directions.
    """
    if not omega:
        return 0j
    assign = _positions(assign)
    f = _two_form_integrand(omega, var, assign, t_value, ctx)

    cuts_u = sorted({assign[s].real for s in assign})
    cuts_v = sorted({abs(assign[s].imag) for s in assign} | {0.0})

    # compactify: u = c + s*p/(1-p^2), v = q/(1-q)
    import math

    def u_map(lo, hi, p):
        if lo is None and hi is None:
            return p / (1 - p * p), (1 + p * p) / (1 - p * p) ** 2
        if hi is None:
            return lo + p / (1 - p), 1.0 / (1 - p) ** 2
        if lo is None:
            return hi - p / (1 - p), 1.0 / (1 - p) ** 2
        return lo + (hi - lo) * p, hi - lo

    nodes_cache = {}

    # fixed-order Gauss-Legendre nodes on (0,1), computed by Newton
    def legendre_nodes(n):
        if n in nodes_cache:
            return nodes_cache[n]
        xs = []
        ws = []
        for i in range(n):
            x = math.cos(math.pi * (i + 0.75) / (n + 0.5))
            for _ in range(60):
                p0, p1 = 1.0, 0.0
                for k in range(n):
                    p0, p1 = ((2 * k + 1) * x * p0 - k * p1) / (k + 1), p0
                dp = n * (x * p0 - p1) / (x * x - 1)
                dx = p0 / dp
                x -= dx
                if abs(dx) < 1e-15:
                    break
            xs.append(0.5 * (1 + x))
            ws.append(1.0 / ((1 - x * x) * dp * dp))
        nodes_cache[n] = (xs, ws)
        return nodes_cache[n]

    def cell(ulo, uhi, vlo, vhi, n):
        xs, ws = legendre_nodes(n)
        total = 0j
        for pi_, wi in zip(xs, ws):
            u, du = u_map(ulo, uhi, pi_)
            for pj, wj in zip(xs, ws):
                if vhi is None:
                    v = vlo + pj / (1 - pj)
                    dv = 1.0 / (1 - pj) ** 2
                else:
                    v = vlo + (vhi - vlo) * pj
                    dv = vhi - vlo
                if v <= 0:
                    continue
                z = complex(u, v)
                total += wi * wj * f(z) * du * dv
        return total * (-2j)

    u_edges = [None] + cuts_u + [None]
    v_edges = cuts_v + [None]
    total = 0j
    err = 0.0
    for i in range(len(u_edges) - 1):
        for j in range(len(v_edges) - 1):
            lo = cell(u_edges[i], u_edges[i + 1],
                      v_edges[j], v_edges[j + 1], depth)
            hi = cell(u_edges[i], u_edges[i + 1],
                      v_edges[j], v_edges[j + 1], depth + 7)
            total += hi
            err += abs(hi - lo)
    if err > 1e-3 * (1.0 + abs(total)):
        raise NoConvergence(f"estimated error {err}")
    return total
