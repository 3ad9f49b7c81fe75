"""Word combinatorics for iterated integrals.

Words are tuples of letters (hashable tokens).  Linear combinations of
words ("vectors") are plain dicts mapping words to coefficients; the
coefficient type only needs +, * and truthiness, so Fraction and richer
coefficient rings both work.
"""

from fractions import Fraction
from functools import lru_cache


def vadd(a, b):
    out = dict(a)
    for w, c in b.items():
        s = out.get(w)
        s = c if s is None else s + c
        if s:
            out[w] = s
        elif w in out:
            del out[w]
    return out


def vscale(c, a):
    if not c:
        return {}
    return {w: c * x for w, x in a.items()}


def vneg(a):
    return {w: -x for w, x in a.items()}


def shuffle(u, v):
    """Shuffle product of two words as a vector with multiplicities."""
    out = {}
    for w in _shuffles(tuple(u), tuple(v)):
        out[w] = out.get(w, 0) + Fraction(1)
    return out


@lru_cache(maxsize=None)
def _shuffles(u, v):
    if not u:
        return (v,)
    if not v:
        return (u,)
    res = []
    for w in _shuffles(u[1:], v):
        res.append((u[0],) + w)
    for w in _shuffles(u, v[1:]):
        res.append((v[0],) + w)
    return tuple(res)


def shuffle_vec(a, b):
    """Bilinear extension of the shuffle product to vectors."""
    out = {}
    for u, cu in a.items():
        for v, cv in b.items():
            c = cu * cv
            for w in _shuffles(u, v):
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                elif w in out:
                    del out[w]
    return out


def deconcatenations(w):
    """All splittings w = prefix + suffix, including trivial ones."""
    return [(w[:j], w[j:]) for j in range(len(w) + 1)]


def word_pow_shuffle(y, j):
    """Shuffle power y^{sh j} = j! * (y,...,y)."""
    f = 1
    for m in range(2, j + 1):
        f *= m
    return {(y,) * j: Fraction(f)}


@lru_cache(maxsize=None)
def _decompose_left_word(w, y):
    """Write the word w as sum_j y^{sh j} sh c_j with no c_j word starting in y.

    Returns a tuple of (j, vec-as-tuple-of-items) pairs.  Shuffle powers are
    genuine shuffle powers, so no factorials appear in the expansion.
    """
    if not w or w[0] != y:
        return ((0, ((w, Fraction(1)),)),)
    ell = 0
    while ell < len(w) and w[ell] == y:
        ell += 1
    u = w[ell:]
    # ell * w = y sh (y^{ell-1} u)  -  sum over insertions of y inside u
    acc = {}
    for j, items in _decompose_left_word((y,) * (ell - 1) + u, y):
        for word, c in items:
            key = (j + 1, word)
            acc[key] = acc.get(key, 0) + c
    for p in range(1, len(u) + 1):
        up = (y,) * (ell - 1) + u[:p] + (y,) + u[p:]
        for j, items in _decompose_left_word(up, y):
            for word, c in items:
                key = (j, word)
                acc[key] = acc.get(key, 0) - c
    inv = Fraction(1, ell)
    grouped = {}
    for (j, word), c in acc.items():
        c = c * inv
        if c:
            grouped.setdefault(j, {})[word] = c
    return tuple(sorted((j, tuple(sorted(v.items()))) for j, v in grouped.items()))


def decompose_left(vec, y):
    """Left shuffle regularization of a vector at the letter y.

    Returns a dict j -> vector of words not starting with y such that
    vec = sum_j y^{sh j} sh result[j].
    """
    out = {}
    for w, c in vec.items():
        for j, items in _decompose_left_word(w, y):
            tgt = out.setdefault(j, {})
            for word, x in items:
                s = tgt.get(word)
                s = c * x if s is None else s + c * x
                if s:
                    tgt[word] = s
                elif word in tgt:
                    del tgt[word]
    return {j: v for j, v in out.items() if v}


def decompose_right(vec, y):
    """Right analogue of decompose_left: vec = sum_k result[k] sh y^{sh k}."""
    rev = {w[::-1]: c for w, c in vec.items()}
    out = decompose_left(rev, y)
    return {k: {w[::-1]: c for w, c in v.items()} for k, v in out.items()}


def shuffle_reg_decompose(vec, left, right):
    """Two-sided shuffle regularization.

    Writes vec = sum_{j,k} left^{sh j} sh v_{jk} sh right^{sh k} where the
    words of v_{jk} neither start with `left` nor end with `right`.
    Returns dict (j, k) -> vector v_{jk}.
    """
    if not isinstance(vec, dict):
        vec = {tuple(vec): Fraction(1)}
    out = {}
    for j, cj in decompose_left(vec, left).items():
        for k, v in decompose_right(cj, right).items():
            out[(j, k)] = vadd(out.get((j, k), {}), v)
    return {jk: v for jk, v in out.items() if v}
