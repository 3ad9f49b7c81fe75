"""Exact evaluation of hyperlogarithm constants over the alphabet {0, 1}.

Atoms based at the tangential base point at +infinity, with letters 0
and 1, take values at the points 0 and 1 that are normalized multiple
zeta values.  They are computed by composing the characters of the
pieces of the canonical path: the straight segment from +infinity to 1,
the half-circle over 1, the segment from 1 to 0, and the half-circle
over 0.  Straight segments are mapped onto the unit interval by a
Moebius change of chart, which rewrites each letter as a linear
combination of the letters 0 and 1 and reduces the regularized integral
to the reduction table; half-circles crossed through the upper
half-plane contribute the character (1/2)^m / m! in the local letter.

Composition follows the path-concatenation formula: for a word written
with the outermost letter (nearest the endpoint) first, the inner part
of each splitting is integrated along the earlier piece of the path.
"""

from fractions import Fraction
from functools import lru_cache

from .coeffring import Mzv
from .hyperlog import Expr


# letter substitutions for the Moebius charts, as letter -> [(letter', coeff)]

# z = 1/u maps u in (0,1) to z in (1,oo); dlog(z) = -dlog(u),
# dlog(z-1) = dlog(u-1) - dlog(u)
_SUB_INF_1 = {
    "0": (("0", -1),),
    "1": (("1", 1), ("0", -1)),
}

# z = 1-u maps u in (0,1) to z in (0,1); the path from 1 to 0 in z
# runs forward from 0 to 1 in u; dlog(z) = dlog(u-1), dlog(z-1) = dlog(u)
_SUB_1_0 = {
    "0": (("1", 1),),
    "1": (("0", 1),),
}


def _segment_value(word, sub, reverse, table):
    """Regularized integral of a word along a straight segment.

    sub maps each letter to its expansion in the unit-interval chart;
    reverse indicates that the chart reverses the direction of travel,
    which inverts the path (sign (-1)^n and word reversal).
    """
    if not word:
        return Mzv.rational(1)
    if reverse:
        word = word[::-1]
    total = Mzv()
    choices = [(Mzv.rational(1), ())]
    for s in word:
        nxt = []
        for c, w in choices:
            for s2, f in sub[s]:
                nxt.append((c * Mzv.rational(f), w + (s2,)))
        choices = nxt
    for c, w in choices:
        total = total + c * table.value(w)
    if reverse and len(word) % 2:
        total = -total
    return total


def _arc_value(word, letter, half_turns):
    """Character of an upper half-circle at a marked point.

    Nonzero only on powers of the local letter; a single positive
    (leftward) crossing contributes (1/2)^m / m!.
    """
    if not word:
        return Mzv.rational(1)
    if any(s != letter for s in word):
        return Mzv()
    m = len(word)
    f = Fraction(half_turns, 2) ** m
    for k in range(1, m + 1):
        f /= k
    return Mzv.rational(f)


def _compose(pieces, word):
    """Path concatenation: pieces listed base end first."""
    total = Mzv()
    # sum over ordered splittings of the word into len(pieces) parts;
    # the part nearest the base (end of the word) goes to the first piece
    n = len(word)
    k = len(pieces)

    def splits(start, remaining):
        if remaining == 1:
            yield (word[start:],)
            return
        for cut in range(start, n + 1):
            for rest in splits(cut, remaining - 1):
                yield (word[start:cut],) + rest

    for parts in splits(0, k):
        # parts[0] is the outermost chunk -> last piece of the path
        val = Mzv.rational(1)
        for piece, chunk in zip(pieces, reversed(parts)):
            val = val * piece(chunk)
            if not val:
                break
        total = total + val
    return total


@lru_cache(maxsize=None)
def _value_cached(word, point, side, table_id):
    table = _TABLES[table_id]
    seg1 = lambda w: _segment_value(w, _SUB_INF_1, False, table)
    arc1 = lambda w: _arc_value(w, "1", 1)
    seg2 = lambda w: _segment_value(w, _SUB_1_0, False, table)
    arc0 = lambda w: _arc_value(w, "0", 1)
    if point == "1":
        pieces = [seg1] if side == "right" else [seg1, arc1]
    else:
        assert point == "0"
        pieces = [seg1, arc1, seg2] if side == "right" else \
            [seg1, arc1, seg2, arc0]
    return _compose(pieces, word)


@lru_cache(maxsize=None)
def _tail_cached(pattern, sign, table_id):
    table = _TABLES[table_id]
    # expand letters in the bubble chart x: escaping letters become
    # dlog(x - 1) - dlog(x), finite letters become -dlog(x)
    choices = [(Fraction(1), ())]
    for is_var in pattern:
        nxt = []
        for c, w in choices:
            if is_var:
                nxt.append((c, w + ("1",)))
            nxt.append((-c, w + ("0",)))
        choices = nxt
    seg_b = lambda w: _segment_value(w, _SUB_INF_1, True, table)
    arc = lambda w: _arc_value(w, "1", sign)
    seg_a = lambda w: _segment_value(w, _SUB_1_0, True, table)
    total = Mzv()
    for c, w in choices:
        total = total + Mzv.rational(c) * _compose([seg_a, arc, seg_b], w)
    return total


def infinity_tail_value(pattern, sign, table):
    """Bubble period at infinity of a word whose letters escape to the base.

    pattern marks which letters are the escaping variable (True) versus
    finite (False), outermost letter (nearest infinity) first.  The
    period is the regularized integral along the real axis from the
    tangential base at 0 to the tangential base at infinity in the
    bubble chart; sign +1 crosses the half-circle at 1 through the
    lower half-plane (argument above the axis), -1 through the upper.
    """
    tid = id(table)
    _TABLES[tid] = table
    return _tail_cached(tuple(pattern), sign, tid)


@lru_cache(maxsize=None)
def _pair_cached(word, point, table_id):
    from .words import decompose_left
    table = _TABLES[table_id]
    seg1 = lambda w: _segment_value(w, _SUB_INF_1, False, table)
    seg2 = lambda w: _segment_value(w, _SUB_1_0, False, table)
    arc_under = lambda w: _arc_value(w, "1", -1)
    half = Fraction(1, 2)

    def bubble(chunk):
        # local chart around the collapsed pair: the collided letter at 0,
        # the marked point at 1, entry from infinity passing under 1;
        # letters at finite distance do not reach the bubble
        if any(s not in ("x", point) for s in chunk):
            return Mzv()
        mapped = tuple("0" if s == "x" else "1" for s in chunk)
        total = Mzv()
        for j, vec in decompose_left({mapped: Fraction(1)}, "0").items():
            for w2, cw in vec.items():
                total = total + Mzv.rational(cw * half ** j) * \
                    _compose([seg1, arc_under, seg2], w2)
        return total

    def outer(chunk):
        # along the outer path the collided letters sit at the point
        mapped = tuple(point if s == "x" else s for s in chunk)
        if point == "1":
            return _compose([seg1], mapped)
        assert point == "0"
        return _compose([seg1, arc_under, seg2], mapped)

    return _compose([outer, bubble], word)


@lru_cache(maxsize=None)
def _under_cached(word, point, table_id):
    table = _TABLES[table_id]
    seg1 = lambda w: _segment_value(w, _SUB_INF_1, False, table)
    seg2 = lambda w: _segment_value(w, _SUB_1_0, False, table)
    arc1 = lambda w: _arc_value(w, "1", -1)
    arc0 = lambda w: _arc_value(w, "0", -1)
    if point == "1":
        pieces = [seg1, arc1]
    else:
        assert point == "0"
        pieces = [seg1, arc1, seg2, arc0]
    return _compose(pieces, word)


def under_value(word, point, table):
    """Value of the +infinity-based atom just left of a marked point,
    reached along the lower half-plane.

    The path crosses every marked point down to the given one through
    lower half-circles, the mirror of the canonical left value.
    """
    tid = id(table)
    _TABLES[tid] = table
    return _under_cached(tuple(word), point, tid)


# chart for the ray from -infinity to 0: zeta = v/(v-1) maps v in (0,1)
# to the negative real axis; dlog(zeta) = dlog(v) - dlog(v-1),
# dlog(zeta - 1) = -dlog(v-1), and the direction of travel is reversed
_SUB_RAY = {
    "0": (("0", 1), ("1", -1)),
    "1": (("1", -1),),
}


@lru_cache(maxsize=None)
def _endpoint_cached(word, point, table_id):
    table = _TABLES[table_id]

    def bubble(chunk):
        # local chart at the endpoint: the endpoint at 0, the passed
        # letter at 1; the path enters from the far side below the
        # negative axis and never meets the letter
        if any(s not in ("x", point) for s in chunk):
            return Mzv()
        mapped = tuple("1" if s == "x" else "0" for s in chunk)
        return _segment_value(mapped, _SUB_RAY, True, table)

    def outer(chunk):
        # along the canonical path the passed letter sits at the endpoint
        mapped = tuple(point if s == "x" else s for s in chunk)
        return _value_cached(mapped, point, "right", table_id)

    return _compose([outer, bubble], word)


def endpoint_collapse_value(word, point, table):
    """Regularized limit of an atom at a marked point as a letter slides
    past the endpoint.

    word is over the letters {"0", "1", "x"}, with "x" the moving
    letter, outermost letter first.  The letter approaches the endpoint
    from beyond it, infinitesimally above the axis, after the canonical
    path has reached the endpoint from the near side.
    """
    tid = id(table)
    _TABLES[tid] = table
    return _endpoint_cached(tuple(word), point, tid)


def pair_collapse_value(word, point, table):
    """Regularized limit of a collided atom as the pair collapses onto a
    marked point from its far side.

    word is over the letters {"0", "1", "x"}, with "x" the collided
    conjugate of the argument, outermost letter first.  The argument and
    its conjugate approach the point 0 or 1 along a path that has
    crossed the point through the lower half-plane, with the conjugate
    letter just above the path.
    """
    tid = id(table)
    _TABLES[tid] = table
    return _pair_cached(tuple(word), point, tid)


_TABLES = {}


def binary_value(word, point, side, table):
    """Value of the +infinity-based atom with the given word at 0 or 1.

    side "right" is the canonical approach (no crossing of the point);
    side "left" includes the upper half-circle over the point.
    """
    tid = id(table)
    _TABLES[tid] = table
    return _value_cached(tuple(word), point, side, tid)


def resolve_constants(expr, table):
    """Replace atoms at the points 0 and 1 with letters in {0,1} by values."""
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        piece = Expr.term(c, slots, ())
        for a, w in atoms:
            if not piece:
                break
            if a in ("0", "1") and all(s in ("0", "1") for s in w):
                piece = piece * Expr.const(binary_value(w, a, "right", table))
            else:
                piece = piece * Expr.atom(a, w)
        out = out + piece
    return out
