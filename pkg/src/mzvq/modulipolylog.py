"""Polylogarithms on moduli spaces of marked points in fibration-basis form.

A function on a configuration space is an Expr whose atoms are iterated
integrals in several variables.  The fibration basis with respect to a
variable rewrites all dependence on that variable into atoms whose
argument is the variable, with coefficients free of it; iterating over a
tower of variables yields the nested basis form, where the letters of an
inner layer may involve the outer variables.

The rewriting algorithm differentiates in the variable, recurses on the
coefficients of the resulting one-form, takes the obvious primitive by
prepending letters, and fixes the integration constant by the
regularized limit at the base point of the layer.  Atoms whose argument
coincides with one of their letters are handled by the same recursion;
their differentials close thanks to the cancellation of degenerate
dlog factors.
"""

from fractions import Fraction

from .coeffring import Mzv
from .hyperlog import Expr, arnold_canon, td


def total_differential(expr, base="oo"):
    """Total differential of a function, as a one-form Expr."""
    return td(expr, base)


def one_form_components(form, var):
    """Split a one-form by its dlog(var - pole) factors.

    Re-canonicalizes the single wedge slot of each term with var raised
    to the top of the symbol order, so that every term has at most one
    pair containing var.  Returns a dict pole -> Expr of coefficients of
    dlog(var - pole) (the 1/(2 pi i) of the differential is kept in the
    coefficients).  Terms whose slot does not contain var are dropped.
    """
    out = {}
    for (slots, atoms), c in form.terms.items():
        assert len(slots) == 1, "one_form_components expects a one-form"
        for rslots, sc in arnold_canon(slots, raised=(var,)):
            (p, q), = rslots
            if var not in (p, q):
                continue
            s = q if p == var else p
            piece = Expr()
            piece.terms[((), atoms)] = c * Mzv.rational(sc)
            out[s] = out.get(s, Expr()) + piece
    return {s: e for s, e in out.items() if e}


def prepend_primitive(expr, var, letter):
    """Prepend a letter to the var-atom of every term.

    Inverts d on the var-dependence: the result has differential
    dlog(var - letter)/(2 pi i) * expr plus terms with other poles.
    Terms without a var-atom receive the single-letter atom.
    """
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == var]
        assert len(hit) <= 1
        if hit:
            i = hit[0]
            word = (letter,) + atoms[i][1]
            rest = atoms[:i] + atoms[i + 1:]
        else:
            word = (letter,)
            rest = atoms
        out = out + Expr.term(c, slots, rest + ((var, word),))
    return out


def _letter_escape_limit(arg, w, var, table):
    """Regularized limit of an atom whose var letters run to the base
    at infinity along the real axis.

    The word splits into a var-free head, kept as an atom, and a tail
    absorbed into the bubble at infinity; heads containing the escaping
    letter contribute nothing.  The tail period is computed in the
    bubble chart, with the half-circle at 1 crossed on the side away
    from the argument's canonical path.
    """
    from .constants import infinity_tail_value
    sign = -1 if arg.startswith("~") else 1
    first = min(i for i, s in enumerate(w) if s == var)
    out = Expr()
    for k in range(first + 1):
        head, tail = w[:k], w[k:]
        pattern = tuple(s == var for s in tail)
        val = infinity_tail_value(pattern, sign, table)
        if not val:
            continue
        term = Expr.const(val)
        if head:
            term = Expr.atom(arg, head) * term
        out = out + term
    return out


def _collision_escape_limit(w, var, table):
    """Regularized limit at the base at infinity of a collided atom, i.e.
    one whose argument occurs among its own letters.

    In the bubble chart scaled by the argument, the path runs from the
    base down to 1, the finite letters sit at 0 and the collided letters
    at 1.  Powers of the collided letter adjacent to the argument carry
    the formal collision logarithm, regularized to 1/2 per letter; the
    shuffle-regularized remainders are canonical values at 1.
    """
    from .constants import binary_value
    from .words import decompose_left
    mapped = tuple("1" if s == var else "0" for s in w)
    half = Fraction(1, 2)
    out = Mzv()
    for j, vec in decompose_left({mapped: Fraction(1)}, "1").items():
        for w2, cw in vec.items():
            val = binary_value(w2, "1", "right", table) if w2 \
                else Mzv.rational(1)
            out = out + Mzv.rational(cw * half ** j) * val
    return out


def reg_limit_at_base(expr, var, base, table):
    """Regularized limit of a function as var approaches the base point.

    Atoms with argument var degenerate onto a bubble at the base; the
    limit is the bubble period, which is nonzero only when every letter
    lies on the bubble (i.e. equals the base point or var itself), in
    which case it is the regularized unit-interval period of the word
    with base mapped to 0 and var mapped to 1.  For the base at infinity
    the pure-var bubble period is 2^-n / n!.  Atoms with other arguments
    have their var letters pushed to the base point.
    """
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        assert not any(var in p for p in slots), "one-form in reg limit"
        piece = Expr.term(c, slots, ())
        for a, w in atoms:
            if not piece:
                break
            if a == var:
                if base == "oo":
                    if var in w:
                        piece = piece * Expr.const(
                            _collision_escape_limit(w, var, table))
                    else:
                        piece = Expr()
                elif all(s in (base, var) for s in w):
                    mapped = tuple("1" if s == var else "0" for s in w)
                    piece = piece * Expr.const(table.value(mapped))
                else:
                    piece = Expr()
            elif var in w:
                if base == "oo":
                    piece = piece * _letter_escape_limit(a, w, var, table)
                else:
                    w2 = tuple(base if s == var else s for s in w)
                    if w2:
                        piece = piece * Expr.atom(a, w2)
            else:
                piece = piece * Expr.atom(a, w)
        out = out + piece
    return out


_fib_cache = {}


def _fib_atom(arg, word, var, base, table):
    """Fibration basis of a single atom with respect to var."""
    if arg != var and var not in word:
        return Expr.atom(arg, word)
    if arg == var and var not in word:
        return Expr.atom(arg, word)
    key = (arg, word, var, base)
    hit = _fib_cache.get(key)
    if hit is not None:
        return hit
    res = _fib_expr(Expr.atom(arg, word), var, base, table)
    _fib_cache[key] = res
    return res


def _fib_expr(expr, var, base, table):
    form = td(expr, base)
    tilde = Expr()
    two_i_pi = Mzv.two_i_pi_pow(1)
    for s, coeff in one_form_components(form, var).items():
        g = _fib_pass(coeff * two_i_pi, var, base, table)
        tilde = tilde + prepend_primitive(g, var, s)
    return tilde + reg_limit_at_base(expr - tilde, var, base, table)


def _fib_pass(expr, var, base, table):
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        assert not any(var in p for p in slots), \
            "differential form input to fibration basis"
        piece = Expr.term(c, slots, ())
        for a, w in atoms:
            if not piece:
                break
            piece = piece * _fib_atom(a, w, var, base, table)
        out = out + piece
    return out


def fibration_basis(expr, tower, base, table):
    """Rewrite a function into nested fibration-basis form.

    tower lists the variables innermost first; after the rewrite, all
    dependence on tower[0] sits in atoms with that argument (letters may
    involve the outer variables), with coefficients recursively in basis
    form over the rest of the tower.  base is the tangential base point
    shared by the layers ("oo" or a marked point name).
    """
    if not tower:
        return expr
    var = tower[0]
    done = _fib_pass(expr, var, base, table)
    if len(tower) == 1:
        return done
    # group by the var-atom and recurse on the coefficients
    groups = {}
    for (slots, atoms), c in done.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == var]
        assert len(hit) <= 1
        if hit:
            i = hit[0]
            inner = atoms[i]
            rest = atoms[:i] + atoms[i + 1:]
        else:
            inner = None
            rest = atoms
        g = groups.setdefault(inner, Expr())
        g.terms[(slots, rest)] = g.terms.get((slots, rest), 0) + c
    out = Expr()
    for inner, coeff in groups.items():
        coeff = Expr({k: v for k, v in coeff.terms.items() if v})
        rec = fibration_basis(coeff, tower[1:], base, table)
        if inner is not None:
            rec = rec * Expr.atom(*inner)
        out = out + rec
    return out


_cross_cache = {}


def _track_components(form, var):
    """Components of a one-form pulled back to the boundary track.

    On the track the variable and its conjugate move together at fixed
    infinitesimal separation, so dlog factors in the conjugate pull back
    to the same dlog factors in the variable and the factor at their
    difference pulls back to zero.  Returns pole -> coefficient Expr.
    """
    from .hyperlog import conj
    cv = conj(var)
    folded = Expr()
    for (slots, atoms), c in form.terms.items():
        assert len(slots) == 1, "track components expect a one-form"
        (p, q), = slots
        if {p, q} == {var, cv}:
            continue
        p2 = var if p == cv else p
        q2 = var if q == cv else q
        folded = folded + Expr.term(c, ((p2, q2),), atoms)
    return one_form_components(folded, var)


def _left_anchor(arg, word, var, point, table):
    """Limit of an atom as the conjugate pair reaches a crossed marked
    point from its left along the boundary track.

    The argument side of the pair travels below the axis and has crossed
    the marked points through the lower half-plane; letters equal to the
    variable sit just above the axis.
    """
    from .constants import (binary_value, endpoint_collapse_value,
                            pair_collapse_value, under_value)
    from .hyperlog import conj
    cv = conj(var)
    if arg == cv:
        if var in word:
            pattern = tuple("x" if s == var else s for s in word)
            return pair_collapse_value(pattern, point, table)
        return under_value(word, point, table)
    assert arg != var, "canonical atoms need no anchor"
    if arg == point:
        pattern = tuple("x" if s in (var, cv) else s for s in word)
        return endpoint_collapse_value(pattern, point, table)
    mapped = tuple(point if s in (var, cv) else s for s in word)
    return binary_value(mapped, arg, "right", table)


def _cross_atom(arg, word, var, crossed, table):
    """Interval form of a single atom left of the crossed points."""
    from .hyperlog import conj, value_at
    from .constants import resolve_constants
    cv = conj(var)
    if arg not in (var, cv) and var not in word and cv not in word:
        return Expr.atom(arg, word)
    if arg == var:
        assert var not in word and cv not in word, \
            "unexpected letter geometry in interval basis"
        return Expr.atom(arg, word)
    key = (arg, word, var, crossed)
    hit = _cross_cache.get(key)
    if hit is not None:
        return hit
    expr = Expr.atom(arg, word)
    form = td(expr, "oo")
    tilde = Expr()
    two_i_pi = Mzv.two_i_pi_pow(1)
    for s, coeff in _track_components(form, var).items():
        g = _cross_pass(coeff * two_i_pi, var, crossed, table)
        tilde = tilde + prepend_primitive(g, var, s)
    point = crossed[-1]
    anchor = Expr.const(_left_anchor(arg, word, var, point, table))
    matched = resolve_constants(
        value_at(tilde, var, point, "left", None), table)
    res = tilde + anchor - matched
    _cross_cache[key] = res
    return res


def _cross_pass(expr, var, crossed, table):
    from .hyperlog import conj
    cv = conj(var)
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        assert not any(var in p or cv in p for p in slots), \
            "differential form input to interval basis"
        piece = Expr.term(c, slots, ())
        for a, w in atoms:
            if not piece:
                break
            piece = piece * _cross_atom(a, w, var, crossed, table)
        out = out + piece
    return out


def crossed_basis(expr, var, crossed, table):
    """Fibration-basis form of a boundary-track restriction on an
    interval left of the crossed marked points.

    expr depends on the variable and its conjugate; on the track the
    conjugate approaches the variable from below after carrying it
    across the crossed points (listed rightmost first) through the lower
    half-plane.  The rewrite keeps the differential recursion of the
    fibration basis along the track, fixing each integration constant by
    the collapse limit of the atom at the left of the last crossed
    point.  All letters and arguments besides the variable and its
    conjugate must be marked points.
    """
    from .hyperlog import conj
    if not crossed:
        return _fib_pass(expr.substitute({conj(var): var}), var, "oo", table)
    return _cross_pass(expr, var, crossed, table)


def reg_boundary_limit(expr, var, base, table):
    """Regularized restriction to the boundary stratum where ~var -> var.

    Substitutes the conjugate variable by var in arguments and letters
    (producing atoms whose argument occurs among their letters) and
    rewrites the result in fibration-basis form with respect to var.
    The approach is transverse to the real axis; no marked points are
    crossed, so no branch corrections arise.
    """
    cvar = "~" + var
    collided = expr.substitute({cvar: var})
    return fibration_basis(collided, (var,), base, table)
