"""Fibre integration on moduli of marked disks.

forget_interior integrates a fibrewise two-form over an interior marked
point by the residue method: a single-valued (1,0)-primitive alpha is
constructed, interior punctures contribute residues, and the boundary
circle contributes regularized interval and half-circle periods of the
fibrewise holomorphic restrictions beta_q of alpha.

forget_boundary integrates a fibrewise one-form over a boundary marked
point as a regularized period of the universal interval between the
cyclic neighbours of the point.

The boundary circle is traversed along the real axis in the positive
direction and closed by the large half-circle through the upper half
plane.  Its total contribution is assembled as

    sum_q [ V_left(f_q, q') - V_left(f_q, q) ]
    + V_left(f_ref, q_first) + closed-loop period of beta_ref,

where f_q is the regularized primitive of beta_q on the interval whose
left endpoint is q, f_ref belongs to the unbounded reference interval,
and the closed-loop period is the regularized base value of the defect
of f_ref under counterclockwise continuation around every interior
puncture.  The interval and half-circle pieces per marked point are
V_left(f_q, q') - V_right(f_q, q) and V_right(f_q, q) - V_left(f_q, q)
respectively; they are exposed separately for inspection.
"""

from fractions import Fraction

from .coeffring import Mzv
from .constants import resolve_constants
from .hyperlog import (Expr, WeightDropViolation, conj, continue_loop,
                       fibre_components, value_at, value_at_minus_infinity)
from .modulipolylog import crossed_basis, fibration_basis, \
    one_form_components, prepend_primitive
from .svcalculus import sv_primitive
from .words import decompose_left


class NonConvergentResidue(Exception):
    pass


_TWO_I_PI = Mzv.two_i_pi_pow(1)


def form_weight(expr):
    """Weight of a form: letters, coefficient weight, and 2 per wedge slot."""
    w = None
    for (slots, atoms), c in expr.terms.items():
        tw = sum(len(word) for _, word in atoms) + c.weight() + 2 * len(slots)
        w = tw if w is None else max(w, tw)
    return w if w is not None else 0


def decompose_two_form(omega, var):
    """Basis expansion of a fibre two-form.

    Returns a dict (t, s) -> Expr with
    omega = sum dlog(~var - t) ^ dlog(var - s) * coefficient, where the
    coefficient Expr carries any remaining base wedge factors.  The pair
    (var, ~var) itself appears as t = var.  Entries with t or s equal to
    None collect the components missing one of the fibre differentials.
    """
    out = {}
    for key, pieces in fibre_components(omega, var).items():
        e = out.get(key, Expr())
        for base_slots, atoms, c in pieces:
            e = e + Expr.term(c, base_slots, atoms)
        out[key] = e
    return {k: e for k, e in out.items() if e}


def _drop_leading(expr, arg, point, divergent):
    """Value of arg-atoms at a point, canonical approach.

    Rewrites atoms (arg, w) as atoms at the point; parts with leading
    logarithms are recorded in the divergent list instead.
    """
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == arg]
        assert len(hit) <= 1
        if not hit:
            out = out + Expr.term(c, slots, atoms)
            continue
        i = hit[0]
        word = atoms[i][1]
        rest = atoms[:i] + atoms[i + 1:]
        carrier = Expr.term(c, slots, rest)
        for j, vec in decompose_left({word: Fraction(1)}, point).items():
            piece = Expr()
            for w, cw in vec.items():
                piece = piece + carrier * Expr.atom(point, w,
                                                   Mzv.rational(cw))
            if j == 0:
                out = out + piece
            elif piece:
                divergent.append(piece)
    return out


def residue_at(alpha, var, p):
    """2 pi i times the residue of alpha at the interior puncture p.

    alpha is the dict s -> A_s of a (1,0)-primitive; the residue is the
    regularized double limit of A_p as (var, ~var) -> (p, ~p), times
    2 pi i.  Surviving leading logarithms mean the fibre integral does
    not converge absolutely.
    """
    A = alpha.get(p)
    if A is None:
        return Expr()
    cv, cp = conj(var), conj(p)
    divergent = []
    e = _drop_leading(A, cv, cp, divergent)
    e = _drop_leading(e, var, p, divergent)
    if any(divergent):
        raise NonConvergentResidue(f"logarithmic divergence at {p}")
    e = e.substitute({var: p, cv: cp})
    return e * _TWO_I_PI


def holomorphic_restriction(alpha, var, q, config, table):
    """Fibrewise holomorphic restriction beta of alpha to a boundary interval.

    q is the left endpoint of the interval (None for the unbounded
    reference interval).  The conjugate variable is carried across every
    marked real to the right of the interval through the lower half
    plane, then identified with var; atoms whose argument occurs among
    their letters are rewritten in fibration-basis form.  Returns a dict
    s -> B_s with beta = sum_s B_s dlog(var - s).
    """
    if q is None:
        crossed = tuple(reversed(config.reals))
    else:
        idx = config.reals.index(q)
        crossed = tuple(reversed(config.reals[idx + 1:]))
    return _restriction(alpha, var, crossed, config, table)


def _symbols(expr):
    out = set()
    for (slots, atoms) in expr.terms:
        for p, q in slots:
            out.add(p)
            out.add(q)
        for a, w in atoms:
            out.add(a)
            out.update(w)
    return out


def _restriction(alpha, var, crossed, config, table):
    cv = conj(var)
    allowed = {var, cv} | set(config.reals)
    out = {}
    for s, A in alpha.items():
        if _symbols(A) <= allowed:
            e = crossed_basis(A, var, crossed, table)
        else:
            # with further marked points in play the track anchors are
            # not constants; carry the conjugate across by continuation
            e = A
            for r in crossed:
                e = continue_loop(e, cv, r, -1, config)
            e = e.substitute({cv: var})
            e = fibration_basis(e, (var,), "oo", table)
        if e:
            out[s] = e
    return out


def _primitive(beta, var):
    """Regularized primitive of beta = sum B_s dlog(var - s), vanishing
    regularly at the base point."""
    f = Expr()
    for s, B in beta.items():
        f = f + prepend_primitive(B * _TWO_I_PI, var, s)
    return f


def _base_reg(expr, var):
    """Regularized value at the tangential base point: var-atoms vanish."""
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        if any(a == var for a, _ in atoms):
            continue
        out.terms[(slots, atoms)] = c
    return out


def _loop_defect(f, var, config, loop_order=None):
    """Defect of f under continuation along the full boundary loop.

    The boundary circle is homotopic to the composition of the based
    counterclockwise loops around the interior punctures, rightmost
    puncture first (config.interior lists the punctures with increasing
    real part).
    """
    fstar = f
    if loop_order is None:
        loop_order = tuple(reversed(config.interior))
    for p in loop_order:
        fstar = continue_loop(fstar, var, p, +1, config)
    return fstar - f


def _symbol_key(s, config):
    if s in config.reals:
        return (0, config.reals.index(s))
    base = s[1:] if s.startswith("~") else s
    if base in config.interior:
        j = config.interior.index(base) + 1
        return (-j, 0) if s.startswith("~") else (j, 0)
    return None


def reduce_logs(expr, config):
    """Canonical form of weight-one logarithm atoms.

    The marked points sit in the staircase position convention: reals
    increase along config.reals, interior points have increasing real
    and imaginary parts along config.interior, conjugates mirrored.
    Then log(a - b) and log(b - a) differ by the exact constant
    +-(i pi), fixed by which point is higher (for two reals, by which
    is to the left).  Each single-letter atom is rewritten so that its
    argument is the higher of the two symbols.
    """
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        piece = Expr.term(c, slots, ())
        for a, w in atoms:
            if not piece:
                break
            ka = _symbol_key(a, config) if len(w) == 1 else None
            kb = _symbol_key(w[0], config) if len(w) == 1 else None
            if ka is None or kb is None or ka > kb:
                piece = piece * Expr.atom(a, w)
                continue
            # sign of the branch constant: +1/2 when the argument is
            # higher, or at equal height (two reals) to the left
            if ka[0] != kb[0]:
                s = Fraction(1, 2) if ka[0] > kb[0] else Fraction(-1, 2)
            else:
                s = Fraction(1, 2) if ka[1] < kb[1] else Fraction(-1, 2)
            piece = piece * (Expr.atom(w[0], (a,)) + Expr.const(
                Mzv.rational(s)))
        out = out + piece
    return out


def boundary_contribution(alpha, var, config, table, loop_order=None,
                          pieces=None):
    """Total boundary-circle contribution of the primitive alpha.

    When a dict is passed as pieces, the individual regularized
    contributions are recorded under the keys ("interval", q),
    ("arc", q), ("interval", None) for the unbounded reference interval
    together with the closed-loop period, and ("arc", "oo").
    """
    reals = config.reals
    total = Expr()
    restrictions = {}
    for i, q in enumerate(reals):
        crossed = tuple(reversed(reals[i + 1:]))
        restrictions[q] = _restriction(alpha, var, crossed, config, table)
    restrictions[None] = _restriction(alpha, var, tuple(reversed(reals)),
                                      config, table)

    for i, q in enumerate(reals):
        f = _primitive(restrictions[q], var)
        v_right = value_at(f, var, q, "right", config)
        v_left = value_at(f, var, q, "left", config)
        if i + 1 < len(reals):
            v_next = value_at(f, var, reals[i + 1], "left", config)
        else:
            v_next = _base_reg(f, var)
        interval = v_next - v_right
        arc = v_right - v_left
        total = total + interval + arc
        if pieces is not None:
            pieces[("interval", q)] = interval
            pieces[("arc", q)] = arc

    f_ref = _primitive(restrictions[None], var)
    period = _base_reg(_loop_defect(f_ref, var, config, loop_order), var)
    if reals:
        ref = value_at(f_ref, var, reals[0], "left", config) + period
    else:
        ref = period
    total = total + ref
    if pieces is not None:
        pieces[("interval", None)] = ref
    return total


def forget_interior(omega, var, config, table, check=True, loop_order=None,
                    pieces=None):
    """Fibre integral of a two-form over an interior marked point.

    config describes the remaining marked points; atoms and dlog slots
    of omega involving var and ~var are integrated out.  The result is
    the sum of interior residues and boundary-circle contributions, with
    the weight dropping by at least one.
    """
    in_weight = form_weight(omega)
    alpha = sv_primitive(omega, var, config.interior, table, check=check)
    total = Expr()
    for p in config.interior:
        total = total - residue_at(alpha, var, p)
    total = total + boundary_contribution(alpha, var, config, table,
                                          loop_order=loop_order,
                                          pieces=pieces)
    total = reduce_logs(resolve_constants(total, table), config)
    assert not total.depends_on(var) and not total.depends_on(conj(var))
    if check and form_weight(total) > in_weight - 1:
        raise WeightDropViolation(
            f"weight {form_weight(total)} after integrating {var} "
            f"from weight {in_weight}")
    return total


def forget_boundary(omega, var, config, table, check=True):
    """Fibre integral of a one-form over a boundary marked point.

    The fibre is the interval between the cyclic neighbours of var among
    the marked reals, with the wrap through infinity when var is extremal;
    with no other marked real the fibre is the whole boundary circle and
    the integral is a closed-loop period.
    """
    in_weight = form_weight(omega)
    comps = one_form_components(omega, var)
    beta = {}
    for s, C in comps.items():
        e = fibration_basis(C, (var,), "oo", table)
        if e:
            beta[s] = e
    f = _primitive(beta, var)
    others = tuple(r for r in config.reals if r != var)
    idx = config.reals.index(var)
    pred = config.reals[idx - 1] if idx > 0 else None
    succ = config.reals[idx + 1] if idx + 1 < len(config.reals) else None
    if not others:
        total = _base_reg(_loop_defect(f, var, config), var)
    elif succ is None:
        total = _base_reg(f, var) - value_at(f, var, pred, "right", config)
    elif pred is None:
        total = value_at(f, var, succ, "left", config) \
            - value_at_minus_infinity(f, var, config)
    else:
        total = value_at(f, var, succ, "left", config) \
            - value_at(f, var, pred, "right", config)
    total = reduce_logs(resolve_constants(total, table), config)
    assert not total.depends_on(var)
    if check and others == () and form_weight(total) > in_weight - 1:
        raise WeightDropViolation(
            f"no weight drop integrating boundary point {var}")
    return total
