"""Monodromy cancellation and single-valued primitives on punctured disk fibres.

Functions on a disk fibre are Expr values whose atoms in the moving
variable z (and its conjugate) are hyperlogarithms along canonical
paths.  The monodromy operator delta records the effect of analytic
continuation around counterclockwise loops at the interior punctures;
it is cancelled constructively by the perturbation series
Lambda = (h - h delta' h + h delta' h delta' h - ...) lambda, where h
appends the puncture letter at the base end of a word and delta' keeps
the parts of the monodromy that drop the fibre weight by two or more.

A fibrewise two-form in the basis dlog(z~ - t) ^ dlog(z - s) acquires a
(1,0)-primitive by integrating in the antiholomorphic variable; its
fibre monodromy is holomorphic and is subtracted off via the series
above, yielding the single-valued primitive used by the pushforward.
"""

from .coeffring import Mzv
from .hyperlog import Expr, conj, continue_loop, fibre_components


class NonHolomorphicMonodromy(Exception):
    pass


def _var_weight(atoms, var):
    return sum(len(w) for a, w in atoms if a == var)


def fibre_monodromy(expr, var, p):
    """Continuation around the counterclockwise loop at puncture p, minus id.

    Acts on atoms in var (winding +1) and its conjugate (winding -1,
    since the conjugate variable traverses the mirrored loop).
    """
    out = continue_loop(expr, var, p, +1, None)
    out = continue_loop(out, conj(var), conj(p), -1, None)
    return out - expr


def delta(expr, var, punctures):
    """Monodromy cochain of a fibre function: puncture -> continuation defect."""
    return {p: fibre_monodromy(expr, var, p) for p in punctures}


def append_letter(expr, var, letter):
    """The operator h on one cochain entry: append the letter at the base end."""
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == var]
        assert len(hit) <= 1
        if hit:
            i = hit[0]
            word = atoms[i][1] + (letter,)
            rest = atoms[:i] + atoms[i + 1:]
        else:
            word = (letter,)
            rest = atoms
        out = out + Expr.term(c, slots, rest + ((var, word),))
    return out


def h(cochain, var):
    out = Expr()
    for p, entry in cochain.items():
        out = out + append_letter(entry, var, p)
    return out


def delta_prime(expr, var, punctures):
    """The part of the monodromy that drops the fibre weight by >= 2."""
    out = {}
    for (slots, atoms), c in expr.terms.items():
        ell = _var_weight(atoms, var)
        term = Expr()
        term.terms[(slots, atoms)] = c
        for p in punctures:
            dp = fibre_monodromy(term, var, p)
            keep = Expr({k: v for k, v in dp.terms.items()
                         if _var_weight(k[1], var) <= ell - 2})
            if keep:
                out[p] = out.get(p, Expr()) + keep
    return {p: e for p, e in out.items() if e}


def cancel_monodromy(cochain, var, punctures, check=True):
    """Holomorphic function with the prescribed monodromy cochain.

    Computes Lambda = (1 + h delta')^{-1} h applied to the cochain; the
    series terminates because delta' strictly decreases the fibre
    weight.  When check is set, verifies delta(Lambda) = cochain.
    """
    base = h(cochain, var)
    lam = base
    while True:
        corr = h(delta_prime(lam, var, punctures), var)
        new = base - corr
        if new == lam:
            break
        lam = new
    if check:
        for p in punctures:
            got = fibre_monodromy(lam, var, p)
            want = cochain.get(p, Expr())
            assert got == want, f"monodromy cancellation failed at {p}"
    return lam


def _assert_holomorphic(expr, var):
    cv = conj(var)
    for (slots, atoms) in expr.terms:
        for a, _ in atoms:
            if a == cv:
                raise NonHolomorphicMonodromy(
                    f"monodromy defect contains {cv} atoms")


def sv_integrate(expr, var, letter, punctures, check=True):
    """Fibrewise single-valued primitive in the conjugate variable.

    Returns F with dF/d(conj var) = expr / (2 pi i (conj var - letter))
    such that F has no monodromy around the punctures.  The letter may
    be var itself (the extra antiholomorphic letter of the disk).
    """
    cv = conj(var)
    tilde = Expr()
    for (slots, atoms), c in expr.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == cv]
        assert len(hit) <= 1
        if hit:
            i = hit[0]
            word = (letter,) + atoms[i][1]
            rest = atoms[:i] + atoms[i + 1:]
        else:
            word = (letter,)
            rest = atoms
        tilde = tilde + Expr.term(c, slots, rest + ((cv, word),))
    defect = delta(tilde, var, punctures)
    defect = {p: e for p, e in defect.items() if e}
    for e in defect.values():
        _assert_holomorphic(e, var)
    if not defect:
        return tilde
    lam = cancel_monodromy(defect, var, punctures, check=check)
    out = tilde - lam
    if check:
        for p in punctures:
            assert not fibre_monodromy(out, var, p), \
                f"residual monodromy at {p}"
    return out


def sv_primitive(omega, var, punctures, table=None, check=True):
    """Single-valued (1,0)-primitive of a fibrewise two-form.

    omega is an Expr two-form in the fibre variable (wedge pairs may
    also involve base symbols, which are carried along).  Returns a dict
    s -> A_s with primitive alpha = sum_s A_s dlog(var - s), where each
    coefficient A_s is fibrewise single-valued.  Components of fibre
    degree below two integrate to zero along the fibre and are dropped.

    Coefficients are first rewritten in the nested fibration basis of
    the disk fibre (conjugate dependence isolated in conjugate-argument
    atoms, var-atoms with constant letters), which the integration step
    requires; a reduction table is needed when the input has atoms whose
    letters involve the fibre variables.
    """
    from .modulipolylog import fibration_basis
    cv = conj(var)
    two_i_pi = Mzv.two_i_pi_pow(1)
    alpha = {}
    for (t, s), pieces in fibre_components(omega, var).items():
        if t is None or s is None:
            continue
        carrier = Expr()
        for base_slots, atoms, c in pieces:
            carrier = carrier + Expr.term(c, base_slots, atoms)
        if table is not None:
            carrier = fibration_basis(carrier, (cv, var), "oo", table)
        prim = sv_integrate(carrier * two_i_pi, var, t, punctures,
                            check=check)
        alpha[s] = alpha.get(s, Expr()) + prim
    return {s: e for s, e in alpha.items() if e}
