"""Symbolic calculus of hyperlogarithms on configurations of marked points.

The basic objects are linear combinations of terms

    coeff * dlog(p1 - q1) ^ ... ^ dlog(pk - qk) * (product of atoms)

with coefficients that are polynomials in the propagator parameter t over
the exact MZV ring.  Points are named by strings; the conjugate of an
interior point "x" is written "~x", while boundary points are their own
conjugates.

The wedge factors are canonicalized with the Arnold relation

    dlog(a-v) ^ dlog(b-v) = dlog(a-v) ^ dlog(a-b) + dlog(a-b) ^ dlog(b-v)

so that in each term every symbol is the larger endpoint of at most one
pair.  These normal monomials are a basis of the cohomology of the
configuration space, which makes term keys unique and keeps all poles
simple.

An atom (arg, word) denotes the regularized iterated integral of the
one-forms dlog(z - letter)/(2 pi i) from the tangential base point at
+infinity on the real axis to the point arg, along the canonical path:
straight in from +infinity, passing intermediate real marked points
through the upper half-plane (for arguments in the closed upper
half-plane) or through the lower half-plane (for conjugated arguments).
The letters are read left to right from the endpoint arg towards the
base point.
"""

from fractions import Fraction
from functools import lru_cache

from .coeffring import Mzv, TPoly, _coerce_t
from .words import decompose_left, shuffle


class WeightDropViolation(Exception):
    pass


def conj(s):
    if s.startswith("~"):
        return s[1:]
    return "~" + s


def is_conj(s):
    return s.startswith("~")


def base_symbol(s):
    return s[1:] if s.startswith("~") else s


class Config:
    """Marked points of a disk configuration.

    reals is the tuple of boundary points in increasing order along the
    real axis; interior is a tuple of points in the open upper half-plane.
    """

    def __init__(self, reals=(), interior=()):
        self.reals = tuple(reals)
        self.interior = tuple(interior)
        assert len(set(self.reals)) == len(self.reals)
        assert not (set(self.reals) & set(self.interior))

    def is_real(self, s):
        return s in self.reals

    def conj(self, s):
        if s in self.reals:
            return s
        return conj(s)

    def all_letters(self):
        out = list(self.reals)
        for p in self.interior:
            out.append(p)
            out.append(conj(p))
        return out

    def without(self, s):
        if s in self.reals:
            return Config(tuple(r for r in self.reals if r != s), self.interior)
        return Config(self.reals, tuple(p for p in self.interior if p != s))


def _sort_with_sign(items, key=None):
    """Insertion sort returning (sorted_tuple, permutation_sign)."""
    items = list(items)
    keys = [key(x) for x in items] if key else list(items)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and keys[j] < keys[j - 1]:
            items[j], items[j - 1] = items[j - 1], items[j]
            keys[j], keys[j - 1] = keys[j - 1], keys[j]
            sign = -sign
            j -= 1
    return tuple(items), sign


@lru_cache(maxsize=None)
def arnold_canon(slots, raised=()):
    """Arnold normal form of a wedge of dlog differences.

    slots is a tuple of sorted pairs (p, q), in wedge order.  Returns a
    tuple of (slots', Fraction) pairs, each canonical: slots sorted, and
    every symbol the maximum of at most one pair.  The symbol order is
    the string order, except that the symbols listed in `raised` compare
    above everything else (in the given order, last highest); this lets
    pushforward stages put the fibre variables on top.
    """
    rank = {s: i for i, s in enumerate(raised)}

    def skey(s):
        return (1, rank[s], s) if s in rank else (0, 0, s)

    def pkey(pair):
        a, b = sorted(pair, key=skey)
        return (skey(b), skey(a))

    slots, sign = _sort_with_sign(slots, key=pkey)
    if len(set(slots)) != len(slots):
        return ()
    # find the highest symbol that is the maximum of two or more pairs
    by_max = {}
    for i, pair in enumerate(slots):
        mx = max(pair, key=skey)
        by_max.setdefault(mx, []).append(i)
    bad = [v for v, idxs in by_max.items() if len(idxs) >= 2]
    if not bad:
        return ((slots, Fraction(sign)),)
    v = max(bad, key=skey)
    i, j = by_max[v][0], by_max[v][1]
    a = slots[i][0] if slots[i][1] == v else slots[i][1]
    b = slots[j][0] if slots[j][1] == v else slots[j][1]
    assert a != b
    c = tuple(sorted((a, b)))
    out = {}
    for variant in (slots[:j] + (c,) + slots[j + 1:],
                    slots[:i] + (c,) + slots[i + 1:]):
        for red, coeff in arnold_canon(variant, raised):
            tot = out.get(red, Fraction(0)) + sign * coeff
            if tot:
                out[red] = tot
            elif red in out:
                del out[red]
    return tuple(sorted(out.items()))


class Expr:
    """Linear combination of canonical terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict (slots, atoms) -> TPoly
        self.terms = dict(terms) if terms else {}

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero():
        return Expr()

    @staticmethod
    def const(c):
        c = _coerce_t(c)
        assert c is not None
        if not c:
            return Expr()
        return Expr({((), ()): c})

    @staticmethod
    def term(coeff, slots=(), atoms=()):
        """Build a single canonical term.

        slots is a wedge-ordered sequence of difference pairs; atoms with
        equal arguments are combined by the shuffle product.
        """
        coeff = _coerce_t(coeff)
        assert coeff is not None
        if not coeff:
            return Expr()
        slots = tuple(tuple(sorted(p)) for p in slots)
        for p, q in slots:
            assert p != q, "degenerate dlog pair"
        slot_pieces = arnold_canon(slots)
        if not slot_pieces:
            return Expr()
        # group atoms by argument and shuffle-multiply words per argument
        by_arg = {}
        for arg, word in atoms:
            word = tuple(word)
            by_arg.setdefault(arg, []).append(word)
        expanded = [((), Fraction(1))]
        for arg in sorted(by_arg):
            words = by_arg[arg]
            vec = {words[0]: Fraction(1)}
            for w in words[1:]:
                nxt = {}
                for u, cu in vec.items():
                    for ww, cw in shuffle(u, w).items():
                        nxt[ww] = nxt.get(ww, Fraction(0)) + cu * cw
                vec = nxt
            nxt_exp = []
            for prefix, c in expanded:
                for w, cw in vec.items():
                    if w:
                        nxt_exp.append((prefix + ((arg, w),), c * cw))
                    else:
                        nxt_exp.append((prefix, c * cw))
            expanded = nxt_exp
        out = Expr()
        for atoms_t, c in expanded:
            for smono, sc in slot_pieces:
                key = (smono, atoms_t)
                add = coeff * Mzv.rational(c * sc)
                prev = out.terms.get(key)
                tot = add if prev is None else prev + add
                if tot:
                    out.terms[key] = tot
                elif key in out.terms:
                    del out.terms[key]
        return out

    @staticmethod
    def atom(arg, word, coeff=1):
        return Expr.term(coeff, atoms=((arg, tuple(word)),))

    @staticmethod
    def dlog(p, q, coeff=1):
        """d log(p - q); differences against the point at infinity vanish."""
        if p == "oo" or q == "oo":
            return Expr()
        assert p != q
        return Expr.term(coeff, slots=((p, q),))

    # -- ring structure ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Expr):
            other = Expr.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, Expr):
            other = Expr.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return Expr(out)

    __radd__ = __add__

    def __neg__(self):
        return Expr({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Expr):
            other = Expr.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Expr.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Expr):
            c = _coerce_t(other)
            if c is None:
                return NotImplemented
            if not c:
                return Expr()
            return Expr({k: v * c for k, v in self.terms.items()})
        out = Expr()
        for (sl1, at1), c1 in self.terms.items():
            for (sl2, at2), c2 in other.terms.items():
                out = out + Expr.term(c1 * c2, slots=sl1 + sl2,
                                      atoms=at1 + at2)
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Mzv.rational(1 / Fraction(other))
        return NotImplemented

    def map_coeffs(self, f):
        out = Expr()
        for k, v in self.terms.items():
            w = f(v)
            if w:
                out.terms[k] = w
        return out

    def subs_t(self, value):
        """Specialize the propagator parameter, keeping Mzv coefficients."""
        out = Expr()
        for k, v in self.terms.items():
            w = v.subs_t(value)
            if w:
                out.terms[k] = TPoly({0: w})
        return out

    def conjugate(self, config):
        """Complex conjugation of points, coefficients and t -> 1-t."""
        out = Expr()
        for (slots, atoms), c in self.terms.items():
            nslots = tuple((config.conj(p), config.conj(q)) for p, q in slots)
            natoms = tuple((config.conj(a), tuple(config.conj(s) for s in w))
                           for a, w in atoms)
            out = out + Expr.term(c.conjugate(), nslots, natoms)
        return out

    def substitute(self, mapping):
        """Rename points.  mapping: symbol -> symbol (applied verbatim)."""
        def m(s):
            return mapping.get(s, s)
        out = Expr()
        for (slots, atoms), c in self.terms.items():
            nslots = tuple((m(p), m(q)) for p, q in slots)
            natoms = tuple((m(a), tuple(m(s) for s in w)) for a, w in atoms)
            out = out + Expr.term(c, nslots, natoms)
        return out

    # -- inspection ----------------------------------------------------------

    def constant_part(self):
        """Coefficient of the trivial key (no slots, no atoms)."""
        return self.terms.get(((), ()), TPoly())

    def is_constant(self):
        return set(self.terms) <= {((), ())}

    def max_weight(self):
        w = 0
        for (slots, atoms), c in self.terms.items():
            w = max(w, sum(len(word) for _, word in atoms) + c.weight())
        return w

    def depends_on(self, var):
        """True if the symbol var (verbatim) occurs anywhere."""
        for (slots, atoms) in self.terms:
            for p, q in slots:
                if var in (p, q):
                    return True
            for a, w in atoms:
                if a == var or var in w:
                    return True
        return False

    def atom_args(self):
        args = set()
        for (_, atoms) in self.terms:
            for a, _ in atoms:
                args.add(a)
        return args

    def form_degree(self):
        degs = {len(slots) for (slots, _) in self.terms}
        assert len(degs) <= 1, f"mixed form degrees {degs}"
        return degs.pop() if degs else 0

    def __repr__(self):
        if not self.terms:
            return "Expr(0)"
        parts = []
        for (slots, atoms), c in sorted(self.terms.items()):
            bits = [f"({c!r})"]
            for p, q in slots:
                bits.append(f"dlog({p}-{q})")
            for a, w in atoms:
                bits.append(f"L[{','.join(w)}]({a})")
            parts.append(" ".join(bits))
        return "Expr(" + "  +  ".join(parts) + ")"


# -- total differential ------------------------------------------------------


def _td_atom(arg, word, base="oo"):
    """Total differential of a single atom.

    Returns a list of (p, q, new_word, sign) meaning sign * dlog(p - q)
    / (2 pi i) times the atom (arg, new_word).  Differences against the
    point at infinity drop out, as do degenerate differences between
    equal symbols (this handles words that contain the argument or the
    base point as a letter, whose regularization kills those terms).
    """
    # runs of equal letters, innermost (rightmost) first
    runs = []
    for s in reversed(word):
        if runs and runs[-1][0] == s:
            runs[-1][1] += 1
        else:
            runs.append([s, 1])
    n = len(runs)
    pieces = []
    for i in range(n):
        s = runs[i][0]
        left = runs[i + 1][0] if i + 1 < n else arg  # towards the endpoint
        new_runs = [list(r) for r in runs]
        new_runs[i][1] -= 1
        new_word = []
        for sym, k in reversed(new_runs):
            new_word.extend([sym] * k)
        new_word = tuple(new_word)
        if left != "oo" and left != s:
            pieces.append((s, left, new_word, 1))
        right = runs[i - 1][0] if i > 0 else base
        if right != "oo" and right != s:
            pieces.append((s, right, new_word, -1))
    return pieces


def td(expr, base="oo"):
    """Total differential; adds one wedge factor on the left of each term."""
    out = Expr()
    two_i_pi_inv = Mzv.two_i_pi_pow(-1)
    for (slots, atoms), c in expr.terms.items():
        for aidx, (arg, word) in enumerate(atoms):
            rest = atoms[:aidx] + atoms[aidx + 1:]
            for p, q, new_word, sgn in _td_atom(arg, word, base):
                new_atoms = rest + ((arg, new_word),) if new_word else rest
                out = out + Expr.term(c * Mzv.rational(sgn) * two_i_pi_inv,
                                      slots=((p, q),) + slots,
                                      atoms=new_atoms)
    return out


def d_component(expr, var):
    """Coefficient of d(var), as (pole, coefficient Expr) pairs.

    The input must be a one-form whose var-dependent wedge factors are
    Arnold-reduced with var on top, i.e. each term has at most one pair
    containing var.  Terms without var in their pair are discarded.
    Returns a dict pole -> Expr with d(var)/(var - pole) stripped.
    """
    out = {}
    for (slots, atoms), c in expr.terms.items():
        assert len(slots) == 1
        (p, q), = slots
        if var not in (p, q):
            continue
        s = q if p == var else p
        piece = Expr()
        piece.terms[((), atoms)] = c
        out[s] = out.get(s, Expr()) + piece
    return {s: e for s, e in out.items() if e}


def fibre_components(expr, var, config=None):
    """Split a form by its wedge structure in the symbols var and ~var.

    Re-canonicalizes each term with var and ~var raised to the top of the
    symbol order, then classifies the pairs containing them.  Returns a
    dict (t, s) -> list of (base_slots, atoms, coeff) where the term was
    coeff * dlog(~var - t) ^ dlog(var - s) ^ base_slots (in this wedge
    order), plus entries with s or t equal to None for terms missing the
    corresponding differential.  The pair (var, ~var) is reported as
    t = var (the antiholomorphic factor dlog(~var - var)).
    """
    cvar = conj(var)
    out = {}
    for (slots, atoms), c in expr.terms.items():
        for rslots, sc in arnold_canon(slots, raised=(var, cvar)):
            t = s = None
            ti = si = None
            for i, pair in enumerate(rslots):
                if cvar in pair:
                    assert ti is None
                    ti = i
                    t = pair[0] if pair[1] == cvar else pair[1]
                elif var in pair:
                    assert si is None
                    si = i
                    s = pair[0] if pair[1] == var else pair[1]
            base = tuple(p for i, p in enumerate(rslots) if i not in (ti, si))
            # sign to bring the ~var pair first and the var pair second
            sign = 1
            order = [i for i in (ti, si) if i is not None]
            order += [i for i in range(len(rslots)) if i not in (ti, si)]
            # parity of the permutation taking 0..k-1 to `order`
            perm = list(order)
            for i in range(len(perm)):
                while perm[i] != i:
                    j = perm[i]
                    perm[i], perm[j] = perm[j], perm[i]
                    sign = -sign
            out.setdefault((t, s), []).append(
                (base, atoms, c * Mzv.rational(sc * sign)))
    return out


# -- evaluation and continuation ---------------------------------------------


def _apply_to_atom(expr, var, fn):
    """Apply fn to the unique atom with argument var in each term.

    fn(word, carrier) -> Expr where carrier is the term without that
    atom.  Terms without a var-atom are passed through fn(None, carrier).
    """
    out = Expr()
    for (slots, atoms), c in expr.terms.items():
        hit = [i for i, (a, _) in enumerate(atoms) if a == var]
        assert len(hit) <= 1
        if hit:
            i = hit[0]
            word = atoms[i][1]
            rest = atoms[:i] + atoms[i + 1:]
        else:
            word = None
            rest = atoms
        carrier = Expr.term(c, slots, rest)
        out = out + fn(word, carrier)
    return out


def value_at(expr, var, point, side, config):
    """Regularized value of the var-dependence at a real marked point.

    All var-dependence must be through atoms with argument var.  side is
    "left" (var -> point from below) or "right" (from above).  The
    result replaces (var, w) atoms by atoms at the point.

    Approaching from the left, the canonical path has crossed the point
    through the upper half-plane, so the regularized logarithm carries
    +1/2 per leading letter equal to the point.
    """
    rho = Fraction(1, 2) if side == "left" else Fraction(0)

    def fn(word, carrier):
        if word is None:
            return carrier
        total = Expr()
        for j, vec in decompose_left({word: Fraction(1)}, point).items():
            factor = rho ** j if j else Fraction(1)
            if factor == 0 and j:
                continue
            for w, cw in vec.items():
                if w and w[0] == point:
                    raise AssertionError("leading letter survived decomposition")
                total = total + carrier * Expr.atom(point, w,
                                                   Mzv.rational(cw * factor))
        return total

    out = _apply_to_atom(expr, var, fn)
    _assert_no_var(out, var)
    return out


def value_at_minus_infinity(expr, var, config, loop_order=None):
    """Regularized value at the far negative end of the real axis.

    For the branch reached near infinity (over the top of all interior
    points) each atom (var, w) contributes 2^-|w|/|w|!.  The canonical
    (axis-hugging) branch differs by counterclockwise loops around the
    interior points, which are applied first.
    """
    cont = expr
    for p in (loop_order if loop_order is not None else config.interior):
        cont = continue_loop(cont, var, p, +1, config)

    def fn(word, carrier):
        if word is None:
            return carrier
        n = len(word)
        f = Fraction(1)
        for k in range(1, n + 1):
            f = f / (2 * k)
        return carrier * Mzv.rational(f)

    out = _apply_to_atom(cont, var, fn)
    _assert_no_var(out, var)
    return out


def _assert_no_var(expr, var):
    assert not expr.depends_on(var), f"residual dependence on {var}"


def _loop_period(word, point, eps, half):
    """Based loop period of a word around a marked point.

    Returns an Expr (atoms at the point) for the period of the loop
    around the point conjugated by the canonical path from the base
    point.  eps is the winding (+1 counterclockwise); half selects a
    half-loop.
    """
    n = len(word)
    if n == 0:
        return Expr.const(1)
    unit = Fraction(eps, 2) if half else Fraction(eps)
    total = Expr()
    for j in range(n):
        for k in range(j + 1, n + 1):
            mid = word[j:k]
            if any(s != point for s in mid):
                continue
            m = k - j
            chi = unit ** m
            for i in range(1, m + 1):
                chi /= i
            # (-1)^j * value(reversed prefix) * chi * value(suffix)
            pre = _reg_value(tuple(reversed(word[:j])), point)
            suf = _reg_value(word[k:], point)
            total = total + pre * suf * Mzv.rational(chi * (-1) ** j)
    return total


def _reg_value(word, point):
    """Regularized value at a marked point along the canonical approach."""
    if not word:
        return Expr.const(1)
    total = Expr()
    dec = decompose_left({word: Fraction(1)}, point)
    for w, cw in dec.get(0, {}).items():
        total = total + Expr.atom(point, w, Mzv.rational(cw))
    return total


def continue_loop(expr, var, point, eps, config, half=False):
    """Analytic continuation of the var-dependence around a marked point.

    Acts on atoms with argument var; all other content is single-valued
    in var near the loop.
    """
    if not expr.depends_on(var):
        return expr

    def fn(word, carrier):
        if word is None:
            return carrier
        total = Expr()
        for j in range(len(word) + 1):
            period = _loop_period(word[j:], point, eps, half)
            if not period:
                continue
            total = total + carrier * Expr.atom(var, word[:j]) * period
        return total

    return _apply_to_atom(expr, var, fn)


def continue_half_loop(expr, var, point, eps, config):
    return continue_loop(expr, var, point, eps, config, half=True)
