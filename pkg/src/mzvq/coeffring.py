"""Exact coefficient ring of normalized multiple zeta values.

Elements are Q-linear combinations of monomials

    i^j * pi^a * zeta3^b * zeta5^c * zeta7^d * zeta35^e

with j in {0, 1} (i^2 = -1 folded into the sign), a an arbitrary
integer and b, c, d, e >= 0.  zeta35 denotes zeta(3,5) summed over
increasing indices.  The ring is closed under multiplication and
complex conjugation, and contains (2 pi i)^n for every integer n.
"""

import os
import re
from fractions import Fraction
from functools import lru_cache

from .words import shuffle_vec

MAX_WEIGHT = 8

# zeta-weight carried by the b, c, d, e exponents
_ZWEIGHTS = (3, 5, 7, 8)


class ParseError(Exception):
    pass


class InconsistentTable(Exception):
    pass


class Mzv:
    """An element of the normalized MZV ring."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = self.terms.get(m, Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    @staticmethod
    def rational(q):
        q = Fraction(q)
        return Mzv({(0, 0, 0, 0, 0, 0): q}) if q else Mzv()

    @staticmethod
    def i_pi_pow(j, a, coeff=1):
        """coeff * i^j * pi^a with arbitrary integer j."""
        sign = -1 if (j % 4) in (2, 3) else 1
        return Mzv({(j % 2, a, 0, 0, 0, 0): Fraction(coeff) * sign})

    @staticmethod
    def two_i_pi_pow(n):
        """(2 pi i)^n for any integer n."""
        return Mzv.i_pi_pow(n % 4, n, Fraction(2) ** n)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce(other)
        return other is not None and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        r = Mzv()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = Mzv()
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                j = m1[0] + m2[0]
                c = c1 * c2
                if j == 2:
                    j, c = 0, -c
                m = (j,) + tuple(x + y for x, y in zip(m1[1:], m2[1:]))
                s = out.get(m, Fraction(0)) + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        r = Mzv()
        r.terms = out
        return r

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def conjugate(self):
        """Complex conjugation: i -> -i."""
        r = Mzv()
        r.terms = {m: (-c if m[0] else c) for m, c in self.terms.items()}
        return r

    def weight(self):
        """Weight bound: each monomial of a normalized weight-w MZV has
        pi-exponent -w, so the weight is read off as max(0, -a)."""
        if not self.terms:
            return 0
        return max(max(0, -m[1]) for m in self.terms)

    def rational_part(self):
        return self.terms.get((0, 0, 0, 0, 0, 0), Fraction(0))

    def is_rational(self):
        return all(m == (0, 0, 0, 0, 0, 0) for m in self.terms)

    def real(self):
        r = Mzv()
        r.terms = {m: c for m, c in self.terms.items() if m[0] == 0}
        return r

    def imag(self):
        """Imaginary part divided by i (a real element)."""
        r = Mzv()
        r.terms = {(0,) + m[1:]: c for m, c in self.terms.items() if m[0] == 1}
        return r

    def numeric(self, mp=None):
        if mp is None:
            import mpmath as mp
        total = mp.mpc(0)
        zetas = [mp.zeta(3), mp.zeta(5), mp.zeta(7), _zeta35_numeric(mp)]
        for (j, a, b, c, d, e), q in self.terms.items():
            v = mp.mpf(q.numerator) / q.denominator * mp.pi ** a
            for z, k in zip(zetas, (b, c, d, e)):
                if k:
                    v *= z ** k
            total += v * (1j if j else 1)
        return total

    def __repr__(self):
        return f"Mzv({format_mzv(self)})"


def _coerce(x):
    if isinstance(x, Mzv):
        return x
    if isinstance(x, (int, Fraction)):
        return Mzv.rational(x)
    return None


_ZETA35 = None


def _zeta35_numeric(mp):
    global _ZETA35
    if _ZETA35 is None:
        _ZETA35 = mp.nsum(lambda n: (mp.zeta(3) - mp.zeta(3, n)) * n ** -5,
                          [2, mp.inf])
    return _ZETA35


ONE = Mzv.rational(1)
ZERO = Mzv()


def _label_elements():
    out = {"one": ONE}
    gens = {"z3": (3, (0, 0, 1, 0, 0, 0)),
            "z5": (5, (0, 0, 0, 1, 0, 0)),
            "z7": (7, (0, 0, 0, 0, 1, 0)),
            "z3z3": (6, (0, 0, 2, 0, 0, 0)),
            "z3z5": (8, (0, 0, 1, 1, 0, 0)),
            "z53": (8, (0, 0, 0, 0, 0, 1))}
    for lab, (w, mono) in gens.items():
        out[lab] = Mzv({mono: 1}) * Mzv.two_i_pi_pow(-w)
    return out


LABELS = _label_elements()


def format_mzv(x):
    """Render an Mzv element in the human-readable normalized form."""
    if not x.terms:
        return "0"
    parts = []
    for m in sorted(x.terms):
        j, a, b, c, d, e = m
        q = x.terms[m]
        w = 3 * b + 5 * c + 7 * d + 8 * e
        gens = []
        if b:
            gens.append("zeta3" + (f"^{b}" if b > 1 else ""))
        if c:
            gens.append("zeta5" + (f"^{c}" if c > 1 else ""))
        if d:
            gens.append("zeta7" + (f"^{d}" if d > 1 else ""))
        if e:
            gens.append("zeta35" + (f"^{e}" if e > 1 else ""))
        if w and a == -w and j == w % 2:
            # rescale to the standard gen/(2 pi i)^w presentation
            q2 = q * Fraction(2) ** w
            if (w % 4) in (1, 2):
                q2 = -q2
            s = f"{q2} * {'*'.join(gens)}/(2*pi*i)^{w}"
        else:
            factors = [str(q)]
            if j:
                factors.append("i")
            if a:
                factors.append(f"pi^{a}")
            factors.extend(gens)
            s = " * ".join(factors)
        parts.append(s)
    return " + ".join(parts)


class TPoly:
    """Polynomial in the propagator parameter t with Mzv coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _coerce(v)
                if v:
                    prev = self.coeffs.get(k)
                    v = v if prev is None else prev + v
                    if v:
                        self.coeffs[k] = v
                    elif k in self.coeffs:
                        del self.coeffs[k]

    @staticmethod
    def const(x):
        x = _coerce_t(x)
        return x

    @staticmethod
    def t(k=1, coeff=1):
        return TPoly({k: Mzv.rational(coeff)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        other = _coerce_t(other)
        return other is not None and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        other = _coerce_t(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        r = TPoly()
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = TPoly()
        r.coeffs = {k: -v for k, v in self.coeffs.items()}
        return r

    def __sub__(self, other):
        other = _coerce_t(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_t(other) - self

    def __mul__(self, other):
        other = _coerce_t(other)
        if other is None:
            return NotImplemented
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                v = v1 * v2
                s = out.get(k)
                s = v if s is None else s + v
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        r = TPoly()
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def conjugate(self):
        """Conjugate coefficients and substitute t -> 1-t."""
        out = TPoly()
        for k, v in self.coeffs.items():
            out = out + _t_sub_one_minus(k) * TPoly({0: v.conjugate()})
        return out

    def subs_t(self, value):
        """Evaluate at a rational value of t, returning an Mzv."""
        value = Fraction(value)
        total = Mzv()
        for k, v in self.coeffs.items():
            total = total + v * (value ** k if k else 1)
        return total

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def weight(self):
        return max((v.weight() for v in self.coeffs.values()), default=0)

    def is_constant(self):
        return set(self.coeffs) <= {0}

    def constant(self):
        return self.coeffs.get(0, ZERO)

    def numeric(self, t_value, mp=None):
        if mp is None:
            import mpmath as mp
        total = mp.mpc(0)
        for k, v in self.coeffs.items():
            total += v.numeric(mp) * mp.mpf(t_value) ** k
        return total

    def __repr__(self):
        return f"TPoly({format_tpoly(self)})"


def _coerce_t(x):
    if isinstance(x, TPoly):
        return x
    m = _coerce(x)
    if m is not None:
        r = TPoly()
        if m:
            r.coeffs = {0: m}
        return r
    return None


@lru_cache(maxsize=None)
def _t_sub_one_minus(k):
    """(1-t)^k as a TPoly."""
    out = TPoly({0: ONE})
    base = TPoly({0: ONE, 1: Mzv.rational(-1)})
    for _ in range(k):
        out = out * base
    return out


T_ZERO = TPoly()
T_ONE = TPoly({0: ONE})


def format_tpoly(x, style="plain"):
    """Render a TPoly.

    The factored style (1-2t) * v is used when the polynomial is exactly
    v - 2vt, matching the usual presentation of odd-part weights.
    """
    if not x.coeffs:
        return "0"
    if set(x.coeffs) == {0}:
        return format_mzv(x.coeffs[0])
    if (set(x.coeffs) == {0, 1}
            and x.coeffs[1] == Mzv.rational(-2) * x.coeffs[0]):
        return f"(1-2t) * {format_mzv(x.coeffs[0])}"
    parts = []
    for k in sorted(x.coeffs):
        body = format_mzv(x.coeffs[k])
        if k == 0:
            parts.append(body)
        else:
            tk = "t" if k == 1 else f"t^{k}"
            if "+" in body:
                parts.append(f"({body}) * {tk}")
            else:
                parts.append(f"{body} * {tk}")
    return " + ".join(parts)


class ReductionTable:
    """Regularized dch periods for all binary words up to max_weight."""

    def __init__(self, values, max_weight):
        self.values = values  # dict word tuple -> Mzv
        self.max_weight = max_weight

    def __contains__(self, word):
        return tuple(word) in self.values

    def value(self, word):
        word = tuple(int(c) for c in word)
        if not word:
            return ONE
        if word not in self.values:
            raise KeyError(f"word of weight {len(word)} > max weight "
                           f"{self.max_weight} not in table")
        return self.values[word]


def default_table_path():
    env = os.environ.get("MZVQ_TABLE")
    if env:
        return env
    return os.path.join(os.path.dirname(__file__), "data", "mzv_table.txt")


_LINE_RE = re.compile(r"^([01]+)\s*:\s*(.*)$")
_TERM_RE = re.compile(r"^(-?\d+(?:/\d+)?)\s*\*\s*([A-Za-z][A-Za-z0-9]*)$")


def load_reduction_table(path=None, validate=True):
    if path is None:
        path = default_table_path()
    values = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            m = _LINE_RE.match(line)
            if not m:
                raise ParseError(f"{path}:{lineno}: malformed line")
            word = tuple(int(c) for c in m.group(1))
            if word in values:
                raise ParseError(f"{path}:{lineno}: duplicate word")
            total = Mzv()
            for term in m.group(2).split("+"):
                term = term.strip()
                tm = _TERM_RE.match(term)
                if not tm:
                    raise ParseError(f"{path}:{lineno}: malformed term {term!r}")
                coeff = Fraction(tm.group(1))
                lab = tm.group(2)
                if lab not in LABELS:
                    raise ParseError(f"{path}:{lineno}: unknown label {lab!r}")
                total = total + coeff * LABELS[lab]
            values[word] = total
    if not values:
        raise ParseError(f"{path}: empty table")
    max_weight = max(len(w) for w in values)
    for n in range(1, max_weight + 1):
        for bits in range(2 ** n):
            w = tuple((bits >> (n - 1 - i)) & 1 for i in range(n))
            if w not in values:
                raise InconsistentTable(f"missing word {w} at weight {n}")
    table = ReductionTable(values, max_weight)
    if validate:
        _validate(table)
    return table


def _validate(table):
    if table.value((0, 1)) != Fraction(1, 24) * ONE:
        raise InconsistentTable("table value for word 01 is not 1/24")
    # regularized values form a character of the shuffle algebra
    checks = [((0, 1), (1,)), ((0, 1), (0, 1)), ((0, 0, 1), (0, 1)),
              ((1, 0), (0, 1)), ((0, 1, 1), (0, 1)), ((1,), (0, 0, 1))]
    for u, v in checks:
        prod = table.value(u) * table.value(v)
        total = Mzv()
        for w, c in shuffle_vec({u: Fraction(1)}, {v: Fraction(1)}).items():
            total = total + c * table.value(w)
        if total != prod:
            raise InconsistentTable(f"shuffle relation fails for {u}, {v}")
    # Hoffman relation zeta(1,2) = zeta(3); the word values carry a sign
    # (-1)^depth, so I(011) = -I(001)
    if table.value((0, 1, 1)) != -table.value((0, 0, 1)):
        raise InconsistentTable("Hoffman relation zeta(1,2)=zeta(3) fails")


def mzv_from_word(word, table=None):
    """Regularized dch period of a binary word as a ring element."""
    if table is None:
        table = _default_table()
    return table.value(word)


_DEFAULT_TABLE = None


def _default_table():
    global _DEFAULT_TABLE
    if _DEFAULT_TABLE is None:
        _DEFAULT_TABLE = load_reduction_table()
    return _DEFAULT_TABLE
