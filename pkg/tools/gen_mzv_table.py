#!/usr/bin/env python3
"""Generate the frozen table of regularized dch periods up to weight 8.

Solves the finite double shuffle + Hoffman + duality relations for all
convergent multiple zeta values of weight <= 8 over Q, expressing each
normalized value zeta(...)/(2 pi i)^w in the fixed generator basis

    one, z3, z5, z7, z3z3, z3z5, z53

where zN = zeta(N)/(2 pi i)^N, z3z3 = zeta(3)^2/(2 pi i)^6,
z3z5 = zeta(3)zeta(5)/(2 pi i)^8 and z53 = zeta(3,5)/(2 pi i)^8
(convention zeta(n1,...,nd) = sum over k1 < ... < kd of prod ki^-ni,
so convergence means nd >= 2).

The solved values are then extended to regularized values for every
binary word of length <= 8 via two-sided shuffle regularization, and
written as `WORD : c1 * LABEL1 + ...` lines.

Cross-checks: residual dimensions per weight against the expected MZV
dimensions, the 1/(2m+1)! identity for zeta(2,...,2), the
2/(4k+2)! identity for zeta({1,3}^k), duality, and numeric evaluation
of every depth <= 2 value via mpmath.
"""

import os
import sys
from fractions import Fraction as F

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from mzvq.words import shuffle, shuffle_reg_decompose  # noqa: E402

MAX_WEIGHT = 8
LABELS = ["one", "z3", "z5", "z7", "z3z3", "z3z5", "z53"]
PRODUCTS = {("one", "one"): "one", ("z3", "z3"): "z3z3", ("z3", "z5"): "z3z5"}
for lab in LABELS:
    PRODUCTS[("one", lab)] = lab
    PRODUCTS[(lab, "one")] = lab
PRODUCTS[("z5", "z3")] = "z3z5"

# expected number of new generators per weight 2..8
EXPECTED_FREE = {2: 1, 3: 1, 4: 0, 5: 1, 6: 0, 7: 1, 8: 1}


def vec_add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, F(0)) + v
        if not out[k]:
            del out[k]
    return out


def vec_scale(c, a):
    return {k: c * v for k, v in a.items()} if c else {}


def vec_mul(a, b):
    out = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            lab = PRODUCTS.get((la, lb))
            if lab is None:
                raise ValueError(f"label product {la}*{lb} not defined")
            out[lab] = out.get(lab, F(0)) + ca * cb
            if not out[lab]:
                del out[lab]
    return out


def word_of_comp(comp):
    # comp = (n1,...,nd); word blocks read left to right are n_d, ..., n_1
    out = ()
    for n in reversed(comp):
        out += (0,) * (n - 1) + (1,)
    return out


def comp_of_word(w):
    assert w and w[0] == 0 and w[-1] == 1
    blocks = []
    run = 0
    for c in w:
        if c == 0:
            run += 1
        else:
            blocks.append(run + 1)
            run = 0
    assert run == 0
    return tuple(reversed(blocks))


def compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def convergent_comps(weight):
    return [c for c in compositions(weight) if c[-1] >= 2]


def stuffle(u, v):
    """Quasi-shuffle of compositions (last entry dominant)."""
    if not u:
        return {v: F(1)}
    if not v:
        return {u: F(1)}
    out = {}
    for comp, c in stuffle(u[:-1], v).items():
        k = comp + (u[-1],)
        out[k] = out.get(k, F(0)) + c
    for comp, c in stuffle(u, v[:-1]).items():
        k = comp + (v[-1],)
        out[k] = out.get(k, F(0)) + c
    for comp, c in stuffle(u[:-1], v[:-1]).items():
        k = comp + (u[-1] + v[-1],)
        out[k] = out.get(k, F(0)) + c
    return out


def shuffle_comps(u, v):
    """Word shuffle of two convergent compositions, as compositions."""
    out = {}
    for w, c in shuffle(word_of_comp(u), word_of_comp(v)).items():
        k = comp_of_word(w)
        out[k] = out.get(k, F(0)) + c
    return out


def dual_comp(comp):
    w = word_of_comp(comp)
    dual = tuple(1 - c for c in reversed(w))
    return comp_of_word(dual)


def solve_weight(weight, known):
    """Solve the relation system at the given weight.

    known: dict comp -> label vector for all lower weights.
    Returns dict comp -> label vector for this weight.
    """
    unknowns = convergent_comps(weight)
    # order columns so preferred generators are eliminated last (stay free)
    preferred = [(weight,)]
    if weight == 8:
        preferred = [(8,), (3, 5)]
    cols = [c for c in unknowns if c not in preferred] + preferred
    idx = {c: i for i, c in enumerate(cols)}

    rows = []  # (coeff dict col-index -> Fraction, rhs label vector)

    def add_relation(comb, rhs):
        row = {}
        for comp, c in comb.items():
            if sum(comp) != weight:
                raise ValueError("weight mismatch in relation")
            row[idx[comp]] = row.get(idx[comp], F(0)) + c
        row = {i: c for i, c in row.items() if c}
        rows.append((row, rhs))

    # double shuffle
    for w1 in range(2, weight - 1):
        w2 = weight - w1
        if w2 < 2 or w1 > w2:
            continue
        for u in convergent_comps(w1):
            for v in convergent_comps(w2):
                if w1 == w2 and u > v:
                    continue
                rhs = vec_mul(known[u], known[v])
                add_relation(stuffle(u, v), rhs)
                add_relation(shuffle_comps(u, v), rhs)

    # Hoffman relations: st((1,), u) - sh((1,), u) = 0, divergent terms cancel
    for u in convergent_comps(weight - 1):
        comb = stuffle((1,), u)
        for w, c in shuffle(word_of_comp((1,)), word_of_comp(u)).items():
            # every shuffle word still ends in 1; leading-1 words correspond
            # to compositions ending with the part 1
            blocks = []
            run = 0
            for ch in w:
                if ch == 0:
                    run += 1
                else:
                    blocks.append(run + 1)
                    run = 0
            comp = tuple(reversed(blocks))
            comb[comp] = comb.get(comp, F(0)) - c
        comb = {c_: x for c_, x in comb.items() if x}
        assert all(c_[-1] >= 2 for c_ in comb), comb
        add_relation(comb, {})

    # duality
    for u in unknowns:
        d = dual_comp(u)
        if d != u:
            comb = {u: F(1)}
            comb[d] = comb.get(d, F(0)) - F(1)
            if comb.get(d) == F(0):
                continue
            add_relation(comb, {})

    # Gaussian elimination over Q with vector-valued RHS
    pivots = {}  # col -> row (normalized)
    for row, rhs in rows:
        row = dict(row)
        rhs = dict(rhs)
        for col in range(len(cols)):
            c = row.get(col)
            if not c:
                continue
            if col in pivots:
                prow, prhs = pivots[col]
                row = {i: v for i, v in vec_add(row, vec_scale(-c, prow)).items()}
                rhs = vec_add(rhs, vec_scale(-c, prhs))
            else:
                inv = 1 / c
                row = {i: v * inv for i, v in row.items()}
                rhs = vec_scale(inv, rhs)
                pivots[col] = (row, rhs)
                row = None
                break
        if row is not None and row:
            raise AssertionError("inconsistent relation system")
        if row is not None and not row and any(rhs.values()):
            raise AssertionError(f"contradictory relation at weight {weight}")

    free_cols = [c for c in range(len(cols)) if c not in pivots]
    assert len(free_cols) == EXPECTED_FREE[weight], (
        weight, len(free_cols), [cols[c] for c in free_cols])

    values = {}
    if weight == 2:
        assert free_cols == [idx[(2,)]]
        values[(2,)] = {"one": F(-1, 24)}
    elif weight == 3:
        assert free_cols == [idx[(3,)]]
        values[(3,)] = {"z3": F(1)}
    elif weight == 5:
        assert free_cols == [idx[(5,)]]
        values[(5,)] = {"z5": F(1)}
    elif weight == 7:
        assert free_cols == [idx[(7,)]]
        values[(7,)] = {"z7": F(1)}
    elif weight == 8:
        assert free_cols == [idx[(3, 5)]], [cols[c] for c in free_cols]
        values[(3, 5)] = {"z53": F(1)}

    # back-substitute pivot rows in reverse column order
    for col in sorted(pivots, reverse=True):
        row, rhs = pivots[col]
        val = dict(rhs)
        for c2, coeff in row.items():
            if c2 == col:
                continue
            val = vec_add(val, vec_scale(-coeff, values[cols[c2]]))
        values[cols[col]] = val

    assert len(values) == len(cols)
    return values


def structural_checks(known):
    # zeta(2,...,2) with m twos: pi^2m/(2m+1)! -> (-1)^m / (4^m (2m+1)!)
    import math
    for m in range(1, 5):
        comp = (2,) * m
        expect = {"one": F((-1) ** m, 4 ** m * math.factorial(2 * m + 1))}
        got = {k: v for k, v in known[comp].items() if v}
        assert got == expect, (comp, got, expect)
    # zeta({1,3}^k) = 2 pi^4k/(4k+2)! -> 2/(16^k (4k+2)!)
    for k in range(1, 3):
        comp = (1, 3) * k
        expect = {"one": F(2, 16 ** k * math.factorial(4 * k + 2))}
        got = {kk: v for kk, v in known[comp].items() if v}
        assert got == expect, (comp, got, expect)
    # zeta(4) = pi^4/90
    assert known[(4,)] == {"one": F(1, 1440)}
    # duality across all solved values
    for comp, val in known.items():
        d = dual_comp(comp)
        assert known[d] == val, (comp, d)


def numeric_checks(known):
    import mpmath as mp
    mp.mp.dps = 30
    num = {
        "one": mp.mpc(1),
        "z3": mp.zeta(3) / (2j * mp.pi) ** 3,
        "z5": mp.zeta(5) / (2j * mp.pi) ** 5,
        "z7": mp.zeta(7) / (2j * mp.pi) ** 7,
        "z3z3": mp.zeta(3) ** 2 / (2j * mp.pi) ** 6,
        "z3z5": mp.zeta(3) * mp.zeta(5) / (2j * mp.pi) ** 8,
    }

    def zeta_depth2(a, b):
        # sum over m < n of m^-a n^-b, b >= 2
        if a >= 2:
            term = lambda n: (mp.zeta(a) - mp.zeta(a, n)) * n ** (-b)
            return mp.nsum(term, [2, mp.inf])
        # a == 1: swap summation order so terms decay like m^-b
        term = lambda m: mp.zeta(b, m + 1) / m
        return mp.nsum(term, [1, mp.inf])

    num["z53"] = zeta_depth2(3, 5) / (2j * mp.pi) ** 8

    def numval(vec):
        return sum(num[lab] * mp.mpf(c.numerator) / c.denominator
                   for lab, c in vec.items())

    for comp, vec in known.items():
        if len(comp) == 1:
            direct = mp.zeta(comp[0])
        elif len(comp) == 2:
            direct = zeta_depth2(*comp)
        else:
            continue
        direct /= (2j * mp.pi) ** sum(comp)
        err = abs(direct - numval(vec))
        assert err < mp.mpf("1e-20"), (comp, err)


def extend_to_all_words(known):
    """Regularized dch value for every binary word of length <= MAX_WEIGHT."""
    conv_value = {}
    for comp, vec in known.items():
        w = word_of_comp(comp)
        sign = F((-1) ** len(comp))
        conv_value[w] = {lab: sign * c for lab, c in vec.items()}

    table = {}
    for n in range(1, MAX_WEIGHT + 1):
        for bits in range(2 ** n):
            w = tuple((bits >> (n - 1 - i)) & 1 for i in range(n))
            dec = shuffle_reg_decompose({w: F(1)}, 1, 0)
            val = {}
            for word, c in dec.get((0, 0), {}).items():
                if not word:
                    val = vec_add(val, {"one": c})
                else:
                    val = vec_add(val, vec_scale(c, conv_value[word]))
            table[w] = val
    return table


def main():
    known = {}
    for weight in range(2, MAX_WEIGHT + 1):
        known.update(solve_weight(weight, known))
        print(f"weight {weight}: solved {len(convergent_comps(weight))} values")
    structural_checks(known)
    print("structural checks ok")
    numeric_checks(known)
    print("numeric checks ok")

    table = extend_to_all_words(known)
    assert table[(0, 1)] == {"one": F(1, 24)}
    assert table[(1, 0, 0, 1)] == {"one": F(-1, 1152)}

    out = os.path.join(os.path.dirname(__file__), "..", "src", "mzvq",
                       "data", "mzv_table.txt")
    with open(out, "w") as fh:
        fh.write("# Regularized dch iterated-integral values for all binary\n")
        fh.write("# words of length <= 8.  Letters read left to right from\n")
        fh.write("# the outermost form; 0 = dlog(z)/(2 pi i), 1 = dlog(z-1)/(2 pi i).\n")
        fh.write("# Labels: one = 1, zN = zeta(N)/(2 pi i)^N,\n")
        fh.write("# z3z3 = zeta(3)^2/(2 pi i)^6, z3z5 = zeta(3)zeta(5)/(2 pi i)^8,\n")
        fh.write("# z53 = zeta(3,5)/(2 pi i)^8 with zeta(3,5) = sum_{m<n} m^-3 n^-5.\n")
        for w in sorted(table, key=lambda w: (len(w), w)):
            val = table[w]
            word = "".join(str(c) for c in w)
            if not val:
                fh.write(f"{word} : 0 * one\n")
                continue
            terms = " + ".join(f"{val[lab]} * {lab}"
                               for lab in LABELS if lab in val)
            fh.write(f"{word} : {terms}\n")
    print(f"wrote {out} ({len(table)} words)")


if __name__ == "__main__":
    main()
