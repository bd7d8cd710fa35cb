"""Shared test fixtures and independent oracles.

The oracles here deliberately avoid the library's own algorithms: rank via
dense Gaussian elimination over Fraction, completion via a quadratic
rescan, membership via direct divisor scans.  Expected values frozen in the
tests were produced by these or by hand.
"""

import itertools
import random
from fractions import Fraction

from pommaret import MonomialIdeal, Ring, minimal_generators


def make_ideal_a():
    """<x1^2, x2^3> in two variables: quasi-stable, not stable."""
    r = Ring(2)
    return MonomialIdeal(r, [r.monomial((2, 0)), r.monomial((0, 3))])


def make_ideal_b():
    """<x^2, y^4, y^2z^2, z^3> in three variables."""
    r = Ring(3, names=("x", "y", "z"))
    return MonomialIdeal(r, [r.monomial((2, 0, 0)), r.monomial((0, 4, 0)),
                             r.monomial((0, 2, 2)), r.monomial((0, 0, 3))])


def make_ideal_stable2():
    """<x2, x1^2> in two variables: stable."""
    r = Ring(2)
    return MonomialIdeal(r, [r.monomial((0, 1)), r.monomial((2, 0))])


def monomials_up_to(ring, deg):
    for exps in itertools.product(range(deg + 1), repeat=ring.n):
        if 0 < sum(exps) <= deg:
            yield ring.monomial(exps)


def dense_rank(rows, ncols):
    """Reference rank: dense Gaussian elimination over Fraction."""
    mat = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank = 0
    rpos = 0
    for c in range(ncols):
        piv = None
        for i in range(rpos, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[rpos], mat[piv] = mat[piv], mat[rpos]
        pv = mat[rpos][c]
        for i in range(len(mat)):
            if i != rpos and mat[i][c] != 0:
                f = mat[i][c] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rpos])]
        rank += 1
        rpos += 1
    return rank


def naive_completion(ideal, cap):
    """Quadratic-rescan completion; None when the cap is passed.

    Independent of the library's worklist: every pass rescans everything
    and inserts the smallest missing prolongation.
    """
    elems = set(ideal.gens)
    while True:
        missing = []
        for h in elems:
            for k in h.nonmultiplicative():
                m = h.times_var(k)
                if not any(g.involutively_divides(m) for g in elems):
                    missing.append(m)
        if not missing:
            return elems
        m = min(missing, key=lambda x: (x.degree(), x.exps))
        if m.degree() > cap:
            return None
        elems.add(m)


def random_monomials(rng, ring, count, max_deg):
    out = []
    for _ in range(count):
        e = [0] * ring.n
        for i in rng.choices(range(ring.n), k=rng.randint(1, max_deg)):
            e[i] += 1
        out.append(ring.monomial(e))
    return out


def random_ideal(seed, n=None, max_deg=4, count=3):
    """Arbitrary random monomial ideal; often not quasi-stable."""
    rng = random.Random(seed)
    n = n if n is not None else rng.randint(2, 4)
    ring = Ring(n)
    mons = random_monomials(rng, ring, max(count, 1), max_deg)
    return MonomialIdeal(ring, mons)


def random_stable(seed):
    """Random stable ideal: close a random set under the exchange
    x_j * g / x_cls(g); exchanges preserve degree, so this terminates."""
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    ring = Ring(n)
    work = set(random_monomials(rng, ring, rng.randint(1, 4),
                                rng.randint(1, 5)))
    changed = True
    while changed:
        changed = False
        for g in sorted(work, key=lambda m: (m.degree(), m.exps)):
            c = g.cls
            for j in range(c + 1, n + 1):
                e = list(g.exps)
                e[c - 1] -= 1
                e[j - 1] += 1
                m = ring.monomial(e)
                if not any(h.divides(m) for h in work):
                    work.add(m)
                    changed = True
    return MonomialIdeal(ring, minimal_generators(work))


def reference_match(cplx, ref_levels, ref_entries):
    """Compare a complex against frozen reference matrices.

    ref_levels: per level, the list of generator multidegrees (exponent
    tuples, unique within a level).  ref_entries: (level, col_md, row_md,
    coeff, mono_exps) for every nonzero entry.  Generators are matched by
    multidegree; a per-generator sign with level-0 pinned to +1 must
    reconcile every coefficient.  Returns (ok, reason).
    """
    if len(cplx.levels) != len(ref_levels):
        return False, "length differs"
    where = []
    for i, level in enumerate(cplx.levels):
        mine = sorted(g.multidegree.exps for g in level)
        ref = sorted(ref_levels[i])
        if mine != ref:
            return False, "level %d multidegrees differ" % i
        if len(set(ref)) != len(ref):
            return False, "reference level %d is ambiguous" % i
        where.append({g.multidegree.exps: j for j, g in enumerate(level)})
    ref_by_col = {}
    for (lvl, col_md, row_md, coeff, mono) in ref_entries:
        ref_by_col.setdefault((lvl, col_md), {})[row_md] = (coeff,
                                                            tuple(mono))
    sign = {}
    for md in ref_levels[0]:
        sign[(0, md)] = 1
    for lvl in range(1, len(ref_levels)):
        for col_md in ref_levels[lvl]:
            col = cplx.diffs[lvl].get(where[lvl][col_md], {})
            mine = {}
            for row, (c, m) in col.items():
                mine[cplx.levels[lvl - 1][row].multidegree.exps] = (c, m.exps)
            ref_col = ref_by_col.get((lvl, col_md), {})
            if set(mine) != set(ref_col):
                return False, "support of %r at level %d" % (col_md, lvl)
            eps = None
            for row_md, (c, m) in mine.items():
                rc, rm = ref_col[row_md]
                if m != rm:
                    return False, "monomial at %r -> %r" % (col_md, row_md)
                if abs(c) != abs(rc):
                    return False, "magnitude at %r -> %r" % (col_md, row_md)
                q = (1 if c == rc else -1) * sign[(lvl - 1, row_md)]
                if eps is None:
                    eps = q
                elif eps != q:
                    return False, "no consistent sign for column %r" % (
                        col_md,)
            sign[(lvl, col_md)] = eps if eps is not None else 1
    return True, ""
