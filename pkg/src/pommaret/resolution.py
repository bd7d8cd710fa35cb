"""Free resolutions of quasi-stable monomial ideals from a Pommaret basis.

Generators of the i-th free module are symbols [h, u]: h a basis element, u
a squarefree set of i nonmultiplicative variables of h.  The differential
sends [h, u] to an alternating sum over the variables of u; extracting u_j
leaves a multiplicative copy x_{u_j}[h, u \\ u_j] minus the rewritten copy
t[h', u \\ u_j] with x_{u_j} h = t h' the involutive decomposition.  Terms
whose rewritten symbol is not legal (u \\ u_j meets the multiplicative
variables of h') are dropped.

For stable ideals the minimal generators are the basis and the same
construction is the classical minimal resolution with signs
sgn(x_i, u) = +1 iff |{j in u : j >= i}| is odd.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import DegreeOutOfRange, NotMember, NotStable
from .ideals import pommaret_basis


@dataclass(frozen=True)
class Symbol:
    """Resolution generator [h_alpha, u]; alpha indexes the basis."""
    alpha: int
    u: tuple


@dataclass(frozen=True)
class Face:
    """Taylor generator: a set of minimal-generator indices."""
    gens: tuple


class Gen:
    """One free-module generator: hashable key, multidegree, display text."""

    __slots__ = ("key", "multidegree", "text")

    def __init__(self, key, multidegree, text):
        self.key = key
        self.multidegree = multidegree
        self.text = text

    def __repr__(self):
        return self.text


class FreeComplex:
    """A complex of free modules F_top -> ... -> F_0 -> I.

    ``levels[i]`` lists the generators of F_i; ``diffs[i]`` (i >= 1) holds
    the differential F_i -> F_{i-1} as sparse columns
    {col: {row: (coeff, monomial)}}.  The augmentation F_0 -> I sends each
    level-0 generator to its multidegree with coefficient 1 and is left
    implicit.  Complexes are frozen once built.
    """

    def __init__(self, ring, ideal, levels, diffs, provenance, basis=None):
        self.ring = ring
        self.ideal = ideal
        self.levels = levels
        self.diffs = diffs
        self.provenance = provenance
        self.basis = basis

    @property
    def length(self):
        return len(self.levels) - 1

    def rank(self, i):
        return len(self.levels[i])

    def ranks(self):
        return tuple(len(lv) for lv in self.levels)

    def entry(self, i, row, col):
        """(coeff, monomial) of d_i at (row, col), or None."""
        return self.diffs[i].get(col, {}).get(row)

    def entries(self, i):
        """All nonzero entries of d_i as (row, col, coeff, monomial)."""
        for col, column in sorted(self.diffs[i].items()):
            for row, (c, m) in sorted(column.items()):
                yield row, col, c, m

    def column(self, i, col):
        return self.diffs[i].get(col, {})

    def unit_entries(self):
        """Entries that are invertible scalars (monomial 1, coeff != 0)."""
        out = []
        for i in range(1, len(self.levels)):
            for row, col, c, m in self.entries(i):
                if m.is_unit() and c != 0:
                    out.append((i, row, col, c))
        return out

    def to_json_dict(self):
        mods = []
        for level in self.levels:
            entries = []
            for g in level:
                rec = {"multidegree": list(g.multidegree.exps)}
                if isinstance(g.key, Symbol):
                    rec["h"] = list(
                        self.basis.elements[g.key.alpha].exps)
                    rec["u"] = list(g.key.u)
                elif isinstance(g.key, Face):
                    rec["face"] = list(g.key.gens)
                entries.append(rec)
            mods.append(entries)
        diffs = []
        for i in range(1, len(self.levels)):
            entries = []
            for row, col, c, m in self.entries(i):
                entries.append({"row": row, "col": col,
                                "coeff": _coeff_json(c),
                                "mono": list(m.exps)})
            diffs.append(entries)
        return {"n": self.ring.n, "modules": mods, "differentials": diffs}

    def __repr__(self):
        return "FreeComplex(%s, ranks=%r)" % (self.provenance, list(self.ranks()))


def _coeff_json(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return "%d/%d" % (c.numerator, c.denominator)
    return c


# --- symbol resolutions ----------------------------------------------------


def symbol_text(basis, alpha, u):
    names = basis.ring.names
    inside = str(basis.elements[alpha])
    if u:
        inside += ", " + "*".join(names[k - 1] for k in u)
    return "[" + inside + "]"


def symbol_multidegree(basis, alpha, u):
    md = basis.elements[alpha]
    for k in u:
        md = md.times_var(k)
    return md


def ps_generators(basis, i):
    """Level-i symbols [h, u], |u| = i, in basis order then u-lex order."""
    top = basis.ring.n - basis.d
    if not 0 <= i <= top:
        raise DegreeOutOfRange("level %d outside 0..%d" % (i, top))
    out = []
    for alpha, h in enumerate(basis.elements):
        for u in combinations(h.nonmultiplicative(), i):
            out.append(Symbol(alpha, u))
    return out


def expected_ranks(basis):
    """Predicted module ranks from the class counts alone."""
    n = basis.ring.n
    counts = basis.class_counts()
    out = []
    for i in range(n - basis.d + 1):
        out.append(sum(comb(n - k, i) * counts[k - 1]
                       for k in range(1, n - i + 1)))
    return tuple(out)


def _symbol_complex(basis, provenance):
    ring = basis.ring
    levels = []
    lookup = []
    top = ring.n - basis.d
    for i in range(top + 1):
        syms = ps_generators(basis, i)
        gens = [Gen(s, symbol_multidegree(basis, s.alpha, s.u),
                    symbol_text(basis, s.alpha, s.u)) for s in syms]
        levels.append(gens)
        lookup.append({s: j for j, s in enumerate(syms)})
    diffs = [None]
    for i in range(1, top + 1):
        cols = {}
        for cidx, g in enumerate(levels[i]):
            alpha, u = g.key.alpha, g.key.u
            column = {}
            for j, k in enumerate(u):
                sign = 1 if (i - 1 - j) % 2 == 0 else -1
                rest = u[:j] + u[j + 1:]
                row = lookup[i - 1][Symbol(alpha, rest)]
                column[row] = (sign, ring.variable(k))
                beta, t = basis.delta[(alpha, k)]
                # the rewritten symbol must still be a symbol
                if all(v > basis.classes[beta] for v in rest):
                    row2 = lookup[i - 1][Symbol(beta, rest)]
                    column[row2] = (-sign, t)
            cols[cidx] = column
        diffs.append(cols)
    return FreeComplex(ring, basis.ideal, levels, diffs, provenance,
                       basis=basis)


def ps_complex(basis):
    """The cone resolution of the basis's ideal; minimal iff the ideal is
    stable."""
    return _symbol_complex(basis, "pommaret")


def ek_sgn(i, u):
    """+1 iff the number of elements of u that are >= i is odd."""
    return 1 if sum(1 for j in u if j >= i) % 2 == 1 else -1


def ek_complex(ideal):
    """Minimal resolution of a stable ideal straight from its generators."""
    if not ideal.is_stable():
        raise NotStable("%r is not stable" % ideal)
    basis = pommaret_basis(ideal)
    # stable: completion adds nothing
    assert set(basis.elements) == set(ideal.gens)
    return _symbol_complex(basis, "eliahou-kervaire")


def decompose_beg_end(basis, m):
    """Split a member as m = beg * end with beg the involutive divisor in
    the basis and end its multiplicative cofactor."""
    beg = basis.involutive_divisor(m)
    if beg is None:
        raise NotMember("%s is not in the ideal" % m)
    return beg, m / beg


# --- the Taylor resolution --------------------------------------------------


def taylor_complex(ideal):
    """Simplicial resolution on all subsets of the minimal generators."""
    ring = ideal.ring
    gens = ideal.gens
    m = len(gens)
    levels = []
    lookup = []
    mds = {}
    for i in range(m):
        level = []
        table = {}
        for face in combinations(range(m), i + 1):
            md = gens[face[0]]
            for g in face[1:]:
                md = md.lcm(gens[g])
            mds[face] = md
            text = "{" + ", ".join(str(gens[g]) for g in face) + "}"
            table[face] = len(level)
            level.append(Gen(Face(face), md, text))
        levels.append(level)
        lookup.append(table)
    diffs = [None]
    for i in range(1, m):
        cols = {}
        for cidx, g in enumerate(levels[i]):
            face = g.key.gens
            column = {}
            for j in range(len(face)):
                sub = face[:j] + face[j + 1:]
                sign = 1 if j % 2 == 0 else -1
                column[lookup[i - 1][sub]] = (sign, mds[face] / mds[sub])
            cols[cidx] = column
        diffs.append(cols)
    return FreeComplex(ring, ideal, levels, diffs, "taylor")


# --- Betti numbers -----------------------------------------------------------


class BettiTable:
    """Multigraded generator counts of a (minimal) complex."""

    __slots__ = ("by_degree", "by_multidegree")

    def __init__(self, by_degree, by_multidegree):
        self.by_degree = dict(by_degree)
        self.by_multidegree = dict(by_multidegree)

    def total(self, i):
        return sum(v for (l, _), v in self.by_degree.items() if l == i)

    def totals(self):
        top = max((l for (l, _) in self.by_degree), default=-1)
        return tuple(self.total(i) for i in range(top + 1))

    def __eq__(self, other):
        return (isinstance(other, BettiTable)
                and self.by_degree == other.by_degree
                and self.by_multidegree == other.by_multidegree)

    def render(self, names=None):
        lines = []
        for (i, j) in sorted(self.by_degree):
            lines.append("beta_%d,%d = %d" % (i, j, self.by_degree[(i, j)]))
        return "\n".join(lines)


def betti_table(cplx):
    by_degree = {}
    by_md = {}
    for i, level in enumerate(cplx.levels):
        for g in level:
            j = g.multidegree.degree()
            by_degree[(i, j)] = by_degree.get((i, j), 0) + 1
            key = (i, g.multidegree.exps)
            by_md[key] = by_md.get(key, 0) + 1
    return BettiTable(by_degree, by_md)


# --- text rendering -----------------------------------------------------------


def coeff_text(c, m):
    if m.is_unit():
        body = str(abs(c))
    elif abs(c) == 1:
        body = str(m)
    else:
        body = "%s*%s" % (abs(c), m)
    return ("-" if c < 0 else "") + body


def render_differential(cplx, i):
    """Plain grid of d_i with row and column generator labels."""
    rows = cplx.levels[i - 1]
    cols = cplx.levels[i]
    grid = [[""] * (len(cols) + 1) for _ in range(len(rows) + 1)]
    grid[0][0] = "d_%d" % i
    for c, g in enumerate(cols):
        grid[0][c + 1] = g.text
    for r, g in enumerate(rows):
        grid[r + 1][0] = g.text
    for r in range(len(rows)):
        for c in range(len(cols)):
            e = cplx.entry(i, r, c)
            grid[r + 1][c + 1] = coeff_text(*e) if e else "."
    widths = [max(len(grid[r][c]) for r in range(len(grid)))
              for c in range(len(grid[0]))]
    lines = []
    for row in grid:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)
