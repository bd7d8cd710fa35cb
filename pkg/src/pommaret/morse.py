"""Matchings on a resolution and reduction to the minimal one.

A matching pairs generators in adjacent homological degrees along unit
differential entries.  Reversing the matched edges must leave the entry
digraph acyclic; then every pair can be cancelled one at a time, each
cancellation being a change of basis that removes the pair and corrects the
remaining columns, and the surviving (critical) generators carry a complex
with the same homology.

The distinguished matching V pairs [h, u] with [h', u minus x_i] whenever
extracting the nonmultiplicative variable x_i rewrites with factor t = 1,
sweeping variables from x_n downward and skipping generators already
matched.  On the symbol resolution this matching leaves exactly the minimal
resolution behind.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (NonUnitPair, NotAMorseMatching, NotPSComplex)
from .resolution import FreeComplex, Symbol

_SYMBOL_KINDS = ("pommaret", "eliahou-kervaire")


@dataclass(frozen=True)
class Pair:
    """One matched edge: source at ``level``, target one degree below."""
    level: int
    source: int
    target: int
    var: int  # extracted variable; 0 for generic scalar cancellations


class Matching:
    """A partial matching: no generator appears in two pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = tuple(pairs)
        seen = set()
        for p in self.pairs:
            for node in ((p.level, p.source), (p.level - 1, p.target)):
                if node in seen:
                    raise NotAMorseMatching(
                        "generator %r matched twice" % (node,))
                seen.add(node)

    def __len__(self):
        return len(self.pairs)

    def sizes_by_var(self):
        out = {}
        for p in self.pairs:
            out[p.var] = out.get(p.var, 0) + 1
        return out


class ResolutionGraph:
    """Digraph view of one differential with matched edges reversed.

    Vertices are split by homological degree; a directed cycle must
    alternate matched (upward) and unmatched (downward) edges between two
    adjacent degrees, so acyclicity is checked per degree pair on the
    column side only.
    """

    def __init__(self, cplx, matching, level):
        matched_cols = {}
        row_partner = {}
        for p in matching.pairs:
            if p.level == level:
                matched_cols[p.source] = p.target
                row_partner[p.target] = p.source
        self.successors = {}
        for col, column in cplx.diffs[level].items():
            succ = []
            for row in column:
                if matched_cols.get(col) == row:
                    continue  # this edge is reversed, not outgoing
                partner = row_partner.get(row)
                if partner is not None and partner != col:
                    succ.append(partner)
            self.successors[col] = succ

    def has_cycle(self):
        WHITE, GREY, BLACK = 0, 1, 2
        color = {v: WHITE for v in self.successors}
        for start in self.successors:
            if color[start] != WHITE:
                continue
            stack = [(start, iter(self.successors[start]))]
            color[start] = GREY
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if color.get(nxt, WHITE) == GREY:
                        return True
                    if color.get(nxt, WHITE) == WHITE:
                        color[nxt] = GREY
                        stack.append((nxt, iter(self.successors.get(nxt, ()))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    stack.pop()
        return False


def _is_unit(entry):
    return entry is not None and entry[1].is_unit() and entry[0] != 0


def is_morse_matching(cplx, matching):
    """True when the matching is along unit entries and reversing them
    leaves every degree-pair digraph acyclic."""
    try:
        matching = (matching if isinstance(matching, Matching)
                    else Matching(matching))
    except NotAMorseMatching:
        return False
    for p in matching.pairs:
        if not 1 <= p.level <= cplx.length:
            return False
        if not _is_unit(cplx.entry(p.level, p.target, p.source)):
            return False
    for level in range(1, cplx.length + 1):
        if ResolutionGraph(cplx, matching, level).has_cycle():
            return False
    return True


def build_matching_V(cplx):
    """The unit-rewrite matching on a symbol resolution.

    Variables are processed from x_n down; an edge joins V_i when its
    endpoints were not used by any V_j, j > i, nor earlier in V_i (greedy,
    in generator order).
    """
    if cplx.provenance not in _SYMBOL_KINDS or cplx.basis is None:
        raise NotPSComplex("matching V needs a symbol resolution")
    basis = cplx.basis
    lookup = []
    for level in cplx.levels:
        lookup.append({g.key: i for i, g in enumerate(level)})
    matched = set()
    pairs = []
    for var in range(basis.ring.n, basis.d, -1):
        for level in range(1, cplx.length + 1):
            for col, gen in enumerate(cplx.levels[level]):
                sym = gen.key
                if var not in sym.u or (level, col) in matched:
                    continue
                beta, t = basis.delta[(sym.alpha, var)]
                if not t.is_unit():
                    continue
                rest = tuple(k for k in sym.u if k != var)
                target = Symbol(beta, rest)
                row = lookup[level - 1].get(target)
                if row is None or (level - 1, row) in matched:
                    continue
                entry = cplx.entry(level, row, col)
                if not _is_unit(entry):
                    continue
                pairs.append(Pair(level, col, row, var))
                matched.add((level, col))
                matched.add((level - 1, row))
    return Matching(pairs)


class ReducedComplex(FreeComplex):
    """Result of cancelling a matching out of a parent complex."""

    def __init__(self, ring, ideal, levels, diffs, basis, matching,
                 safety_net_cancellations, trace):
        FreeComplex.__init__(self, ring, ideal, levels, diffs, "reduced",
                             basis=basis)
        self.matching = matching
        self.safety_net_cancellations = safety_net_cancellations
        self.trace = trace


class _Reducer:
    """Mutable sparse copy of a complex supporting pair cancellation."""

    def __init__(self, cplx):
        self.cplx = cplx
        self.cols = [None]
        self.row_index = [None]
        for i in range(1, len(cplx.levels)):
            level_cols = {}
            index = {}
            for col, column in cplx.diffs[i].items():
                level_cols[col] = dict(column)
                for row in column:
                    index.setdefault(row, set()).add(col)
            self.cols.append(level_cols)
            self.row_index.append(index)
        self.alive = [set(range(len(lv))) for lv in cplx.levels]
        self.trace = []

    def entry(self, level, row, col):
        return self.cols[level].get(col, {}).get(row)

    def _set(self, level, col, row, coeff, mono):
        column = self.cols[level].setdefault(col, {})
        if coeff == 0:
            if row in column:
                del column[row]
                self.row_index[level][row].discard(col)
        else:
            if isinstance(coeff, Fraction) and coeff.denominator == 1:
                coeff = int(coeff)
            column[row] = (coeff, mono)
            self.row_index[level].setdefault(row, set()).add(col)

    def cancel(self, pair):
        level, s, t = pair.level, pair.source, pair.target
        lam = self.entry(level, t, s)
        if lam is None or not lam[1].is_unit() or lam[0] == 0:
            raise NonUnitPair("pair (%d: %d -> %d) is not a unit entry"
                              % (level, s, t))
        lam_c = lam[0]
        source_col = self.cols[level][s]
        touched = []
        for c in sorted(self.row_index[level].get(t, set()) - {s}):
            alpha = self.cols[level][c][t]
            if lam_c in (1, -1):
                q = alpha[0] * lam_c
            else:
                q = Fraction(alpha[0], lam_c)
            for row, (sc, sm) in source_col.items():
                if row == t:
                    continue
                mono = alpha[1] * sm
                old = self.cols[level][c].get(row)
                if old is not None and old[1] != mono:
                    raise AssertionError("inhomogeneous correction")
                coeff = (old[0] if old else 0) - q * sc
                self._set(level, c, row, coeff, mono)
                touched.append((c, row))
            # the t entry of every corrected column cancels exactly
            del self.cols[level][c][t]
            self.row_index[level][t].discard(c)
        # drop the source column and the target's own column
        for row in list(source_col):
            self.row_index[level][row].discard(s)
        del self.cols[level][s]
        if level - 1 >= 1 and t in self.cols[level - 1]:
            for row in list(self.cols[level - 1][t]):
                self.row_index[level - 1][row].discard(t)
            del self.cols[level - 1][t]
        if level + 1 < len(self.cols):
            for c in self.row_index[level + 1].pop(s, set()):
                del self.cols[level + 1][c][s]
        self.alive[level].discard(s)
        self.alive[level - 1].discard(t)
        self.trace.append({
            "level": level, "source": s, "target": t,
            "source_text": self.cplx.levels[level][s].text,
            "target_text": self.cplx.levels[level - 1][t].text,
            "var": pair.var, "lambda": lam_c,
            "updated": sorted(set(touched)),
        })
        self._local_check(level, sorted({c for c, _ in touched}), s)

    def _local_check(self, level, changed_cols, dead_source):
        # d o d = 0 can only break where entries changed: the corrected
        # columns at this level, and one level up the columns that met the
        # dead source row or a corrected column
        for c in changed_cols:
            self._compose_check(level, c)
        if level + 1 < len(self.cols):
            changed = set(changed_cols)
            for c, column in self.cols[level + 1].items():
                if dead_source in column or changed & set(column):
                    self._compose_check(level + 1, c)

    def _compose_check(self, level, col):
        acc = {}
        for row, (c1, m1) in self.cols[level].get(col, {}).items():
            if level - 1 >= 1:
                lower = self.cols[level - 1].get(row, {})
                for row2, (c2, m2) in lower.items():
                    key = (row2, (m1 * m2).exps)
                    acc[key] = acc.get(key, 0) + c1 * c2
            else:
                md = self.cplx.levels[0][row].multidegree
                key = (m1 * md).exps
                acc[key] = acc.get(key, 0) + c1
        bad = {k: v for k, v in acc.items() if v != 0}
        if bad:
            raise AssertionError(
                "cancellation broke d o d = 0 at level %d col %d: %r"
                % (level, col, bad))

    def full_check(self):
        for level in range(1, len(self.cols)):
            for col in self.cols[level]:
                self._compose_check(level, col)

    def unit_entries(self):
        out = []
        for level in range(len(self.cols) - 1, 0, -1):
            for col in sorted(self.cols[level]):
                for row in sorted(self.cols[level][col]):
                    c, m = self.cols[level][col][row]
                    if m.is_unit() and c != 0:
                        out.append((level, col, row))
        return out

    def compact(self, matching, safety_net, trace_wanted):
        cplx = self.cplx
        levels = []
        remap = []
        for i, level in enumerate(cplx.levels):
            keep = [j for j in range(len(level)) if j in self.alive[i]]
            remap.append({j: k for k, j in enumerate(keep)})
            levels.append([level[j] for j in keep])
        diffs = [None]
        for i in range(1, len(levels)):
            cols = {}
            for col, column in self.cols[i].items():
                cols[remap[i][col]] = {
                    remap[i - 1][row]: entry
                    for row, entry in column.items()}
            diffs.append(cols)
        while len(levels) > 1 and not levels[-1]:
            levels.pop()
            diffs.pop()
        return ReducedComplex(cplx.ring, cplx.ideal, levels, diffs,
                              cplx.basis, matching, safety_net,
                              self.trace if trace_wanted else None)


def morse_reduce(cplx, matching, trace=False):
    """Cancel every pair of the matching, highest degree first."""
    if not isinstance(matching, Matching):
        matching = Matching(matching)
    if not is_morse_matching(cplx, matching):
        raise NotAMorseMatching("matching fails the unit or acyclicity test")
    reducer = _Reducer(cplx)
    for pair in sorted(matching.pairs, key=lambda p: (-p.level, p.source)):
        reducer.cancel(pair)
    reducer.full_check()
    return reducer.compact(matching, 0, trace)


def minimize(cplx, trace=False):
    """Minimal resolution from any resolution we can build.

    Symbol resolutions go through the matching V; whatever provenance, a
    safety-net sweep then cancels any surviving invertible scalar entry one
    pair at a time (for V the sweep finds nothing; the count is reported).
    """
    if cplx.provenance in _SYMBOL_KINDS:
        matching = build_matching_V(cplx)
    else:
        matching = Matching(())
    if not is_morse_matching(cplx, matching):
        raise NotAMorseMatching("matching fails the unit or acyclicity test")
    reducer = _Reducer(cplx)
    for pair in sorted(matching.pairs, key=lambda p: (-p.level, p.source)):
        reducer.cancel(pair)
    safety = 0
    while True:
        units = reducer.unit_entries()
        if not units:
            break
        level, col, row = units[0]
        # a single reversed edge cannot close an alternating cycle
        reducer.cancel(Pair(level, col, row, 0))
        safety += 1
    reducer.full_check()
    return reducer.compact(matching, safety, trace)
