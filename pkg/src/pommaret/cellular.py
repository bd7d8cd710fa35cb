"""Geometric cells underneath the symbol resolution.

Each symbol [h, tau] owns one |tau|-dimensional cell.  Its vertices are
found by walking the basis: apply the variables of tau in some order,
replacing the current vertex v by the involutive divisor of x_k * v at
every step.  Orders that revisit a vertex are degenerate; the union over
all orders is the cell.  Boundary facets mirror the two sums of the
differential, with the same dropped-term convention.
"""

from itertools import combinations, permutations

from .errors import MismatchedBases, TauNotNonMultiplicative
from .resolution import Symbol, symbol_multidegree


def chain_vertices(basis, alpha, tau, sigma):
    """Vertex walk for one ordering sigma of tau.

    Returns (indices, degenerate): the visited basis indices in walk order,
    and whether any vertex repeats.
    """
    h = basis.elements[alpha]
    nonmult = set(h.nonmultiplicative())
    if not set(tau) <= nonmult:
        raise TauNotNonMultiplicative(
            "tau %r leaves the nonmultiplicative variables of %s" % (
                list(tau), h))
    if sorted(sigma) != sorted(tau):
        raise TauNotNonMultiplicative(
            "sigma %r is not an ordering of tau %r" % (list(sigma), list(tau)))
    v = alpha
    out = [v]
    for k in sigma:
        m = basis.elements[v].times_var(k)
        w = basis.involutive_divisor(m)
        v = basis.index(w)
        out.append(v)
    return out, len(set(out)) < len(out)


class Cell:
    """One cell: owning symbol, vertex set, label, signed boundary."""

    __slots__ = ("alpha", "tau", "dim", "label", "vertices", "boundary",
                 "degenerate_perms")

    def __init__(self, alpha, tau, label, vertices, boundary,
                 degenerate_perms):
        self.alpha = alpha
        self.tau = tau
        self.dim = len(tau)
        self.label = label
        self.vertices = vertices
        self.boundary = boundary
        self.degenerate_perms = degenerate_perms

    def key(self):
        return (self.alpha, self.tau)

    def __repr__(self):
        return "Cell(%d, %r, dim=%d)" % (self.alpha, self.tau, self.dim)


class CellComplex:
    """All cells of the basis, grouped by dimension, keyed by (alpha, tau)."""

    __slots__ = ("basis", "cells", "lookup")

    def __init__(self, basis, cells):
        self.basis = basis
        self.cells = cells
        self.lookup = {}
        for dim, layer in enumerate(cells):
            for c in layer:
                self.lookup[c.key()] = c

    @property
    def dimension(self):
        return len(self.cells) - 1

    def counts(self):
        return tuple(len(layer) for layer in self.cells)

    def to_json_dict(self):
        basis = self.basis
        recs = []
        for layer in self.cells:
            for c in layer:
                recs.append({
                    "h": list(basis.elements[c.alpha].exps),
                    "tau": list(c.tau),
                    "dim": c.dim,
                    "label": list(c.label.exps),
                    "vertices": [list(basis.elements[v].exps)
                                 for v in c.vertices],
                    "boundary": [{"h": list(basis.elements[a].exps),
                                  "tau": list(t), "sign": s}
                                 for (a, t), s in c.boundary],
                })
        return {"n": basis.ring.n, "cells": recs}

    def to_dot(self):
        """1-skeleton; exponent vectors double as coordinates for n <= 3."""
        basis = self.basis
        n = basis.ring.n
        lines = ["graph skeleton {"]
        for h in basis.elements:
            if n == 2:
                pos = ' [pos="%d,%d!"]' % h.exps
            elif n == 3:
                pos = ' [pos="%d,%d,%d!"]' % h.exps
            else:
                pos = ""
            lines.append('  "%s"%s;' % (h, pos))
        for c in self.cells[1] if len(self.cells) > 1 else []:
            ends = sorted(c.vertices)
            lines.append('  "%s" -- "%s" [label="%s"];' % (
                basis.elements[ends[0]], basis.elements[ends[-1]], c.label))
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_cell_complex(basis):
    n = basis.ring.n
    top = n - basis.d
    layers = []
    for dim in range(top + 1):
        layer = []
        for alpha, h in enumerate(basis.elements):
            nonmult = h.nonmultiplicative()
            if len(nonmult) < dim:
                continue
            for tau in combinations(nonmult, dim):
                layer.append(_make_cell(basis, alpha, tau))
        layers.append(layer)
    return CellComplex(basis, layers)


def _make_cell(basis, alpha, tau):
    verts = set()
    degenerate = 0
    for sigma in permutations(tau):
        walk, degen = chain_vertices(basis, alpha, tau, sigma)
        verts.update(walk)
        if degen:
            degenerate += 1
    boundary = []
    for i, k in enumerate(tau, start=1):
        sign = -1 if i % 2 else 1
        rest = tau[:i - 1] + tau[i:]
        boundary.append(((alpha, rest), sign))
        beta, _ = basis.delta[(alpha, k)]
        # facet collapses unless rest stays nonmultiplicative for the target
        if all(v > basis.classes[beta] for v in rest):
            boundary.append(((beta, rest), -sign))
    label = symbol_multidegree(basis, alpha, tau)
    return Cell(alpha, tau, label, tuple(sorted(verts)), boundary, degenerate)


def supports_check(cellcomplex, cplx):
    """Compare the cell data against a symbol complex.

    Structural mismatches (different bases, different key sets) raise
    MismatchedBases; value mismatches are returned as failure strings.
    A per-generator sign choice reconciling every differential entry with
    the cell boundary sign is searched for; its absence is a failure.
    """
    basis = cellcomplex.basis
    if cplx.basis is not basis and (
            cplx.basis is None
            or cplx.basis.elements != basis.elements):
        raise MismatchedBases("cell complex and free complex disagree")
    keyed = []
    for i, level in enumerate(cplx.levels):
        table = {}
        for idx, g in enumerate(level):
            if not isinstance(g.key, Symbol):
                raise MismatchedBases("free complex has non-symbol generators")
            table[(g.key.alpha, g.key.u)] = idx
        keyed.append(table)
    cell_keys = set(cellcomplex.lookup)
    sym_keys = set()
    for table in keyed:
        sym_keys.update(table)
    if cell_keys != sym_keys:
        raise MismatchedBases("cells and symbols do not biject")

    failures = []
    for key, cell in sorted(cellcomplex.lookup.items()):
        gen = cplx.levels[cell.dim][keyed[cell.dim][key]]
        if gen.multidegree != cell.label:
            failures.append("label of %r is not the symbol multidegree" % (key,))
        lcm = basis.elements[cell.vertices[0]]
        for v in cell.vertices[1:]:
            lcm = lcm.lcm(basis.elements[v])
        if lcm != cell.label:
            failures.append("label of %r is not the lcm of its vertices"
                            % (key,))
        if cell.alpha not in cell.vertices:
            failures.append("cell %r does not contain its own vertex" % (key,))
        for (fkey, _sign) in cell.boundary:
            facet = cellcomplex.lookup.get(fkey)
            if facet is None:
                failures.append("facet %r of %r is not a cell" % (fkey, key))
                continue
            if not facet.label.divides(cell.label):
                failures.append("facet label %s does not divide %s of %r"
                                % (facet.label, cell.label, key))
            if not set(facet.vertices) <= set(cell.vertices):
                failures.append("facet %r has vertices outside %r"
                                % (fkey, key))

    # boundary entries and differential entries must agree up to one sign
    # per generator: 2-colour the incidence graph
    edges = {}
    for i in range(1, len(cplx.levels)):
        for key, cell in cellcomplex.lookup.items():
            if cell.dim != i:
                continue
            col = keyed[i][key]
            centries = {fkey: s for fkey, s in cell.boundary}
            dentries = {}
            for row, (c, m) in cplx.diffs[i].get(col, {}).items():
                g = cplx.levels[i - 1][row]
                dentries[(g.key.alpha, g.key.u)] = (row, c, m)
            if set(centries) != set(dentries):
                failures.append("support of %r differs from d-entries" % (key,))
                continue
            for fkey, s in centries.items():
                row, c, m = dentries[fkey]
                facet = cellcomplex.lookup[fkey]
                if m != cell.label / facet.label:
                    failures.append("entry monomial at %r -> %r is not the "
                                    "label quotient" % (key, fkey))
                if abs(c) != 1:
                    failures.append("entry coefficient at %r -> %r is not "
                                    "a sign" % (key, fkey))
                    continue
                edges[((i, col), (i - 1, row))] = c * s
    adjacency = {}
    for (a, b), q in edges.items():
        adjacency.setdefault(a, []).append((b, q))
        adjacency.setdefault(b, []).append((a, q))
    sign = {}
    ok_signs = True
    for root in sorted(adjacency):
        if root in sign:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            cur = stack.pop()
            for other, q in adjacency[cur]:
                want = q * sign[cur]
                if other in sign:
                    if sign[other] != want:
                        ok_signs = False
                else:
                    sign[other] = want
                    stack.append(other)
    if not ok_signs:
        failures.append("no per-generator sign choice matches the boundary")
    return CellCheckReport(not failures, failures)


class CellCheckReport:
    __slots__ = ("ok", "failures")

    def __init__(self, ok, failures):
        self.ok = ok
        self.failures = failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "CellCheckReport(ok=%r, failures=%d)" % (
            self.ok, len(self.failures))
