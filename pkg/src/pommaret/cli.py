"""Command line front end.

Ideal files: a ``vars <n>`` header, an optional ``names a,b,c`` line, then
one monomial per line, either as a product of named powers (``x1^2*x2``,
``y^4``), a bare ``1``, or an exponent vector ``[2,0,1]``.  ``#`` starts a
comment.

Exit codes: 0 success, 2 bad input or usage, 3 the ideal fails a math
precondition (not quasi-stable / not stable), 4 a verification failure.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .cellular import build_cell_complex, supports_check
from .errors import (ArityMismatch, EmptyInput, IdealSyntaxError,
                     NotQuasiStable, NotStable, PommaretError, UnitGenerator)
from .ideals import MonomialIdeal, build_p_graph, pommaret_basis
from .monomials import Ring
from .morse import build_matching_V, is_morse_matching, minimize
from .resolution import (betti_table, ek_complex, ps_complex,
                         render_differential, taylor_complex)
from .verify import (check_complex, check_exactness, homological_invariants,
                     oracle_betti, random_quasi_stable)

_FACTOR = re.compile(r"([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?$")


def parse_ideal(text):
    """Parse an ideal file into a MonomialIdeal."""
    ring = None
    names = None
    n = None
    gens = []
    lines = text.splitlines()
    header_done = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if n is None:
            m = re.match(r"vars\s+(\d+)$", stripped)
            if not m:
                raise IdealSyntaxError("expected 'vars <n>' header",
                                       lineno, 1 + _indent(line))
            n = int(m.group(1))
            if n < 1:
                raise IdealSyntaxError("need at least one variable",
                                       lineno, 1 + _indent(line))
            continue
        if not header_done and stripped.startswith("names"):
            parts = stripped[len("names"):].strip()
            names = tuple(s.strip() for s in parts.split(","))
            if len(names) != n or not all(names):
                raise IdealSyntaxError(
                    "expected %d comma-separated names" % n,
                    lineno, 1 + _indent(line))
            header_done = True
            ring = Ring(n, names)
            continue
        header_done = True
        if ring is None:
            ring = Ring(n)
        gens.append(_parse_monomial(line, lineno, ring))
    if n is None:
        raise IdealSyntaxError("empty file", max(len(lines), 1), 1)
    if ring is None:
        ring = Ring(n)
    if not gens:
        raise EmptyInput("no generators in the ideal file")
    return MonomialIdeal(ring, gens)


def _indent(line):
    return len(line) - len(line.lstrip())


def _parse_monomial(line, lineno, ring):
    stripped = line.strip()
    col0 = 1 + _indent(line)
    if stripped == "1":
        return ring.unit()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise IdealSyntaxError("unterminated exponent vector",
                                   lineno, col0)
        body = stripped[1:-1]
        try:
            exps = [int(t.strip()) for t in body.split(",")]
        except ValueError:
            raise IdealSyntaxError("exponent vector needs integers",
                                   lineno, col0)
        if len(exps) != ring.n:
            raise IdealSyntaxError(
                "expected %d exponents, got %d" % (ring.n, len(exps)),
                lineno, col0)
        if any(e < 0 for e in exps):
            raise IdealSyntaxError("negative exponent", lineno, col0)
        return ring.monomial(exps)
    exps = [0] * ring.n
    pos = 0
    for piece in stripped.split("*"):
        col = col0 + stripped.find(piece, pos)
        pos = stripped.find(piece, pos) + len(piece)
        m = _FACTOR.match(piece.strip())
        if not m:
            raise IdealSyntaxError("bad factor %r" % piece.strip(),
                                   lineno, col)
        name, exp = m.group(1), int(m.group(2) or 1)
        if name in ring.names:
            idx = ring.names.index(name)
        else:
            mv = re.match(r"x(\d+)$", name)
            if mv and 1 <= int(mv.group(1)) <= ring.n:
                idx = int(mv.group(1)) - 1
            else:
                raise IdealSyntaxError("unknown variable %r" % name,
                                       lineno, col)
        exps[idx] += exp
    return ring.monomial(exps)


@dataclass
class Job:
    command: str
    path: str = None
    variant: str = "ps"
    fmt: str = "text"
    out: str = None
    trace: str = None
    strand_cap: int = 20000
    seed: int = 0
    count: int = 25
    max_deg: int = 5


def _build_parser():
    p = argparse.ArgumentParser(
        prog="pommaret",
        description="Pommaret bases and minimal resolutions of "
                    "quasi-stable monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, needs_file=True, **kw):
        sp = sub.add_parser(name, **kw)
        if needs_file:
            sp.add_argument("path", help="ideal file")
        sp.add_argument("--format", dest="fmt", default="text",
                        choices=["text", "json", "dot"])
        sp.add_argument("--out", default=None, help="write output here")
        return sp

    add("basis", help="Pommaret basis of the ideal")
    add("pgraph", help="rewrite graph of the basis")
    sp = add("resolution", help="a free resolution")
    sp.add_argument("--variant", default="ps",
                    choices=["ps", "ek", "taylor"])
    add("cellular", help="supporting cell complex")
    sp = add("minimize", help="minimal free resolution")
    sp.add_argument("--trace", default=None,
                    help="write one JSON line per cancellation here")
    add("betti", help="Betti numbers, pd and regularity")
    sp = add("verify", help="run the self-check suite")
    sp.add_argument("--strand-cap", dest="strand_cap", type=int,
                    default=20000)
    sp = add("random-test", needs_file=False,
             help="seeded end-to-end property checks")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=25)
    sp.add_argument("--max-deg", dest="max_deg", type=int, default=5)
    sp.add_argument("--strand-cap", dest="strand_cap", type=int, default=400)
    return p


def _emit(job, text):
    if job.out:
        with open(job.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _load(job):
    with open(job.path) as fh:
        return parse_ideal(fh.read())


def _cmd_basis(job):
    basis = pommaret_basis(_load(job))
    if job.fmt == "json":
        _emit(job, _json_text({
            "n": basis.ring.n,
            "elements": [{"monomial": str(h), "exps": list(h.exps),
                          "cls": h.cls} for h in basis.elements]}))
    elif job.fmt == "text":
        lines = ["Pommaret basis, %d elements:" % len(basis)]
        for i, h in enumerate(basis.elements):
            lines.append("%3d: %-20s cls=%d" % (i, str(h), h.cls))
        _emit(job, "\n".join(lines) + "\n")
    else:
        raise _Usage("basis has no dot format")
    return 0


def _cmd_pgraph(job):
    graph = build_p_graph(pommaret_basis(_load(job)))
    basis = graph.basis
    if job.fmt == "dot":
        _emit(job, graph.to_dot())
    elif job.fmt == "json":
        _emit(job, _json_text({
            "vertices": [str(h) for h in basis.elements],
            "edges": [{"from": a, "var": k, "to": b, "t": str(t)}
                      for (a, k, b, t) in graph.edges]}))
    else:
        lines = ["%d vertices, %d edges" % (len(basis), len(graph.edges))]
        for (a, k, b, t) in graph.edges:
            lines.append("%s --%s--> %s  (t=%s)" % (
                basis.elements[a], basis.ring.names[k - 1],
                basis.elements[b], t))
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _resolution_for(job, ideal):
    if job.variant == "taylor":
        return taylor_complex(ideal)
    if job.variant == "ek":
        return ek_complex(ideal)
    return ps_complex(pommaret_basis(ideal))


def _render_complex_text(cplx):
    lines = ["%s resolution, ranks %s" % (
        cplx.provenance, "  ".join(str(r) for r in cplx.ranks()))]
    for i, level in enumerate(cplx.levels):
        lines.append("F_%d: %s" % (i, "  ".join(g.text for g in level)))
    for i in range(1, len(cplx.levels)):
        lines.append("")
        lines.append(render_differential(cplx, i))
    return "\n".join(lines) + "\n"


def _cmd_resolution(job):
    cplx = _resolution_for(job, _load(job))
    if job.fmt == "json":
        _emit(job, _json_text(cplx.to_json_dict()))
    elif job.fmt == "text":
        _emit(job, _render_complex_text(cplx))
    else:
        raise _Usage("resolution has no dot format")
    return 0


def _cmd_cellular(job):
    cells = build_cell_complex(pommaret_basis(_load(job)))
    if job.fmt == "dot":
        _emit(job, cells.to_dot())
    elif job.fmt == "json":
        _emit(job, _json_text(cells.to_json_dict()))
    else:
        lines = ["cells by dimension: %s" %
                 "  ".join(str(c) for c in cells.counts())]
        basis = cells.basis
        for layer in cells.cells:
            for c in layer:
                verts = ", ".join(str(basis.elements[v])
                                  for v in c.vertices)
                lines.append("dim %d  [%s | %s]  label=%s  vertices={%s}" % (
                    c.dim, basis.elements[c.alpha],
                    "*".join(basis.ring.names[k - 1] for k in c.tau) or "1",
                    c.label, verts))
        _emit(job, "\n".join(lines) + "\n")
    return 0


def _cmd_minimize(job):
    basis = pommaret_basis(_load(job))
    reduced = minimize(ps_complex(basis), trace=bool(job.trace))
    if job.trace:
        with open(job.trace, "w") as fh:
            for rec in reduced.trace or []:
                fh.write(json.dumps(rec, sort_keys=True) + "\n")
    sizes = reduced.matching.sizes_by_var()
    if job.fmt == "json":
        doc = reduced.to_json_dict()
        doc["matching"] = {str(k): v for k, v in sorted(sizes.items())}
        doc["safety_net_cancellations"] = reduced.safety_net_cancellations
        _emit(job, _json_text(doc))
    elif job.fmt == "text":
        lines = []
        for k in sorted(sizes, reverse=True):
            lines.append("|V_%d| = %d" % (k, sizes[k]))
        lines.append("safety net cancellations: %d"
                     % reduced.safety_net_cancellations)
        lines.append(_render_complex_text(reduced))
        _emit(job, "\n".join(lines))
    else:
        raise _Usage("minimize has no dot format")
    return 0


def _cmd_betti(job):
    ideal = _load(job)
    basis = pommaret_basis(ideal)
    reduced = minimize(ps_complex(basis))
    report = homological_invariants(reduced, basis)
    if job.fmt == "json":
        _emit(job, _json_text({
            "betti": {"%d,%d" % k: v
                      for k, v in sorted(report.betti.by_degree.items())},
            "multigraded": [{"level": i, "multidegree": list(exps),
                             "count": v}
                            for (i, exps), v in
                            sorted(report.betti.by_multidegree.items())],
            "pd": report.pd, "reg": report.reg,
            "pd_from_classes": report.pd_from_classes,
            "reg_from_basis": report.reg_from_basis,
            "consistent": report.consistent}))
    elif job.fmt == "text":
        lines = [report.betti.render()]
        lines.append("pd  = %d (classes predict %d)"
                     % (report.pd, report.pd_from_classes))
        lines.append("reg = %d (basis degree %d)"
                     % (report.reg, report.reg_from_basis))
        _emit(job, "\n".join(lines) + "\n")
    else:
        raise _Usage("betti has no dot format")
    return 0 if report.consistent else 4


def _verify_one(ideal, strand_cap):
    """All self-checks for one ideal; returns (checks, ok)."""
    checks = []

    def record(name, ok, detail=""):
        checks.append((name, bool(ok), detail))

    basis = pommaret_basis(ideal)
    cplx = ps_complex(basis)
    rep = check_complex(cplx)
    record("complex-axioms", rep.ok, "%d failures" % len(rep.failures))
    cells = build_cell_complex(basis)
    cell_rep = supports_check(cells, cplx)
    record("cell-support", cell_rep.ok, "%d failures" % len(cell_rep.failures))
    matching = build_matching_V(cplx)
    record("matching-valid", is_morse_matching(cplx, matching),
           "%d pairs" % len(matching))
    reduced = minimize(cplx)
    record("safety-net-silent", reduced.safety_net_cancellations == 0,
           "%d extra cancellations" % reduced.safety_net_cancellations)
    red_rep = check_complex(reduced)
    record("reduced-complex-axioms", red_rep.ok)
    record("reduced-minimal", not reduced.unit_entries())
    ex = check_exactness(cplx, cap=strand_cap)
    record("exactness", ex.ok, "%d strands%s" % (
        ex.strands_checked, ", capped" if ex.capped else ""))
    exr = check_exactness(reduced, cap=strand_cap)
    record("reduced-exactness", exr.ok, "%d strands%s" % (
        exr.strands_checked, ", capped" if exr.capped else ""))
    inv = homological_invariants(reduced, basis)
    record("pd-reg-consistent", inv.consistent,
           "pd=%d reg=%d" % (inv.pd, inv.reg))
    if len(ideal.gens) <= 10:
        record("betti-vs-oracle", betti_table(reduced) == oracle_betti(ideal))
    return checks, all(ok for _, ok, _ in checks)


def _cmd_verify(job):
    ideal = _load(job)
    checks, ok = _verify_one(ideal, job.strand_cap)
    if job.fmt == "json":
        _emit(job, _json_text({
            "checks": [{"name": n, "ok": o, "detail": d}
                       for n, o, d in checks],
            "ok": ok}))
    else:
        lines = ["%-24s %s%s" % (n, "ok" if o else "FAIL",
                                 "  (%s)" % d if d else "")
                 for n, o, d in checks]
        lines.append("verdict: %s" % ("ok" if ok else "FAIL"))
        _emit(job, "\n".join(lines) + "\n")
    return 0 if ok else 4


def _cmd_random_test(job):
    lines = []
    bad = 0
    for case in range(job.count):
        seed = job.seed + case
        rng_n = 2 + (seed * 7919 + 11) % 3  # 2..4, deterministic in seed
        gens = (seed * 104729 + 3) % 5      # 0..4 extra generators
        ideal = random_quasi_stable(seed, rng_n, job.max_deg, gens)
        checks, ok = _verify_one(ideal, job.strand_cap)
        if not ok:
            bad += 1
            failed = ", ".join(n for n, o, _ in checks if not o)
            lines.append("case %d seed %d: FAIL (%s)  ideal %r"
                         % (case, seed, failed, ideal))
        else:
            lines.append("case %d seed %d: ok  (%d gens, n=%d)"
                         % (case, seed, len(ideal.gens), ideal.ring.n))
    lines.append("%d/%d cases ok" % (job.count - bad, job.count))
    _emit(job, "\n".join(lines) + "\n")
    return 0 if bad == 0 else 4


class _Usage(Exception):
    pass


_COMMANDS = {
    "basis": _cmd_basis,
    "pgraph": _cmd_pgraph,
    "resolution": _cmd_resolution,
    "cellular": _cmd_cellular,
    "minimize": _cmd_minimize,
    "betti": _cmd_betti,
    "verify": _cmd_verify,
    "random-test": _cmd_random_test,
}


def run(job):
    return _COMMANDS[job.command](job)


def main(argv=None):
    parser = _build_parser()
    ns = parser.parse_args(argv)
    job = Job(command=ns.command)
    for field_name in ("path", "variant", "fmt", "out", "trace",
                       "strand_cap", "seed", "count", "max_deg"):
        if hasattr(ns, field_name):
            setattr(job, field_name, getattr(ns, field_name))
    try:
        return run(job)
    except _Usage as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except (IdealSyntaxError, EmptyInput, UnitGenerator, ArityMismatch) as e:
        sys.stderr.write("error [%s]: %s\n" % (e.code, e.message))
        return 2
    except (NotQuasiStable, NotStable) as e:
        sys.stderr.write("error [%s]: %s\n" % (e.code, e.message))
        return 3
    except OSError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except PommaretError as e:
        sys.stderr.write("error [%s]: %s\n" % (e.code, e.message))
        return 4


if __name__ == "__main__":
    sys.exit(main())
