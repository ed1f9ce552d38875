"""Polytope-file parsing, the batch scan pipeline, and report emission.

File grammar (whitespace-tolerant, '#' starts a comment line)::

    polytope NAME
    dim N
    vertices M
    <M lines of N space-separated integers>
    end

Rationals serialize as lowest-terms "p/q" (integer part only when the
denominator is 1, "0" for zero); floats never appear.
"""

import csv
import io as _io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import conjectures as conj
from .criteria import full_verdict
from .measures import ehrhart, fano_index, volume_and_barycenter
from .polytope import dual, hull, is_smooth_fano
from .symmetry import automorphism_group, fixed_space, vertex_sum


class ParseError(Exception):
    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class PolytopeFile:
    entries: tuple         # of (name, dim, vertex rows)

    def names(self):
        return [e[0] for e in self.entries]

    def entry(self, name):
        for e in self.entries:
            if e[0] == name:
                return e
        raise KeyError(name)


def parse(text) -> PolytopeFile:
    entries = []
    names = set()
    state = "top"
    name = dim = nverts = None
    rows = []
    start_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if state == "top":
            if tokens[0] != "polytope":
                raise ParseError(line_no, f"expected 'polytope NAME', got {tokens[0]!r}")
            if len(tokens) != 2:
                raise ParseError(line_no, "expected exactly one name after 'polytope'")
            name = tokens[1]
            if name in names:
                raise ParseError(line_no, f"duplicate polytope name {name!r}")
            names.add(name)
            start_line = line_no
            state = "dim"
        elif state == "dim":
            if tokens[0] != "dim" or len(tokens) != 2:
                raise ParseError(line_no, "expected 'dim N'")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, f"non-integer dimension {tokens[1]!r}") from None
            if dim < 1:
                raise ParseError(line_no, "dimension must be positive")
            state = "vertices"
        elif state == "vertices":
            if tokens[0] != "vertices" or len(tokens) != 2:
                raise ParseError(line_no, "expected 'vertices M'")
            try:
                nverts = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, f"non-integer vertex count {tokens[1]!r}") from None
            if nverts < 1:
                raise ParseError(line_no, "vertex count must be positive")
            rows = []
            state = "rows"
        elif state == "rows":
            if tokens[0] == "end":
                raise ParseError(
                    line_no,
                    f"'end' after {len(rows)} of {nverts} vertex rows",
                )
            try:
                row = tuple(int(t) for t in tokens)
            except ValueError:
                raise ParseError(line_no, f"non-integer token in vertex row: {line!r}") from None
            if len(row) != dim:
                raise ParseError(
                    line_no,
                    f"vertex row has {len(row)} coordinates, expected {dim}",
                )
            rows.append(row)
            if len(rows) == nverts:
                state = "end"
        elif state == "end":
            if tokens[0] != "end":
                raise ParseError(line_no, "expected 'end'")
            entries.append((name, dim, tuple(rows)))
            state = "top"
    if state != "top":
        raise ParseError(
            start_line,
            f"polytope {name!r} is missing its 'end'",
        )
    return PolytopeFile(entries=tuple(entries))


def fmt_rat(x):
    f = Fraction(x)
    if f == 0:
        return "0"
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def fmt_vec(v):
    return [fmt_rat(x) for x in v]


@dataclass(frozen=True)
class ScanOptions:
    conjectures: bool = False
    ehrhart_max_dim: int = 5
    jobs: int = 1
    timing: bool = False


def analyze_entry(entry, options: ScanOptions = ScanOptions()):
    """One AnalysisReport dict for a (name, dim, rows) entry.

    Entries failing the smooth-Fano validation get a certificate and no
    downstream analysis; this is data, not an error.
    """
    name, dim, rows = entry
    t0 = time.monotonic()
    report = {"name": name, "dim": dim, "n_vertices": None}
    q = hull(rows)
    report["n_vertices"] = q.n_vertices
    smooth, certificate = is_smooth_fano(q)
    report["is_smooth_fano"] = smooth
    if not smooth:
        report["certificate"] = certificate
        if options.timing:
            report["seconds"] = time.monotonic() - t0
        return report
    dp = dual(q)
    report["is_reflexive"] = dp.p.is_reflexive()
    groups = automorphism_group(dp)
    gq, gp = groups
    verdict = full_verdict(dp, groups=groups)
    fs = fixed_space(gq)
    report["barycenter"] = fmt_vec(verdict.barycenter)
    report["is_ke"] = verdict.is_ke
    report["is_symmetric"] = verdict.is_symmetric
    report["group_order"] = gq.order
    report["group_order_dual"] = gp.order
    report["fixed_dim"] = verdict.fixed_dim
    report["fixed_dim_dual"] = fixed_space(gp).dim
    report["fixed_generator"] = (
        [int(x) for x in fs.basis[0]] if fs.dim == 1 else None
    )
    report["vertex_sum"] = [int(x) for x in vertex_sum(q)]
    report["alpha"] = fmt_rat(verdict.alpha)
    report["lct"] = fmt_rat(verdict.lct)
    report["tian_holds"] = verdict.tian_holds
    vol, _ = volume_and_barycenter(dp.p)
    report["volume"] = fmt_rat(vol)
    report["degree"] = fmt_rat(factorial(dp.p.dim) * vol)
    report["fano_index"] = fano_index(dp.p)
    if dp.p.dim <= options.ehrhart_max_dim:
        report["ehrhart"] = fmt_vec(ehrhart(dp.p).coefficients)
    if options.conjectures:
        report["conjectures"] = _conjecture_dict(dp, options)
    if options.timing:
        report["seconds"] = time.monotonic() - t0
    return report


def _conjecture_dict(dp, options):
    rep = conj.run_all(dp, ehrhart_max_dim=options.ehrhart_max_dim)
    out = {}
    if rep.eq1 is not None:
        out["eq1"] = {
            "a_n_minus_2": fmt_rat(rep.eq1.a_n_minus_2),
            "third_of_codim2_vol": fmt_rat(rep.eq1.third_of_codim2_vol),
            "holds": rep.eq1.holds,
            "equality": rep.eq1.equality,
        }
    else:
        out["eq1"] = None
    out["conj11"] = [
        {
            "facet_index": f.facet_index,
            "facet_normal": list(f.facet_normal),
            "feasible": f.feasible,
        }
        for f in rep.conj11
    ]
    eb = rep.ehrhart_bound
    out["ehrhart_bound"] = {
        "vol": fmt_rat(eb.vol),
        "bound": fmt_rat(eb.bound),
        "holds": eb.holds,
        "equality": eb.equality,
        "simplex_shape": eb.simplex_shape,
        "known_bound": fmt_rat(eb.known_bound),
        "known_bound_holds": eb.known_bound_holds,
    }
    b = rep.bishop
    out["bishop"] = {
        "index": b.index,
        "degree": fmt_rat(b.degree),
        "lhs": fmt_rat(b.lhs),
        "bound": b.bound,
        "holds": b.holds,
        "sharp": b.sharp,
    }
    return out


def scan(pf: PolytopeFile, options: ScanOptions = ScanOptions()):
    """Analyze every entry; output order always matches input order."""
    if options.jobs > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            return list(pool.map(_analyze_star, [(e, options) for e in pf.entries]))
    return [analyze_entry(e, options) for e in pf.entries]


def _analyze_star(args):
    return analyze_entry(*args)


CSV_COLUMNS = [
    "name",
    "dim",
    "n_vertices",
    "is_smooth_fano",
    "is_reflexive",
    "is_ke",
    "is_symmetric",
    "alpha",
]


def emit(reports, format="json"):
    """Serialize reports to bytes; key order and content are deterministic."""
    if format == "json":
        return (json.dumps(reports, indent=2) + "\n").encode()
    if format == "csv":
        buf = _io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow({k: r.get(k, "") for k in CSV_COLUMNS})
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}")
