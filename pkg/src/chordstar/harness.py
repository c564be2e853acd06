"""Single-graph analysis, corpus verification, extremal classification and
connectivity spectra, all producing JSON-ready reports."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional

from .canon import MAX_CANON_N, MAX_ENUM_N, canonical_form, enumerate_graphs
from .constructions import DEFAULT_SEED, construct_chordal_star
from .errors import DomainError, InputError, UnsupportedError
from .graph import Graph, complement
from .graph6 import parse_graph6, read_graph6_file, write_graph6
from .invariants import (InvariantRecord, algebraic_connectivity,
                         ceil_two_sqrt_minus_two, has_isolated_vertex,
                         has_universal_vertex, invariant_record, is_chordal,
                         kappa_bound, tau_max, vertex_connectivity)
from .stanley_reisner import (GF2, HOCHSTER_MAX_N, BettiTable,
                              betti_table_hochster, has_linear_resolution,
                              kappa_via_betti, proj_dim)

log = logging.getLogger(__name__)

REPORT_VERSION = 1
FIEDLER_TOL = 1e-7
BUILTIN = "builtin_enumeration"
GRAPH6_FILE = "graph6_file"


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    applies_to: str
    needs_betti: bool = False


CHECKS = (
    Check("K1", "kappa(G) + tau_max(G^c) <= n - 1", "chordal*"),
    Check("K2", "0 <= kappa(G) <= (n - 1) - ceil(2 sqrt(n) - 2)", "chordal*"),
    Check("K3", "n - kappa(G) = projdim(S/I(G^c)) + 1", "chordal*", needs_betti=True),
    Check("K4", "S/I(G^c) has a linear resolution", "chordal", needs_betti=True),
    Check("K5", "tau_max(G) >= ceil(2 sqrt(n) - 2)", "no isolated vertex"),
    Check("K6", "projdim(S/I(G^c)) >= tau_max(G^c)", "chordal*", needs_betti=True),
    Check("K7", "a(G) <= kappa(G)", "non-complete, n >= 2"),
)
CHECK_IDS = tuple(c.id for c in CHECKS)


# Single graph

@dataclass
class Analysis:
    graph6: str
    record: InvariantRecord
    betti: Optional[BettiTable] = None
    kappa_via_betti: Optional[int] = None
    projdim: Optional[int] = None

    @property
    def kappa_plus_tau_complement(self) -> int:
        return self.record.kappa + self.record.tau_max_complement

    @property
    def extremal(self) -> bool:
        return self.record.is_chordal_star and self.record.kappa == self.record.kappa_bound

    def to_dict(self) -> dict:
        r = self.record
        out = {"graph6": self.graph6, **asdict(r),
               "kappa_plus_tau_complement": self.kappa_plus_tau_complement,
               "kappa_tau_inequality_holds": self.kappa_plus_tau_complement <= r.n - 1,
               "exceeds_kappa_bound": r.kappa > r.kappa_bound,
               "extremal": self.extremal}
        if self.betti is not None:
            out["betti"] = {"field": self.betti.field, "entries": self.betti.as_rows(),
                            "linear_resolution": has_linear_resolution(self.betti),
                            "projdim": self.projdim}
        if self.kappa_via_betti is not None:
            out["kappa_via_betti"] = self.kappa_via_betti
            out["projdim_identity"] = {"n_minus_kappa": r.n - r.kappa,
                                       "projdim_plus_one": self.projdim + 1,
                                       "holds": r.n - r.kappa == self.projdim + 1}
        return out


def analyze(g: Graph, with_betti: bool = False, field: str = GF2) -> Analysis:
    if g.n < 1:
        raise InputError("analyze needs n >= 1")
    if with_betti and g.n > HOCHSTER_MAX_N:
        raise UnsupportedError(f"Betti tables limited to n <= {HOCHSTER_MAX_N}")
    result = Analysis(write_graph6(g), invariant_record(g))
    if with_betti:
        result.betti = betti_table_hochster(g, field)
        result.projdim = proj_dim(result.betti)
        if result.record.is_chordal_star and g.n >= 2:
            result.kappa_via_betti = kappa_via_betti(g, field)
    return result


# Corpus verification

@dataclass
class GraphOutcome:
    """Per-graph check results; ``results`` maps check id to (passed, observed)."""

    key: bytes
    graph6: str
    n: int
    chordal: bool
    chordal_star: bool
    extremal: bool
    results: dict[str, tuple[bool, dict]] = field(default_factory=dict)


def evaluate_graph(g: Graph, field: str = GF2) -> GraphOutcome:
    n = g.n
    code = write_graph6(g)
    key = canonical_form(g) if n <= MAX_CANON_N else code.encode("ascii")
    chordal = is_chordal(g)
    chordal_star = chordal and not has_universal_vertex(g)
    out = GraphOutcome(key, code, n, chordal, chordal_star, False)
    complete = g.is_complete()
    betti_ok = n <= HOCHSTER_MAX_N
    bound_term = ceil_two_sqrt_minus_two(n)

    kappa = vertex_connectivity(g) if n >= 1 else 0
    table = betti_table_hochster(g, field) if chordal and betti_ok else None
    pd = proj_dim(table) if table is not None else None

    if chordal_star:
        tau_c, cover_c = tau_max(complement(g))
        bound = kappa_bound(n)
        out.extremal = kappa == bound
        out.results["K1"] = (kappa + tau_c <= n - 1,
                             {"kappa": kappa, "tau_max_complement": tau_c, "cover": cover_c})
        out.results["K2"] = (0 <= kappa <= bound, {"kappa": kappa, "bound": bound})
        if pd is not None:
            out.results["K3"] = (n - kappa == pd + 1, {"n_minus_kappa": n - kappa, "projdim_plus_one": pd + 1})
            out.results["K6"] = (pd >= tau_c, {"projdim": pd, "tau_max_complement": tau_c})
    if table is not None:
        out.results["K4"] = (has_linear_resolution(table), {"betti": table.as_rows()})
    if n >= 1 and not has_isolated_vertex(g):
        tau_s, cover_s = tau_max(g)
        out.results["K5"] = (tau_s >= bound_term, {"tau_max": tau_s, "ceil_2sqrt_n_minus_2": bound_term,
                                                  "cover": cover_s})
    if n >= 2 and not complete:
        a = algebraic_connectivity(g)
        out.results["K7"] = (a <= kappa + FIEDLER_TOL, {"alg_connectivity": a, "kappa": kappa})
    return out


def _evaluate_code(args: tuple[str, str]) -> GraphOutcome:
    code, fld = args
    return evaluate_graph(parse_graph6(code), fld)


def _corpus(n: Optional[int], source: str, path: Optional[str | Path]) -> Iterator[Graph]:
    if source == BUILTIN:
        if n is None:
            raise InputError("built-in enumeration needs --n")
        yield from enumerate_graphs(n)
    elif source == GRAPH6_FILE:
        if path is None:
            raise InputError("graph6 source needs an input file")
        for _, g in read_graph6_file(path):
            if n is not None and g.n != n:
                continue
            yield g
    else:
        raise InputError(f"unknown source {source!r}")


def _map_outcomes(graphs: Iterable[Graph], fn: Callable, fld: str, jobs: int) -> list:
    codes = ((write_graph6(g), fld) for g in graphs)
    out = []
    if jobs <= 1:
        for k, args in enumerate(codes, 1):
            out.append(fn(args))
            if k % 25000 == 0:
                log.info("processed %d graphs", k)
    else:
        with Pool(jobs) as pool:
            for k, res in enumerate(pool.imap(fn, codes, chunksize=256), 1):
                out.append(res)
                if k % 25000 == 0:
                    log.info("processed %d graphs", k)
    return out


@dataclass
class CorpusReport:
    n: Optional[int]
    source: str
    totals: dict
    checks: list[dict]
    extremal: list[str]
    spectrum: list[dict] = field(default_factory=list)
    timing: Optional[float] = None

    @property
    def all_passed(self) -> bool:
        return all(c["status"] != "fail" for c in self.checks)

    @property
    def failing_ids(self) -> list[str]:
        return [c["id"] for c in self.checks if c["status"] == "fail"]

    def check(self, check_id: str) -> dict:
        return next(c for c in self.checks if c["id"] == check_id)

    def to_dict(self) -> dict:
        return {"version": REPORT_VERSION, "n": self.n, "source": self.source,
                "totals": self.totals, "checks": self.checks, "extremal": self.extremal,
                "spectrum": self.spectrum, "timing": self.timing}


def summarize(outcomes: list[GraphOutcome], n: Optional[int], source: str) -> CorpusReport:
    outcomes = sorted(outcomes, key=lambda o: (o.n, o.key, o.graph6))
    big = any(o.n > HOCHSTER_MAX_N for o in outcomes)
    checks = []
    for chk in CHECKS:
        applicable = passed = 0
        bad = []
        for o in outcomes:
            res = o.results.get(chk.id)
            if res is None:
                continue
            applicable += 1
            if res[0]:
                passed += 1
            else:
                bad.append({"graph6": o.graph6, "check": chk.id, "observed": res[1]})
        if bad:
            status = "fail"
        elif chk.needs_betti and big:
            status = "skipped" if applicable == 0 else "partial"
        else:
            status = "pass"
        checks.append({"id": chk.id, "description": chk.description, "applies_to": chk.applies_to,
                       "applicable": applicable, "passed": passed, "status": status,
                       "counterexamples": bad})
    totals = {"graphs": len(outcomes),
              "chordal": sum(o.chordal for o in outcomes),
              "chordal_star": sum(o.chordal_star for o in outcomes)}
    extremal = [o.graph6 for o in outcomes if o.extremal]
    return CorpusReport(n, source, totals, checks, extremal)


def verify_corpus(n: Optional[int] = None, source: str = BUILTIN, path: Optional[str | Path] = None,
                  field: str = GF2, jobs: int = 1, timing: bool = False) -> CorpusReport:
    """Run checks K1-K7 over every graph of a corpus."""
    if source == BUILTIN and (n is None or not 1 <= n <= MAX_ENUM_N):
        raise UnsupportedError(f"built-in corpus covers 1 <= n <= {MAX_ENUM_N}")
    start = time.perf_counter()
    outcomes = _map_outcomes(_corpus(n, source, path), _evaluate_code, field, jobs)
    report = summarize(outcomes, n, source)
    if timing:
        report.timing = round(time.perf_counter() - start, 3)
    return report


# Extremal classification

def _extremal_code(args: tuple[str, str]) -> Optional[tuple[bytes, str]]:
    code, _ = args
    g = parse_graph6(code)
    if g.n < 1 or has_universal_vertex(g) or not is_chordal(g):
        return None
    if vertex_connectivity(g) != kappa_bound(g.n):
        return None
    key = canonical_form(g) if g.n <= MAX_CANON_N else code.encode("ascii")
    return key, code


def classify_extremal(n: Optional[int] = None, source: str = BUILTIN,
                      path: Optional[str | Path] = None, jobs: int = 1) -> list[str]:
    """Chordal* graphs whose connectivity meets the bound, one per isomorphism class.

    Strings are canonical graph6 (when n <= 16), sorted.
    """
    if source == BUILTIN and (n is None or not 1 <= n <= MAX_ENUM_N):
        raise UnsupportedError(f"built-in corpus covers 1 <= n <= {MAX_ENUM_N}")
    hits = _map_outcomes(_corpus(n, source, path), _extremal_code, GF2, jobs)
    return sorted({h[0].decode("ascii") for h in hits if h})


def classification_report(n: Optional[int], source: str = BUILTIN, path: Optional[str | Path] = None,
                          jobs: int = 1) -> dict:
    found = classify_extremal(n, source, path, jobs)
    square = n is not None and n >= 4 and math.isqrt(n) ** 2 == n
    return {"version": REPORT_VERSION, "n": n, "source": source,
            "bound": kappa_bound(n) if n is not None else None,
            "extremal": found, "count": len(found), "perfect_square": square,
            "unique": len(found) == 1 if square else None}


# Spectrum

def observed_kappas(n: int) -> set[int]:
    """Connectivities of all chordal* graphs on n vertices (exhaustive corpus)."""
    seen = set()
    for g in enumerate_graphs(n):
        if not has_universal_vertex(g) and is_chordal(g):
            seen.add(vertex_connectivity(g))
    return seen


def spectrum(n: int, seed: int = DEFAULT_SEED, corpus_check: bool = True) -> dict:
    """One verified witness per admissible connectivity value."""
    if n < 4:
        raise DomainError(f"spectrum needs n >= 4, got {n}")
    rows = []
    for kappa in range(kappa_bound(n) + 1):
        g, recipe = construct_chordal_star(n, kappa, seed)
        rows.append({"kappa": kappa, "recipe": recipe.to_dict(), "graph6": write_graph6(g)})
    out = {"version": REPORT_VERSION, "n": n, "bound": kappa_bound(n), "spectrum": rows,
           "corpus_check": None}
    if corpus_check and n <= MAX_ENUM_N:
        observed = sorted(observed_kappas(n))
        achieved = [r["kappa"] for r in rows]
        out["corpus_check"] = {"observed": observed, "achieved": achieved, "agrees": observed == achieved}
    return out
