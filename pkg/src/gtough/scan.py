"""Corpus scanning: per-graph analysis records and deterministic reports.

A scan reads graph6 lines, runs the selected checks on every qualifying
graph, and assembles a JSON-serializable report.  Reports are byte-identical
across runs and worker counts: records keep input order (ordered pool merge),
JSON keys are sorted, and per-record timing is zeroed inside scan reports
(wall-clock totals belong on stderr, not in the artifact).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from time import perf_counter

from . import __version__ as _version
from .common import ClauseVerdict, as_fraction, fraction_str
from .connectivity import check_mader_atom_property, vertex_connectivity
from .graphs import Graph, Graph6ParseError, degree_profile, parse_graph6
from .structure import (
    certificate_clauses,
    check_degree_bound,
    check_endpoint_cuts,
    check_half_tough_construction,
    check_matthews_sumner,
    is_claw_free,
)
from .toughness import NoCertificateError, edge_certificate, is_minimally_t_tough, toughness

CHECK_TOKENS = ("ms", "cert", "endpoints", "clauses", "bound", "mader", "construction")
FILTER_TOKENS = ("claw-free", "minimal", "noncomplete")

# thresholds whose degree bound is a proved statement rather than the
# conjectured ceiling; elsewhere the bound check is hypothesis-gated off
_PROVED_SMALL = (Fraction(1, 2), Fraction(1), Fraction(3, 2))


def _jsonable(value):
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class ScanConfig:
    """Immutable per-graph analysis parameters, shared by all workers."""

    t: Fraction
    filters: tuple[str, ...] = ()
    checks: tuple[str, ...] = CHECK_TOKENS
    exhaustive: bool = False

    def __post_init__(self):
        object.__setattr__(self, "t", as_fraction(self.t))
        if self.t <= 0:
            raise ValueError("threshold must be positive")
        for f in self.filters:
            if f not in FILTER_TOKENS:
                raise ValueError(f"unknown filter {f!r}; expected one of {FILTER_TOKENS}")
        for c in self.checks:
            if c not in CHECK_TOKENS:
                raise ValueError(f"unknown check {c!r}; expected one of {CHECK_TOKENS}")


@dataclass
class ScanRecord:
    """One analyzed graph: headline invariants plus per-check verdict counts."""

    graph6: str
    n: int
    m: int
    kappa: int
    tau: str
    claw_free: bool
    minimally_t_tough: bool
    delta: int
    bound: int
    bound_ok: bool
    checks: dict
    violations: list[str]
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "kappa": self.kappa,
            "tau": self.tau,
            "claw_free": self.claw_free,
            "minimally_t_tough": self.minimally_t_tough,
            "delta": self.delta,
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "checks": self.checks,
            "violations": self.violations,
            "elapsed_ms": self.elapsed_ms,
        }


def _summarize(verdicts: list[ClauseVerdict]) -> tuple[dict, list[dict]]:
    summary = {"applicable": 0, "held": 0, "failed": 0, "not_evaluable": 0, "vacuous": 0}
    evidence = []
    for v in verdicts:
        if not v.applicable:
            summary["vacuous"] += 1
        elif not v.evaluable:
            summary["applicable"] += 1
            summary["not_evaluable"] += 1
        elif v.holds:
            summary["applicable"] += 1
            summary["held"] += 1
        else:
            summary["applicable"] += 1
            summary["failed"] += 1
            evidence.append(_jsonable(v.to_dict()))
    return summary, evidence


def _check_cert(g: Graph, t: Fraction, minimal: bool) -> tuple[dict, list[dict]]:
    summary = {"applicable": 0, "held": 0, "failed": 0, "not_evaluable": 0, "vacuous": 0}
    evidence = []
    if not minimal:
        summary["vacuous"] = g.m
        return summary, evidence
    for e in g.edges():
        summary["applicable"] += 1
        try:
            cert = edge_certificate(g, e, t)
        except NoCertificateError as exc:
            summary["failed"] += 1
            evidence.append({"edge": list(e), "error": str(exc)})
            continue
        problems = cert.violations(g, t)
        if problems:
            summary["failed"] += 1
            evidence.append(
                {"edge": list(e), "cut": list(cert.cut), "problems": problems}
            )
        else:
            summary["held"] += 1
    return summary, evidence


def _edge_verdicts(g: Graph, t: Fraction, minimal: bool, checker, need_claw_free=False,
                   claw_free=True, exhaustive=False) -> tuple[dict, list[dict]]:
    if not minimal or (need_claw_free and not claw_free):
        summary = {"applicable": 0, "held": 0, "failed": 0, "not_evaluable": 0,
                   "vacuous": g.m}
        return summary, []
    verdicts = []
    labels = []
    for e in g.edges():
        got = checker(g, e, t) if not exhaustive else checker(g, e, t, exhaustive=True)
        if isinstance(got, ClauseVerdict):
            got = [got]
        verdicts.extend(got)
        labels.extend([e] * len(got))
    summary, evidence = _summarize(verdicts)
    # attach the edge to each failing verdict for the counterexample artifact
    bad = iter(evidence)
    out = []
    for v, e in zip(verdicts, labels):
        if v.failed:
            item = next(bad)
            item["edge"] = list(e)
            out.append(item)
    return summary, out


def analyze_graph(g: Graph, graph6: str, config: ScanConfig) -> tuple[ScanRecord | None, list[dict]]:
    """Full per-graph pipeline.

    Returns (record, counterexamples); record is None when the graph fails
    the configured filters.
    """
    t = config.t
    started = perf_counter()
    claw_free = is_claw_free(g)
    if "claw-free" in config.filters and not claw_free:
        return None, []
    if "noncomplete" in config.filters and g.is_complete():
        return None, []
    minimal = is_minimally_t_tough(g, t).minimal
    if "minimal" in config.filters and not minimal:
        return None, []

    tau = toughness(g)
    kappa = vertex_connectivity(g).kappa
    delta = degree_profile(g)[0]
    bound_report = check_degree_bound(g, t)

    checks: dict = {}
    counterexamples: list[dict] = []

    def record_check(token, summary, evidence):
        checks[token] = summary
        for item in evidence:
            counterexamples.append(
                {
                    "graph6": graph6,
                    "check": token,
                    "t": fraction_str(t),
                    "exhaustive": config.exhaustive,
                    "evidence": item,
                }
            )

    for token in config.checks:
        if token == "ms":
            summary, evidence = _summarize([check_matthews_sumner(g)])
        elif token == "cert":
            summary, evidence = _check_cert(g, t, minimal)
        elif token == "endpoints":
            summary, evidence = _edge_verdicts(g, t, minimal, check_endpoint_cuts)
        elif token == "clauses":
            summary, evidence = _edge_verdicts(
                g, t, minimal, certificate_clauses,
                need_claw_free=True, claw_free=claw_free, exhaustive=config.exhaustive,
            )
        elif token == "bound":
            proved = t >= 2 or t in _PROVED_SMALL
            verdict = ClauseVerdict(
                "bound",
                applicable=minimal and claw_free and proved,
                holds=bound_report.satisfied if (minimal and claw_free and proved) else True,
                witness={
                    "delta": delta,
                    "bound": bound_report.bound,
                    "conjecture_bound": bound_report.conjecture_bound,
                    "conjecture_ok": bound_report.conjecture_satisfied,
                },
            )
            summary, evidence = _summarize([verdict])
        elif token == "mader":
            summary, evidence = _summarize([check_mader_atom_property(g)])
        elif token == "construction":
            summary, evidence = _summarize([check_half_tough_construction(g)])
        record_check(token, summary, evidence)

    elapsed_ms = int((perf_counter() - started) * 1000)
    record = ScanRecord(
        graph6=graph6,
        n=g.n,
        m=g.m,
        kappa=kappa,
        tau=str(tau),
        claw_free=claw_free,
        minimally_t_tough=minimal,
        delta=delta,
        bound=bound_report.bound,
        bound_ok=bound_report.satisfied,
        checks=checks,
        violations=[tok for tok in config.checks if checks[tok]["failed"]],
        elapsed_ms=elapsed_ms,
    )
    return record, counterexamples


def _line_task(config: ScanConfig, item: tuple[int, str]):
    lineno, text = item
    try:
        g = parse_graph6(text)
    except Graph6ParseError as exc:
        return ("malformed", {"line": lineno, "text": text, "error": str(exc)})
    if g.n == 0:
        return ("malformed", {"line": lineno, "text": text, "error": "empty graph"})
    record, counters = analyze_graph(g, text, config)
    if record is None:
        return ("filtered", None)
    record.elapsed_ms = 0  # keep scan artifacts independent of machine speed
    return ("ok", record, counters)


@dataclass
class ScanReport:
    """Deterministic scan artifact; serialize with to_json."""

    t: str
    source: str
    filters: list[str]
    checks: list[str]
    exhaustive: bool
    verbose: bool
    totals: dict
    check_totals: dict
    outcome: str
    records: list[dict]
    counterexamples: list[dict]
    malformed: list[dict]
    schema: int = 1
    version: str = _version

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "version": self.version,
            "t": self.t,
            "source": self.source,
            "filters": self.filters,
            "checks": self.checks,
            "exhaustive": self.exhaustive,
            "verbose": self.verbose,
            "totals": self.totals,
            "check_totals": self.check_totals,
            "outcome": self.outcome,
            "records": self.records,
            "counterexamples": self.counterexamples,
            "malformed": self.malformed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @property
    def exit_code(self) -> int:
        return 2 if self.counterexamples else 0


class StrictScanError(RuntimeError):
    """A malformed input line under strict mode."""


def scan_lines(lines, config: ScanConfig, source: str = "<stream>", workers: int = 1,
               strict: bool = False, verbose: bool = False) -> ScanReport:
    """Scan (lineno, graph6-text) pairs into a report.

    ``workers`` <= 1 runs serially; larger counts use a process pool with an
    ordered merge, so the report is identical either way.  Failing records
    are always included; passing ones only under ``verbose``.
    """
    items = list(lines)
    task = partial(_line_task, config)
    if workers <= 1:
        results = map(task, items)
        pool = None
    else:
        pool = Pool(processes=workers)
        results = pool.imap(task, items, chunksize=16)

    malformed: list[dict] = []
    records: list[dict] = []
    counterexamples: list[dict] = []
    check_totals = {
        tok: {"applicable": 0, "held": 0, "failed": 0, "not_evaluable": 0, "vacuous": 0}
        for tok in config.checks
    }
    qualifying = 0
    violations = 0
    try:
        for result in results:
            kind = result[0]
            if kind == "malformed":
                malformed.append(result[1])
                if strict:
                    raise StrictScanError(
                        f"line {result[1]['line']}: {result[1]['error']}"
                    )
                continue
            if kind == "filtered":
                continue
            record, counters = result[1], result[2]
            qualifying += 1
            violations += len(record.violations)
            for tok, summary in record.checks.items():
                agg = check_totals[tok]
                for key in agg:
                    agg[key] += summary[key]
            counterexamples.extend(counters)
            if record.violations or verbose:
                records.append(record.to_dict())
    except BaseException:
        if pool is not None:
            pool.terminate()
            pool.join()
            pool = None
        raise
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    if qualifying == 0:
        outcome = "no qualifying graphs"
    elif counterexamples:
        outcome = "counterexamples found"
    else:
        outcome = "all checks passed"
    totals = {
        "lines": len(items),
        "malformed": len(malformed),
        "scanned": len(items) - len(malformed),
        "qualifying": qualifying,
        "violations": violations,
    }
    return ScanReport(
        t=fraction_str(config.t),
        source=source,
        filters=list(config.filters),
        checks=list(config.checks),
        exhaustive=config.exhaustive,
        verbose=verbose,
        totals=totals,
        check_totals=check_totals,
        outcome=outcome,
        records=records,
        counterexamples=counterexamples,
        malformed=malformed,
    )


def revalidate_counterexample(entry: dict) -> bool:
    """Re-check a counterexample artifact from its own serialized evidence.

    Parses the recorded graph6, reruns the named check, and confirms the
    same failure evidence reappears.  Exhaustive-mode clause evidence is
    revalidated in exhaustive mode (the witness records merged certificates).
    """
    g = parse_graph6(entry["graph6"])
    t = as_fraction(entry["t"])
    token = entry["check"]
    evidence = entry["evidence"]
    config = ScanConfig(
        t=t, checks=(token,), exhaustive=bool(entry.get("exhaustive", False))
    )
    _, counters = analyze_graph(g, entry["graph6"], config)
    return any(
        c["check"] == token and c["evidence"] == evidence for c in counters
    )
