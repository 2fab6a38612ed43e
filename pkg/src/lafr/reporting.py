"""Analysis reports: assembly and JSON serialization.

A report bundles the graph identity, the per-pair revival decisions with
their oracle verification residuals, and per-vertex periodicity.  Reports
are plain dictionaries of JSON-native values, so serialization round-trips
exactly.
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import pi

from . import __version__, oracle
from .graphs import Graph, to_graph6
from .revival import (
    RevivalDecision,
    RevivalStatus,
    all_lafr_pairs,
    amplitudes_at,
    decide_proper_lafr,
)
from .spectral import is_periodic


def _time_dict(num_den: tuple[int, int] | None) -> dict | None:
    if num_den is None:
        return None
    return {"num": num_den[0], "den": num_den[1], "unit": "pi"}


def _complex_dict(z: complex | None) -> dict | None:
    if z is None:
        return None
    return {"re": z.real, "im": z.imag}


def _decision_dict(g: Graph, d: RevivalDecision, tol: float) -> dict:
    alpha = beta = None
    residual = None
    verified = None
    if d.status is RevivalStatus.PROPER:
        amp = amplitudes_at(d.phase)
        alpha, beta = amp.alpha, amp.beta
        tau = pi * d.earliest_time[0] / d.earliest_time[1]
        residual = oracle.revival_residual(g, d.pair[0], d.pair[1], tau, alpha, beta)
        verified = residual <= tol
    return {
        "pair": list(d.pair),
        "status": d.status.value,
        "g": d.g,
        "time": _time_dict(d.earliest_time),
        "phase": {"k": d.phase.k, "g": d.phase.g} if d.phase else None,
        "alpha": _complex_dict(alpha),
        "beta": _complex_dict(beta),
        "is_pst": d.is_pst,
        "oracle_residual": residual,
        "oracle_verified": verified,
    }


def _periodicity_entry(g: Graph, v: int) -> dict:
    per = is_periodic(g, v)
    period = None
    if per.periodic and per.big_g is not None:
        f = Fraction(2, per.big_g)
        period = (f.numerator, f.denominator)
    return {
        "vertex": v,
        "periodic": per.periodic,
        "G": per.big_g,
        "period": _time_dict(period),
    }


def build_analysis_report(
    g: Graph,
    pairs: list[tuple[int, int]] | None = None,
    tol: float = 1e-9,
) -> dict:
    """Full analysis of one graph.

    Without explicit ``pairs`` the decisions cover every pair that is
    proper or strongly cospectral; with ``pairs`` the listed pairs are
    decided regardless of outcome.
    """
    start = time.perf_counter()
    decisions: list[dict] = []
    note = None
    if g.n == 2:
        # the characterization needs three vertices; report the closed form
        note = (
            "two-vertex graph: periodic at integer multiples of pi, perfect "
            "state transfer at odd multiples of pi/2, proper revival at all "
            "other times"
            if g.num_edges == 1
            else "edgeless graph: stationary walk"
        )
    elif pairs is not None:
        for a, b in pairs:
            decisions.append(_decision_dict(g, decide_proper_lafr(g, a, b), tol))
    elif g.n >= 3:
        decisions = [_decision_dict(g, d, tol) for d in all_lafr_pairs(g)]
    decisions.sort(key=lambda d: d["pair"])
    report = {
        "graph": {"graph6": to_graph6(g), "n": g.n, "edges": g.num_edges},
        "decisions": decisions,
        "periodicity": [_periodicity_entry(g, v) for v in range(g.n)],
        "runtime_seconds": time.perf_counter() - start,
        "version": __version__,
    }
    if note:
        report["note"] = note
    return report


def format_time(entry: dict | None) -> str:
    if entry is None:
        return "-"
    value = entry["num"] / entry["den"] * pi
    return f"{entry['num']}/{entry['den']} pi ({value:.12f})"


def format_report(report: dict) -> str:
    """Human-readable rendering; times printed exactly and to 12 digits."""
    lines = []
    gr = report["graph"]
    lines.append(f"graph {gr['graph6']}  n={gr['n']}  edges={gr['edges']}")
    if "note" in report:
        lines.append(f"note: {report['note']}")
    if report["decisions"]:
        lines.append("pairs:")
        for d in report["decisions"]:
            a, b = d["pair"]
            line = f"  ({a},{b}) {d['status']}"
            if d["status"] == "PROPER":
                line += (
                    f"  g={d['g']}  time={format_time(d['time'])}"
                    f"  phase={d['phase']['k']}/{d['phase']['g']}"
                    f"  |alpha|^2={abs(complex(d['alpha']['re'], d['alpha']['im'])) ** 2:.12f}"
                    f"  pst={d['is_pst']}"
                    f"  residual={d['oracle_residual']:.3e}"
                )
            elif d["status"] == "PERIODIC_ONLY":
                line += f"  g={d['g']}"
            lines.append(line)
    else:
        lines.append("pairs: none")
    lines.append("periodicity:")
    for p in report["periodicity"]:
        if p["periodic"] and p["G"] is not None:
            lines.append(
                f"  vertex {p['vertex']}: periodic, G={p['G']}, "
                f"period={format_time(p['period'])}"
            )
        elif p["periodic"]:
            lines.append(f"  vertex {p['vertex']}: periodic at all times (isolated)")
        else:
            lines.append(f"  vertex {p['vertex']}: not periodic")
    return "\n".join(lines)


def campaign_report(result) -> dict:
    return {
        "campaign": result.name,
        "corpus_size": result.corpus_size,
        "counterexamples": result.counterexamples,
        "passed": result.passed,
        "wall_time_seconds": result.wall_time_s,
        "details": result.details,
        "version": __version__,
    }
