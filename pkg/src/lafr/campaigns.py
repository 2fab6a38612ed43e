"""Exhaustive verification campaigns over graph corpora.

Three corpora drive the campaigns: unlabeled free trees, all labeled
graphs on a fixed small vertex count (adjacency bitmasks, no isomorphism
reduction), and a fixed battery of constructions.  The prime-order
campaign screens the 2^21 bitmask space with a conservative floating-point
filter and confirms every surviving graph with the exact pipeline, so the
final verdict never rests on floating point.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, pi
from random import Random

import numpy as np

from . import oracle
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    double_cone,
    empty_graph,
    hadamard_graph,
    is_double_cone,
    join,
    path_graph,
    sylvester_hadamard,
    to_graph6,
)
from .revival import (
    RevivalStatus,
    all_lafr_pairs,
    amplitudes_at,
    check_cartesian_product_rule,
    check_complement_transfer,
    check_join_extension,
    check_join_timing,
    check_polygamy_conditions,
    decide_proper_lafr,
    hadamard_partition_check,
    proper_time_valid,
)
from .spectral import strong_cospectral
from .trees import MAX_TREE_N, free_trees

_SCREEN_INT_TOL = 1e-6
_SCREEN_WEIGHT_TOL = 1e-8
_CHUNK_BITS = 15


@dataclass
class CampaignResult:
    name: str
    corpus_size: int
    counterexamples: list[str]
    wall_time_s: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


# ---------------------------------------------------------------------------
# labeled bitmask corpus


def pair_table(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in lexicographic order; bit b of a mask is pair b."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def mask_to_graph(n: int, mask: int) -> Graph:
    pairs = pair_table(n)
    return Graph.from_edges(
        n, (pairs[b] for b in range(len(pairs)) if (mask >> b) & 1)
    )


def graph_to_mask(g: Graph) -> int:
    mask = 0
    for b, pair in enumerate(pair_table(g.n)):
        if pair in g.edges:
            mask |= 1 << b
    return mask


def all_graph_masks(n: int):
    return range(1 << (n * (n - 1) // 2))


def _masks_to_adjacency(n: int, masks: np.ndarray) -> np.ndarray:
    nbits = n * (n - 1) // 2
    bits = ((masks[:, None] >> np.arange(nbits)) & 1).astype(np.float64)
    adj = np.zeros((len(masks), n, n))
    for b, (i, j) in enumerate(pair_table(n)):
        adj[:, i, j] = bits[:, b]
        adj[:, j, i] = bits[:, b]
    return adj


def _connected_flags(adj: np.ndarray) -> np.ndarray:
    """Boolean connectivity per batched adjacency matrix."""
    n = adj.shape[1]
    reach = np.minimum(adj + np.eye(n), 1.0)
    steps = max(1, int(np.ceil(np.log2(max(2, n - 1)))))
    for _ in range(steps):
        reach = np.minimum(reach @ reach, 1.0)
    return (reach[:, 0, :] > 0).all(axis=1)


# ---------------------------------------------------------------------------
# tree campaign


def campaign_trees(n_max: int = 10) -> CampaignResult:
    """All free trees up to n_max: revival occurs only on the 2- and 3-paths.

    A counterexample is a tree on four or more vertices with a proper
    revival pair; the expected list is empty.
    """
    if not 2 <= n_max <= MAX_TREE_N:
        raise ValueError(f"tree campaign supports 2 <= n_max <= {MAX_TREE_N}")
    start = time.perf_counter()
    counterexamples = []
    counts = {}
    graphs_with_proper = []
    for n in range(2, n_max + 1):
        trees = free_trees(n)
        counts[n] = len(trees)
        for t in trees:
            if n == 2:
                # single edge: proper revival away from the quarter-period grid
                graphs_with_proper.append(to_graph6(t))
                continue
            proper = [
                d for d in all_lafr_pairs(t) if d.status is RevivalStatus.PROPER
            ]
            if proper:
                graphs_with_proper.append(to_graph6(t))
                if n >= 4:
                    counterexamples.append(to_graph6(t))
    return CampaignResult(
        name="trees",
        corpus_size=sum(counts.values()),
        counterexamples=counterexamples,
        wall_time_s=time.perf_counter() - start,
        details={
            "counts_per_n": counts,
            "graphs_with_proper_pairs": graphs_with_proper,
            "two_vertex_schedule": (
                "single edge: periodic at multiples of pi, perfect state "
                "transfer at odd multiples of pi/2, proper revival elsewhere"
            ),
        },
    )


# ---------------------------------------------------------------------------
# prime-order campaign


def _screen_chunk(p: int, lo: int, hi: int) -> tuple[int, list[int]]:
    """Connected-count and shortlist of candidate masks in [lo, hi).

    The screen keeps every graph that could possibly have a strongly
    cospectral pair with all-integer supports and a revival phase; its
    tolerances leave six orders of magnitude of margin over eigensolver
    error, so no true revival graph is ever dropped.
    """
    masks = np.arange(lo, hi, dtype=np.int64)
    adj = _masks_to_adjacency(p, masks)
    connected = _connected_flags(adj)
    masks = masks[connected]
    adj = adj[connected]
    n_connected = len(masks)
    if n_connected == 0:
        return 0, []

    degs = adj.sum(axis=2)
    lap = -adj + degs[:, :, None] * np.eye(p)
    evals, vecs = np.linalg.eigh(lap)

    # integer-binned diagonal idempotent weights: S[b, v, t] for t in 0..p
    near = np.rint(evals)
    integral = (np.abs(evals - near) < _SCREEN_INT_TOL) & (near >= 0) & (near <= p)
    w = vecs**2  # w[b, v, c] = weight of eigenvector c at vertex v
    bins = np.where(integral, near, -1).astype(np.int64)
    s = np.zeros((len(masks), p, p + 1))
    for t in range(p + 1):
        sel = (bins == t).astype(np.float64)
        s[:, :, t] = np.einsum("bvc,bc->bv", w, sel)
    w_irr = np.einsum("bvc,bc->bv", w, (~integral).astype(np.float64))

    candidates = np.zeros(len(masks), dtype=bool)
    pair_masks = []
    for a in range(p):
        for b in range(a + 1, p):
            ok = (
                (np.abs(s[:, a, :] - s[:, b, :]).max(axis=1) < _SCREEN_INT_TOL)
                & (w_irr[:, a] < _SCREEN_WEIGHT_TOL)
                & (w_irr[:, b] < _SCREEN_WEIGHT_TOL)
                & (np.abs(degs[:, a] - degs[:, b]) < 0.5)
            )
            pair_masks.append(ok)
            candidates |= ok

    shortlist = []
    for idx in np.flatnonzero(candidates):
        ev = evals[idx]
        v = vecs[idx]
        clusters = oracle.cluster_eigenvalues(ev)
        for pair_no, (a, b) in enumerate(pair_table(p)):
            if not pair_masks[pair_no][idx]:
                continue
            if _pair_screen(ev, v, clusters, a, b):
                shortlist.append(int(masks[idx]))
                break
    return n_connected, shortlist


def _pair_screen(ev, v, clusters, a: int, b: int) -> bool:
    """Numeric strong-cospectrality and nonzero-phase probe for one pair."""
    plus_vals, minus_vals = [], []
    for cluster in clusters:
        block = v[:, cluster]
        col_a = block @ block[a]
        col_b = block @ block[b]
        weight = float(block[a] @ block[a] + block[b] @ block[b])
        if weight < _SCREEN_WEIGHT_TOL:
            continue
        val = int(round(float(np.mean(ev[cluster]))))
        if np.abs(col_a - col_b).max() < _SCREEN_INT_TOL:
            plus_vals.append(val)
        elif np.abs(col_a + col_b).max() < _SCREEN_INT_TOL:
            minus_vals.append(val)
        else:
            return False
    if not minus_vals or len(plus_vals) < 2:
        return False
    g = 0
    for cls in (sorted(plus_vals), sorted(minus_vals)):
        for x in cls[1:]:
            g = gcd(g, x - cls[0])
    if g == 0:
        return False
    return any(m % g != 0 for m in minus_vals)


def _confirm_masks(p: int, masks: list[int]) -> tuple[list[int], list[str]]:
    """Exact confirmation: positives (proper revival) and counterexamples
    (proper revival on a non-double-cone)."""
    positives = []
    counterexamples = []
    for mask in masks:
        g = mask_to_graph(p, mask)
        cone_pair = is_double_cone(g)
        if cone_pair is not None:
            decision = decide_proper_lafr(g, *cone_pair)
            if decision.status is RevivalStatus.PROPER:
                positives.append(mask)
                continue
        proper = [
            d for d in all_lafr_pairs(g) if d.status is RevivalStatus.PROPER
        ]
        if proper:
            positives.append(mask)
            if cone_pair is None:
                counterexamples.append(to_graph6(g))
    return positives, counterexamples


def _prime_chunk_job(args) -> tuple[int, list[int], list[str]]:
    p, lo, hi = args
    n_connected, shortlist = _screen_chunk(p, lo, hi)
    positives, counterexamples = _confirm_masks(p, shortlist)
    return n_connected, positives, counterexamples


def campaign_prime_order(p: int, workers: int = 1) -> CampaignResult:
    """Every connected labeled graph on a prime vertex count: any graph
    admitting proper revival must be a double cone.

    Labeled bitmasks are enumerated without isomorphism reduction; a
    conservative numeric screen shortlists candidates and the exact
    pipeline issues every verdict.
    """
    if p not in (5, 7):
        raise ValueError("prime-order campaign supports p in {5, 7}")
    start = time.perf_counter()
    total_masks = 1 << (p * (p - 1) // 2)
    chunk = 1 << _CHUNK_BITS
    jobs = [(p, lo, min(lo + chunk, total_masks)) for lo in range(0, total_masks, chunk)]

    n_connected = 0
    positives: list[int] = []
    counterexamples: list[str] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_prime_chunk_job, jobs, chunksize=1))
    else:
        results = [_prime_chunk_job(job) for job in jobs]
    for nc, pos, cex in results:
        n_connected += nc
        positives.extend(pos)
        counterexamples.extend(cex)
    positives.sort()
    counterexamples.sort()
    return CampaignResult(
        name=f"prime{p}",
        corpus_size=total_masks,
        counterexamples=counterexamples,
        wall_time_s=time.perf_counter() - start,
        details={
            "connected_graphs": n_connected,
            "positives": len(positives),
            "positive_masks_sample": positives[:16],
        },
    )


# ---------------------------------------------------------------------------
# construction battery


def _battery_double_cones(failures: list[str]) -> int:
    checked = 0
    for k in range(1, 6):
        for mask in all_graph_masks(k):
            y = mask_to_graph(k, mask)
            g = double_cone(y)
            n = g.n
            d = decide_proper_lafr(g, 0, 1)
            amp = amplitudes_at(d.phase) if d.status is RevivalStatus.PROPER else None
            ok = (
                d.status is RevivalStatus.PROPER
                and d.g == n
                and Fraction(*d.earliest_time) == Fraction(2, n)
                and d.is_pst == (n == 4)
                and oracle.revival_residual(
                    g, 0, 1, 2 * pi / n, amp.alpha, amp.beta
                )
                <= 1e-9
            )
            checked += 1
            if not ok:
                failures.append(f"double-cone {to_graph6(g)}")
    return checked


def _battery_joins(failures: list[str], rng: Random) -> int:
    checked = 0
    while checked < 20:
        nx_ = rng.randint(1, 5)
        ny_ = rng.randint(1, 5)
        if nx_ + ny_ > 10 or nx_ + ny_ < 3:
            continue
        x = mask_to_graph(nx_, rng.randrange(1 << (nx_ * (nx_ - 1) // 2)))
        y = mask_to_graph(ny_, rng.randrange(1 << (ny_ * (ny_ - 1) // 2)))
        z = join(x, y)
        if not check_join_timing(z):
            failures.append(f"join-timing {to_graph6(z)}")
        checked += 1
    return checked


def campaign_constructions() -> CampaignResult:
    """Fixed battery over the construction families.

    Covers double cones over every graph on at most five vertices, the
    box-product criterion, the complement identity, join timing on random
    joins, join extensions, the threshold instance, Hadamard-graph
    partitions, and the polygamy arithmetic.
    """
    start = time.perf_counter()
    failures: list[str] = []
    details: dict = {}

    details["double_cones_checked"] = _battery_double_cones(failures)

    cartesian_cases = [
        ("K3,P3,2/3", complete_graph(3), path_graph(3), 2, 3),
        ("K2,P3,2/3", path_graph(2), path_graph(3), 2, 3),
        ("K1,P3,2/3", empty_graph(1), path_graph(3), 2, 3),
    ]
    for label, x, y, num, den in cartesian_cases:
        if not check_cartesian_product_rule(x, y, num, den):
            failures.append(f"cartesian {label}")
    details["cartesian_cases"] = len(cartesian_cases)

    complement_cases = [
        ("C4,1/2", cycle_graph(4), 1, 2),
        ("P3+K1,1/2", disjoint_union(path_graph(3), empty_graph(1)), 1, 2),
        ("P4,2/1", path_graph(4), 2, 1),
    ]
    for label, x, num, den in complement_cases:
        if not check_complement_transfer(x, num, den):
            failures.append(f"complement {label}")
    details["complement_cases"] = len(complement_cases)

    details["joins_checked"] = _battery_joins(failures, Random(20260810))

    extension_cases = [
        ("C4+K4", cycle_graph(4), (0, 2), complete_graph(4), Fraction(1, 2)),
        (
            "DC(K4)+C6",
            double_cone(complete_graph(4)),
            (0, 1),
            cycle_graph(6),
            Fraction(1, 3),
        ),
        ("P3+K3", path_graph(3), (0, 2), complete_graph(3), Fraction(2, 3)),
    ]
    for label, x, pair, y, t in extension_cases:
        d = check_join_extension(x, pair, y)
        if d.status is not RevivalStatus.PROPER or not proper_time_valid(
            d, t.numerator, t.denominator
        ):
            failures.append(f"join-extension {label}")
    details["extension_cases"] = len(extension_cases)

    # threshold instance: initial edgeless pair joined to a 4-clique
    thr = double_cone(complete_graph(4))
    d = decide_proper_lafr(thr, 0, 1)
    tau = Fraction(*d.earliest_time) if d.earliest_time else None
    threshold_ok = (
        d.status is RevivalStatus.PROPER
        and tau == Fraction(1, 3)
        and tau.denominator not in (1, 2)  # not an integer multiple of pi/2
        and Fraction(6) * tau % 2 == 0  # (m1 + m2) * tau lands on the 2*pi grid
    )
    if not threshold_ok:
        failures.append("threshold 2,4")
    details["threshold_ok"] = threshold_ok

    for side in (2, 4):
        h = hadamard_graph(sylvester_hadamard(side))
        part = strong_cospectral(h, 0, side * side)
        if not hadamard_partition_check(side, part):
            failures.append(f"hadamard n={side} partition")
        d = decide_proper_lafr(h, 0, side * side)
        # class gcd 2n gives perfect state transfer at pi/n between antipodes
        if not (
            d.status is RevivalStatus.PROPER
            and d.is_pst
            and Fraction(*d.earliest_time) == Fraction(1, side)
        ):
            failures.append(f"hadamard n={side} revival")
    details["hadamard_sides"] = [2, 4]

    for q in (1, 3, 5):
        if not check_polygamy_conditions(12 * q, 12, 6 * q, 4).ok:
            failures.append(f"polygamy q={q}")
    details["polygamy_q"] = [1, 3, 5]

    return CampaignResult(
        name="constructions",
        corpus_size=details["double_cones_checked"]
        + details["joins_checked"]
        + len(cartesian_cases)
        + len(complement_cases)
        + len(extension_cases)
        + 2
        + 3
        + 1,
        counterexamples=failures,
        wall_time_s=time.perf_counter() - start,
        details=details,
    )
