"""Condensation recovery: admissible permutations, candidates, thresholding.

The pipeline estimates a demixing matrix by FastICA, picks one or more row
permutations with above-tolerance diagonals, maps each to a candidate
adjacency ``B = I - diag(PW)^{-1} PW``, hard-thresholds, and reads the SCC
partition and inter-cluster edges off the surviving support. Two selection
modes are offered: a single Hungarian-optimal permutation (the default), or
lazy lexicographic enumeration with the first-stable filter for experiments
that also score variable-level structure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .exceptions import NoAdmissiblePermutationError
from .graphs import Condensation, DirectedGraph, Partition, condense, support_graph, tarjan_scc
from .ica import IcaOptions, fastica
from .scm import spectral_radius

MODES = ("hungarian", "enumerate-first-stable")

ENUMERATION_MAX_D = 12
PROHIBITIVE_COST = 1e12

# enumerate-first-stable pipeline defaults: a diagonal entry only counts as a
# rook slot when it is significant relative to its row, and the scan is capped
DEFAULT_ENUM_FLOOR = 0.1
DEFAULT_ENUM_CAP = 20000


@dataclass(frozen=True)
class CandidateAdjacency:
    """One candidate B produced from a row permutation of the demixing matrix."""

    b: np.ndarray
    permutation: tuple
    spectral_radius: float

    def support(self) -> DirectedGraph:
        return support_graph(self.b)


def _as_square(w) -> np.ndarray:
    m = np.asarray(getattr(w, "w", w), dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square demixing matrix")
    return m


def hungarian_admissible(w, eta: float = 1e-3) -> tuple:
    """Permutation maximizing sum_i log|(PW)_ii| over admissible assignments.

    Solved as a min-cost assignment with cost -log|W[r, i]| for placing row
    r at slot i; entries with magnitude <= eta get a prohibitive cost.
    Returns ``perm`` with ``perm[i]`` the source row for slot i, so
    ``PW = W[perm, :]``. Raises NoAdmissiblePermutationError when every
    perfect matching uses a below-tolerance entry.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    m = _as_square(w)
    mags = np.abs(m.T)  # cost[i, r] scores row r at slot i
    cost = np.where(mags > eta, -np.log(np.maximum(mags, 1e-300)), PROHIBITIVE_COST)
    slots, rows = linear_sum_assignment(cost)
    perm = [0] * m.shape[0]
    for i, r in zip(slots, rows):
        if mags[i, r] <= eta:
            raise NoAdmissiblePermutationError(
                f"no permutation keeps all diagonal magnitudes above eta={eta}"
            )
        perm[i] = int(r)
    return tuple(perm)


def _iter_admissible(m: np.ndarray, ok: np.ndarray):
    """Yield admissible permutations in lexicographic order of the perm tuple.

    ``ok[r, i]`` marks row r as usable at slot i. DFS over slots choosing the
    smallest unused row first gives lexicographic order without materializing
    the d! search space.
    """
    d = m.shape[0]
    used = [False] * d
    perm = [0] * d

    def rec(slot):
        if slot == d:
            yield tuple(perm)
            return
        for r in range(d):
            if not used[r] and ok[r, slot]:
                used[r] = True
                perm[slot] = r
                yield from rec(slot + 1)
                used[r] = False

    yield from rec(0)


def enumerate_admissible(w, eta: float = 1e-3) -> list:
    """All permutations with every |(PW)_ii| > eta, in lexicographic order.

    Guarded at d <= 12: the admissible count is a permanent and can reach d!.
    """
    if eta <= 0:
        raise ValueError("eta must be positive")
    m = _as_square(w)
    if m.shape[0] > ENUMERATION_MAX_D:
        raise ValueError(
            f"enumeration is guarded at d <= {ENUMERATION_MAX_D}, got d={m.shape[0]}"
        )
    ok = np.abs(m) > eta
    return list(_iter_admissible(m, ok))


def b_from_w(w, perm) -> CandidateAdjacency:
    """Candidate adjacency ``I - diag(PW)^{-1} PW`` with exact-zero diagonal."""
    m = _as_square(w)
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(m.shape[0])):
        raise ValueError("perm must be a permutation of 0..d-1")
    pw = m[perm, :]
    diag = np.diag(pw).copy()
    if np.any(diag == 0):
        raise ValueError("permuted matrix has a zero diagonal entry")
    b = -pw / diag[:, None]
    np.fill_diagonal(b, 0.0)
    b.setflags(write=False)
    return CandidateAdjacency(
        b=b, permutation=perm, spectral_radius=spectral_radius(b)
    )


def threshold(candidate: CandidateAdjacency, tau: float) -> CandidateAdjacency:
    """Hard-threshold: zero entries with |b_ij| < tau (strict, so ties survive).

    The spectral radius is recomputed from the surviving entries.
    """
    if tau < 0:
        raise ValueError("tau must be non-negative")
    b = np.where(np.abs(candidate.b) < tau, 0.0, candidate.b)
    b.setflags(write=False)
    return CandidateAdjacency(
        b=b, permutation=candidate.permutation, spectral_radius=spectral_radius(b)
    )


def first_stable_select(candidates) -> CandidateAdjacency:
    """First candidate with spectral radius < 1; else the minimum-radius one.

    Ties in the fallback resolve to the earliest candidate, so selection is
    deterministic for any fixed enumeration order.
    """
    candidates = list(candidates)
    if not candidates:
        raise ValueError("candidate list is empty")
    best = None
    for cand in candidates:
        if cand.spectral_radius < 1.0:
            return cand
        if best is None or cand.spectral_radius < best.spectral_radius:
            best = cand
    return best


def _first_stable_scan(
    m: np.ndarray, eta: float, floor: float, cap: int
) -> CandidateAdjacency:
    """Lazy first-stable search over significance-pruned rook patterns.

    On finite samples every entry of the estimated demixing matrix is
    nonzero, so admissibility at eta alone would admit all d! permutations.
    A rook slot (r, i) is therefore only considered when |W[r, i]| is also
    at least ``floor`` times the largest magnitude in row r; candidates are
    still built from the unpruned matrix. The scan stops at the first stable
    candidate, tracks the minimum-radius one as fallback, and gives up on
    the fallback after ``cap`` candidates (order is lexicographic, so the
    result is deterministic).
    """
    scale = np.max(np.abs(m), axis=1)
    ok = np.abs(m) > np.maximum(eta, floor * scale[:, None])
    best = None
    count = 0
    for perm in _iter_admissible(m, ok):
        cand = b_from_w(m, perm)
        if cand.spectral_radius < 1.0:
            return cand
        if best is None or cand.spectral_radius < best.spectral_radius:
            best = cand
        count += 1
        if count >= cap:
            break
    if best is None:
        raise NoAdmissiblePermutationError(
            "no admissible permutation among significant rook patterns"
        )
    return best


@dataclass(frozen=True)
class RecoveryResult:
    """Output of the full pipeline: thresholded candidate plus its condensation."""

    b_hat: CandidateAdjacency
    partition: Partition
    condensation: Condensation
    tau: float
    eta: float
    timings_ms: dict
    ica_iterations: int
    mode: str

    def support(self) -> DirectedGraph:
        return self.b_hat.support()

    def to_json_dict(self) -> dict:
        return {
            "partition": list(self.partition.labels),
            "clusterEdges": [list(e) for e in sorted(self.condensation.cluster_edges)],
            "bHat": [[float(x) for x in row] for row in self.b_hat.b],
            "tau": self.tau,
            "eta": self.eta,
            "timings": {k: float(v) for k, v in self.timings_ms.items()},
            "icaIterations": self.ica_iterations,
            "mode": self.mode,
        }


def recover_condensation(
    x,
    tau: float = 0.1,
    eta: float = 1e-3,
    ica_opts: IcaOptions | None = None,
    mode: str = "hungarian",
    enum_floor: float = DEFAULT_ENUM_FLOOR,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> RecoveryResult:
    """Run the full pipeline on a sample matrix.

    FastICA -> permutation selection (per ``mode``) -> candidate adjacency ->
    hard threshold at ``tau`` -> SCC partition and inter-cluster edges of the
    surviving support. Per-stage wall times are recorded in milliseconds.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    opts = ica_opts if ica_opts is not None else IcaOptions()

    t0 = time.perf_counter()
    estimate = fastica(x, opts)
    t1 = time.perf_counter()
    if mode == "hungarian":
        perm = hungarian_admissible(estimate.w, eta)
        candidate = b_from_w(estimate.w, perm)
    else:
        candidate = _first_stable_scan(estimate.w, eta, enum_floor, enum_cap)
    b_hat = threshold(candidate, tau)
    t2 = time.perf_counter()
    support = b_hat.support()
    partition = tarjan_scc(support)
    condensation = condense(support)
    t3 = time.perf_counter()

    return RecoveryResult(
        b_hat=b_hat,
        partition=partition,
        condensation=condensation,
        tau=tau,
        eta=eta,
        timings_ms={
            "ica_ms": (t1 - t0) * 1e3,
            "assign_ms": (t2 - t1) * 1e3,
            "tarjan_ms": (t3 - t2) * 1e3,
            "total_ms": (t3 - t0) * 1e3,
        },
        ica_iterations=estimate.iterations,
        mode=mode,
    )
