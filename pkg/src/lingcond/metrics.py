"""Evaluation metrics: adjusted Rand index, edge F1 scores, support Hamming."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graphs import Condensation, DirectedGraph, Partition, quotient, support_graph


def ari(pred: Partition, truth: Partition) -> float:
    """Hubert-Arabie adjusted Rand index between two partitions.

    Computed with exact integer arithmetic and a single final division, so
    the result is the correctly rounded value of the underlying rational.
    Degenerate comparisons (denominator zero, e.g. both partitions trivial)
    score 1.0 by convention.
    """
    if pred.d != truth.d:
        raise ValueError("partitions are over different node counts")
    n = pred.d
    joint = Counter(zip(truth.labels, pred.labels))
    rows = Counter(truth.labels)
    cols = Counter(pred.labels)
    sum_joint = sum(c * (c - 1) // 2 for c in joint.values())
    sum_rows = sum(c * (c - 1) // 2 for c in rows.values())
    sum_cols = sum(c * (c - 1) // 2 for c in cols.values())
    total = n * (n - 1) // 2
    num = 2 * (total * sum_joint - sum_rows * sum_cols)
    den = total * (sum_rows + sum_cols) - 2 * sum_rows * sum_cols
    if den == 0:
        return 1.0
    return num / den


def edge_f1(pred_edges, true_edges) -> float:
    """Micro-averaged F1 over directed edges; 1.0 when both sets are empty."""
    pred = set(pred_edges)
    true = set(true_edges)
    tp = len(pred & true)
    fp = len(pred - true)
    fn = len(true - pred)
    if tp == fp == fn == 0:
        return 1.0
    return 2 * tp / (2 * tp + fp + fn)


def cluster_dag_f1(
    pred_support: DirectedGraph,
    true_partition: Partition,
    true_condensation: Condensation,
) -> float:
    """F1 of predicted edges projected onto the true SCC partition.

    The projection is the quotient by the *true* partition (intra-cluster
    edges drop out), scored against the true condensation's cluster edges.
    """
    if pred_support.d != true_partition.d:
        raise ValueError("prediction and partition disagree on node count")
    if true_partition.num_clusters != true_condensation.partition.num_clusters:
        raise ValueError("partition and condensation disagree on cluster count")
    projected = quotient(pred_support, true_partition)
    return edge_f1(projected.edges, true_condensation.cluster_edges)


def hamming_support(b_hat, b_true) -> int:
    """Number of off-diagonal positions where exactly one support has an entry."""
    a = np.asarray(getattr(b_hat, "matrix", b_hat))
    b = np.asarray(getattr(b_true, "matrix", b_true))
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("supports must be square matrices of equal dimension")
    diff = (a != 0) ^ (b != 0)
    np.fill_diagonal(diff, False)
    return int(diff.sum())


@dataclass(frozen=True)
class MetricsReport:
    """One evaluation row: partition, edge and support agreement scores."""

    ari: float
    cluster_dag_f1: float
    variable_f1: float
    hamming_support: int
    predicted_partition_size: int

    def __post_init__(self):
        if not (self.ari <= 1.0 + 1e-12):
            raise ValueError("ari cannot exceed 1")
        for name in ("cluster_dag_f1", "variable_f1"):
            val = getattr(self, name)
            if not (0.0 <= val <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.hamming_support < 0:
            raise ValueError("hamming_support must be non-negative")


def evaluate(
    pred_support: DirectedGraph,
    pred_partition: Partition,
    true_b,
    true_partition: Partition,
    true_condensation: Condensation,
) -> MetricsReport:
    """Score a recovered structure against the generating ground truth."""
    if hasattr(true_b, "support"):
        true_graph = true_b.support()
    else:
        true_graph = support_graph(true_b)
    if true_graph.d != pred_support.d:
        raise ValueError("prediction and truth disagree on node count")
    return MetricsReport(
        ari=ari(pred_partition, true_partition),
        cluster_dag_f1=cluster_dag_f1(pred_support, true_partition, true_condensation),
        variable_f1=edge_f1(pred_support.edges, true_graph.edges),
        # edge sets are exactly the off-diagonal supports, so the symmetric
        # difference is the support Hamming distance
        hamming_support=len(pred_support.edges ^ true_graph.edges),
        predicted_partition_size=pred_partition.num_clusters,
    )
