"""Ward minimum-variance hierarchical clustering in full factor space.

Points are the row, column and supplementary factor coordinates of a
fitted correspondence analysis, taken in every retained dimension and
equiweighted. Each agglomeration step merges the pair of clusters whose
fusion least increases the within-cluster inertia,

    delta = (m_a m_b / (m_a + m_b)) * ||c_a - c_b||^2,

and records that increase as the merge height. Between-cluster values
are maintained with the Lance-Williams recurrence for Ward, which
reproduces direct centroid recomputation exactly. Ties on the criterion
are broken toward the lexicographically least (smaller id, larger id)
pair; leaves are numbered 0..n-1 in input order and each merge creates
cluster id n, n+1, ...

A dendrogram can be cut into k clusters by undoing the last k-1 merges,
and exported as an indented text tree or in Newick form. Newick branch
lengths halve the merge heights so that the leaf-to-leaf path length
through a node equals the node's merge height.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .ca import CaResult


class TooFewPointsError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class PointSet:
    labels: tuple[str, ...]
    coords: np.ndarray
    masses: np.ndarray

    def __post_init__(self):
        coords = np.ascontiguousarray(self.coords, dtype=float)
        masses = np.ascontiguousarray(self.masses, dtype=float)
        if coords.ndim != 2 or coords.shape[0] != len(self.labels):
            raise ValueError("coords must be one row per label")
        if masses.shape != (len(self.labels),):
            raise ValueError("one mass per label required")
        if not np.isfinite(coords).all():
            raise ValueError("non-finite coordinates")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate point labels")
        if masses.size and not (masses == masses[0]).all():
            raise ValueError("points must be equiweighted")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self) -> int:
        return len(self.labels)


class Merge(NamedTuple):
    a: int
    b: int
    height: float
    new_id: int


@dataclass(frozen=True)
class Dendrogram:
    leaf_labels: tuple[str, ...]
    merges: tuple[Merge, ...]


@dataclass(frozen=True)
class Partition:
    k: int
    assignment: dict[str, int]


def embed_for_clustering(
    result: CaResult, supplementary: list[tuple[str, np.ndarray]] = ()
) -> PointSet:
    """One unit-mass point per fitted row, fitted column, and
    supplementary projection, in all retained dimensions."""
    d = result.n_axes
    labels = list(result.row_labels) + [str(c) for c in result.col_labels]
    blocks = [result.row_coords, result.col_coords]
    for label, coords in supplementary:
        coords = np.asarray(coords, dtype=float)
        if coords.shape != (d,):
            raise DimensionMismatchError(
                f"supplementary point {label!r} has {coords.shape} coordinates, "
                f"expected ({d},)"
            )
        labels.append(label)
        blocks.append(coords[None, :])
    coords = np.vstack(blocks) if blocks else np.zeros((0, d))
    return PointSet(tuple(labels), coords, np.ones(len(labels)))


def ward_hac(points: PointSet) -> Dendrogram:
    """Agglomerate all points into a dendrogram of n-1 recorded merges."""
    n = len(points)
    if n < 2:
        raise TooFewPointsError(f"need at least 2 points, got {n}")

    centroid = {i: points.coords[i] for i in range(n)}
    mass = {i: float(points.masses[i]) for i in range(n)}
    active = sorted(centroid)
    delta = {}
    for ai, a in enumerate(active):
        for b in active[ai + 1:]:
            delta[(a, b)] = _ward_increase(mass[a], mass[b], centroid[a], centroid[b])

    merges = []
    for step in range(n - 1):
        a, b = min(delta, key=lambda pair: (delta[pair], pair))
        height = delta[(a, b)]
        new_id = n + step
        m_new = mass[a] + mass[b]
        for k in active:
            if k in (a, b):
                continue
            d_ak = delta[_ordered(a, k)]
            d_bk = delta[_ordered(b, k)]
            delta[(k, new_id)] = (
                (mass[a] + mass[k]) * d_ak
                + (mass[b] + mass[k]) * d_bk
                - mass[k] * height
            ) / (m_new + mass[k])
            del delta[_ordered(a, k)], delta[_ordered(b, k)]
        del delta[(a, b)]
        centroid[new_id] = (mass[a] * centroid[a] + mass[b] * centroid[b]) / m_new
        mass[new_id] = m_new
        active = [i for i in active if i not in (a, b)] + [new_id]
        merges.append(Merge(a, b, float(height), new_id))
    return Dendrogram(points.labels, tuple(merges))


def _ward_increase(ma, mb, ca, cb) -> float:
    diff = ca - cb
    return ma * mb / (ma + mb) * float(diff @ diff)


def _ordered(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def cut(dendrogram: Dendrogram, k: int) -> Partition:
    """Partition into k clusters by undoing the last k-1 merges.

    Cluster indices run 1..k in order of first leaf appearance.
    """
    n = len(dendrogram.leaf_labels)
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    parent = {}
    for merge in dendrogram.merges[: n - k]:
        parent[merge.a] = merge.new_id
        parent[merge.b] = merge.new_id

    def root(i: int) -> int:
        while i in parent:
            i = parent[i]
        return i

    cluster_of_root: dict[int, int] = {}
    assignment = {}
    for i, label in enumerate(dendrogram.leaf_labels):
        r = root(i)
        if r not in cluster_of_root:
            cluster_of_root[r] = len(cluster_of_root) + 1
        assignment[label] = cluster_of_root[r]
    return Partition(k, assignment)


def export_dendrogram(dendrogram: Dendrogram, format: str = "newick") -> str:
    """Render the merge tree; ``format`` is "newick" or "text"."""
    if format == "newick":
        return _to_newick(dendrogram)
    if format == "text":
        return _to_text(dendrogram)
    raise ValueError(f"unknown dendrogram format {format!r}")


def _children(dendrogram: Dendrogram):
    n = len(dendrogram.leaf_labels)
    children = {}
    heights = {i: 0.0 for i in range(n)}
    for merge in dendrogram.merges:
        children[merge.new_id] = (merge.a, merge.b)
        heights[merge.new_id] = merge.height
    return children, heights


def _quote_newick(label: str) -> str:
    if any(ch in label for ch in " \t,():;'[]"):
        return "'" + label.replace("'", "''") + "'"
    return label


def _to_newick(dendrogram: Dendrogram) -> str:
    children, heights = _children(dendrogram)
    labels = dendrogram.leaf_labels

    def render(node: int) -> str:
        if node not in children:
            return _quote_newick(labels[node])
        a, b = children[node]
        parts = []
        for child in (a, b):
            length = (heights[node] - heights[child]) / 2.0
            parts.append(f"{render(child)}:{format(length, '.12g')}")
        return "(" + ",".join(parts) + ")"

    root = dendrogram.merges[-1].new_id if dendrogram.merges else 0
    return render(root) + ";"


def _to_text(dendrogram: Dendrogram) -> str:
    children, heights = _children(dendrogram)
    labels = dendrogram.leaf_labels
    lines = []

    def render(node: int, indent: int):
        pad = "  " * indent
        if node not in children:
            lines.append(f"{pad}{labels[node]}")
            return
        lines.append(f"{pad}+ height={format(heights[node], '.12g')}")
        a, b = children[node]
        render(a, indent + 1)
        render(b, indent + 1)

    root = dendrogram.merges[-1].new_id if dendrogram.merges else 0
    render(root, 0)
    return "\n".join(lines) + "\n"


def write_partition_csv(partition: Partition) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "cluster"])
    for label, cluster in partition.assignment.items():
        writer.writerow([label, cluster])
    return buf.getvalue()
