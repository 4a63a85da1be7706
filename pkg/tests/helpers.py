"""Shared test oracles, independent of the implementations they check."""
import numpy as np

from bibcarto.corpus import ContingencyTable


def random_table(rng, min_side=3, max_side=20) -> ContingencyTable:
    """Random integer table with no all-zero row or column."""
    i = int(rng.integers(min_side, max_side + 1))
    j = int(rng.integers(min_side, max_side + 1))
    counts = rng.integers(0, 40, size=(i, j))
    for r in np.flatnonzero(counts.sum(axis=1) == 0):
        counts[r, rng.integers(0, j)] += 1
    for c in np.flatnonzero(counts.sum(axis=0) == 0):
        counts[rng.integers(0, i), c] += 1
    rows = tuple(f"r{k}" for k in range(i))
    cols = tuple(range(2000, 2000 + j))
    return ContingencyTable(rows, cols, counts)


def chi_squared(counts: np.ndarray) -> float:
    """Pearson chi-squared statistic from first principles."""
    counts = np.asarray(counts, dtype=float)
    n = counts.sum()
    expected = np.outer(counts.sum(axis=1), counts.sum(axis=0)) / n
    return float(((counts - expected) ** 2 / expected).sum())


def assert_axis_equal_up_to_sign(a: np.ndarray, b: np.ndarray, tol=1e-9):
    """Column-wise equality allowing an independent sign per axis."""
    assert a.shape == b.shape
    for k in range(a.shape[1]):
        direct = np.max(np.abs(a[:, k] - b[:, k]))
        flipped = np.max(np.abs(a[:, k] + b[:, k]))
        assert min(direct, flipped) <= tol, f"axis {k}: {direct}, {flipped}"


def naive_ward(coords: np.ndarray, masses: np.ndarray):
    """Agglomerate by recomputing every centroid pair at every step.

    Returns merges as (a, b, height, new_id, frozenset_of_leaves) with
    the same id numbering and tie-break as the production code, but no
    shared arithmetic: distances always come from fresh centroids.
    """
    n = len(coords)
    members = {i: frozenset([i]) for i in range(n)}
    centroid = {i: np.array(coords[i], dtype=float) for i in range(n)}
    mass = {i: float(masses[i]) for i in range(n)}
    merges = []
    for step in range(n - 1):
        best = None
        for a in sorted(centroid):
            for b in sorted(centroid):
                if b <= a:
                    continue
                diff = centroid[a] - centroid[b]
                delta = mass[a] * mass[b] / (mass[a] + mass[b]) * float(diff @ diff)
                key = (delta, (a, b))
                if best is None or key < best:
                    best = key
        delta, (a, b) = best
        new_id = n + step
        m = mass[a] + mass[b]
        centroid[new_id] = (mass[a] * centroid[a] + mass[b] * centroid[b]) / m
        mass[new_id] = m
        members[new_id] = members[a] | members[b]
        merges.append((a, b, delta, new_id, members[new_id]))
        for gone in (a, b):
            del centroid[gone], mass[gone]
    return merges


def linear_scan_search(records, tokenized_fields, query, weights):
    """Rank matching record ids by scanning every record.

    ``tokenized_fields[i][field]`` is the token Counter of record i;
    built by the caller with its own tokenizer.
    """
    matches = []
    for i, fields in enumerate(tokenized_fields):
        ok = True
        for conj in query.conjuncts:
            names = (conj.field,) if conj.field else tuple(fields)
            if not any(conj.term in fields[name] for name in names):
                ok = False
                break
        if ok:
            matches.append(i)

    def score(i):
        total = 0.0
        for conj in query.conjuncts:
            names = (conj.field,) if conj.field else tuple(tokenized_fields[i])
            for name in names:
                total += weights[name] * tokenized_fields[i][name][conj.term]
        return total

    return sorted(matches, key=lambda i: (-score(i), i))
