import numpy as np
import pytest

from bibcarto.ca import ca_fit, project_supplementary_row
from bibcarto.corpus import load_fixture
from bibcarto.ward import (
    DimensionMismatchError,
    PointSet,
    TooFewPointsError,
    cut,
    embed_for_clustering,
    export_dendrogram,
    ward_hac,
    write_partition_csv,
)

from helpers import naive_ward


def _points(coords, labels=None):
    coords = np.asarray(coords, dtype=float)
    labels = tuple(labels) if labels else tuple(f"p{i}" for i in range(len(coords)))
    return PointSet(labels, coords, np.ones(len(coords)))


def test_pointset_validation():
    with pytest.raises(ValueError):
        PointSet(("a", "a"), np.zeros((2, 1)), np.ones(2))
    with pytest.raises(ValueError):
        PointSet(("a", "b"), np.array([[0.0], [np.inf]]), np.ones(2))
    with pytest.raises(ValueError):
        PointSet(("a", "b"), np.zeros((2, 1)), np.array([1.0, 2.0]))


def test_embed_table2_has_32_points_in_13_dims():
    result = ca_fit(load_fixture("Table2"))
    points = embed_for_clustering(result)
    assert len(points) == 32
    assert points.coords.shape == (32, 13)
    assert set(points.labels[:14]) == set(load_fixture("Table2").row_labels)
    assert points.labels[14] == "1994"
    assert (points.masses == 1.0).all()


def test_embed_with_82_supplementary_points():
    t1, t2 = load_fixture("Table1"), load_fixture("Table2")
    result = ca_fit(t2)
    sup = [(label, project_supplementary_row(t1.row(label), result))
           for label in t1.row_labels]
    points = embed_for_clustering(result, sup)
    assert len(points) == 114


def test_embed_dimension_mismatch():
    result = ca_fit(load_fixture("Table2"))
    with pytest.raises(DimensionMismatchError):
        embed_for_clustering(result, [("bad", np.zeros(2))])


def test_two_points_merge_at_half_squared_distance():
    dendrogram = ward_hac(_points([[0.0], [3.0]], "AB"))
    (merge,) = dendrogram.merges
    assert (merge.a, merge.b, merge.new_id) == (0, 1, 2)
    assert merge.height == pytest.approx(4.5, abs=1e-12)


def test_three_collinear_points():
    dendrogram = ward_hac(_points([[0.0], [1.0], [10.0]], "ABC"))
    first, second = dendrogram.merges
    assert (first.a, first.b) == (0, 1)
    assert first.height == pytest.approx(0.5, abs=1e-12)
    assert (second.a, second.b) == (2, 3)
    assert second.height == pytest.approx(2.0 / 3.0 * 9.5**2, abs=1e-12)


def test_single_point_rejected():
    with pytest.raises(TooFewPointsError):
        ward_hac(_points([[1.0]]))


def test_matches_naive_oracle_on_random_instances():
    rng = np.random.default_rng(4242)
    for _ in range(40):
        n = int(rng.integers(2, 11))
        d = int(rng.integers(1, 6))
        coords = rng.normal(size=(n, d))
        points = _points(coords)
        merges = ward_hac(points).merges
        oracle = naive_ward(coords, np.ones(n))
        assert [(m.a, m.b, m.new_id) for m in merges] == [(a, b, i) for a, b, _, i, _ in oracle]
        got = np.array([m.height for m in merges])
        want = np.array([h for _, _, h, _, _ in oracle])
        assert np.abs(got - want).max() <= 1e-9
        assert (np.diff(got) >= -1e-12).all()


def test_duplicate_points_merge_first_at_zero():
    dendrogram = ward_hac(_points([[1.0, 2.0], [5.0, 5.0], [1.0, 2.0]]))
    first = dendrogram.merges[0]
    assert (first.a, first.b) == (0, 2)
    assert first.height == 0.0


def test_tie_break_prefers_smallest_id_pair():
    # four corners of a square: all nearest pairs tie at the same height
    square = _points([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
    first = ward_hac(square).merges[0]
    assert (first.a, first.b) == (0, 1)


def test_permutation_invariance():
    rng = np.random.default_rng(7)
    coords = rng.normal(size=(12, 4))
    labels = tuple(f"x{i}" for i in range(12))
    base = ward_hac(PointSet(labels, coords, np.ones(12)))
    perm = rng.permutation(12)
    shuffled = ward_hac(PointSet(
        tuple(labels[i] for i in perm), coords[perm], np.ones(12)
    ))
    heights = sorted(m.height for m in base.merges)
    heights_p = sorted(m.height for m in shuffled.merges)
    assert np.abs(np.array(heights) - np.array(heights_p)).max() <= 1e-9
    for k in (2, 3, 5):
        split_a = _cluster_sets(cut(base, k))
        split_b = _cluster_sets(cut(shuffled, k))
        assert split_a == split_b


def _cluster_sets(partition):
    clusters = {}
    for label, c in partition.assignment.items():
        clusters.setdefault(c, set()).add(label)
    return {frozenset(v) for v in clusters.values()}


def test_translation_invariance():
    rng = np.random.default_rng(11)
    coords = rng.normal(size=(9, 3))
    base = ward_hac(_points(coords))
    moved = ward_hac(_points(coords + np.array([3.5, -2.25, 10.0])))
    assert [(m.a, m.b) for m in base.merges] == [(m.a, m.b) for m in moved.merges]
    got = np.array([m.height for m in moved.merges])
    want = np.array([m.height for m in base.merges])
    assert np.abs(got - want).max() <= 1e-9


def test_cut_extremes_and_bad_k():
    dendrogram = ward_hac(_points([[0.0], [1.0], [10.0]], "ABC"))
    whole = cut(dendrogram, 1)
    assert set(whole.assignment.values()) == {1}
    singletons = cut(dendrogram, 3)
    assert sorted(singletons.assignment.values()) == [1, 2, 3]
    pair = cut(dendrogram, 2)
    assert pair.assignment["A"] == pair.assignment["B"] != pair.assignment["C"]
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            cut(dendrogram, bad)


def test_table2_two_cut_splits_year_ranges():
    result = ca_fit(load_fixture("Table2"))
    partition = cut(ward_hac(embed_for_clustering(result)), 2)
    early = {partition.assignment[str(y)] for y in range(1994, 2004)}
    late = {partition.assignment[str(y)] for y in range(2004, 2012)}
    assert len(early) == 1 and len(late) == 1
    assert early != late


def test_newick_two_leaves():
    dendrogram = ward_hac(_points([[0.0], [3.0]], "AB"))
    assert export_dendrogram(dendrogram, "newick") == "(A:2.25,B:2.25);"


def test_newick_three_leaves_nested_by_merge_order():
    dendrogram = ward_hac(_points([[0.0], [1.0], [10.0]], "ABC"))
    expected = "(C:30.0833333333,(A:0.25,B:0.25):29.8333333333);"
    assert export_dendrogram(dendrogram, "newick") == expected


def test_newick_quotes_awkward_labels():
    dendrogram = ward_hac(_points([[0.0], [3.0]], labels=("Kruskal64,78", "it's")))
    text = export_dendrogram(dendrogram, "newick")
    assert "'Kruskal64,78':2.25" in text
    assert "'it''s':2.25" in text


def test_text_export_and_bad_format():
    dendrogram = ward_hac(_points([[0.0], [1.0], [10.0]], "ABC"))
    text = export_dendrogram(dendrogram, "text")
    assert "height=60.1666666667" in text
    assert text.splitlines()[0].startswith("+ height=")
    for bad in ("", "svg"):
        with pytest.raises(ValueError):
            export_dendrogram(dendrogram, bad)


def test_partition_csv():
    dendrogram = ward_hac(_points([[0.0], [1.0], [10.0]], "ABC"))
    text = write_partition_csv(cut(dendrogram, 2))
    lines = text.splitlines()
    assert lines[0] == "label,cluster"
    assert lines[1:] == ["A,1", "B,1", "C,2"]
