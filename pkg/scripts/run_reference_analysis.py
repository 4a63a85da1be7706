#!/usr/bin/env python3
"""Run the full semantic-map pipeline on the bundled reference tables.

Fits the correspondence analysis of the discipline-by-year table,
projects the 82 profile publications in as supplementary points, writes
the factor-plane and clustering artifacts, and prints a summary of the
axis structure and the 2- and 5-class partitions.

Usage:
    python scripts/run_reference_analysis.py [OUTDIR]
"""
import sys
from collections import defaultdict
from pathlib import Path

from bibcarto import ca, corpus, ward


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("reference_analysis")
    outdir.mkdir(parents=True, exist_ok=True)

    disciplines = corpus.load_fixture("Table2")
    profiles = corpus.load_fixture("Table1")
    result = ca.ca_fit(disciplines)

    report = ca.inertia_report(result)
    print(f"{result.n_axes} axes, total inertia {result.total_inertia:.6f}")
    for axis, lam, pct, cum in report[:4]:
        print(f"  axis {axis}: eigenvalue {lam:.6f}  {pct:5.2f}%  (cum {cum:5.2f}%)")

    hum = result.row_coords[disciplines.row_labels.index("Hum")]
    print(f"Hum factor-plane position: ({hum[0]:+.3f}, {hum[1]:+.3f})")

    supplementary = [
        (label, ca.project_supplementary_row(profiles.row(label), result))
        for label in profiles.row_labels
    ]

    points = ward.embed_for_clustering(result, supplementary)
    dendrogram = ward.ward_hac(points)

    (outdir / "coordinates.csv").write_text(
        ca.write_coordinates_csv(result, supplementary), encoding="utf-8")
    (outdir / "inertia.csv").write_text(ca.write_inertia_csv(result), encoding="utf-8")
    (outdir / "dendrogram.nwk").write_text(
        ward.export_dendrogram(dendrogram, "newick") + "\n", encoding="utf-8")

    years_only = ward.ward_hac(ward.embed_for_clustering(result))
    two = ward.cut(years_only, 2)
    (outdir / "partition_k2.csv").write_text(
        ward.write_partition_csv(two), encoding="utf-8")
    print("\nyears-and-disciplines 2-cut:")
    _print_clusters(two)

    five = ward.cut(dendrogram, 5)
    (outdir / "partition_k5.csv").write_text(
        ward.write_partition_csv(five), encoding="utf-8")
    print("\nfull 114-point 5-cut:")
    _print_clusters(five, max_labels=12)

    print(f"\nartifacts written to {outdir}/")
    return 0


def _print_clusters(partition, max_labels=40):
    clusters = defaultdict(list)
    for label, c in partition.assignment.items():
        clusters[c].append(label)
    for c in sorted(clusters):
        labels = clusters[c]
        shown = ", ".join(labels[:max_labels])
        extra = "" if len(labels) <= max_labels else f", ... ({len(labels)} total)"
        print(f"  cluster {c}: {shown}{extra}")


if __name__ == "__main__":
    sys.exit(main())
