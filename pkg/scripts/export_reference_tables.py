#!/usr/bin/env python3
"""Dump the bundled reference tables to CSV for use with other tools.

Usage:
    python scripts/export_reference_tables.py [OUTDIR]
"""
import sys
from pathlib import Path

from bibcarto import corpus


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, filename in (("Table1", "profile_by_year.csv"),
                           ("Table2", "discipline_by_year.csv")):
        table = corpus.load_fixture(name)
        (outdir / filename).write_text(table.to_csv(), encoding="utf-8")
        print(f"{filename}: {len(table.row_labels)} rows x "
              f"{len(table.col_labels)} years, {table.n} incidences")
    return 0


if __name__ == "__main__":
    sys.exit(main())
