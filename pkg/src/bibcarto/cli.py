"""Command-line pipeline: parse, tables, analyze, search.

Exit codes: 0 on success, 1 on data errors (unreadable or malformed
input, degenerate tables), 2 on usage errors. The environment variable
BIBCARTO_CONFIG may point to a JSON file supplying defaults for any
RunConfig field; explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import ca, corpus, records, search, ward

FORMAT_NAMES = {
    "research-alert": records.RecordFormat.RESEARCH_ALERT,
    "personal-alert": records.RecordFormat.PERSONAL_ALERT,
}

CONFIG_ENV_VAR = "BIBCARTO_CONFIG"


@dataclass(frozen=True)
class RunConfig:
    inputs: tuple[str, ...] = ()
    format: str | None = None
    exclusion_terms: tuple[str, ...] = corpus.DEFAULT_EXCLUSION_TERMS
    catalog_path: str | None = None
    lexicon_path: str | None = None
    year_range: tuple[int, int] = (1994, 2011)
    output_dir: str = "bibcarto_out"
    k: int = 2
    axes: int | None = None

    def __post_init__(self):
        if self.year_range[1] < self.year_range[0]:
            raise ValueError("year range is empty")
        if self.k < 1:
            raise ValueError("k must be at least 1")


def _config_defaults() -> dict:
    path = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        return {}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: config must be a JSON object")
    return data


def _setting(args, name: str, default):
    value = getattr(args, name, None)
    if value is not None:
        return value
    return _config_defaults().get(name, default)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _year_range(text: str) -> tuple[int, int]:
    first, _, last = text.partition(":")
    try:
        lo, hi = int(first), int(last)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected FIRST:LAST, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty year range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bibcarto",
        description="Citation-alert bibliography cartography",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse alert files to JSON lines")
    p.add_argument("files", nargs="+")
    p.add_argument("--format", choices=sorted(FORMAT_NAMES))
    p.add_argument("--lenient", action="store_true",
                   help="keep going on malformed records, report them at the end")
    p.add_argument("-o", "--output", help="write records here instead of stdout")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("tables", help="build or export label-by-year tables")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", choices=["Table1", "Table2"],
                     help="export a bundled reference table")
    src.add_argument("--records", nargs="+", help="alert files to tabulate")
    p.add_argument("--kind", choices=["profiles", "disciplines"], default="disciplines")
    p.add_argument("--catalog", help="profile catalog file (default: bundled)")
    p.add_argument("--lexicon", help="discipline lexicon file (default: bundled)")
    p.add_argument("--years", type=_year_range, default=None, metavar="FIRST:LAST")
    p.add_argument("--exclude", action="append", default=None, metavar="PHRASE",
                   help="title phrase to exclude (repeatable; default: 'galaxy cluster')")
    p.add_argument("--format", choices=sorted(FORMAT_NAMES))
    p.add_argument("-o", "--output", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("analyze", help="correspondence analysis plus Ward clustering")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", choices=["Table1", "Table2"])
    src.add_argument("--table", help="contingency table CSV (as written by 'tables')")
    sup = p.add_mutually_exclusive_group()
    sup.add_argument("--supplementary", choices=["Table1", "Table2"],
                     help="bundled table whose rows are projected post hoc")
    sup.add_argument("--supplementary-table", help="CSV of rows to project post hoc")
    p.add_argument("--k", type=_positive_int, default=None,
                   help="number of clusters for the partition (default 2)")
    p.add_argument("--axes", type=_positive_int, default=None,
                   help="number of axes in coordinates.csv (default: all retained)")
    p.add_argument("--outdir", default=None, help="output directory (default bibcarto_out)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="query records or fetch similar ones")
    p.add_argument("query", nargs="?",
                   help="terms, AND-separated; field:term pins a field "
                        "(give the query before --records)")
    p.add_argument("--records", nargs="+", required=True, help="alert files to index")
    p.add_argument("--mlt", type=int, metavar="ID",
                   help="show the three records most like this record id")
    p.add_argument("--page", type=_positive_int, default=1)
    p.add_argument("--interactive", action="store_true",
                   help="read queries from stdin until EOF or 'q'")
    p.add_argument("--format", choices=sorted(FORMAT_NAMES))
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (records.RecordParseError, corpus.EmptyTableError, ca.CaError,
            ward.TooFewPointsError, ward.DimensionMismatchError,
            OSError, ValueError, KeyError) as exc:
        print(f"bibcarto: error: {exc}", file=sys.stderr)
        return 1


def _read_files(paths) -> list[tuple[str, str]]:
    return [(path, Path(path).read_text(encoding="utf-8")) for path in paths]


def _parse_all(paths, fmt_name, lenient=False):
    fmt = FORMAT_NAMES[fmt_name] if fmt_name else None
    all_records, all_errors = [], []
    for path, text in _read_files(paths):
        if lenient:
            try:
                recs, errors = records.parse_records_lenient(text, fmt)
            except records.RecordParseError as exc:
                recs, errors = [], [exc]
            all_records.extend(recs)
            all_errors.extend((path, err) for err in errors)
        else:
            try:
                all_records.extend(records.parse_records(text, fmt))
            except records.RecordParseError as exc:
                raise records.RecordParseError(f"{path}: {exc}") from exc
    return all_records, all_errors


def cmd_parse(args) -> int:
    recs, errors = _parse_all(args.files, args.format, lenient=args.lenient)
    dump = records.dump_records(recs)
    if args.output:
        Path(args.output).write_text(dump, encoding="utf-8")
    else:
        sys.stdout.write(dump)
    for path, err in errors:
        print(f"bibcarto: parse error: {path}: {err}", file=sys.stderr)
    if errors:
        print(f"bibcarto: {len(errors)} record(s) dropped, {len(recs)} parsed",
              file=sys.stderr)
    return 0


def cmd_tables(args) -> int:
    if args.fixture:
        table = corpus.load_fixture(args.fixture)
    else:
        recs, _ = _parse_all(args.records, args.format)
        exclusions = tuple(_setting(args, "exclude", None)
                           or _setting(args, "exclusion_terms", None)
                           or corpus.DEFAULT_EXCLUSION_TERMS)
        kept, dropped = corpus.filter_records(recs, exclusions)
        years = _setting(args, "years", None) or tuple(
            _setting(args, "year_range", (1994, 2011))
        )
        if args.kind == "profiles":
            catalog_path = _setting(args, "catalog", None) or _setting(args, "catalog_path", None)
            catalog = (corpus.ProfileCatalog.from_file(catalog_path)
                       if catalog_path else corpus.ProfileCatalog.default())
            tagger = lambda r: corpus.match_profiles(r, catalog)
            labels = catalog.ids
        else:
            lexicon_path = _setting(args, "lexicon", None) or _setting(args, "lexicon_path", None)
            lexicon = (corpus.DisciplineLexicon.from_file(lexicon_path)
                       if lexicon_path else corpus.DisciplineLexicon.default())
            tagger = lambda r: corpus.tag_disciplines(r, lexicon)
            labels = lexicon.labels
        table, skipped = corpus.build_table(kept, tagger, labels, tuple(years))
        if dropped:
            print(f"bibcarto: excluded {len(dropped)} record(s) by title phrase",
                  file=sys.stderr)
        if skipped:
            print(f"bibcarto: skipped {skipped} record(s) outside {years[0]}..{years[1]}",
                  file=sys.stderr)
    text = table.to_csv()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _load_table(args) -> corpus.ContingencyTable:
    if args.fixture:
        return corpus.load_fixture(args.fixture)
    return corpus.ContingencyTable.from_csv(Path(args.table).read_text(encoding="utf-8"))


def _load_supplementary(args) -> corpus.ContingencyTable | None:
    if args.supplementary:
        return corpus.load_fixture(args.supplementary)
    if args.supplementary_table:
        return corpus.ContingencyTable.from_csv(
            Path(args.supplementary_table).read_text(encoding="utf-8")
        )
    return None


def cmd_analyze(args) -> int:
    config = RunConfig(
        output_dir=_setting(args, "outdir", None) or _setting(args, "output_dir", "bibcarto_out"),
        k=_setting(args, "k", 2),
        axes=_setting(args, "axes", None),
    )
    table = _load_table(args)
    result = ca.ca_fit(table)

    supplementary = []
    sup_table = _load_supplementary(args)
    if sup_table is not None:
        if tuple(sup_table.col_labels) != tuple(table.col_labels):
            raise ca.ShapeMismatchError(
                "supplementary table columns differ from the fitted table's"
            )
        for label in sup_table.row_labels:
            coords = ca.project_supplementary_row(sup_table.row(label), result)
            supplementary.append((label, coords))

    points = ward.embed_for_clustering(result, supplementary)
    dendrogram = ward.ward_hac(points)
    partition = ward.cut(dendrogram, config.k)

    outdir = Path(config.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = {
        "coordinates.csv": ca.write_coordinates_csv(result, supplementary, config.axes),
        "inertia.csv": ca.write_inertia_csv(result),
        "dendrogram.nwk": ward.export_dendrogram(dendrogram, "newick") + "\n",
        "partition.csv": ward.write_partition_csv(partition),
    }
    for name, text in outputs.items():
        (outdir / name).write_text(text, encoding="utf-8")
    print(f"bibcarto: wrote {', '.join(outputs)} to {outdir}")
    return 0


def _print_record(doc_id: int, record: records.BibRecord) -> None:
    print(f"id: {doc_id}")
    print(f"title: {record.title}")
    if record.authors:
        print(f"authors: {'; '.join(record.authors)}")
    if record.source:
        print(f"source: {record.source}")
    if record.keywords:
        print(f"keywords: {'; '.join(record.keywords)}")
    print("-" * 60)


def _run_query(index: search.Index, query_text: str, page: int) -> int:
    try:
        query = search.parse_query(query_text)
    except search.QueryError as exc:
        print(f"bibcarto: bad query: {exc}", file=sys.stderr)
        print("usage: terms separated by AND; field:term pins a field "
              f"(fields: {', '.join(search.FIELDS)})", file=sys.stderr)
        return 2
    ranked = search.ranked_matches(index, query)
    ids = search.search(index, query, page)
    first = search.PAGE_SIZE * (page - 1) + 1
    if ids:
        print(f"{len(ranked)} match(es); page {page} ({first}-{first + len(ids) - 1} shown)")
    else:
        print(f"{len(ranked)} match(es); page {page} (empty)")
    print("-" * 60)
    for doc_id in ids:
        _print_record(doc_id, index.records[doc_id])
    return 0


def cmd_search(args) -> int:
    recs, _ = _parse_all(args.records, args.format)
    index = search.build_index(recs)
    if args.mlt is not None:
        try:
            similar = search.more_like_this(index, args.mlt)
        except search.UnknownRecordError as exc:
            print(f"bibcarto: error: {exc}", file=sys.stderr)
            return 1
        print(f"records most like {args.mlt}:")
        print("-" * 60)
        for doc_id in similar:
            _print_record(doc_id, index.records[doc_id])
        return 0
    if args.interactive:
        for line in sys.stdin:
            line = line.strip()
            if not line or line == "q":
                break
            _run_query(index, line, 1)
        return 0
    if not args.query:
        print("bibcarto: search needs a query, --mlt, or --interactive",
              file=sys.stderr)
        return 2
    return _run_query(index, args.query, args.page)


if __name__ == "__main__":
    sys.exit(main())
