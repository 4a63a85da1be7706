"""Corpus classification and contingency-table construction.

Records are matched against two controlled vocabularies:

* a profile catalog of canonical publications, matched through the
  cited-item lines of Research Alert records (exact token equality after
  whitespace normalization) and through the ``rauth`` search terms of
  Personal Alert records (author part of the token, before the two-digit
  year; a trailing ``*`` in the term acts as a prefix wildcard);
* a discipline lexicon of case-insensitive substrings looked up in the
  title, source, keywords and keywords+ fields.

Tagged records are then cross-tabulated into label-by-year contingency
tables. The two bundled reference tables (profile-by-year and
discipline-by-year, 1994-2011) load through :func:`load_fixture`.
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass

import numpy as np

from . import fixtures
from .records import BibRecord

DEFAULT_EXCLUSION_TERMS = ("galaxy cluster",)

_TOKEN_YEAR_RE = re.compile(r"^(.*\S)\s+(\d{2})$")


class EmptyTableError(ValueError):
    """Cross-tabulation produced no incidences at all."""


def _normalize_token(token: str) -> str:
    return " ".join(token.split()).upper()


def _author_part(token: str) -> str:
    """Match token minus its trailing two-digit year ("BREIMAN L 84" -> "BREIMAN L")."""
    m = _TOKEN_YEAR_RE.match(token)
    return m.group(1) if m else token


@dataclass(frozen=True)
class ProfileEntry:
    id: str
    match_tokens: tuple[str, ...]
    merged_ids: tuple[str, ...] = ()
    active_years: tuple[int, int] | None = None


@dataclass
class ProfileCatalog:
    entries: list[ProfileEntry]

    def __post_init__(self):
        ids = [e.id for e in self.entries]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate profile ids in catalog")
        self._by_token = {}
        for entry in self.entries:
            for token in entry.match_tokens:
                self._by_token[_normalize_token(token)] = entry.id

    @property
    def ids(self) -> list[str]:
        return [e.id for e in self.entries]

    def match_citation(self, cited: str) -> str | None:
        """Profile id whose token equals the whitespace-normalized cited line."""
        return self._by_token.get(_normalize_token(cited))

    def match_author_term(self, term: str) -> set[str]:
        """Profile ids whose token author part matches a search term.

        The comparison is against the token prefix before the year; a
        trailing ``*`` on the term turns it into a prefix match.
        """
        term = _normalize_token(term)
        prefix = term.endswith("*")
        term = term.rstrip("*").strip()
        if not term:
            return set()
        found = set()
        for entry in self.entries:
            for token in entry.match_tokens:
                author = _author_part(_normalize_token(token))
                if author == term or (prefix and author.startswith(term)):
                    found.add(entry.id)
        return found

    @classmethod
    def from_text(cls, text: str) -> "ProfileCatalog":
        """Load from tab-separated lines: id, match tokens (comma-separated),
        optional constituent work labels (comma-separated)."""
        entries = []
        for ln in text.splitlines():
            if not ln.strip() or ln.lstrip().startswith("#"):
                continue
            parts = ln.split("\t")
            if len(parts) < 2:
                raise ValueError(f"catalog line needs id<TAB>tokens: {ln!r}")
            tokens = tuple(t.strip() for t in parts[1].split(",") if t.strip())
            merged = ()
            if len(parts) > 2 and parts[2].strip():
                merged = tuple(m.strip() for m in parts[2].split(",") if m.strip())
            entries.append(ProfileEntry(parts[0].strip(), tokens, merged))
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> "ProfileCatalog":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    @classmethod
    def default(cls) -> "ProfileCatalog":
        return cls.from_text(fixtures.PROFILE_CATALOG)


@dataclass(frozen=True)
class LexiconEntry:
    label: str
    match_terms: tuple[str, ...]


@dataclass
class DisciplineLexicon:
    entries: list[LexiconEntry]

    def __post_init__(self):
        labels = [e.label for e in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate discipline labels in lexicon")

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.entries]

    @classmethod
    def from_text(cls, text: str) -> "DisciplineLexicon":
        entries = []
        for ln in text.splitlines():
            if not ln.strip() or ln.lstrip().startswith("#"):
                continue
            parts = ln.split("\t")
            if len(parts) < 2:
                raise ValueError(f"lexicon line needs label<TAB>terms: {ln!r}")
            terms = tuple(t.strip() for t in parts[1].split(",") if t.strip())
            entries.append(LexiconEntry(parts[0].strip(), terms))
        return cls(entries)

    @classmethod
    def from_file(cls, path) -> "DisciplineLexicon":
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    @classmethod
    def default(cls) -> "DisciplineLexicon":
        return cls.from_text(fixtures.DISCIPLINE_LEXICON)


def match_profiles(record: BibRecord, catalog: ProfileCatalog) -> set[str]:
    """Profile ids the record cites; empty set when it cites none."""
    found = set()
    for cited in record.profile_citations:
        hit = catalog.match_citation(cited)
        if hit is not None:
            found.add(hit)
    for term, qualifier in record.search_terms:
        if qualifier == "rauth":
            found |= catalog.match_author_term(term)
    return found


def tag_disciplines(record: BibRecord, lexicon: DisciplineLexicon) -> set[str]:
    """Discipline labels whose terms occur as substrings of the record.

    Searched fields: title, source, keywords, keywords+. When terms of
    two labels overlap (one a prefix of the other), an occurrence counts
    only for the longest term starting there, so a single word never
    fires both labels.
    """
    terms = [
        (entry.label, t.lower())
        for entry in lexicon.entries
        for t in entry.match_terms
    ]
    haystacks = [
        record.title,
        record.source,
        "; ".join(record.keywords),
        "; ".join(record.keywords_plus),
    ]
    labels = set()
    for text in haystacks:
        low = text.lower()
        for label, term in terms:
            if label in labels:
                continue
            start = 0
            while (pos := low.find(term, start)) >= 0:
                shadowed = any(
                    other != label and len(t2) > len(term) and low.startswith(t2, pos)
                    for other, t2 in terms
                )
                if not shadowed:
                    labels.add(label)
                    break
                start = pos + 1
    return labels


def filter_records(
    records: list[BibRecord],
    exclusion_terms: tuple[str, ...] = DEFAULT_EXCLUSION_TERMS,
) -> tuple[list[BibRecord], list[BibRecord]]:
    """Partition records into (kept, excluded) by title phrase matching."""
    phrases = [t.lower() for t in exclusion_terms]
    kept, excluded = [], []
    for record in records:
        title = record.title.lower()
        (excluded if any(p in title for p in phrases) else kept).append(record)
    return kept, excluded


@dataclass(frozen=True)
class ContingencyTable:
    """Labeled nonnegative count matrix, rows crossed by year columns."""

    row_labels: tuple[str, ...]
    col_labels: tuple
    counts: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.counts, dtype=np.int64)
        if arr.shape != (len(self.row_labels), len(self.col_labels)):
            raise ValueError("counts shape does not match labels")
        if (arr < 0).any():
            raise ValueError("negative counts")
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("duplicate column labels")
        arr.setflags(write=False)
        object.__setattr__(self, "counts", arr)
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def frequencies(self) -> np.ndarray:
        if self.n == 0:
            raise EmptyTableError("table has no incidences")
        return self.counts / self.n

    @property
    def row_masses(self) -> np.ndarray:
        return self.frequencies.sum(axis=1)

    @property
    def col_masses(self) -> np.ndarray:
        return self.frequencies.sum(axis=0)

    def row(self, label: str) -> np.ndarray:
        return self.counts[self.row_labels.index(label)]

    def transposed(self) -> "ContingencyTable":
        return ContingencyTable(
            tuple(str(c) for c in self.col_labels),
            self.row_labels,
            self.counts.T,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["label", *self.col_labels])
        for label, row in zip(self.row_labels, self.counts):
            writer.writerow([label, *(int(v) for v in row)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ContingencyTable":
        rows = list(csv.reader(io.StringIO(text)))
        header = rows[0][1:]
        cols = tuple(int(c) if c.strip().lstrip("-").isdigit() else c for c in header)
        labels = tuple(r[0] for r in rows[1:] if r)
        counts = np.array([[int(v) for v in r[1:]] for r in rows[1:] if r])
        return cls(labels, cols, counts)


def build_table(
    records: list[BibRecord],
    tagger,
    row_labels: list[str],
    year_range: tuple[int, int],
) -> tuple[ContingencyTable, int]:
    """Cross-tabulate (record, label) incidences by publication year.

    ``tagger`` maps a record to a set of labels; labels outside
    ``row_labels`` are ignored. A record tagged with k labels adds k
    incidences to its year column. Records whose year is missing or
    outside the inclusive range are skipped; the skip count is returned
    alongside the table.
    """
    first, last = year_range
    if last < first:
        raise ValueError("empty year range")
    cols = tuple(range(first, last + 1))
    row_index = {label: i for i, label in enumerate(row_labels)}
    counts = np.zeros((len(row_labels), len(cols)), dtype=np.int64)
    skipped = 0
    for record in records:
        if record.year is None or not first <= record.year <= last:
            skipped += 1
            continue
        j = record.year - first
        for label in tagger(record):
            i = row_index.get(label)
            if i is not None:
                counts[i, j] += 1
    if counts.sum() == 0:
        raise EmptyTableError("no (record, label) incidences in the year range")
    return ContingencyTable(tuple(row_labels), cols, counts), skipped


def _parse_fixture_table(text: str) -> ContingencyTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split()
    years = tuple(1900 + int(y) if int(y) >= 50 else 2000 + int(y) for y in header)
    labels = []
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        labels.append(parts[0])
        rows.append([int(v) for v in parts[1:]])
    return ContingencyTable(tuple(labels), years, np.array(rows))


def load_fixture(name: str) -> ContingencyTable:
    """Bundled reference table by name: "Table1" (profile-by-year, 82x18)
    or "Table2" (discipline-by-year, 14x18)."""
    texts = {
        "Table1": fixtures.PROFILE_YEAR_TABLE,
        "Table2": fixtures.DISCIPLINE_YEAR_TABLE,
    }
    if name not in texts:
        raise KeyError(f"unknown fixture {name!r}; expected one of {sorted(texts)}")
    return _parse_fixture_table(texts[name])
