import pytest
from hypothesis import given
from hypothesis import strategies as st

from bibcarto.records import (
    AmbiguousFormatError,
    BibRecord,
    MissingTitleError,
    RecordFormat,
    UnknownHeaderError,
    UnknownTagError,
    _squash,
    detect_format,
    dump_records,
    extract_year,
    from_json_line,
    load_records,
    parse_personal_alert,
    parse_records,
    parse_records_lenient,
    parse_research_alert,
    to_json_line,
)


def test_detect_research_alert(research_alert_text):
    assert detect_format(research_alert_text) is RecordFormat.RESEARCH_ALERT


def test_detect_personal_alert(personal_alert_text):
    assert detect_format(personal_alert_text) is RecordFormat.PERSONAL_ALERT


def test_detect_empty_is_ambiguous():
    with pytest.raises(AmbiguousFormatError):
        detect_format("")
    with pytest.raises(AmbiguousFormatError):
        detect_format("   \n\n  \n")


def test_detect_garbage_names_offending_lines():
    with pytest.raises(AmbiguousFormatError, match="line 1"):
        detect_format("X not a tag\nY neither\n")


def test_research_alert_golden(research_alert_text):
    (rec,) = parse_research_alert(research_alert_text)
    assert rec.title == "Learning to Set-Up Numerical Optimizations of Engineering Designs"
    assert rec.authors == ["SCHWABAC.M", "ELLMAN T", "HIRSH H"]
    assert rec.keywords == ["MATHEMATICAL SCIENCES - Computer Science"]
    assert rec.source == "AI EDAM 12(2): 173-192,APR 1998"
    assert rec.profile_citations == ["BREIMAN L    84"]
    assert rec.address == "M Schwabacher, Natl Inst Stand & Technol, Gaithersburg, MD 20899"
    assert rec.year == 1998
    assert rec.raw_format is RecordFormat.RESEARCH_ALERT
    assert rec.search_terms == []
    assert rec.keywords_plus == []


def test_personal_alert_golden(personal_alert_text):
    (rec,) = parse_personal_alert(personal_alert_text)
    assert rec.title.startswith("Multiscale spatial variation of the bark beetle")
    assert rec.title.endswith("(Landes de Gascogne, Southwestern France) (Article, English)")
    assert rec.authors == [
        "Rossi, JP", "Samalens, JC", "Guyon, D", "van Halder, I",
        "Jactel, H", "Menassieu, P", "Piou, D",
    ]
    assert rec.search_terms == [
        ("RIPLEY BD", "rauth"),
        ("DENSITY ESTIM*", "rwork"),
        ("MULTI*", "rwork"),
    ]
    assert rec.keywords[0] == "Bark beetle"
    assert "Spatial statistics" in rec.keywords
    assert rec.keywords_plus[0] == "POINT PATTERN-ANALYSIS"
    assert len(rec.keywords_plus) == 10
    assert rec.year == 2009
    assert rec.raw_format is RecordFormat.PERSONAL_ALERT


def test_split_title_joins_byte_identical():
    split = "T       Learning to Set-Up Numerical Optimizations of\nT       Engineering Designs\nW.      X Y 99\n"
    joined = "T       Learning to Set-Up Numerical Optimizations of Engineering Designs\nW.      X Y 99\n"
    (a,) = parse_research_alert(split)
    (b,) = parse_research_alert(joined)
    assert a.title == b.title


def test_missing_profile_citation_is_not_a_parse_error():
    text = "T      Some Title\nA      AUTHOR ONE\nA      AUTHOR TWO\n"
    (rec,) = parse_research_alert(text)
    assert rec.profile_citations == []
    assert rec.authors == ["AUTHOR ONE", "AUTHOR TWO"]
    assert "cites no profile item" in " ".join(rec.validate())


def test_multiple_cited_profile_lines():
    text = "T   Title\nW.  BREIMAN L 84\nW.  RIPLEY BD 81\n"
    (rec,) = parse_research_alert(text)
    assert rec.profile_citations == ["BREIMAN L 84", "RIPLEY BD 81"]


def test_unknown_tag_names_line():
    text = "T   ok title\nX   mystery\n"
    with pytest.raises(UnknownTagError) as err:
        parse_research_alert(text)
    assert err.value.line_no == 2
    assert err.value.tag == "X"


def test_indented_tag_line_rejected():
    with pytest.raises(UnknownTagError):
        parse_research_alert("T  fine\n  T  sneaky indent\n")


def test_missing_title_names_block():
    text = "T   first\n\nA   ORPHAN AUTHOR\n"
    with pytest.raises(MissingTitleError) as err:
        parse_research_alert(text)
    assert err.value.block_no == 2


def test_unknown_header_names_line():
    text = "TITLE:  ok\nFOO: mystery\n"
    with pytest.raises(UnknownHeaderError) as err:
        parse_personal_alert(text)
    assert err.value.line_no == 2
    assert err.value.header == "FOO"


def test_personal_alert_headers_before_title():
    with pytest.raises(MissingTitleError) as err:
        parse_personal_alert("AUTHOR: Orphan, A\n\nTITLE: real record\n")
    assert err.value.block_no == 1


def test_personal_alert_without_keywords_plus():
    text = "TITLE: something\nSOURCE: J STUFF 3 (1). JAN 5 2005. p.1-2\n"
    (rec,) = parse_personal_alert(text)
    assert rec.keywords_plus == []
    assert rec.year == 2005


def test_personal_alert_multiple_records():
    text = (
        "TITLE: first one\nSOURCE: A 2004.\n\n"
        "KEYWORDS: k1; k2\n\n"
        "TITLE: second one\nSOURCE: B 2005.\n"
    )
    records = parse_personal_alert(text)
    assert [r.title for r in records] == ["first one", "second one"]
    assert records[0].keywords == ["k1", "k2"]


def test_order_preserved_research_alert():
    text = "".join(f"T   title {i}\n\n" for i in range(7))
    titles = [r.title for r in parse_research_alert(text)]
    assert titles == [f"title {i}" for i in range(7)]


def test_year_extraction_rules():
    assert extract_year("AI EDAM 12(2): 173-192,APR 1998") == 1998
    assert extract_year("FOREST ECOLOGY AND MANAGEMENT 257 (7). MAR 22 2009. p.1551-1557") == 2009
    assert extract_year("VOL 23, 465-470") is None
    assert extract_year("published 1985, reprinted 1992") == 1992
    assert extract_year("token 2999 out of range") is None
    assert extract_year("") is None


def test_round_trip_golden(research_alert_text, personal_alert_text):
    for text in (research_alert_text, personal_alert_text):
        records = parse_records(text)
        again = load_records(dump_records(records))
        assert again == records


def test_lenient_collects_errors():
    text = "T   good record\n\nX   broken\n\nT   another good\n"
    records, errors = parse_records_lenient(text, RecordFormat.RESEARCH_ALERT)
    assert [r.title for r in records] == ["good record", "another good"]
    assert len(errors) == 1
    assert isinstance(errors[0], UnknownTagError)


@given(st.text(alphabet=st.characters(codec="ascii"), max_size=80))
def test_squash_idempotent(text):
    assert _squash(_squash(text)) == _squash(text)


_field_text = st.text(
    alphabet=st.characters(codec="ascii", categories=["L", "N", "P"], exclude_characters=";"),
    min_size=1,
    max_size=30,
).map(lambda s: s.strip()).filter(bool)


@given(
    title=_field_text,
    authors=st.lists(_field_text, max_size=3),
    keywords=st.lists(_field_text, max_size=3),
    cited=st.lists(_field_text, max_size=2),
)
def test_synthesized_research_alert_round_trips(title, authors, keywords, cited):
    lines = [f"T   {title}"]
    lines += [f"A   {a}" for a in authors]
    lines += [f"K   {k}" for k in keywords]
    lines += [f"W.  {w}" for w in cited]
    text = "\n".join(lines) + "\n"
    records = parse_research_alert(text)
    assert load_records(dump_records(records)) == records
    (rec,) = records
    assert rec.title == _squash(title)


def test_json_line_field_names():
    rec = BibRecord(title="t", raw_format=RecordFormat.RESEARCH_ALERT)
    line = to_json_line(rec)
    for name in ("title", "authors", "source", "keywords", "keywords_plus",
                 "search_terms", "profile_citations", "address", "year", "raw_format"):
        assert f'"{name}"' in line
    assert from_json_line(line) == rec
