import pytest

RESEARCH_ALERT_SAMPLE = """\
T       Learning to Set-Up Numerical Optimizations of
T       Engineering Designs
A       SCHWABAC.M
A       ELLMAN T
A       HIRSH H
K       MATHEMATICAL SCIENCES - Computer Science
U       AI EDAM      12(2): 173-192,APR 1998
W         M Schwabacher, Natl Inst Stand &
W         Technol, Gaithersburg, MD 20899
W.      BREIMAN L    84
"""

PERSONAL_ALERT_SAMPLE = """\
TITLE:          Multiscale spatial variation of the bark beetle Ips
                sexdentatus damage in a pine plantation forest (Landes de Gascogne,
                Southwestern France) (Article, English)
AUTHOR:         Rossi, JP; Samalens, JC; Guyon, D; van Halder, I;
                Jactel, H; Menassieu, P; Piou, D
SOURCE:         FOREST ECOLOGY AND MANAGEMENT 257 (7). MAR 22 2009.
                p.1551-1557 ELSEVIER SCIENCE BV, AMSTERDAM

SEARCH TERM(S):  RIPLEY BD  rauth; DENSITY ESTIM*  rwork; MULTI*  rwork

KEYWORDS:       Bark beetle; Ips sexdentatus; Pinus pinaster; Spatial
                statistics; Ripley's statistic; Aggregation; Landscape;
                Plantation forest
KEYWORDS+:       POINT PATTERN-ANALYSIS; TYPOGRAPHUS L.; FELLED TREES;
                SPRUCE; SCOLYTIDAE; COLEOPTERA; MANAGEMENT; WINDTHROW;
                RISK; COLONIZATION

AUTHOR ADDRESS: JP Rossi, INRA, UMR BIOGECO, Domaine Hermitage 69 Route
                Arcachon, F-33612 Cestas, France
"""


@pytest.fixture
def research_alert_text():
    return RESEARCH_ALERT_SAMPLE


@pytest.fixture
def personal_alert_text():
    return PERSONAL_ALERT_SAMPLE


_acceptance_outcomes = []


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "acceptance" in getattr(report, "keywords", {}):
        name = report.nodeid.split("::")[-1]
        _acceptance_outcomes.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
