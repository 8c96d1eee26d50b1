import io

from docx import Document

from core.reporter import generate_word_report
from utils.suite_registry import SuiteRegistry


def _paragraphs(data: bytes):
    return Document(io.BytesIO(data)).paragraphs


def test_word_report_structure():
    markdown = "## Sample suite (sample)\n\n**Verdict:** PASS\n\n### Checks\n- **PASS** lines agree: 4 sextuples\n"
    data = generate_word_report([markdown], title="Sample Report")
    assert data[:2] == b"PK"
    paragraphs = _paragraphs(data)
    assert (paragraphs[0].text, paragraphs[0].style.name) == ("Sample Report", "Title")
    styles = {p.text: p.style.name for p in paragraphs}
    assert styles["Sample suite (sample)"] == "Heading 1"
    assert styles["Checks"] == "Heading 2"
    assert styles["PASS lines agree: 4 sextuples"] == "List Bullet"


def test_verdicts_are_bold():
    data = generate_word_report(["- **FAIL** points collinear: 1 of 3 sextuples failed"])
    bullet = [p for p in _paragraphs(data) if p.style.name == "List Bullet"][0]
    assert bullet.runs[0].text == "FAIL"
    assert bullet.runs[0].bold


def test_several_suites_in_one_document():
    reports = [SuiteRegistry.get_handler(suite_id).run(seed=2) for suite_id in ('prop-2-2', 'example-3-3')]
    data = generate_word_report(report.to_markdown() for report in reports)
    headings = [p.text for p in _paragraphs(data) if p.style.name == "Heading 1"]
    assert len(headings) == 2
    assert headings[1].startswith("Worked triple-point degeneration")
