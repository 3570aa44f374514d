from src.application.services.polytope_geometry import face_lattice
from src.application.use_cases.verification_suite import PropertyResult, SuiteReport
from src.presentation.formatters.report_document import (
    EhrhartDocument,
    ReportDocument,
    Verdict,
    VerifyDocument,
)


def _report_document(degree, polytope):
    report = degree.analyze(polytope)
    return ReportDocument.from_analysis(
        polytope,
        face_lattice(polytope),
        degree.ehrhart.ehrhart_vector(polytope),
        report,
        [Verdict(name="check", passed=True)],
    )


def test_report_round_trip(degree, unit_square):
    document = _report_document(degree, unit_square)
    assert ReportDocument.model_validate_json(document.to_json()) == document
    assert document.brion.identity_lhs == "2"
    assert document.ehrhart_vector[2] == ["1", "2", "1"]


def test_report_text(degree, family):
    text = _report_document(degree, family("simplex:2:1")).to_text()
    assert "E_2(t) = 1/2*t^2 + 3/2*t + 1" in text
    assert "[ok] check" in text
    assert "c(P) via volumes:         0" in text


def test_failed_verdict_marks_document(degree, unit_square):
    document = _report_document(degree, unit_square)
    document.verdicts.append(Verdict(name="broken", passed=False))
    assert not document.passed
    assert "[FAIL] broken" in document.to_text()


def test_ehrhart_document(ehrhart, unit_square):
    document = EhrhartDocument.from_tables(
        unit_square,
        face_lattice(unit_square),
        ehrhart.ehrhart_vector(unit_square),
        ehrhart.interior_counts(unit_square, max_dilation=2),
    )
    assert EhrhartDocument.model_validate_json(document.to_json()) == document
    assert [(r.p, r.i, r.count) for r in document.interior_counts] == [
        (0, 1, 4), (0, 2, 4), (1, 1, 0), (1, 2, 4), (2, 1, 0), (2, 2, 1),
    ]


def test_verify_document():
    reports = [
        SuiteReport(suite="a", seed=3, properties=[PropertyResult(name="p", checked=2)]),
        SuiteReport(
            suite="b",
            seed=3,
            properties=[PropertyResult(name="q", checked=1, failed=1, first_failure="n=2")],
        ),
    ]
    document = VerifyDocument.from_reports(3, reports)
    assert not document.passed
    assert [s.passed for s in document.suites] == [True, False]
    assert "first failure: n=2" in document.to_text()
    assert VerifyDocument.model_validate_json(document.to_json()) == document
