"""Range checkers: clean sweeps, determinism, caps, and the OEIS path."""

import pytest

from collatz_lab import verify
from collatz_lab.emit import to_jsonable
from collatz_lab.errors import BFileParseError, ConfigurationError, DomainError
from collatz_lab.oeis import GENERATORS, check_oeis, parse_bfile


CLEAN_SWEEPS = [
    ("covering", 1, 300),
    ("parity-runs", 1, 500),
    ("u-residues", 2, 600),
    ("u-residues-odd-starts", 1, 399),
    ("x-residues", 0, 500),
    ("p3n", 0, 500),
    ("dual-forms", 0, 500),
    ("linear-fixed-point", 2, 600),
    ("conjecture-apt", 1, 300),
    ("conjecture-emapt", 0, 300),
]


@pytest.mark.parametrize("theorem,lo,hi", CLEAN_SWEEPS, ids=[c[0] for c in CLEAN_SWEEPS])
def test_checkers_clean_on_small_ranges(theorem, lo, hi):
    report = verify.run_check(theorem, lo, hi, budget=10_000)
    assert report.violation_count == 0
    assert report.violations == ()
    assert report.budget_exhausted == ()
    assert report.checked > 0
    assert report.theorem_id == theorem


def test_u_residues_allows_off_pattern_first_image():
    # 18 maps to 14, which is 2 mod 6 but not 2 or 8 mod 18; the mod-18
    # pattern is only claimed from the second image onward
    report = verify.check_u_residues(18, 18)
    assert report.checked == 1
    assert report.violation_count == 0


def test_u_residues_rejects_odd_floor():
    with pytest.raises(DomainError):
        verify.check_u_residues(1, 100)


def test_observational_flag():
    assert verify.run_check("u-residues-odd-starts", 1, 9).observational
    assert not verify.run_check("u-residues", 2, 10).observational


def test_conjecture_families():
    apt = verify.check_conjectures(1, 50, family="apt")
    assert apt.theorem_id == "conjecture-apt"
    emapt = verify.check_conjectures(0, 50, family="emapt")
    assert emapt.theorem_id == "conjecture-emapt"
    with pytest.raises(ConfigurationError):
        verify.check_conjectures(1, 50, family="terras")


def test_budget_exhaustion_is_recorded_not_raised():
    report = verify.run_check("conjecture-apt", 1, 9, budget=1)
    assert report.violation_count == 0
    assert report.budget_exhausted == (3, 5, 6, 7, 9)


def test_reports_identical_across_worker_counts():
    reference = None
    for workers in (1, 2, 8):
        report = verify.run_check("covering", 1, 400, budget=10_000, workers=workers)
        snapshot = to_jsonable(report)   # serialized form excludes elapsed
        if reference is None:
            reference = snapshot
        else:
            assert snapshot == reference


def test_run_check_validation():
    with pytest.raises(ConfigurationError):
        verify.run_check("no-such-theorem", 1, 10)
    with pytest.raises(DomainError):
        verify.run_check("covering", 0, 10)        # below the checker floor
    with pytest.raises(DomainError):
        verify.run_check("linear-fixed-point", 1, 10)
    with pytest.raises(DomainError):
        verify.run_check("p3n", 10, 5)             # empty range
    with pytest.raises(DomainError):
        verify.run_check("covering", 1, 10, budget=0)
    with pytest.raises(ConfigurationError):
        verify.run_check("covering", 1, 10, cap=0)


def _always_bad_span(lo, hi, budget):
    return hi - lo + 1, [(n, "synthetic") for n in range(lo, hi + 1)], []


def test_violation_cap_keeps_total_count(monkeypatch):
    monkeypatch.setitem(
        verify.CHECKERS, "synthetic", verify.CheckerSpec(_always_bad_span, 0)
    )
    report = verify.run_check("synthetic", 1, 100, cap=5)
    assert report.violation_count == 100
    assert len(report.violations) == 5
    assert [v.input for v in report.violations] == [1, 2, 3, 4, 5]


def test_violations_sorted_across_chunks(monkeypatch):
    monkeypatch.setitem(
        verify.CHECKERS, "synthetic", verify.CheckerSpec(_always_bad_span, 0)
    )
    report = verify.run_check("synthetic", 1, 200, workers=4, cap=200)
    inputs = [v.input for v in report.violations]
    assert inputs == sorted(inputs) == list(range(1, 201))


# --- OEIS cross-checks -------------------------------------------------------


def test_parse_bfile_basic():
    assert parse_bfile("1 1\n2 2\n3 1") == [(1, 1), (2, 2), (3, 1)]
    assert parse_bfile("# comment\n0 0") == [(0, 0)]
    assert parse_bfile("\n\n1 5\n\n# x\n2 7\n") == [(1, 5), (2, 7)]


def test_parse_bfile_errors():
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("1 x")
    assert exc.value.line_no == 1
    with pytest.raises(BFileParseError):
        parse_bfile("1 1 1")
    with pytest.raises(BFileParseError) as exc:
        parse_bfile("2 1\n1 2")
    assert exc.value.line_no == 2
    with pytest.raises(BFileParseError):
        parse_bfile("5 1\n5 2")   # repeated index


@pytest.mark.parametrize(
    "generator,fixture",
    [
        ("ruler", "b001511.txt"),
        ("interleave_p", "b025480.txt"),
        ("w_candidate", "b007310.txt"),
    ],
)
def test_check_oeis_against_fixtures(generator, fixture, data_dir):
    content = (data_dir / fixture).read_text()
    report = check_oeis(content, generator, count=2000)
    assert report.violation_count == 0
    assert report.checked == 2000
    assert report.theorem_id == f"oeis-{GENERATORS[generator].oeis_id}-{generator}"


def test_check_oeis_flags_divergence():
    content = "1 1\n2 2\n3 9\n4 3"
    report = check_oeis(content, "ruler", count=4)
    assert report.violation_count == 1
    assert report.violations[0].input == 3
    assert "file has 9" in report.violations[0].detail


def test_check_oeis_configuration_errors():
    with pytest.raises(ConfigurationError):
        check_oeis("1 1", "fibonacci", count=1)
    with pytest.raises(ConfigurationError):
        check_oeis("1 1", "ruler", count=0)
    with pytest.raises(ConfigurationError):
        check_oeis("1 1", "ruler", count=5)       # too few terms
    with pytest.raises(ConfigurationError):
        check_oeis("0 0\n1 1", "ruler", count=2)  # offset mismatch
