"""Timing curves, bound fitting, CSV serialization, equivalence checking."""

import math

import pytest

from acaw import (
    ACCEPT,
    REJECT,
    TIMEOUT,
    BenchRow,
    FAMILIES,
    ModeError,
    ParameterError,
    fit_bound,
    measure_time_curve,
    read_rows,
    verify_equivalence,
    write_rows,
    zoo_automaton,
)


def test_csv_round_trip(tmp_path):
    rows = [
        BenchRow("idmat", 3, 11, ACCEPT, 12),
        BenchRow("idmat", 4, 19, TIMEOUT, None),
        BenchRow("someone", 1, 1, REJECT, 1),
    ]
    path = tmp_path / "curve.csv"
    write_rows(path, rows)
    assert read_rows(path) == rows
    first = path.read_text().splitlines()[0]
    assert first == "family,k,n,verdict,steps"


@pytest.mark.parametrize(
    "content",
    [
        "",  # empty file
        "family,k,n,steps,verdict\n",  # scrambled header
        "family,k,n,verdict,steps\nidmat,1,1,maybe,3\n",  # bad verdict
        "family,k,n,verdict,steps\nidmat,one,1,accept,3\n",  # non-integer k
        "family,k,n,verdict,steps\nidmat,1,1,accept\n",  # missing field
    ],
)
def test_read_rows_rejects_malformed(tmp_path, content):
    path = tmp_path / "bad.csv"
    path.write_text(content)
    with pytest.raises(ParameterError):
        read_rows(path)


def test_measure_acceptor_curve():
    rows = measure_time_curve(FAMILIES["zeros"], range(1, 6))
    assert len(rows) == 5
    for k, row in zip(range(1, 6), rows):
        assert (row.family, row.k, row.n) == ("zeros", k, k)
        assert (row.verdict, row.steps) == (ACCEPT, 0)


def test_measure_decider_curve_adds_corruptions():
    rows = measure_time_curve(FAMILIES["someone"], range(2, 6), mode="decider")
    # per k: the member, plus the single corruption that leaves the language
    # (zeroing the lone 1; turning any 0 into a 1 keeps the word a member)
    assert len(rows) == 8
    members = [r for r in rows if r.verdict == ACCEPT]
    rejects = [r for r in rows if r.verdict == REJECT]
    assert len(members) == len(rejects) == 4
    assert all(r.steps <= 2 for r in members)
    assert all(r.steps == 1 for r in rejects)
    bare = measure_time_curve(
        FAMILIES["someone"], range(2, 6), mode="decider", perturb=False
    )
    assert len(bare) == 4
    assert all(r.verdict == ACCEPT for r in bare)


def test_measure_mode_errors():
    with pytest.raises(ModeError):
        measure_time_curve(FAMILIES["zeros"], [1], mode="decider")
    with pytest.raises(ModeError):
        measure_time_curve(FAMILIES["someone"], [1], mode="acceptor")
    with pytest.raises(ParameterError):
        measure_time_curve(FAMILIES["zeros"], [1], mode="oracle")


def test_fit_bound_constant_and_divergence():
    rows = [BenchRow("fake", n, n, ACCEPT, n) for n in range(1, 9)]
    report = fit_bound(rows, "log", ceiling=10)
    ratios = [n / math.log2(max(n, 2)) for n in range(1, 9)]
    assert report.constant == pytest.approx(max(ratios))
    assert report.divergence == pytest.approx(min(ratios[-2:]))  # top quartile
    assert report.rows_used == 8
    assert report.passed
    linear = fit_bound(rows, "linear", ceiling=1.0)
    assert linear.constant == pytest.approx(1.0)
    assert linear.passed


def test_fit_bound_detects_divergence():
    rows = [BenchRow("fake", n, n, ACCEPT, 5 * n) for n in range(1, 33)]
    report = fit_bound(rows, "const", ceiling=10)
    assert not report.passed
    assert report.divergence > report.ceiling  # genuinely outgrows the bound


def test_fit_bound_errors():
    rows = [BenchRow("fake", 1, 1, ACCEPT, 1)]
    with pytest.raises(ParameterError):
        fit_bound(rows, "cubic", 1)
    with pytest.raises(ParameterError):
        fit_bound([], "const", 1)
    with pytest.raises(ParameterError):
        fit_bound([BenchRow("fake", 1, 1, TIMEOUT, None)], "const", 1)


def test_fit_bound_on_real_curves():
    idmat = measure_time_curve(FAMILIES["idmat"], range(1, 13))
    assert fit_bound(idmat, "sqrt", ceiling=6).passed
    someone = measure_time_curve(FAMILIES["someone"], range(1, 51), mode="decider")
    report = fit_bound(someone, "const", ceiling=2)
    assert report.passed
    assert report.constant == pytest.approx(2.0)
    bins = measure_time_curve(FAMILIES["bin"], range(1, 7))
    assert fit_bound(bins, "log", ceiling=30).passed


def test_verify_equivalence_acceptor():
    report = verify_equivalence(
        zoo_automaton("pair01"), lambda w: w == "01" * (len(w) // 2), 6
    )
    assert report.ok
    assert report.words_checked == sum(2**i for i in range(1, 7))
    lying = verify_equivalence(zoo_automaton("pair01"), lambda w: True, 4)
    assert not lying.ok
    assert ("0", TIMEOUT, True) in lying.mismatches


def test_verify_equivalence_decider():
    dec = zoo_automaton("someone", decider=True)
    report = verify_equivalence(dec, lambda w: "1" in w, 7, mode="decider")
    assert report.ok
    # a starved decider times out, and decider mode treats that as a mismatch
    starved = verify_equivalence(dec, lambda w: "1" in w, 3, mode="decider", max_steps=0)
    assert len(starved.mismatches) == starved.words_checked


def test_verify_equivalence_errors():
    dec = zoo_automaton("someone", decider=True)
    acc = zoo_automaton("pair01")
    with pytest.raises(ModeError):
        verify_equivalence(dec, lambda w: True, 3, mode="acceptor")
    with pytest.raises(ModeError):
        verify_equivalence(acc, lambda w: True, 3, mode="decider")
    with pytest.raises(ParameterError):
        verify_equivalence(acc, lambda w: True, 0)
    with pytest.raises(ParameterError):
        verify_equivalence(acc, lambda w: True, 3, mode="oracle")
