"""Timing curves, growth-bound fitting, and machine-vs-predicate checks.

A curve is a list of rows (family, k, n, verdict, steps) obtained by running
a machine on a family's indexed member words; decider curves additionally
run single-symbol corruptions of each member, since a decider's interesting
cost is often on near-members.  Fitting a curve against a growth bound
reports the smallest constant c with steps <= c * bound(n) over every row,
which passes when c stays below the caller's ceiling.  The divergence figure
is the smallest ratio among the largest inputs; when even that exceeds the
ceiling, the data genuinely outgrows the bound and no small-n accident is
responsible.
"""

from __future__ import annotations

import csv
import math
import pathlib
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .core import (
    ACCEPT,
    REJECT,
    TIMEOUT,
    Automaton,
    ModeError,
    ParameterError,
    run_acceptor,
    run_decider,
)

CSV_HEADER = ("family", "k", "n", "verdict", "steps")

_BOUNDS: dict[str, Callable[[int], float]] = {
    "const": lambda n: 1.0,
    "log": lambda n: math.log2(max(n, 2)),
    "sqrt": lambda n: max(math.sqrt(n), 1.0),
    "linear": lambda n: float(n),
}


@dataclass(frozen=True)
class BenchRow:
    family: str
    k: int
    n: int
    verdict: str
    steps: Optional[int]  # None exactly for timeouts


def write_rows(path, rows: Iterable[BenchRow]) -> None:
    path = pathlib.Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(
                [
                    row.family,
                    row.k,
                    row.n,
                    row.verdict,
                    "" if row.steps is None else row.steps,
                ]
            )


def read_rows(path) -> list[BenchRow]:
    path = pathlib.Path(path)
    with path.open(newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParameterError(f"{path}: empty file") from None
        if tuple(header) != CSV_HEADER:
            raise ParameterError(
                f"{path}: header must be exactly {','.join(CSV_HEADER)}"
            )
        rows = []
        for lineno, record in enumerate(reader, 2):
            if not record:
                continue
            if len(record) != 5:
                raise ParameterError(f"{path}:{lineno}: expected 5 fields")
            family, k, n, verdict, steps = record
            if verdict not in (ACCEPT, REJECT, TIMEOUT):
                raise ParameterError(f"{path}:{lineno}: bad verdict {verdict!r}")
            try:
                rows.append(
                    BenchRow(
                        family=family,
                        k=int(k),
                        n=int(n),
                        verdict=verdict,
                        steps=None if steps == "" else int(steps),
                    )
                )
            except ValueError:
                raise ParameterError(f"{path}:{lineno}: non-integer field") from None
    return rows


def _perturbations(word: str, alphabet: tuple) -> Iterable[str]:
    """Single-symbol corruptions at the ends and the middle."""
    n = len(word)
    for pos in sorted({0, n // 2, n - 1}):
        for sym in alphabet:
            if sym != word[pos]:
                yield word[:pos] + sym + word[pos + 1 :]


def measure_time_curve(
    family,
    k_range: Iterable[int],
    mode: str = "acceptor",
    max_steps: Optional[int] = None,
    perturb: bool = True,
) -> list[BenchRow]:
    """Run one machine over a family's words and tabulate verdicts and steps.

    Acceptor mode runs the member words alone.  Decider mode adds, for each
    member, every single-symbol corruption at the first, middle, and last
    position that does not happen to land back inside the language, so the
    curve witnesses rejection times as well.
    """
    if mode == "acceptor":
        if family.acceptor is None:
            raise ModeError(f"{family.name} has no acceptor")
        automaton = family.acceptor()
        runner = run_acceptor
    elif mode == "decider":
        if family.decider is None:
            raise ModeError(f"{family.name} has no decider")
        automaton = family.decider()
        runner = run_decider
    else:
        raise ParameterError(f"mode must be acceptor or decider, not {mode!r}")
    rows = []

    def measure(k: int, word: str) -> None:
        verdict = runner(automaton, word, max_steps=max_steps)
        rows.append(BenchRow(family.name, k, len(word), verdict.kind, verdict.steps))

    for k in k_range:
        word = family.generate(k)
        measure(k, word)
        if mode == "decider" and perturb:
            for variant in _perturbations(word, family.alphabet):
                if not family.is_member(variant):
                    measure(k, variant)
    return rows


@dataclass(frozen=True)
class FitReport:
    bound: str
    ceiling: float
    constant: float  # smallest c with steps <= c * bound(n) on every row
    divergence: float  # min ratio over the largest-n quartile
    rows_used: int

    @property
    def passed(self) -> bool:
        return self.constant <= self.ceiling


def fit_bound(rows: Iterable[BenchRow], bound: str, ceiling: float) -> FitReport:
    """Fit steps <= c * bound(n) over the rows and compare c to the ceiling.

    Timed-out rows have no step count and make the fit meaningless, so they
    raise; filter them out first if timing out is expected behaviour.
    """
    if bound not in _BOUNDS:
        raise ParameterError(
            f"unknown bound {bound!r}; choose from {sorted(_BOUNDS)}"
        )
    rows = list(rows)
    if not rows:
        raise ParameterError("cannot fit an empty curve")
    for row in rows:
        if row.steps is None:
            raise ParameterError(
                f"{row.family} k={row.k}: timed out; no step count to fit"
            )
    fn = _BOUNDS[bound]
    ratios = sorted((row.n, row.steps / fn(row.n)) for row in rows)
    constant = max(r for _, r in ratios)
    quartile = max(1, len(ratios) // 4)
    divergence = min(r for _, r in ratios[-quartile:])
    return FitReport(
        bound=bound,
        ceiling=float(ceiling),
        constant=constant,
        divergence=divergence,
        rows_used=len(rows),
    )


@dataclass(frozen=True)
class VerifyReport:
    automaton: str
    oracle: str
    mode: str
    max_len: int
    words_checked: int
    mismatches: list = field(hash=False)  # (word, verdict kind, oracle bit)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _lex_words(alphabet: tuple, max_len: int) -> Iterable[str]:
    symbols = sorted(alphabet)
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + s for w in frontier for s in symbols]
        yield from frontier


def verify_equivalence(
    automaton: Automaton,
    oracle: Callable[[str], bool],
    max_len: int,
    mode: str = "acceptor",
    max_steps: Optional[int] = None,
) -> VerifyReport:
    """Compare a machine against a membership predicate on all short words.

    Acceptor mode demands accept exactly on oracle-positive words, with a
    timeout counting as a plain non-accept.  Decider mode demands the
    matching verdict on every word and treats any timeout as a mismatch,
    since a decider must always answer.
    """
    if max_len < 1:
        raise ParameterError("max_len must be >= 1")
    if mode == "acceptor":
        if automaton.is_decider:
            raise ModeError(f"{automaton.name} is a decider")
        runner = run_acceptor
    elif mode == "decider":
        if not automaton.is_decider:
            raise ModeError(f"{automaton.name} is an acceptor")
        runner = run_decider
    else:
        raise ParameterError(f"mode must be acceptor or decider, not {mode!r}")
    mismatches = []
    checked = 0
    for word in _lex_words(automaton.input_alphabet, max_len):
        checked += 1
        verdict = runner(automaton, word, max_steps=max_steps)
        want = bool(oracle(word))
        if mode == "acceptor":
            bad = (verdict.kind == ACCEPT) != want
        else:
            bad = verdict.kind != (ACCEPT if want else REJECT)
        if bad:
            mismatches.append((word, verdict.kind, want))
    return VerifyReport(
        automaton=automaton.name,
        oracle=getattr(oracle, "__name__", "oracle"),
        mode=mode,
        max_len=max_len,
        words_checked=checked,
        mismatches=mismatches,
    )
