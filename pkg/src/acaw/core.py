"""Bounded one-dimensional cellular automata with unanimous acceptance.

A machine runs on a fixed window of cells, one per input symbol, flanked on
both sides by a permanently inactive border.  All active cells update
synchronously under a radius-1 local rule; border positions never change and
no active cell may turn inactive.  An acceptor stops at the first step whose
configuration is uniformly accepting.  A decider additionally carries a
disjoint set of rejecting states and the chronologically first uniformly
accepting or uniformly rejecting configuration fixes the verdict.
"""

from __future__ import annotations

import weakref
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional

ACCEPT = "accept"
REJECT = "reject"
TIMEOUT = "timeout"

# Step budget used by harnesses when the caller gives none: generous enough
# for every construction in this package (all run in at most ~8.5*sqrt(n)
# steps on any input) yet linear, so runaway rules are cut off quickly.
def default_max_steps(n: int) -> int:
    return 4 * n + 16


_CYCLE_WINDOW = 16


class AcawError(Exception):
    """Base class for errors raised by this package."""


class AlphabetError(AcawError):
    """A symbol or state fell outside the machine's declared sets."""


class EmptyInputError(AcawError):
    """Runs are defined on non-empty words only."""


class ModeError(AcawError):
    """An acceptor was used as a decider or the other way around."""


class BudgetError(AcawError):
    """A step or size precondition was violated."""


class ParameterError(AcawError):
    """A construction was asked for a parameter outside its domain."""


class _Inactive:
    """The reserved border state.  A singleton; rendered as ``q``."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "q"

    def __str__(self) -> str:
        return "q"


INACTIVE = _Inactive()


@dataclass(frozen=True)
class Automaton:
    """A radius-1 machine with unanimous-acceptance semantics.

    ``rule`` maps (left, centre, right) states to the centre's next state.
    The flanking arguments may be :data:`INACTIVE`; the centre never is, and
    the rule must never output :data:`INACTIVE` (the engine enforces this at
    runtime).  Input symbols double as initial cell states, so ``accepting``
    and ``rejecting`` must be total over every reachable state including the
    raw symbols.  ``rejecting`` is ``None`` exactly for plain acceptors.
    ``states`` enumerates the full active state set when it is small enough
    to write down; machines whose states are generated on the fly leave it
    ``None`` (they cannot be validated exhaustively or saved to rule files).
    """

    name: str
    input_alphabet: tuple[str, ...]
    rule: Callable[[Any, Any, Any], Any]
    accepting: Callable[[Any], bool]
    rejecting: Optional[Callable[[Any], bool]] = None
    states: Optional[tuple] = None
    # Machines that settle within a fixed number of steps independent of the
    # input length record that constant here; the run helpers widen the
    # default step budget to cover it.  None means no such promise.
    time_bound: Optional[int] = None

    @property
    def is_decider(self) -> bool:
        return self.rejecting is not None


def set_automaton(
    name: str,
    input_alphabet: Iterable[str],
    rule: Callable[[Any, Any, Any], Any],
    accept_states: Iterable[Any],
    reject_states: Optional[Iterable[Any]] = None,
    states: Optional[Iterable[Any]] = None,
) -> Automaton:
    """Build an :class:`Automaton` from explicit accept/reject state sets."""
    accept = frozenset(accept_states)
    if not accept:
        raise AlphabetError(f"{name}: accept set must be non-empty")
    reject = frozenset(reject_states) if reject_states is not None else None
    if reject is not None and accept & reject:
        raise AlphabetError(f"{name}: accept and reject sets overlap")
    return Automaton(
        name=name,
        input_alphabet=tuple(input_alphabet),
        rule=rule,
        accepting=accept.__contains__,
        rejecting=reject.__contains__ if reject is not None else None,
        states=tuple(states) if states is not None else None,
    )


@dataclass(frozen=True)
class Trace:
    """The configuration sequence of one run, step 0 first."""

    automaton: Automaton
    configurations: tuple[tuple, ...]

    def rows(self) -> list[str]:
        return [render_configuration(c) for c in self.configurations]


@dataclass(frozen=True)
class Verdict:
    kind: str  # ACCEPT, REJECT or TIMEOUT
    steps: Optional[int]  # None for timeouts
    trace: Optional[Trace] = None

    @property
    def accepted(self) -> bool:
        return self.kind == ACCEPT


def render_configuration(config: Iterable[Any]) -> str:
    """One trace row: cells space-separated, a single border q on each side."""
    return "q " + " ".join(str(s) for s in config) + " q"


def initial_configuration(automaton: Automaton, word: Iterable[str]) -> tuple:
    symbols = tuple(word)
    alphabet = set(automaton.input_alphabet)
    for s in symbols:
        if s not in alphabet:
            raise AlphabetError(
                f"{automaton.name}: input symbol {s!r} is not in the alphabet"
            )
    return symbols


def global_step(automaton: Automaton, config: tuple) -> tuple:
    """Apply the local rule once to every active cell."""
    rule = automaton.rule
    n = len(config)
    out = []
    for i, centre in enumerate(config):
        left = config[i - 1] if i > 0 else INACTIVE
        right = config[i + 1] if i + 1 < n else INACTIVE
        new = rule(left, centre, right)
        if isinstance(new, _Inactive):
            raise AlphabetError(f"{automaton.name}: rule drove an active cell inactive")
        out.append(new)
    return tuple(out)


def classify(automaton: Automaton, config: Iterable[Any]) -> Optional[str]:
    """ACCEPT / REJECT / None for one configuration.

    The uniform-accept test runs first; on an empty window it holds
    vacuously, which never arises in a run because empty inputs are barred.
    Disjointness of the accept and reject sets makes the order immaterial
    for non-empty windows.
    """
    cells = tuple(config)
    if all(automaton.accepting(s) for s in cells):
        return ACCEPT
    if automaton.rejecting is not None and all(automaton.rejecting(s) for s in cells):
        return REJECT
    return None


def configurations(
    automaton: Automaton, word: Iterable[str], max_steps: Optional[int] = None
) -> Iterator[tuple]:
    """Yield the raw evolution: step-0 configuration, then one per step.

    Does not stop at final configurations (callers classify); stops after
    ``max_steps`` steps or as soon as the evolution provably cycles, since a
    deterministic repeat can never reach a configuration not already seen.
    """
    config = initial_configuration(automaton, word)
    if not config:
        raise EmptyInputError(f"{automaton.name}: no run on the empty word")
    if max_steps is None:
        max_steps = default_max_steps(len(config))
        if automaton.time_bound is not None:
            max_steps = max(max_steps, automaton.time_bound + 1)
    yield config
    recent: deque = deque(maxlen=_CYCLE_WINDOW)
    seen = set()
    recent.append(config)
    seen.add(config)
    for _ in range(max_steps):
        config = global_step(automaton, config)
        if config in seen:
            return
        yield config
        if len(recent) == _CYCLE_WINDOW:
            seen.discard(recent.popleft())
        recent.append(config)
        seen.add(config)


def validate(automaton: Automaton) -> None:
    """Exhaustively check an enumerated machine's static invariants.

    Requires ``states``.  Verifies the alphabet is contained in the state
    set, accept/reject sets are disjoint and non-empty where required, and
    the rule is total and never deactivates a live cell (the border state is
    handled by the engine, never by the rule).
    """
    if automaton.states is None:
        raise ParameterError(f"{automaton.name}: state set is not enumerable")
    states = tuple(automaton.states)
    state_set = set(states)
    if any(isinstance(s, _Inactive) for s in state_set):
        raise AlphabetError(f"{automaton.name}: the border state is not listable")
    for a in automaton.input_alphabet:
        if a not in state_set:
            raise AlphabetError(f"{automaton.name}: input symbol {a!r} not a state")
    for s in states:
        if automaton.accepting(s) and automaton.rejecting and automaton.rejecting(s):
            raise AlphabetError(f"{automaton.name}: state {s!r} both accepts and rejects")
    flanks = states + (INACTIVE,)
    for z1 in flanks:
        for z2 in states:
            for z3 in flanks:
                out = automaton.rule(z1, z2, z3)
                if out not in state_set:
                    raise AlphabetError(
                        f"{automaton.name}: rule output {out!r} on "
                        f"({z1!r}, {z2!r}, {z3!r}) is not a state"
                    )


class _Runner:
    """Per-machine cache: states interned to ints, the rule memoized on triples."""

    def __init__(self, automaton: Automaton):
        self.automaton = automaton
        self.objs: list = [INACTIVE]
        self.ids: dict = {INACTIVE: 0}
        self.table: dict = {}
        self.acc = [False]  # by state id; the border is neither
        self.rej = [False]

    def intern(self, state: Any) -> int:
        sid = self.ids.get(state)
        if sid is None:
            sid = len(self.objs)
            self.ids[state] = sid
            self.objs.append(state)
            aut = self.automaton
            self.acc.append(bool(aut.accepting(state)))
            self.rej.append(bool(aut.rejecting(state)) if aut.rejecting else False)
        return sid

    def step(self, config: list) -> list:
        table = self.table
        n = len(config)
        out = [0] * n
        left = 0
        for i in range(n):
            centre = config[i]
            right = config[i + 1] if i + 1 < n else 0
            key = (left, centre, right)
            new = table.get(key)
            if new is None:
                new = self._miss(key)
            out[i] = new
            left = centre
        return out

    def _miss(self, key: tuple) -> int:
        z1, z2, z3 = key
        res = self.automaton.rule(self.objs[z1], self.objs[z2], self.objs[z3])
        if isinstance(res, _Inactive):
            raise AlphabetError(
                f"{self.automaton.name}: rule drove an active cell inactive"
            )
        rid = self.intern(res)
        self.table[key] = rid
        return rid

    def finality(self, config: list, want_reject: bool) -> Optional[str]:
        acc = self.acc
        if all(acc[s] for s in config):
            return ACCEPT
        if want_reject:
            rej = self.rej
            if all(rej[s] for s in config):
                return REJECT
        return None


_RUNNERS: "weakref.WeakKeyDictionary[Automaton, _Runner]" = weakref.WeakKeyDictionary()


def _runner_for(automaton: Automaton) -> _Runner:
    runner = _RUNNERS.get(automaton)
    if runner is None:
        runner = _Runner(automaton)
        _RUNNERS[automaton] = runner
    return runner


def _run(
    automaton: Automaton,
    word: Iterable[str],
    max_steps: Optional[int],
    collect_trace: bool,
    want_reject: bool,
) -> Verdict:
    symbols = initial_configuration(automaton, word)
    if not symbols:
        raise EmptyInputError(f"{automaton.name}: no run on the empty word")
    if max_steps is None:
        max_steps = default_max_steps(len(symbols))
        if automaton.time_bound is not None:
            max_steps = max(max_steps, automaton.time_bound + 1)
    runner = _runner_for(automaton)
    config = [runner.intern(s) for s in symbols]
    objs = runner.objs
    raw_configs = [tuple(objs[s] for s in config)] if collect_trace else None

    def verdict(kind: str, steps: Optional[int]) -> Verdict:
        trace = None
        if collect_trace:
            trace = Trace(automaton, tuple(raw_configs))
        return Verdict(kind, steps, trace)

    outcome = runner.finality(config, want_reject)
    if outcome is not None:
        return verdict(outcome, 0)
    recent: deque = deque(maxlen=_CYCLE_WINDOW)
    seen = set()
    key = tuple(config)
    recent.append(key)
    seen.add(key)
    for t in range(1, max_steps + 1):
        config = runner.step(config)
        key = tuple(config)
        if key in seen:
            # A repeat pins the whole future orbit to configurations already
            # classified as non-final, so the run can never terminate.
            return verdict(TIMEOUT, None)
        if collect_trace:
            raw_configs.append(tuple(objs[s] for s in config))
        outcome = runner.finality(config, want_reject)
        if outcome is not None:
            return verdict(outcome, t)
        if len(recent) == _CYCLE_WINDOW:
            seen.discard(recent.popleft())
        recent.append(key)
        seen.add(key)
    return verdict(TIMEOUT, None)


def run_acceptor(
    automaton: Automaton,
    word: Iterable[str],
    max_steps: Optional[int] = None,
    collect_trace: bool = False,
) -> Verdict:
    """Run until the first uniformly accepting configuration or the budget.

    The verdict step count is the minimal step index of an accepting
    configuration; step 0 (the untouched input) counts.
    """
    if automaton.is_decider:
        raise ModeError(f"{automaton.name} is a decider; use run_decider")
    return _run(automaton, word, max_steps, collect_trace, want_reject=False)


def run_decider(
    automaton: Automaton,
    word: Iterable[str],
    max_steps: Optional[int] = None,
    collect_trace: bool = False,
) -> Verdict:
    """Run until the chronologically first accepting or rejecting configuration.

    A timeout is possible only for broken deciders and is reported as a
    diagnostic rather than an error.
    """
    if not automaton.is_decider:
        raise ModeError(f"{automaton.name} is an acceptor; use run_acceptor")
    return _run(automaton, word, max_steps, collect_trace, want_reject=True)
