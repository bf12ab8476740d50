"""Sliding-window language tests and their constant-time compilations.

A scanner checks a word with one window predicate: the length-k prefix must
lie in ``pi``, every length-k infix in ``mu``, and the length-k suffix in
``sigma``.  Boolean combinations of scanners form the locally testable
languages; membership then depends only on the word's profile, the triple
(prefix, infix set, suffix) at the expression's window size.

Both compilers below share one machine skeleton: every cell copies one more
symbol from each side per step until it holds its radius-G neighborhood,
with the border padded by ``q``; after that a phase counter walks a fixed
checkpoint schedule.  At a checkpoint every cell either shows the machine's
accept face (or reject face, for deciders) or stays neutral, and the
all-cells acceptance condition turns the conjunction of the per-cell window
certificates into exactly the scanner/profile predicate.  The schedule
length depends only on the compiled expression, which is what makes the
results constant-time.
"""

from __future__ import annotations

import itertools
import pathlib
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

_TABULATE_STEP_CEILING = 10_000

from .core import (
    AlphabetError,
    Automaton,
    EmptyInputError,
    ModeError,
    ParameterError,
    global_step,
    initial_configuration,
)
from .rulefile import RuleFileError, serialize_rules


@dataclass(frozen=True)
class Scanner:
    """One window test: prefix set, infix set, suffix set at width k."""

    k: int
    alphabet: tuple
    pi: frozenset
    sigma: frozenset
    mu: frozenset
    name: str = "scanner"

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"{self.name}: window width must be >= 1")
        symbols = set(self.alphabet)
        if "q" in symbols:
            raise ParameterError(f"{self.name}: the symbol q is reserved")
        for label, words, exact in (
            ("pi", self.pi, False),
            ("sigma", self.sigma, False),
            ("mu", self.mu, True),
        ):
            for w in words:
                if not w or (len(w) != self.k if exact else len(w) > self.k):
                    raise ParameterError(
                        f"{self.name}: {label} word {w!r} has a bad length for k={self.k}"
                    )
                if not set(w) <= symbols:
                    raise ParameterError(
                        f"{self.name}: {label} word {w!r} leaves the alphabet"
                    )


def _check_symbols(word: str, alphabet, where: str) -> None:
    extra = set(word) - set(alphabet)
    if extra:
        raise AlphabetError(f"{where}: symbols {sorted(extra)} outside the alphabet")


def scanner_accepts(scanner: Scanner, word: str) -> bool:
    """Reference semantics of one scanner.

    Words shorter than k are never accepted: their infix set is the word
    itself, which cannot lie inside a set of length-k windows.
    """
    if not word:
        raise EmptyInputError("scanners take non-empty words")
    _check_symbols(word, scanner.alphabet, scanner.name)
    k = scanner.k
    if len(word) < k:
        return False
    if word[:k] not in scanner.pi or word[-k:] not in scanner.sigma:
        return False
    return all(word[i : i + k] in scanner.mu for i in range(len(word) - k + 1))


@dataclass(frozen=True)
class LTExpression:
    """Boolean tree over scanners; complement is relative to the non-empty words."""

    op: str  # 'scanner', 'or', 'and', 'not'
    children: tuple = ()
    scanner: Optional[Scanner] = None

    def __post_init__(self):
        if self.op == "scanner":
            if self.scanner is None or self.children:
                raise ParameterError("scanner node needs a scanner and no children")
        elif self.op == "not":
            if len(self.children) != 1:
                raise ParameterError("negation takes exactly one operand")
        elif self.op in ("or", "and"):
            if not self.children:
                raise ParameterError(f"{self.op} needs at least one operand")
        else:
            raise ParameterError(f"unknown operator {self.op!r}")

    def leaves(self) -> list[Scanner]:
        if self.op == "scanner":
            return [self.scanner]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    @property
    def alphabet(self) -> tuple:
        alphabets = {leaf.alphabet for leaf in self.leaves()}
        if len(alphabets) != 1:
            raise AlphabetError("expression mixes scanner alphabets")
        return next(iter(alphabets))

    @property
    def window(self) -> int:
        return max(leaf.k for leaf in self.leaves())


def lt_scanner(scanner: Scanner) -> LTExpression:
    return LTExpression("scanner", scanner=scanner)


def lt_or(*children: LTExpression) -> LTExpression:
    return LTExpression("or", children=tuple(children))


def lt_and(*children: LTExpression) -> LTExpression:
    return LTExpression("and", children=tuple(children))


def lt_not(child: LTExpression) -> LTExpression:
    return LTExpression("not", children=(child,))


def lt_eval(expr: LTExpression, word: str) -> bool:
    """Reference evaluator; ground truth for every compiler in this module."""
    if not word:
        raise EmptyInputError("locally testable languages live inside the non-empty words")
    if expr.op == "scanner":
        return scanner_accepts(expr.scanner, word)
    if expr.op == "not":
        return not lt_eval(expr.children[0], word)
    results = (lt_eval(child, word) for child in expr.children)
    return any(results) if expr.op == "or" else all(results)


def profile_key(word: str, k: int):
    """The (prefix, infix set, suffix) triple at width k; short words stand alone."""
    if len(word) < k:
        return ("short", word)
    infixes = frozenset(word[i : i + k] for i in range(len(word) - k + 1))
    return (word[:k], infixes, word[-k:])


@dataclass(frozen=True)
class ProfileTable:
    """Membership bit for every profile triple any word can realize."""

    k: int
    alphabet: tuple
    bits: dict = field(hash=False)
    realizers: dict = field(hash=False)  # one witness word per triple


def _extend_key(key, letter: str, k: int):
    if key[0] == "short":
        word = key[1] + letter
        if len(word) < k:
            return ("short", word)
        return (word, frozenset((word,)), word)
    prefix, infixes, suffix = key
    new_suffix = (suffix + letter)[1:]
    return (prefix, infixes | {new_suffix}, new_suffix)


def lt_profile_table(expr: LTExpression) -> ProfileTable:
    """Every realizable profile with its verdict, by a walk on profile space.

    Appending a letter changes a profile in a way that depends on the profile
    alone, so breadth-first search from the one-letter words visits each
    realizable triple exactly once and carries a short realizing word along.
    """
    k = expr.window
    alphabet = tuple(sorted(expr.alphabet))
    realizers: dict = {}
    queue = []
    for letter in alphabet:
        key = profile_key(letter, k)
        if key not in realizers:
            realizers[key] = letter
            queue.append(key)
    while queue:
        key = queue.pop(0)
        word = realizers[key]
        for letter in alphabet:
            nxt = _extend_key(key, letter, k)
            if nxt not in realizers:
                realizers[nxt] = word + letter
                queue.append(nxt)
    bits = {key: lt_eval(expr, word) for key, word in realizers.items()}
    return ProfileTable(k=k, alphabet=alphabet, bits=bits, realizers=realizers)


# ---------------------------------------------------------------------------
# The shared window-gathering skeleton.


class WState(NamedTuple):
    phase: int
    window: tuple  # symbols at offsets -phase..phase, 'q' beyond the border


def _at(window: tuple, d: int) -> str:
    center = len(window) // 2
    i = center + d
    return window[i] if 0 <= i < len(window) else "q"


class _WindowRule:
    def __init__(self, gather: int, cap: int):
        self.gather = gather
        self.cap = cap

    def __call__(self, left, center, right):
        if not isinstance(center, WState):
            lsym = left if isinstance(left, str) else "q"
            rsym = right if isinstance(right, str) else "q"
            return WState(1, (lsym, center, rsym))
        if center.phase < self.gather:
            lsym = left.window[0] if isinstance(left, WState) else "q"
            rsym = right.window[-1] if isinstance(right, WState) else "q"
            return WState(center.phase + 1, (lsym,) + center.window + (rsym,))
        return WState(min(center.phase + 1, self.cap), center.window)


def _scanner_certificate(scanner: Scanner, window: tuple) -> bool:
    """This cell's share of the scanner condition, from its gathered window.

    The conjunction over all cells is exactly scanner_accepts: interior cells
    check the window starting at their own position, border cells addition-
    ally pin the prefix and suffix, and a word shorter than k fails at its
    first cell because no full-width prefix exists.
    """
    k = scanner.k
    if _at(window, k - 1) != "q":
        seg = "".join(_at(window, d) for d in range(k))
        if seg not in scanner.mu:
            return False
    if _at(window, -1) == "q":
        pre = []
        for d in range(k):
            sym = _at(window, d)
            if sym == "q":
                break
            pre.append(sym)
        if len(pre) < k or "".join(pre) not in scanner.pi:
            return False
    if _at(window, 1) == "q":
        suf = []
        for d in range(k):
            sym = _at(window, -d)
            if sym == "q":
                break
            suf.append(sym)
        if len(suf) < k or "".join(reversed(suf)) not in scanner.sigma:
            return False
    return True


def _active_segment(window: tuple) -> Optional[str]:
    """The whole word if both borders are visible from here, else None."""
    lo = 0
    while _at(window, lo - 1) != "q":
        lo -= 1
        if len(window) // 2 + lo - 1 < 0:
            return None
    hi = 0
    while _at(window, hi + 1) != "q":
        hi += 1
        if len(window) // 2 + hi + 1 >= len(window):
            return None
    return "".join(_at(window, d) for d in range(lo, hi + 1))


def _profile_certificate(key, k: int, window: tuple) -> bool:
    """This cell's share of "the word's profile matches this table key"."""
    if key[0] == "short":
        return _active_segment(window) == key[1]
    prefix, infix_set, suffix = key
    if _at(window, k - 1) != "q":
        seg = "".join(_at(window, d) for d in range(k))
        if seg not in infix_set:
            return False
    if _at(window, -1) == "q":
        pre = [_at(window, d) for d in range(k)]
        if "q" in pre or "".join(pre) != prefix:
            return False
    if _at(window, 1) == "q":
        suf = [_at(window, -d) for d in range(k - 1, -1, -1)]
        if "q" in suf or "".join(suf) != suffix:
            return False
    return True


class _ChecksFaces:
    """Accept/reject predicates driven by a checkpoint schedule."""

    def __init__(self, gather: int, checks: list, want: bool, final_reject: bool):
        self.gather = gather
        self.checks = checks  # list of (certificate callable, bit)
        self.want = want  # which bit this face belongs to
        self.final_reject = final_reject

    def __call__(self, state) -> bool:
        if not isinstance(state, WState):
            return False
        idx = state.phase - self.gather - 1
        if 0 <= idx < len(self.checks):
            certificate, bit = self.checks[idx]
            return bit == self.want and certificate(state.window)
        if self.final_reject and idx == len(self.checks):
            return True
        return False


def compile_slt_union_to_aca(scanners: list) -> Automaton:
    """Acceptor for the union of the scanner languages, constant accept time.

    Cells gather a radius-K window in K steps (K the largest scanner width),
    then checkpoint K+i certifies scanner i; the word is accepted at the
    first checkpoint whose scanner accepts it.  An empty list compiles to a
    machine that accepts nothing.
    """
    scanners = list(scanners)
    alphabets = {s.alphabet for s in scanners}
    if len(alphabets) > 1:
        raise AlphabetError("scanners disagree on the alphabet")
    alphabet = next(iter(alphabets)) if alphabets else ("0", "1")
    gather = max((s.k for s in scanners), default=1)
    checks = [
        ((lambda w, s=s: _scanner_certificate(s, w)), True) for s in scanners
    ]
    rule = _WindowRule(gather, gather + len(checks) + 1)
    return Automaton(
        name="slt-union",
        input_alphabet=tuple(alphabet),
        rule=rule,
        accepting=_ChecksFaces(gather, checks, True, final_reject=False),
        rejecting=None,
        states=None,
        time_bound=gather + len(checks) + 1,
    )


def compile_lt_to_daca(expr: LTExpression) -> Automaton:
    """Decider for the expression language, constant decision time.

    One checkpoint per realizable profile triple, ordered by increasing
    infix-set size: the first checkpoint a word triggers is the one with
    its exact infix set, so the verdict is that triple's table bit.  A last
    unconditional all-reject checkpoint keeps the machine total.
    """
    table = lt_profile_table(expr)
    k = table.k

    def order(item):
        key, _ = item
        if key[0] == "short":
            return (0, len(key[1]), key[1])
        prefix, infixes, suffix = key
        return (1, len(infixes), tuple(sorted(infixes)), prefix, suffix)

    checks = [
        ((lambda w, key=key: _profile_certificate(key, k, w)), bit)
        for key, bit in sorted(table.bits.items(), key=order)
    ]
    rule = _WindowRule(k, k + len(checks) + 2)
    return Automaton(
        name="lt-decider",
        input_alphabet=tuple(table.alphabet),
        rule=rule,
        accepting=_ChecksFaces(k, checks, True, final_reject=False),
        rejecting=_ChecksFaces(k, checks, False, final_reject=True),
        states=None,
        time_bound=k + len(checks) + 1,
    )


# ---------------------------------------------------------------------------
# Combinators.


def daca_complement(decider: Automaton) -> Automaton:
    """Swap the two verdict faces; decides the complement within Sigma^+."""
    if not decider.is_decider:
        raise ModeError(f"{decider.name} is an acceptor and has no reject face to swap")
    return Automaton(
        name=f"not-{decider.name}",
        input_alphabet=decider.input_alphabet,
        rule=decider.rule,
        accepting=decider.rejecting,
        rejecting=decider.accepting,
        states=decider.states,
        time_bound=decider.time_bound,
    )


class _UnionState(NamedTuple):
    turn: int  # 0: the first machine just moved, 1: the second did
    first: object
    second: object


class _UnionRule:
    def __init__(self, rule_a, rule_b):
        self.rule_a = rule_a
        self.rule_b = rule_b

    def __call__(self, left, center, right):
        def part(neighbor, idx):
            return neighbor[idx] if isinstance(neighbor, _UnionState) else neighbor

        if not isinstance(center, _UnionState):
            return _UnionState(0, self.rule_a(left, center, right), center)
        if center.turn == 0:
            return _UnionState(
                1,
                center.first,
                self.rule_b(part(left, 2), center.second, part(right, 2)),
            )
        return _UnionState(
            0,
            self.rule_a(part(left, 1), center.first, part(right, 1)),
            center.second,
        )


class _UnionFace:
    def __init__(self, accept_a, accept_b):
        self.accept_a = accept_a
        self.accept_b = accept_b

    def __call__(self, state) -> bool:
        if not isinstance(state, _UnionState):
            return False
        if state.turn == 0:
            return self.accept_a(state.first)
        return self.accept_b(state.second)


def aca_union(a1: Automaton, a2: Automaton) -> Automaton:
    """Round-robin product acceptor for L(a1) | L(a2).

    Odd steps advance the first machine and show its accept faces, even
    steps the second, so an input accepted by either machine at time t is
    accepted here by step 2t+... at most 2 max(t1, t2)+1.  A component that
    is accepting already at step 0 must still be accepting at step 1 (true
    of every acceptor built by this package, whose accepted configurations
    persist or recur).
    """
    if a1.is_decider or a2.is_decider:
        raise ModeError("the union combinator takes acceptors")
    if set(a1.input_alphabet) != set(a2.input_alphabet):
        raise AlphabetError(
            f"{a1.name} and {a2.name} read different alphabets"
        )
    bound = None
    if a1.time_bound is not None and a2.time_bound is not None:
        bound = 2 * max(a1.time_bound, a2.time_bound) + 1
    return Automaton(
        name=f"union-{a1.name}-{a2.name}",
        input_alphabet=a1.input_alphabet,
        rule=_UnionRule(a1.rule, a2.rule),
        accepting=_UnionFace(a1.accepting, a2.accepting),
        rejecting=None,
        states=None,
        time_bound=bound,
    )


class _TimeoutState(NamedTuple):
    counter: int
    inner: object


class _TimeoutRule:
    def __init__(self, rule, limit):
        self.rule = rule
        self.limit = limit

    def __call__(self, left, center, right):
        def part(neighbor):
            return neighbor.inner if isinstance(neighbor, _TimeoutState) else neighbor

        if not isinstance(center, _TimeoutState):
            return _TimeoutState(1, self.rule(left, center, right))
        return _TimeoutState(
            min(center.counter + 1, self.limit),
            self.rule(part(left), center.inner, part(right)),
        )


def aca_to_daca(acceptor: Automaton, t_const: int) -> Automaton:
    """Wrap a constant-time acceptor into a decider by a timeout of t_const.

    Cells count steps in lockstep and all enter reject states at step
    t_const + 1.  If the acceptor actually needs more than t_const steps on
    some member, the wrapper misclassifies it; verify_equivalence exposes
    such misuse.
    """
    if acceptor.is_decider:
        raise ModeError(f"{acceptor.name} already is a decider")
    if t_const < 0:
        raise ParameterError("the time bound must be >= 0")
    limit = t_const + 1
    inner_accept = acceptor.accepting

    def accepting(state) -> bool:
        if isinstance(state, _TimeoutState):
            return state.counter <= t_const and inner_accept(state.inner)
        return inner_accept(state)

    def rejecting(state) -> bool:
        return isinstance(state, _TimeoutState) and state.counter == limit

    return Automaton(
        name=f"{acceptor.name}-within-{t_const}",
        input_alphabet=acceptor.input_alphabet,
        rule=_TimeoutRule(acceptor.rule, limit),
        accepting=accepting,
        rejecting=rejecting,
        states=None,
        time_bound=limit,
    )


# ---------------------------------------------------------------------------
# File formats.


def _directive_lines(text: str, where: str) -> dict:
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise RuleFileError(f"{where}:{lineno}: expected 'name: values'")
        key, _, value = line.partition(":")
        key = key.strip()
        if key in seen:
            raise RuleFileError(f"{where}:{lineno}: duplicate {key!r}")
        seen[key] = value.strip()
    return seen


def parse_scanner(text: str, name: str = "scanner") -> Scanner:
    """Parse the scanner file format: k, alphabet, pi, sigma, mu directives."""
    fields = _directive_lines(text, name)
    missing = {"k", "alphabet", "pi", "sigma", "mu"} - set(fields)
    if missing:
        raise RuleFileError(f"{name}: missing directives {sorted(missing)}")
    extra = set(fields) - {"k", "alphabet", "pi", "sigma", "mu"}
    if extra:
        raise RuleFileError(f"{name}: unknown directives {sorted(extra)}")
    try:
        k = int(fields["k"])
    except ValueError:
        raise RuleFileError(f"{name}: k must be an integer") from None
    alphabet = tuple(fields["alphabet"].split())
    if not alphabet or any(len(sym) != 1 for sym in alphabet):
        raise RuleFileError(f"{name}: alphabet must list single-character symbols")
    if len(set(alphabet)) != len(alphabet):
        raise RuleFileError(f"{name}: duplicate alphabet symbols")
    try:
        return Scanner(
            k=k,
            alphabet=alphabet,
            pi=frozenset(fields["pi"].split()),
            sigma=frozenset(fields["sigma"].split()),
            mu=frozenset(fields["mu"].split()),
            name=name,
        )
    except ParameterError as exc:
        raise RuleFileError(str(exc)) from None


def load_scanner(path) -> Scanner:
    path = pathlib.Path(path)
    return parse_scanner(path.read_text(), name=path.stem)


def _tokenize_expression(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse_expression(tokens: list[str], scanners: dict, where: str) -> LTExpression:
    if not tokens:
        raise RuleFileError(f"{where}: empty expression")

    def parse(pos: int):
        if tokens[pos] == "(":
            if pos + 1 >= len(tokens):
                raise RuleFileError(f"{where}: unclosed parenthesis")
            op = tokens[pos + 1]
            if op not in ("or", "and", "not"):
                raise RuleFileError(f"{where}: unknown operator {op!r}")
            pos += 2
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                child, pos = parse(pos)
                children.append(child)
            if pos >= len(tokens):
                raise RuleFileError(f"{where}: unclosed parenthesis")
            pos += 1
            try:
                node = LTExpression(op, children=tuple(children))
            except ParameterError as exc:
                raise RuleFileError(f"{where}: {exc}") from None
            return node, pos
        name = tokens[pos]
        if name == ")":
            raise RuleFileError(f"{where}: unexpected ')'")
        if name not in scanners:
            raise RuleFileError(f"{where}: unknown scanner name {name!r}")
        return lt_scanner(scanners[name]), pos + 1

    node, pos = parse(0)
    if pos != len(tokens):
        raise RuleFileError(f"{where}: trailing tokens after the expression")
    return node


def parse_lt_expression(text: str, where: str = "lt-file", base_dir=None) -> LTExpression:
    """Parse `let NAME = FILE` bindings followed by one prefix expression."""
    base = pathlib.Path(base_dir) if base_dir is not None else pathlib.Path(".")
    scanners: dict[str, Scanner] = {}
    expression_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("let "):
            rest = line[4:]
            if "=" not in rest:
                raise RuleFileError(f"{where}:{lineno}: expected 'let NAME = FILE'")
            name, _, filename = rest.partition("=")
            name = name.strip()
            filename = filename.strip()
            if not name or not filename:
                raise RuleFileError(f"{where}:{lineno}: expected 'let NAME = FILE'")
            if name in scanners:
                raise RuleFileError(f"{where}:{lineno}: duplicate binding {name!r}")
            scanner_path = base / filename
            try:
                scanners[name] = load_scanner(scanner_path)
            except FileNotFoundError:
                raise RuleFileError(
                    f"{where}:{lineno}: scanner file {scanner_path} not found"
                ) from None
        else:
            expression_lines.append(line)
    if not expression_lines:
        raise RuleFileError(f"{where}: no expression line")
    tokens = _tokenize_expression(" ".join(expression_lines))
    expr = _parse_expression(tokens, scanners, where)
    expr.alphabet  # raises AlphabetError on mixed leaf alphabets
    return expr


def load_lt_expression(path) -> LTExpression:
    path = pathlib.Path(path)
    return parse_lt_expression(path.read_text(), where=path.stem, base_dir=path.parent)


def tabulate_by_observation(automaton: Automaton, probe_len: int, name: str = None) -> str:
    """Flatten a structured-state machine to the rule-table format.

    Every cell state of the compiled machines is a function of the cell's
    radius-G gathered window and the phase, so each rule-table triple the
    machine can ever invoke already occurs while simulating all words up to
    length 2G+3 (a triple is pinned by a radius-(G+1) window).  The probe
    length is the caller's promise of that bound; the emitted table replays
    the machine exactly, with unreachable triples defaulting to the centre.
    """
    if probe_len < 1:
        raise ParameterError("probe length must be >= 1")
    alphabet = tuple(automaton.input_alphabet)
    order: dict = {}
    triples: dict = {}

    def see(state) -> None:
        if state not in order:
            order[state] = len(order)

    for sym in alphabet:
        see(sym)
    for length in range(1, probe_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            config = initial_configuration(automaton, tup)
            for state in config:
                see(state)
            for _ in range(_TABULATE_STEP_CEILING):
                nxt = global_step(automaton, config)
                padded = (None,) + config + (None,)
                for i, out in enumerate(nxt):
                    see(out)
                    triples[(padded[i], config[i], padded[i + 2])] = out
                if nxt == config:
                    break
                config = nxt
            else:
                raise ParameterError(
                    f"{automaton.name}: no fixed point within "
                    f"{_TABULATE_STEP_CEILING} steps; not tabulatable"
                )
    names: dict = {}
    structured = 0
    for state in order:
        if isinstance(state, str) and state in alphabet:
            names[state] = state
        else:
            names[state] = f"s{structured}"
            structured += 1
    rows = [
        (
            "q" if left is None else names[left],
            names[center],
            "q" if right is None else names[right],
            names[out],
        )
        for (left, center, right), out in sorted(
            triples.items(), key=lambda kv: [names.get(s, "q") for s in kv[0]]
        )
    ]
    accept = [names[s] for s in order if automaton.accepting(s)]
    if not accept:
        raise RuleFileError(
            f"{automaton.name}: no reachable accepting state up to probe length"
            f" {probe_len}; the table format cannot express an empty accept set"
        )
    reject = None
    if automaton.is_decider:
        reject = [names[s] for s in order if automaton.rejecting(s)]
    return serialize_rules(
        name or automaton.name,
        alphabet,
        list(names.values()),
        accept,
        reject,
        rows,
    )
