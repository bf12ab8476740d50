"""Ready-made automata and the word families the benchmarks exercise.

The simple machines are defined by rule tables in the text format of
:mod:`acaw.rulefile`, so ``acaw zoo build`` can write them back out verbatim.
The block-structured ones (``bin``, ``idmat``) come from
:mod:`acaw._blockca`; their state space is unbounded over all inputs
(registers scale with block length), so they have no flat table form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, Optional

from ._blockca import INCREMENT, SHIFT, block_automaton
from .core import Automaton, ParameterError
from .rulefile import parse_rule_table

# Accepts (01) repeated one or more times.  The four listed neighborhoods
# are the only ones that create the accept state; everything else keeps
# its symbol, so any flaw freezes into a non-accepting fixed point.
_PAIR01_TABLE = """\
alphabet: 0 1
states: 0 1 a
accept: a
rule: 0 1 0 -> a
rule: 1 0 1 -> a
rule: q 0 1 -> a
rule: 0 1 q -> a
default: center
"""

# Accepts the all-zero words: the identity rule with accepting state 0,
# so members are accepted before the first step and anything containing
# a 1 sits in a non-accepting fixed point forever.
_ZEROS_TABLE = """\
alphabet: 0 1
states: 0 1
accept: 0
default: center
"""

# Decides whether some cell holds a 1.  Zeros flip to the reject state,
# everything else to accept; after one step a second step turns any mix
# into all-accepting.  Worst case two steps, independent of length.
_SOMEONE_TABLE = """\
alphabet: 0 1
states: 0 1 a r
accept: a
reject: r
rule: * 0 * -> r
rule: * * * -> a
default: none
"""


def build_pair01_aca() -> Automaton:
    return parse_rule_table(_PAIR01_TABLE, name="pair01")


def build_zeros_aca() -> Automaton:
    return parse_rule_table(_ZEROS_TABLE, name="zeros")


def build_someone_daca() -> Automaton:
    return parse_rule_table(_SOMEONE_TABLE, name="someone")


def build_bin_aca() -> Automaton:
    return block_automaton("bin", INCREMENT, decider=False)


def build_idmat_aca() -> Automaton:
    return block_automaton("idmat", SHIFT, decider=False)


def build_idmat_daca() -> Automaton:
    return block_automaton("idmat-decider", SHIFT, decider=True)


# Machines with a textual rule table, for `zoo build`.
TABLE_SOURCES = {
    "pair01": _PAIR01_TABLE,
    "zeros": _ZEROS_TABLE,
    "someone": _SOMEONE_TABLE,
}

# name -> (acceptor builder, decider builder); None marks a missing mode.
ZOO: dict[str, tuple[Optional[Callable[[], Automaton]], Optional[Callable[[], Automaton]]]] = {
    "pair01": (build_pair01_aca, None),
    "zeros": (build_zeros_aca, None),
    "someone": (None, build_someone_daca),
    "bin": (build_bin_aca, None),
    "idmat": (build_idmat_aca, build_idmat_daca),
}


def zoo_automaton(name: str, decider: bool = False) -> Automaton:
    """Build a zoo machine by name, in acceptor or decider mode."""
    if name not in ZOO:
        raise ParameterError(f"unknown zoo machine {name!r}")
    builder = ZOO[name][1 if decider else 0]
    if builder is None:
        mode = "decider" if decider else "acceptor"
        raise ParameterError(f"zoo machine {name!r} has no {mode} mode")
    return builder()


def _require_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"family index must be a positive integer, got {k!r}")


def _counter_blocks(k: int) -> list[str]:
    return [format(i, f"0{k}b") for i in range(2**k)]


def _unit_row_blocks(k: int) -> list[str]:
    return ["0" * i + "1" + "0" * (k - 1 - i) for i in range(k)]


def generate_bin(k: int) -> str:
    """All k-bit values in counting order, separator-joined; length (k+1)2^k - 1."""
    _require_k(k)
    return "#".join(_counter_blocks(k))


def is_member_bin(word: str) -> bool:
    blocks = word.split("#")
    k = len(blocks[0])
    if k < 1:
        return False
    return blocks == _counter_blocks(k)


def generate_idmat(k: int) -> str:
    """The k unit rows of the k-by-k identity matrix; length k^2 + k - 1."""
    _require_k(k)
    return "#".join(_unit_row_blocks(k))


def is_member_idmat(word: str) -> bool:
    blocks = word.split("#")
    k = len(blocks)
    if not blocks[0]:
        return False
    return blocks == _unit_row_blocks(k)


def generate_zeros(k: int) -> str:
    _require_k(k)
    return "0" * k


def is_member_zeros(word: str) -> bool:
    return bool(word) and set(word) == {"0"}


def generate_someone(k: int) -> str:
    """The length-k member with its single 1 at the far end."""
    _require_k(k)
    return "0" * (k - 1) + "1"


def is_member_someone(word: str) -> bool:
    return "1" in word


# Witness words for the time hierarchy: g copies of a k-bit counter value
# padded with separators to a fixed period f(k), so the length is exactly
# f(k) * g(k) with g(k) = 2^(k - floor(log2 f(k))).
_WITNESS_PERIODS: dict[str, Callable[[int], int]] = {
    "square": lambda k: k * k,
    "halfexp": lambda k: 2 ** ((k + 1) // 2),
}


def witness_word(f_choice: str, k: int) -> str:
    if f_choice not in _WITNESS_PERIODS:
        raise ParameterError(f"unknown period choice {f_choice!r}")
    _require_k(k)
    period = _WITNESS_PERIODS[f_choice](k)
    if period <= k:
        raise ParameterError(f"period {period} must exceed the block width {k}")
    exponent = k - (period.bit_length() - 1)
    if exponent < 0:
        raise ParameterError(f"period {period} too long for block width {k}")
    copies = 1 << exponent
    pad = "#" * (period - k)
    return "".join(format(m, f"0{k}b") + pad for m in range(copies))


def is_witness_member(f_choice: str, word: str) -> bool:
    if f_choice not in _WITNESS_PERIODS:
        raise ParameterError(f"unknown period choice {f_choice!r}")
    for k in range(1, len(word).bit_length() + 2):
        try:
            candidate = witness_word(f_choice, k)
        except ParameterError:
            continue
        if len(candidate) > len(word):
            break
        if candidate == word:
            return True
    return False


@dataclass(frozen=True)
class WordFamily:
    """A benchmark family: indexed members plus a ground-truth predicate."""

    name: str
    alphabet: tuple
    generate: Callable[[int], str]
    is_member: Callable[[str], bool]
    expected_bound: Optional[str]  # const, log, sqrt or linear; None = not timed
    acceptor: Optional[Callable[[], Automaton]] = None
    decider: Optional[Callable[[], Automaton]] = None


FAMILIES: dict[str, WordFamily] = {
    "bin": WordFamily(
        "bin", ("0", "1", "#"), generate_bin, is_member_bin, "log",
        acceptor=build_bin_aca,
    ),
    "idmat": WordFamily(
        "idmat", ("0", "1", "#"), generate_idmat, is_member_idmat, "sqrt",
        acceptor=build_idmat_aca, decider=build_idmat_daca,
    ),
    "zeros": WordFamily(
        "zeros", ("0", "1"), generate_zeros, is_member_zeros, "const",
        acceptor=build_zeros_aca,
    ),
    "someone": WordFamily(
        "someone", ("0", "1"), generate_someone, is_member_someone, "const",
        decider=build_someone_daca,
    ),
    "witness-square": WordFamily(
        "witness-square", ("0", "1", "#"),
        partial(witness_word, "square"), partial(is_witness_member, "square"),
        None,
    ),
    "witness-halfexp": WordFamily(
        "witness-halfexp", ("0", "1", "#"),
        partial(witness_word, "halfexp"), partial(is_witness_member, "halfexp"),
        None,
    ),
}

# Ground-truth membership predicates for `verify`, by oracle name.
ORACLES: dict[str, Callable[[str], bool]] = {
    "pair01": lambda w: len(w) >= 2 and w == "01" * (len(w) // 2),
    "zeros": is_member_zeros,
    "someone": is_member_someone,
    "bin": is_member_bin,
    "idmat": is_member_idmat,
    "witness-square": partial(is_witness_member, "square"),
    "witness-halfexp": partial(is_witness_member, "halfexp"),
}
