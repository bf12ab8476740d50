"""Block-structured machines behind the counter and identity-matrix acceptors.

Words over {0,1,#} are read as blocks of bits between separators.  The
machines here verify, with radius-1 signals only, that consecutive blocks
are equal in length and stand in a fixed relation (shifted one cell right,
or incremented as a binary counter), plus first-block and last-block shape
checks.  Everything is event-driven; no cell ever counts past a fixed bound.

The moving parts, all living in per-cell registers:

* a conveyor ``ls`` carrying every symbol leftward one cell per step, so a
  separator watches the whole block to its right stream past;
* each separator re-emits that stream rightward as a chain ``rf`` (the
  leftmost block cell plays the same role through a two-step delay line
  ``hold``, standing in for a separator just off the border), ends it with
  a head mark ``H`` when the conveyor shows the next separator or the
  border, then switches to forwarding the chain coming from its left;
  heads are downgraded to inert ``X`` when forwarded past a separator, so
  each block sees exactly one head: the one its own left separator emitted;
* the head's arrival at a block's first cell launches a half-speed verifier
  ``v`` that walks the block; the stream alignment makes the value under
  its nose at cell c exactly the previous block's cell c-1 (its par-0
  step) or cell c (par-1), which yields the shifted comparison and the
  increment comparison without any position arithmetic;
* a separator emitting while its left neighbor already carries chain
  traffic has a left block strictly shorter than its right one (a clash);
  a verifier reading an empty chain slot has it strictly longer: both kill
  the acceptance of that spot, which is what enforces equal block lengths;
* cells and separators turn ``ok`` when their own check passes; acceptance
  is the step when every cell is ok, which lands at 3b+3 steps or earlier
  for members with block length b.

The decider variant adds a census that makes rejection timely without a
single extra signal: each block's first cell gets a marker at step 1; every
sixth step the markers hop one cell right, soiling when they leave a 1.  At
census steps every cell shows a rejecting face unless it holds a clean
marker on a 1, so the word survives round r only if some block's first 1
sits at position r-1.  Members are served through round b and accept before
round b+1; any word surviving r rounds has pairwise-distinct blocks of
lengths 1..r and is therefore quadratically long, which bounds rejection by
roughly 6*sqrt(2n) steps.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .core import Automaton, _Inactive

SHIFT = "shift"  # identity-matrix rows: next block = previous shifted right
INCREMENT = "increment"  # counter blocks: next block = previous plus one


class BCell(NamedTuple):
    sym: str  # '0', '1' or '#'
    lnb: str  # left neighbor at step 0: 'q', '#' or 'b'
    rnb: str
    age: int  # 0 right after initialization, 1 afterwards
    ls: str  # conveyor value: '0', '1', '#' or 'q'
    hold: str  # delay register of the border-side emitter, '.' when unused
    rf: str  # chain value: '.', '0', '1', 'H' (head) or 'X' (spent head)
    emit: bool  # still emitting its own chain
    v: Optional[tuple]  # verifier (mode, parity, fsm, all_ones) or None
    ok: bool
    dead: bool
    phase: int  # step count mod 6 for deciders, constant 0 for acceptors
    marker: str  # census marker: '-', 'C' (clean) or 'S' (soiled)

    def __str__(self):
        # compact trace rendering: the input symbol plus the one most
        # telling flag, so configuration rows stay one glyph pair per cell
        if self.dead:
            return "X"
        if self.ok:
            return f"{self.sym}*"
        if self.rf != ".":
            return f"{self.sym}{self.rf}"
        if self.marker != "-":
            return f"{self.sym}{self.marker}"
        return self.sym


def _kind(neighbor) -> str:
    if isinstance(neighbor, _Inactive):
        return "q"
    sym = neighbor.sym if isinstance(neighbor, BCell) else neighbor
    return "#" if sym == "#" else "b"


def _init_cell(left, sym: str, right, decider: bool) -> BCell:
    lnb = _kind(left)
    rnb = _kind(right)
    dead = sym == "#" and not (lnb == "b" and rnb == "b")
    marker = "C" if (decider and sym != "#" and lnb in ("q", "#")) else "-"
    return BCell(
        sym=sym,
        lnb=lnb,
        rnb=rnb,
        age=0,
        ls=sym,
        hold=".",
        rf=".",
        emit=(sym == "#") or (sym != "#" and lnb == "q"),
        v=None,
        ok=False,
        dead=dead,
        phase=1 if decider else 0,
        marker=marker,
    )


def _hop_marker(center: BCell, left) -> str:
    if center.sym == "#" or center.lnb != "b" or not isinstance(left, BCell):
        return "-"
    if left.marker not in ("C", "S"):
        return "-"
    return "S" if (left.marker == "S" or left.sym == "1") else "C"


class _BlockRule:
    """The local rule; one instance per machine flavor."""

    def __init__(self, compare: str, decider: bool):
        self.compare = compare
        self.decider = decider

    def __call__(self, left, center, right):
        if not isinstance(center, BCell):
            return _init_cell(left, center, right, self.decider)
        new_ls = right.ls if isinstance(right, BCell) else "q"
        left_rf = left.rf if isinstance(left, BCell) else "."

        sym = center.sym
        hold = center.hold
        emit = center.emit
        dead = center.dead
        ok = center.ok

        if sym == "#":
            if emit:
                # Chain traffic already at the left while still emitting means
                # the left block is strictly shorter than the right one.
                if left_rf != ".":
                    dead = True
                if new_ls in ("0", "1"):
                    rf = new_ls
                else:
                    rf, emit = "H", False
            else:
                rf = "X" if left_rf == "H" else left_rf
        elif emit:
            # Leftmost block cell: emits the conveyor two steps delayed, so
            # its chain lines up exactly like one from a separator next door.
            if hold in ("#", "q"):
                rf, emit = "H", False
            else:
                rf = hold
            hold = center.ls
        else:
            rf = left_rf
            hold = "."

        v = None
        shift = self.compare == SHIFT

        def par0_enter(mode: str, fsm: str, ones: bool) -> None:
            """Start a verifier visit on this cell; records ok/dead/v."""
            nonlocal ok, dead, v
            if mode == "F":
                want = "1" if (shift and center.lnb == "q") else "0"
                passed = sym == want
            elif shift:
                passed = (sym == "0") if center.lnb == "#" else (sym == rf)
            else:
                passed = True  # counter comparison reads on the next step
            if not passed:
                dead = True
                return
            if center.rnb == "q":
                if shift:
                    if sym == "1":
                        ok = True
                    else:
                        dead = True
                elif mode == "C":
                    v = (mode, 0, fsm, ones)  # completes at its par-1 step
                # counter first-scan on a single block: nothing to accept
            else:
                if mode == "F" or shift:
                    ok = True
                v = (mode, 0, fsm, ones)

        if sym != "#":
            if center.v is not None and not dead:
                mode, par, fsm, ones = center.v
                if par == 0:
                    if not shift and mode == "C":
                        # Counter comparison: this cell's stream slot is the
                        # previous block's same-index bit.
                        if fsm == "e" and sym == rf:
                            pass
                        elif fsm == "e" and sym == "1" and rf == "0":
                            fsm = "p"
                        elif fsm == "p" and sym == "0" and rf == "1":
                            pass
                        else:
                            dead = True
                        ones = ones and sym == "1"
                        if not dead:
                            if center.rnb == "q":
                                if fsm == "p" and ones:
                                    ok = True
                            else:
                                ok = True
                                v = (mode, 1, fsm, ones)
                    elif not dead:
                        v = (mode, 1, fsm, ones)
                # par == 1: the visit ends; the right neighbor picks it up.
            elif center.v is None and not center.dead:
                if (
                    isinstance(left, BCell)
                    and left.sym != "#"
                    and left.v is not None
                    and left.v[1] == 1
                ):
                    par0_enter(left.v[0], left.v[2], left.v[3])
                elif center.age == 0 and center.lnb == "q":
                    par0_enter("F", "e", True)
                elif center.lnb == "#" and rf == "H":
                    par0_enter("C", "e", True)
        else:
            if (
                isinstance(left, BCell)
                and left.sym != "#"
                and left.v is not None
                and left.v[1] == 1
                and not dead
            ):
                mode, _, fsm, _ = left.v
                if shift or mode == "F" or fsm == "p":
                    ok = True

        if self.decider:
            phase = (center.phase + 1) % 6
            marker = _hop_marker(center, left) if phase == 1 else center.marker
        else:
            phase = 0
            marker = "-"

        return BCell(
            sym=sym,
            lnb=center.lnb,
            rnb=center.rnb,
            age=1,
            ls=new_ls,
            hold=hold,
            rf=rf,
            emit=emit,
            v=v,
            ok=ok,
            dead=dead,
            phase=phase,
            marker=marker,
        )


def _accepting_acceptor(state) -> bool:
    return isinstance(state, BCell) and state.ok


def _accepting_decider(state) -> bool:
    return isinstance(state, BCell) and state.ok and state.phase != 1


def _rejecting_decider(state) -> bool:
    return (
        isinstance(state, BCell)
        and state.phase == 1
        and not (state.marker == "C" and state.sym == "1")
    )


def block_automaton(name: str, compare: str, decider: bool) -> Automaton:
    rule = _BlockRule(compare, decider)
    return Automaton(
        name=name,
        input_alphabet=("0", "1", "#"),
        rule=rule,
        accepting=_accepting_decider if decider else _accepting_acceptor,
        rejecting=_rejecting_decider if decider else None,
        states=None,
    )
