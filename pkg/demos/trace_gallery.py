"""Print annotated traces for each built-in machine.

Every row is one configuration, oldest first, with the border symbol q shown
once on each side.  An acceptor stops at the first all-accepting row; a
decider also stops at an all-rejecting row.
"""

from acaw import run_acceptor, run_decider, zoo_automaton


def show(title, verdict):
    print(f"== {title}")
    for row in verdict.trace.rows():
        print(row)
    if verdict.steps is None:
        print("-> timeout")
    else:
        print(f"-> {verdict.kind} after {verdict.steps} step(s)")
    print()


def main():
    pair01 = zoo_automaton("pair01")
    show("pair01 on a member", run_acceptor(pair01, "010101", collect_trace=True))
    show("pair01 on a non-member (stalls forever)",
         run_acceptor(pair01, "001010", collect_trace=True))

    someone = zoo_automaton("someone", decider=True)
    show("someone on the all-zero word", run_decider(someone, "000000", collect_trace=True))
    show("someone with a 1 present", run_decider(someone, "001010", collect_trace=True))

    zeros = zoo_automaton("zeros")
    show("zeros accepts before the first step", run_acceptor(zeros, "0000", collect_trace=True))

    idmat = zoo_automaton("idmat")
    show("idmat acceptor on the 3x3 identity rows",
         run_acceptor(idmat, "100#010#001", collect_trace=True))

    bin_acc = zoo_automaton("bin")
    show("bin acceptor on the 2-bit counter word",
         run_acceptor(bin_acc, "00#01#10#11", collect_trace=True))


if __name__ == "__main__":
    main()
