"""Scanners, boolean combinations, compilers, combinators, and the parsers."""

import itertools

import pytest
from hypothesis import given, strategies as st

from acaw import (
    ACCEPT,
    REJECT,
    TIMEOUT,
    AlphabetError,
    EmptyInputError,
    LTExpression,
    ModeError,
    ParameterError,
    RuleFileError,
    Scanner,
    aca_to_daca,
    aca_union,
    compile_lt_to_daca,
    compile_slt_union_to_aca,
    daca_complement,
    load_lt_expression,
    lt_and,
    lt_eval,
    lt_not,
    lt_or,
    lt_profile_table,
    lt_scanner,
    parse_lt_expression,
    parse_rule_table,
    parse_scanner,
    profile_key,
    run_acceptor,
    run_decider,
    scanner_accepts,
    tabulate_by_observation,
    zoo_automaton,
)
from acaw.core import set_automaton

BITS = ("0", "1")
PAIR01 = Scanner(
    k=2, alphabet=BITS,
    pi=frozenset({"01"}), sigma=frozenset({"01"}), mu=frozenset({"01", "10"}),
    name="pair01",
)
ALL0 = Scanner(
    k=1, alphabet=BITS,
    pi=frozenset({"0"}), sigma=frozenset({"0"}), mu=frozenset({"0"}),
    name="all0",
)
NO11 = Scanner(
    k=2, alphabet=BITS,
    pi=frozenset({"00", "01", "10", "11"}),
    sigma=frozenset({"00", "01", "10", "11"}),
    mu=frozenset({"00", "01", "10"}),
    name="no11",
)
SOMEONE_EXPR = lt_not(lt_scanner(ALL0))


def words(alphabet, max_len):
    for n in range(1, max_len + 1):
        for tup in itertools.product(alphabet, repeat=n):
            yield "".join(tup)


def test_scanner_validation():
    with pytest.raises(ParameterError):
        Scanner(k=0, alphabet=BITS, pi=frozenset(), sigma=frozenset(), mu=frozenset())
    with pytest.raises(ParameterError):
        Scanner(k=1, alphabet=("q",), pi=frozenset(), sigma=frozenset(), mu=frozenset())
    with pytest.raises(ParameterError):
        Scanner(k=1, alphabet=BITS, pi=frozenset({"00"}), sigma=frozenset(), mu=frozenset())
    with pytest.raises(ParameterError):
        Scanner(k=2, alphabet=BITS, pi=frozenset(), sigma=frozenset(), mu=frozenset({"0"}))
    with pytest.raises(ParameterError):
        Scanner(k=1, alphabet=BITS, pi=frozenset({"2"}), sigma=frozenset(), mu=frozenset())


def reference_scan(scanner, word):
    k = scanner.k
    if len(word) < k:
        return False
    infixes = {word[i : i + k] for i in range(len(word) - k + 1)}
    return (
        word[:k] in scanner.pi
        and word[-k:] in scanner.sigma
        and infixes <= scanner.mu
    )


def test_scanner_semantics_brute_force():
    for scanner in (PAIR01, ALL0, NO11):
        for w in words("01", 6):
            assert scanner_accepts(scanner, w) == reference_scan(scanner, w), (
                scanner.name, w,
            )
    assert not scanner_accepts(PAIR01, "0")  # shorter than the window


def test_scanner_input_errors():
    with pytest.raises(EmptyInputError):
        scanner_accepts(ALL0, "")
    with pytest.raises(AlphabetError):
        scanner_accepts(ALL0, "02")


def test_expression_construction_errors():
    with pytest.raises(ParameterError):
        LTExpression("scanner")
    with pytest.raises(ParameterError):
        LTExpression("not", children=(lt_scanner(ALL0), lt_scanner(ALL0)))
    with pytest.raises(ParameterError):
        LTExpression("or")
    with pytest.raises(ParameterError):
        LTExpression("xor", children=(lt_scanner(ALL0),))


def test_expression_alphabet_and_window():
    other = Scanner(
        k=1, alphabet=("a", "b"),
        pi=frozenset({"a"}), sigma=frozenset({"a"}), mu=frozenset({"a"}),
    )
    mixed = lt_or(lt_scanner(ALL0), lt_scanner(other))
    with pytest.raises(AlphabetError):
        mixed.alphabet
    expr = lt_and(lt_scanner(ALL0), lt_scanner(PAIR01))
    assert expr.window == 2
    assert expr.alphabet == BITS
    assert len(expr.leaves()) == 2


def test_lt_eval():
    assert not lt_eval(SOMEONE_EXPR, "000")
    assert lt_eval(SOMEONE_EXPR, "010")
    both = lt_and(lt_scanner(NO11), SOMEONE_EXPR)
    assert lt_eval(both, "0100")
    assert not lt_eval(both, "0110")
    assert not lt_eval(both, "0000")
    with pytest.raises(EmptyInputError):
        lt_eval(SOMEONE_EXPR, "")


def test_profile_key():
    assert profile_key("0", 2) == ("short", "0")
    assert profile_key("0101", 2) == ("01", frozenset({"01", "10"}), "01")
    assert profile_key("01", 2) == ("01", frozenset({"01"}), "01")


TABLE_EXPR = lt_and(lt_scanner(NO11), SOMEONE_EXPR)
TABLE = lt_profile_table(TABLE_EXPR)


def test_profile_table_covers_all_words_correctly():
    seen = set()
    for w in words("01", 8):
        key = profile_key(w, TABLE.k)
        seen.add(key)
        assert key in TABLE.bits, w
        assert TABLE.bits[key] == lt_eval(TABLE_EXPR, w), w
    # every key reachable by length 8 was realized, none with a wrong witness
    for key, word in TABLE.realizers.items():
        assert profile_key(word, TABLE.k) == key
    assert seen <= set(TABLE.bits)


@given(st.text(alphabet="01", min_size=1, max_size=48))
def test_profile_table_lookup_is_membership(word):
    key = profile_key(word, TABLE.k)
    assert TABLE.bits[key] == lt_eval(TABLE_EXPR, word)


def test_slt_union_compiler_matches_reference():
    machine = compile_slt_union_to_aca([PAIR01, ALL0])
    expr = lt_or(lt_scanner(PAIR01), lt_scanner(ALL0))
    assert machine.time_bound == 2 + 2 + 1
    for w in words("01", 8):
        verdict = run_acceptor(machine, w)
        assert (verdict.kind == ACCEPT) == lt_eval(expr, w), w
        if verdict.kind == ACCEPT:
            assert verdict.steps <= machine.time_bound


def test_slt_union_accept_time_is_constant_per_scanner():
    machine = compile_slt_union_to_aca([PAIR01, ALL0])
    # first checkpoint after the 2-step gather tests pair01, the next all0
    for length in range(2, 11, 2):
        assert run_acceptor(machine, "01" * (length // 2)).steps == 3
    for length in range(1, 11):
        assert run_acceptor(machine, "0" * length).steps == 4


def test_slt_union_empty_list_accepts_nothing():
    machine = compile_slt_union_to_aca([])
    for w in words("01", 4):
        assert run_acceptor(machine, w).kind == TIMEOUT


def test_slt_union_alphabet_mismatch():
    other = Scanner(
        k=1, alphabet=("a", "b"),
        pi=frozenset({"a"}), sigma=frozenset({"a"}), mu=frozenset({"a"}),
    )
    with pytest.raises(AlphabetError):
        compile_slt_union_to_aca([ALL0, other])


def test_lt_decider_is_total_and_correct():
    for expr in (SOMEONE_EXPR, lt_scanner(PAIR01), TABLE_EXPR):
        dec = compile_lt_to_daca(expr)
        for w in words("01", 7):
            verdict = run_decider(dec, w)
            assert verdict.kind != TIMEOUT, w
            assert (verdict.kind == ACCEPT) == lt_eval(expr, w), w
            assert verdict.steps <= dec.time_bound + 1


def test_lt_decider_verdict_time_depends_only_on_profile():
    dec = compile_lt_to_daca(lt_scanner(PAIR01))
    probes = {
        "zeros": lambda n: "0" * n,
        "ones": lambda n: "1" * n,
        "alternating": lambda n: ("01" * n)[:n],
    }
    for make in probes.values():
        for parity in (0, 1):
            lengths = [n for n in range(3, 11) if n % 2 == parity]
            steps = {run_decider(dec, make(n)).steps for n in lengths}
            assert len(steps) == 1, (make(5), parity)


def test_daca_complement():
    not_someone = daca_complement(compile_lt_to_daca(SOMEONE_EXPR))
    assert not_someone.name.startswith("not-")
    for w in words("01", 8):
        verdict = run_decider(not_someone, w)
        assert verdict.kind != TIMEOUT
        assert (verdict.kind == ACCEPT) == (set(w) == {"0"}), w
    with pytest.raises(ModeError):
        daca_complement(zoo_automaton("pair01"))


def test_aca_union_of_zoo_machines():
    union = aca_union(zoo_automaton("pair01"), zoo_automaton("zeros"))
    for w in words("01", 7):
        member = w == "01" * (len(w) // 2) or set(w) == {"0"}
        assert (run_acceptor(union, w).kind == ACCEPT) == member, w
    # first component's step-1 verdict lands at global step 1, the
    # second component's step-0 persistence shows at global step 2
    assert run_acceptor(union, "0101").steps == 1
    assert run_acceptor(union, "0000").steps == 2


def test_aca_union_mode_and_alphabet_errors():
    with pytest.raises(ModeError):
        aca_union(zoo_automaton("someone", decider=True), zoo_automaton("pair01"))
    with pytest.raises(AlphabetError):
        aca_union(zoo_automaton("pair01"), zoo_automaton("idmat"))


def test_aca_to_daca_wraps_constant_time_acceptor():
    dec = aca_to_daca(zoo_automaton("pair01"), 1)
    for w in words("01", 8):
        verdict = run_decider(dec, w)
        member = w == "01" * (len(w) // 2)
        assert verdict.kind != TIMEOUT
        assert (verdict.kind == ACCEPT) == member, w
        assert verdict.steps == (1 if member else 2)
    zeros = aca_to_daca(zoo_automaton("zeros"), 0)
    assert run_decider(zeros, "000").steps == 0
    assert run_decider(zeros, "010").kind == REJECT


def test_aca_to_daca_misuse_and_errors():
    # a too-small budget silently turns members into rejects; the wrapper
    # cannot know the acceptor's true settling time
    bad = aca_to_daca(zoo_automaton("pair01"), 0)
    assert run_decider(bad, "01").kind == REJECT
    with pytest.raises(ModeError):
        aca_to_daca(zoo_automaton("someone", decider=True), 1)
    with pytest.raises(ParameterError):
        aca_to_daca(zoo_automaton("pair01"), -1)


SCANNER_TEXT = """\
# matches words of zeros only
k: 1
alphabet: 0 1
pi: 0
sigma: 0
mu: 0
"""


def test_parse_scanner_round_trip():
    scanner = parse_scanner(SCANNER_TEXT, name="all0")
    assert scanner == ALL0
    for w in words("01", 6):
        assert scanner_accepts(scanner, w) == scanner_accepts(ALL0, w)


@pytest.mark.parametrize(
    "mutation",
    [
        lambda t: t.replace("mu: 0\n", ""),  # missing directive
        lambda t: t + "nu: 0\n",  # unknown directive
        lambda t: t + "pi: 1\n",  # duplicate directive
        lambda t: t.replace("k: 1", "k: one"),  # non-integer width
        lambda t: t.replace("alphabet: 0 1", "alphabet: 01"),  # multi-char symbol
        lambda t: t.replace("alphabet: 0 1", "alphabet: 0 0"),  # duplicate symbol
        lambda t: t.replace("pi: 0", "pi: 2"),  # word outside the alphabet
        lambda t: t.replace("k: 1", "k: 0"),  # bad width
        lambda t: t.replace("pi: 0", "pi 0"),  # no colon
    ],
)
def test_parse_scanner_rejects_malformed(mutation):
    with pytest.raises(RuleFileError):
        parse_scanner(mutation(SCANNER_TEXT), name="bad")


def write_scanner_files(tmp_path):
    (tmp_path / "all0.scan").write_text(SCANNER_TEXT)
    (tmp_path / "pair.scan").write_text(
        "k: 2\nalphabet: 0 1\npi: 01\nsigma: 01\nmu: 01 10\n"
    )


def test_parse_lt_expression_with_bindings(tmp_path):
    write_scanner_files(tmp_path)
    (tmp_path / "lang.lt").write_text(
        "# union of the two, minus the all-zero words\n"
        "let z = all0.scan\n"
        "let p = pair.scan\n"
        "(and (or p z) (not z))\n"
    )
    expr = load_lt_expression(tmp_path / "lang.lt")
    for w in words("01", 7):
        want = (w == "01" * (len(w) // 2) or set(w) == {"0"}) and set(w) != {"0"}
        assert lt_eval(expr, w) == want, w


def test_parse_lt_expression_plain_scanner_name(tmp_path):
    write_scanner_files(tmp_path)
    (tmp_path / "only.lt").write_text("let z = all0.scan\nz\n")
    expr = load_lt_expression(tmp_path / "only.lt")
    assert expr.op == "scanner"


@pytest.mark.parametrize(
    "body",
    [
        "(or z",  # unclosed
        "z z",  # trailing tokens
        "(maybe z)",  # unknown operator
        "(not z) extra",
        "q",  # unknown scanner name
        "",  # no expression line
        "(not)",  # negation without an operand
    ],
)
def test_parse_lt_expression_rejects_malformed(tmp_path, body):
    write_scanner_files(tmp_path)
    text = "let z = all0.scan\n" + body + "\n"
    with pytest.raises(RuleFileError):
        parse_lt_expression(text, where="bad", base_dir=tmp_path)


def test_parse_lt_expression_binding_errors(tmp_path):
    write_scanner_files(tmp_path)
    with pytest.raises(RuleFileError):
        parse_lt_expression(
            "let z = all0.scan\nlet z = pair.scan\nz\n", base_dir=tmp_path
        )
    with pytest.raises(RuleFileError):
        parse_lt_expression("let z = missing.scan\nz\n", base_dir=tmp_path)
    with pytest.raises(RuleFileError):
        parse_lt_expression("let z all0.scan\nz\n", base_dir=tmp_path)


def test_tabulate_round_trips_an_acceptor():
    machine = compile_slt_union_to_aca([PAIR01])
    text = tabulate_by_observation(machine, probe_len=2 * 2 + 3)
    flat = parse_rule_table(text, name="flat")
    assert "s0" in text
    for w in words("01", 8):
        assert (
            run_acceptor(flat, w, max_steps=machine.time_bound + 1).kind
            == run_acceptor(machine, w).kind
        ), w


def test_tabulate_round_trips_a_decider():
    machine = compile_lt_to_daca(SOMEONE_EXPR)
    text = tabulate_by_observation(machine, probe_len=2 * 1 + 3)
    flat = parse_rule_table(text, name="flat")
    for w in words("01", 8):
        want = run_decider(machine, w)
        got = run_decider(flat, w, max_steps=machine.time_bound + 1)
        assert (got.kind, got.steps) == (want.kind, want.steps), w


def test_tabulate_errors():
    machine = compile_slt_union_to_aca([ALL0])
    with pytest.raises(ParameterError):
        tabulate_by_observation(machine, probe_len=0)
    with pytest.raises(RuleFileError):
        # accepts nothing: the table format cannot express that
        tabulate_by_observation(compile_slt_union_to_aca([]), probe_len=3)
    blinker = set_automaton(
        name="blinker",
        input_alphabet=BITS,
        rule=lambda left, center, right: "1" if center == "0" else "0",
        accept_states=["1"],
    )
    with pytest.raises(ParameterError):
        tabulate_by_observation(blinker, probe_len=3)
