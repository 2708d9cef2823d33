import itertools

import pytest

from fstirling.errors import GuardError, ModeError, UsageError
from fstirling.family import ShiftVector, q_E, q_H, symbolic_E, symbolic_H
from fstirling.oracles import (
    enum_a_t_cycle_tuples,
    enum_f_stirling_partitions,
    enum_f_stirling_perm_tuples,
    enum_hrel_cycle_tuples,
    enum_monomial_sequences,
    enum_ordered_sequences,
    enum_r_stirling_partitions,
    enum_r_stirling_perm_tuples,
    s_lambda_k,
)
from fstirling.oracles import perms as P
from fstirling.oracles import validate as V
from fstirling.symfunc import elementary

F12 = ShiftVector((1, 2))
F01 = ShiftVector((0, 1))
GOLDEN_HIST = {0: 2, 1: 4, 2: 5, 3: 4, 4: 2, 5: 1}
GOLDEN_BETA = {(0, 0): 5, (1, 0): 3, (0, 1): 3, (1, 1): 2}


def lab(*tokens):
    return V.labeled(*tokens)


# -- f-Stirling partitions ---------------------------------------------------------


def test_f_partitions_golden():
    res = enum_f_stirling_partitions(3, 2, F12, witnesses=True)
    assert res.total == 18
    assert res.histogram == GOLDEN_HIST
    assert len(res.witnesses) == 18


def test_f_partitions_empty_order():
    assert enum_f_stirling_partitions(0, 0, ShiftVector((0,))).histogram == {0: 1}
    assert enum_f_stirling_partitions(3, 0, F12).total == 0
    assert enum_f_stirling_partitions(2, 3, F12).total == 0


def test_s_statistic_example():
    P1 = [lab("1_1", "1_2", "3_1"), lab("2_1", "2_2"), lab(), lab("3_2")]
    assert V.subset_labels(P1, 2) == [1, 2, 0, -1]
    assert V.s_statistic(P1, 2) == 4
    assert V.f_partition_violation(P1, 3, 2, (1, 2)) is None
    serialized = [w.serialize() for w in enum_f_stirling_partitions(3, 2, F12, witnesses=True).witnesses]
    assert [["1_1", "1_2", "3_1"], ["2_1", "2_2"], [], ["3_2"]] in serialized


@pytest.mark.parametrize(
    "subsets",
    [
        [("1_1", "1_2", "2_1"), ("2_2", "3_1", "3_2"), (), ()],
        [("2_1", "2_2"), ("3_1", "3_2"), ("1_1", "1_2"), ()],
        [("1_1", "1_2", "3_2"), ("2_1", "2_2"), (), ("3_1",)],
    ],
)
def test_f_partition_non_examples(subsets):
    assert V.f_partition_violation([lab(*s) for s in subsets], 3, 2, (1, 2)) is not None


def test_f_partition_witnesses_valid():
    for n in range(4):
        for j in range(n + 1):
            for w in enum_f_stirling_partitions(n, j, F12, witnesses=True).witnesses:
                assert V.f_partition_violation(w.subsets(), n, j, (1, 2)) is None
                assert V.s_statistic(w.subsets(), j) == w.stat


# -- f-Stirling permutation tuples -------------------------------------------------------


def test_f_perms_golden():
    res = enum_f_stirling_perm_tuples(3, 2, F12, witnesses=True)
    assert res.total == 18
    assert res.histogram == GOLDEN_HIST
    assert ["(4)(3,1)(2)", "(5)(4,1)(3)(2)"] in [w.serialize() for w in res.witnesses]


def test_f_perms_empty_order():
    assert enum_f_stirling_perm_tuples(0, 0, F12).histogram == {0: 1}


def test_coinv_examples():
    word = (6, 2, 3, 5, 4, 1)
    assert P.coinv_at(word, 2) == 3
    assert P.coinv_at(word, 5) == 0
    assert P.max_word(P.parse_cycles("(1,6,2)(4,5)", 6)) == (6, 2, 1, 5, 4, 3)
    assert P.max_word(P.parse_cycles("(1,2)(4,5)", 6)) == (6, 5, 4, 3, 2, 1)
    assert P.max_word(P.parse_cycles("(1,3,2)(6,5,4)", 6)) == (6, 5, 4, 3, 2, 1)


@pytest.mark.parametrize(
    "pair",
    [
        ("(4)(3,1)(2)", "(5)(4,1)(2,3)"),
        ("(4)(3,1)(2)", "(5)(4,2)(3)(1)"),
        ("(4)(3,1)(2)", "(5,4)(3)(2)(1)"),
    ],
)
def test_f_perm_non_examples(pair):
    perms = [P.parse_cycles(pair[0], 4), P.parse_cycles(pair[1], 5)]
    assert V.f_perm_violation(perms, 3, 2, (1, 2)) is not None


def test_f_perm_example_accepted():
    perms = [P.parse_cycles("(4)(3,1)(2)", 4), P.parse_cycles("(5)(4,1)(3)(2)", 5)]
    assert V.f_perm_violation(perms, 3, 2, (1, 2)) is None


def test_coinv_histogram_is_first_kind():
    # with f = x the coinversion histogram gives the q-analogue of c(n, j)
    f = ShiftVector((0,))
    for n in range(6):
        for j in range(n + 1):
            hist = enum_f_stirling_perm_tuples(n, j, f).histogram
            assert hist.coefficients() == list(q_E(j, n, f).coeffs)


# -- r-Stirling partitions and permutations ------------------------------------------------


def test_r_partitions_golden():
    res = enum_r_stirling_partitions(3, 2, 2, witnesses=True)
    assert res.total == 13
    assert res.histogram == GOLDEN_BETA
    assert res.histogram == symbolic_H(2, 3, 2).terms
    assert [["0_1", "0_2", "3_2"], ["1_1", "1_2", "3_1"], ["2_1", "2_2"]] in [w.serialize() for w in res.witnesses]


def test_r_partitions_edges():
    res = enum_r_stirling_partitions(0, 0, 3, witnesses=True)
    assert res.histogram == {(0, 0, 0): 1}
    for n in range(1, 4):
        assert enum_r_stirling_partitions(n, 0, 2).total == 0


@pytest.mark.parametrize(
    "subsets",
    [
        [("0_1", "0_2", "2_1", "2_2"), ("1_1", "1_2", "3_1", "3_2"), ()],
        [("0_1", "0_2", "1_1"), ("1_2", "2_1", "2_2"), ("3_1", "3_2")],
        [("0_1", "0_2", "1_1", "1_2"), ("2_1", "2_2"), ("3_1", "3_2")],
    ],
)
def test_r_partition_non_examples(subsets):
    assert V.r_partition_violation([lab(*s) for s in subsets], 3, 2, 2) is not None


def test_r_perms_golden():
    res = enum_r_stirling_perm_tuples(3, 2, 2, witnesses=True)
    assert res.total == 13
    assert res.histogram == GOLDEN_BETA
    assert res.histogram == symbolic_E(2, 3, 2).terms
    assert ["(1)(2,4)(3)", "(1)(2)(3,4)"] in [w.serialize() for w in res.witnesses]


def test_records():
    assert P.records(P.parse_cycles("(1)(2,4)(3)", 4)) == 1
    assert P.records(P.parse_cycles("(1,3,2)", 3)) == 3
    assert P.records(P.parse_cycles("(1,2,3)", 3)) == 2
    assert P.left_to_right_minima((3, 1, 2)) == 2


@pytest.mark.parametrize("pair", [("(1)(2,4)(3)", "(1)(2,3)(4)"), ("(1,2)(3)(4)", "(1,2)(3)(4)")])
def test_r_perm_non_examples(pair):
    perms = [P.parse_cycles(c, 4) for c in pair]
    assert V.r_perm_violation(perms, 3, 2, 2) is not None


def test_r_perms_trivial():
    assert enum_r_stirling_perm_tuples(0, 0, 2).histogram == {(0, 0): 1}


# -- gap- and congruence-constrained cycle tuples ---------------------------------------------


def test_hrel_examples():
    assert enum_hrel_cycle_tuples(2, 3, 2, F01).total == 24
    assert enum_hrel_cycle_tuples(2, 4, 3, F01).total == 40
    assert enum_hrel_cycle_tuples(0, 3, 2, F01).total == 1
    assert enum_hrel_cycle_tuples(3, 2, 2, F01).total == 0
    with pytest.raises(UsageError):
        enum_hrel_cycle_tuples(1, 2, 1, F01)


HREL_FIRST = ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
HREL_SECOND = [
    "(1,2)(3,4)(5)", "(1,2)(3,5)(4)", "(1,3)(2,4)(5)", "(1,3)(2,5)(4)",
    "(1,4)(2,3)(5)", "(1,4)(2,5)(3)", "(1,5)(2,3)(4)", "(1,5)(2,4)(3)",
]


def test_hrel_listed_witnesses():
    res = enum_hrel_cycle_tuples(2, 3, 2, F01, witnesses=True)
    got = {tuple(w.serialize()) for w in res.witnesses}
    assert got == set(itertools.product(HREL_FIRST, HREL_SECOND))


def test_hrel_witnesses_valid():
    res = enum_hrel_cycle_tuples(2, 4, 3, F01, witnesses=True)
    for w in res.witnesses:
        assert V.cycle_tuple_violation(w.perms, 2, 4, [5, 6], t=3, family="hrel") is None


LC_WITNESSES = {
    ("(1,2)(3)", "(1,2)(3)(4)"),
    ("(1,2)(3)", "(1,3)(2)(4)"),
    ("(1,3)(2)", "(1,2)(3)(4)"),
    ("(1,3)(2)", "(1,3)(2)(4)"),
    ("(1)(2,3)", "(1)(2,3)(4)"),
    ("(1)(2,3)", "(1)(2,4)(3)"),
    ("(1,2)(3)", "(1,4)(2)(3)"),
    ("(1,3)(2)", "(1,4)(2)(3)"),
}


def test_at_legendre_witnesses():
    res = enum_a_t_cycle_tuples(1, 2, 1, F01, witnesses=True)
    assert {tuple(w.serialize()) for w in res.witnesses} == LC_WITNESSES
    split = {}
    for w in res.witnesses:
        big = P.big_numbers(w.perms[1])
        split[big] = split.get(big, 0) + 1
    assert split == {1: 5, 2: 3}


def test_at_symbolic_jacobi_split():
    hist = enum_a_t_cycle_tuples(1, 2, 1, F01, symbolic=True).histogram
    no_a1 = {beta[1]: c for beta, c in hist.items() if beta[0] == 0}
    assert no_a1 == {0: 5, 1: 3}


def test_big_numbers():
    assert P.big_numbers(P.parse_cycles("(1,5)(2,4)(3)", 5)) == 3
    assert P.big_numbers(P.parse_cycles("(1,4)(2,5)(3)", 5)) == 2


def test_cycle_structure_conditions():
    same = [P.parse_cycles("(1,3,6)(2,5)(4)", 6), P.parse_cycles("(1,2,3)(4,5)(6)", 6)]
    assert V._common_prefix(same, 3)
    other = [P.parse_cycles("(1,3,6)(2,5)(4)", 6), P.parse_cycles("(1,5)(2,3,4)(6)", 6)]
    assert not V._common_prefix(other, 3)
    upto = [P.parse_cycles("(1,3,2)(4,5)", 5), P.parse_cycles("(1,7,6)(2,4)(3)(5)", 7)]
    assert V._common_prefix(upto, 2)
    assert V.structured_violation(P.parse_cycles("(1,3,2)(4,5)", 5), 2, 2) is None
    assert V.structured_violation(P.parse_cycles("(1,7,6)(2,4)(3)(5)", 7), 2, 4) is None
    reason = V.structured_violation(P.parse_cycles("(1,7,6)(2,4)(3,5)", 7), 2, 3)
    assert reason == "a nontrivial cycle beyond position 2"


def test_at_edges():
    assert enum_a_t_cycle_tuples(0, 4, 2, F12).total == 1
    assert enum_a_t_cycle_tuples(3, 2, 1, F12).total == 0
    with pytest.raises(UsageError):
        enum_a_t_cycle_tuples(1, 2, 0, F12)


# -- sequences -----------------------------------------------------------------------


LS_WITNESSES = {
    (((1,), ()), ((1,), ())),
    (((1,), ()), ((2,), ())),
    (((1,), ()), ((3,), ())),
    (((2,), ()), ((1,), ())),
    (((2,), ()), ((2,), ())),
    (((2,), ()), ((3,), ())),
    (((), (2,)), ((), (2,))),
    (((), (2,)), ((), (3,))),
}


def test_ordered_sequences_legendre():
    res = enum_ordered_sequences(1, 2, F01, witnesses=True)
    assert res.total == 8
    assert {w.seqs for w in res.witnesses} == LS_WITNESSES


def test_ordered_sequences_edges():
    assert enum_ordered_sequences(0, 3, F12).total == 1
    assert enum_ordered_sequences(2, 0, F12).total == 0


def test_sequence_validator():
    assert V.sequence_tuple_violation([[(3, 1, 4), (4, 4, 3, 4), ()]], 7, 3, [4]) is None
    assert V.sequence_tuple_violation([[(1,), (1,)]], 2, 2, [3]) is not None


def test_s_lambda_k():
    assert s_lambda_k((2, 1), 3) == [(1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 3, 3), (2, 2, 3), (2, 3, 3)]
    assert s_lambda_k((1, 1, 1), 2) == []


def test_monomial_sequences():
    f = ShiftVector((0,))
    assert enum_monomial_sequences((1, 1), 2, f).total == elementary(2, [1, 2]) == 2
    assert enum_monomial_sequences((1, 1, 1), 2, f).total == 0
    res = enum_monomial_sequences((2, 1), 3, F12, witnesses=True)
    for w in res.witnesses:
        assert V.monomial_violation(w.base, w.seqs, (2, 1), 3, [4, 5]) is None


def test_jacobi_via_monomials():
    # Jc(n, j) = e_{n-j}(f(1..n-1)) = m_{(1^{n-j})}(f(1..n-1)) at f = x(x+1)
    for n in range(1, 6):
        for j in range(1, n + 1):
            lam = (1,) * (n - j)
            count = enum_monomial_sequences(lam, n - 1, F01).total
            assert count == elementary(n - j, F01.values(n - 1))


# -- shared behaviour ----------------------------------------------------------------------


def test_guard_is_enforced():
    with pytest.raises(GuardError):
        enum_f_stirling_partitions(5, 2, F12, guard=50)
    with pytest.raises(GuardError):
        enum_ordered_sequences(3, 3, F12, witnesses=True, guard=100)


def test_integer_shifts_required():
    with pytest.raises(ModeError):
        enum_f_stirling_partitions(2, 1, ShiftVector(("1/2",)))


def test_witness_order_is_deterministic():
    first = [w.serialize() for w in enum_f_stirling_perm_tuples(3, 2, F12, witnesses=True).witnesses]
    second = [w.serialize() for w in enum_f_stirling_perm_tuples(3, 2, F12, witnesses=True).witnesses]
    assert first == second
    import json

    keys = [json.dumps(s) for s in first]
    assert keys == sorted(keys)


VECTORS = [(0,), (2,), (0, 1), (1, 2), (2, 2)]


@pytest.mark.parametrize("shifts", VECTORS)
def test_brute_force_agreement(shifts):
    f = ShiftVector(shifts)
    for n in range(4):
        for j in range(n + 1):
            assert V.brute_f_partitions(n, j, shifts) == enum_f_stirling_partitions(n, j, f).histogram
            assert V.brute_f_perm_tuples(n, j, shifts) == enum_f_stirling_perm_tuples(n, j, f).histogram
    for n, k in itertools.product(range(3), range(4)):
        for t in (2, 3):
            for sym in (False, True):
                assert V.brute_cycle_tuples(n, k, t, shifts, family="hrel", symbolic=sym) == \
                    enum_hrel_cycle_tuples(n, k, t, f, symbolic=sym).histogram
        for t in (1, 2):
            assert V.brute_cycle_tuples(n, k, t, shifts, family="at") == enum_a_t_cycle_tuples(n, k, t, f).histogram
        tops = [k + a for a in shifts]
        assert V.brute_ordered_sequences(n, k, tops) == enum_ordered_sequences(n, k, f).histogram
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        for k in range(4):
            tops = [k + 1] * len(shifts)
            assert V.brute_monomial_sequences(lam, k, tops, marker=k + 1) == \
                enum_monomial_sequences(lam, k, f, symbolic=True).histogram


@pytest.mark.parametrize("r", [1, 2])
def test_brute_force_r_families(r):
    for n in range(4):
        for j in range(n + 1):
            assert V.brute_r_partitions(n, j, r) == enum_r_stirling_partitions(n, j, r).histogram
            assert V.brute_r_perm_tuples(n, j, r) == enum_r_stirling_perm_tuples(n, j, r).histogram


def test_q_histograms_small():
    for n in range(5):
        for j in range(n + 1):
            assert enum_f_stirling_partitions(n, j, F12).histogram.coefficients() == list(q_H(j, n, F12).coeffs)
