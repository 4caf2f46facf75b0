# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import pytest

from shared.automata import (
    Alphabet,
    AutomatonInputError,
    WitnessConstructionError,
    equivalent,
    is_empty,
    minimize,
    parse_regex
)
from shared.schemas import WitnessFamily, WitnessSpec
from services.langops import intersection, star
from services.oracle import defeats_mps
from services.pumping import analyze
from services.witnesses import (
    a_n_a_star,
    b_plus,
    b_star,
    binary_regex,
    build,
    construct,
    padded_expected,
    padded_family,
    intersection_witness,
    quinary_mps_witness,
    quinary_tables,
    self_validate,
    star_witness,
    thm_binary,
    thm_quinary
)
from services.witnesses.validation import mps_only

AB = Alphabet.of("ab")


class TestBlocks:
    def test_three_blocks(self):
        assert equivalent(b_star(3), parse_regex("b^*a^*b^*", AB))

    def test_four_nonempty_leading_block(self):
        d = b_plus(4)
        assert d.accepts("ba")
        assert d.accepts("baba")
        assert not d.accepts("")
        assert not d.accepts("a")
        assert not d.accepts("babab")

    def test_zero_blocks_is_empty(self):
        assert is_empty(b_plus(0))
        assert is_empty(b_star(0))

    def test_negative_count(self):
        with pytest.raises(AutomatonInputError):
            b_plus(-1)


class TestBinary:
    @pytest.mark.parametrize("params", [
        (1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 2, 2), (1, 2, 3), (2, 3, 5),
    ])
    def test_constants(self, params):
        report = analyze(thm_binary(*params))
        assert (report.mpc, report.mpl, report.sc) == params

    def test_cycle_case_has_no_regex(self):
        assert binary_regex(2, 3, 3) is None
        assert thm_binary(2, 3, 3).alphabet.symbols == ("a",)

    def test_regex_shape(self):
        assert binary_regex(1, 2, 3) == "b^0(a^2)^*(∅+λ)"

    @pytest.mark.parametrize("params", [(0, 1, 1), (2, 1, 3), (1, 3, 2)])
    def test_rejects_unordered(self, params):
        with pytest.raises(AutomatonInputError):
            thm_binary(*params)


class TestPaddedFamily:
    def test_reaches_requested_constants(self):
        d = padded_family(2, 3, 5)
        assert d.alphabet.symbols == ("a", "b", "c")
        report = analyze(d)
        assert (report.mpc, report.mpl, report.sc) == (2, 3, 5)

    def test_single_state_cycle_needs_extra_state(self):
        assert padded_expected(1, 1, 4) == (1, 1, 5)
        assert analyze(padded_family(1, 1, 4)).sc == 5
        assert padded_expected(1, 1, 2) == (1, 1, 2)
        assert analyze(padded_family(1, 1, 2)).sc == 2

    def test_requires_gap(self):
        with pytest.raises(AutomatonInputError):
            padded_family(1, 2, 2)


class TestQuinary:
    @pytest.mark.parametrize("params", [(1, 2, 4, 6), (2, 3, 4, 4), (1, 1, 2, 2)])
    def test_constants(self, params):
        d = thm_quinary(*params)
        assert analyze(d).constants == params
        assert d.n_states == params[3]

    @pytest.mark.parametrize("params", [(1, 2, 4, 6), (2, 3, 4, 4)])
    def test_mps_witness_defeats_one_less(self, params):
        p1, p2, p3, _ = params
        w = quinary_mps_witness(p1, p2, p3)
        assert defeats_mps(thm_quinary(*params), w.u, w.w, w.v, p3 - 1)

    def test_tables_are_complete_over_five_letters(self):
        d = quinary_tables(1, 2, 3, 5)
        assert d.alphabet.symbols == tuple("abcde")
        assert d.n_states == 5
        assert quinary_tables(2, 2, 2, 3).alphabet.symbols == tuple("abcde")

    def test_rejects_unordered(self):
        with pytest.raises(AutomatonInputError):
            thm_quinary(1, 3, 2, 4)


class TestStarWitness:
    def test_star_raises_mps(self):
        d = star_witness(2, 3)
        assert analyze(d).mps == 2
        assert analyze(star(d)).mps == 3

    @pytest.mark.parametrize("n,k", [(3, 2), (2, 2), (1, 1)])
    def test_mps_of_operand(self, n, k):
        assert analyze(star_witness(n, k)).mps == n

    @pytest.mark.parametrize("n,k", [(0, 1), (2, 4), (2, 0)])
    def test_out_of_range(self, n, k):
        with pytest.raises(AutomatonInputError):
            star_witness(n, k)


class TestIntersectionWitness:
    @pytest.mark.parametrize("params", [(2, 2, 4), (2, 2, 2)])
    def test_intersection_constant(self, params):
        m, n, k = params
        first, second = intersection_witness(m, n, k)
        assert first.alphabet == second.alphabet
        report = analyze(minimize(intersection(first, second)))
        assert report.mpl == k
        assert report.mps == k

    def test_empty_intersection(self):
        first, second = intersection_witness(2, 1, 0)
        assert is_empty(intersection(first, second))

    @pytest.mark.parametrize("params", [(1, 1, 0), (1, 1, 3), (0, 1, 1)])
    def test_out_of_range(self, params):
        with pytest.raises(AutomatonInputError):
            intersection_witness(*params)


class TestRegistry:
    def test_intersection_components_or_combined(self):
        spec = WitnessSpec(family=WitnessFamily.INTERSECTION_WITNESS, params={"m": 2, "n": 2, "k": 2})
        assert len(construct(spec)) == 2
        assert len(construct(spec, combine=True)) == 1

    def test_missing_parameter(self):
        spec = WitnessSpec(family=WitnessFamily.BINARY_TRIPLE, params={"p1": 1, "p2": 2})
        with pytest.raises(KeyError):
            construct(spec)

    def test_build_shortcut(self):
        assert build("an-astar", n=2) == a_n_a_star(2)
        assert build("example").n_states == 5


class TestSelfValidation:
    def test_mismatch_raises(self, even_a):
        with pytest.raises(WitnessConstructionError) as info:
            self_validate("probe", even_a, (9,), mps_only)
        assert info.value.expected == (9,)
        assert info.value.computed == (2,)

    def test_explicit_bypass(self, even_a):
        assert self_validate("probe", even_a, (9,), mps_only, validate=False) is even_a

    def test_configured_bypass(self, even_a, monkeypatch):
        monkeypatch.setenv("PUMPING_SELF_VALIDATE", "false")
        assert self_validate("probe", even_a, (9,), mps_only) is even_a
