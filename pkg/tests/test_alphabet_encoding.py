import itertools
import random

import pytest

from alphabet_encoding import INF, Alphabet, lcp_inf, p_match, prev_encode, pv_compare, rot_encode, rotate
from errors import AlphabetError
from tests.text_factory import EXAMPLE_ALPHABET, EXAMPLE_TEXT, PStringFactory

UV_ALPHABET = Alphabet.from_strings("ab", "uvxy")


def tokens(alphabet, codes):
    return " ".join(alphabet.tokens(codes))


class TestAlphabet:

    def test_sentinel_is_first_static(self):
        alphabet = Alphabet.from_strings("ab", "xy")
        assert alphabet.statics == ("$", "a", "b")
        assert alphabet.code("$") == 0
        assert alphabet.code("a") == 1
        assert alphabet.code("x") == 3

    def test_sentinel_listed_in_sigma_is_tolerated(self):
        assert Alphabet.from_strings("a$", "x").statics == ("$", "a")

    def test_overlap_rejected(self):
        with pytest.raises(AlphabetError, match="overlap"):
            Alphabet.from_strings("ab", "bx")

    def test_duplicate_rejected(self):
        with pytest.raises(AlphabetError, match="duplicate"):
            Alphabet.from_strings("aa", "x")

    def test_unknown_symbol_reports_position(self):
        with pytest.raises(AlphabetError) as info:
            EXAMPLE_ALPHABET.encode_text("xaq")
        assert info.value.position == 3

    def test_multibyte_symbols(self):
        alphabet = Alphabet.from_strings("é", "αβ", sentinel="#")
        assert alphabet.decode(alphabet.encode_text("αéβ#")) == "αéβ#"

    def test_infinity_token(self):
        assert EXAMPLE_ALPHABET.token(INF) == "∞"


class TestPrevEncode:

    def test_uv_example(self):
        assert tokens(UV_ALPHABET, prev_encode(UV_ALPHABET, "uvvauvb")) == "∞ ∞ 1 a 4 3 b"

    def test_sentinel_only(self):
        assert tokens(EXAMPLE_ALPHABET, prev_encode(EXAMPLE_ALPHABET, "$")) == "$"

    def test_running_example(self):
        result = prev_encode(EXAMPLE_ALPHABET, EXAMPLE_TEXT + "$")
        assert tokens(EXAMPLE_ALPHABET, result) == "∞ a ∞ ∞ 1 a 2 5 2 a $"

    def test_empty(self):
        assert prev_encode(EXAMPLE_ALPHABET, "") == []

    def test_unknown_symbol(self):
        with pytest.raises(AlphabetError):
            prev_encode(EXAMPLE_ALPHABET, "xq")


class TestRotEncode:

    def test_uv_example(self):
        assert tokens(UV_ALPHABET, rot_encode(UV_ALPHABET, "uvvauvb")) == "2 1 2 a 2 2 b"

    def test_sentinel_only(self):
        assert tokens(EXAMPLE_ALPHABET, rot_encode(EXAMPLE_ALPHABET, "$")) == "$"

    def test_running_example(self):
        result = rot_encode(EXAMPLE_ALPHABET, EXAMPLE_TEXT + "$")
        assert tokens(EXAMPLE_ALPHABET, result) == "3 a 2 1 1 a 2 3 3 a $"

    def test_empty(self):
        assert rot_encode(EXAMPLE_ALPHABET, "") == []

    def test_single_parameter_counts_itself(self):
        assert tokens(EXAMPLE_ALPHABET, rot_encode(EXAMPLE_ALPHABET, "x$")) == "1 $"

    def test_commutes_with_rotation(self):
        rng = random.Random(7)
        for _ in range(50):
            alphabet, text = PStringFactory.create_random_case(rng, max_len=25)
            enc = rot_encode(alphabet, text + "$")
            for i in range(len(text) + 2):
                assert rot_encode(alphabet, rotate(text + "$", i)) == rotate(enc, i)

    def test_values_within_parameter_count(self):
        rng = random.Random(11)
        for _ in range(100):
            alphabet, text = PStringFactory.create_random_case(rng)
            for code in rot_encode(alphabet, text + "$"):
                if alphabet.is_number(code):
                    assert 1 <= alphabet.code_number(code) <= alphabet.pi_size


class TestPMatch:

    def test_uv_example(self):
        assert p_match(UV_ALPHABET, "uvvauvb", "xyyaxyb")

    def test_identity(self):
        assert p_match(EXAMPLE_ALPHABET, EXAMPLE_TEXT, EXAMPLE_TEXT)

    def test_distinct_parameters_do_not_match_repeat(self):
        assert not p_match(EXAMPLE_ALPHABET, "xy", "xx")

    def test_length_mismatch(self):
        assert not p_match(EXAMPLE_ALPHABET, "xy", "xyx")

    def test_bijections_preserve_both_encodings(self):
        rng = random.Random(3)
        for _ in range(200):
            alphabet, text = PStringFactory.create_random_case(rng)
            renamed = PStringFactory.rename_parameters(alphabet, text, rng)
            assert p_match(alphabet, text, renamed)
            assert prev_encode(alphabet, text) == prev_encode(alphabet, renamed)
            assert rot_encode(alphabet, text + "$") == rot_encode(alphabet, renamed + "$")

    def test_mutations_change_both_encodings(self):
        rng = random.Random(5)
        checked = 0
        while checked < 200:
            alphabet, text = PStringFactory.create_random_case(rng)
            mutated = PStringFactory.mutate_parameter(alphabet, text, rng)
            if mutated is None:
                continue
            checked += 1
            assert not p_match(alphabet, text, mutated)
            assert rot_encode(alphabet, text + "$") != rot_encode(alphabet, mutated + "$")


class TestRotate:

    def test_one_step(self):
        assert rotate("xayzzazyza$", 1) == "$xayzzazyza"

    def test_zero_and_full_cycle(self):
        assert rotate(EXAMPLE_TEXT, 0) == EXAMPLE_TEXT
        assert rotate(EXAMPLE_TEXT, len(EXAMPLE_TEXT)) == EXAMPLE_TEXT

    def test_periodic(self):
        assert rotate(EXAMPLE_TEXT, 3) == rotate(EXAMPLE_TEXT, 3 + len(EXAMPLE_TEXT))

    def test_tuples(self):
        assert rotate((1, 2, 3), 1) == (3, 1, 2)


class TestLcpInf:

    def test_counts_only_infinities(self):
        assert lcp_inf([INF, 1, INF, 5], [INF, 1, INF, 6]) == 2

    def test_identical(self):
        x = prev_encode(EXAMPLE_ALPHABET, EXAMPLE_TEXT + "$")
        assert lcp_inf(x, x) == x.count(INF)

    def test_first_symbol_differs(self):
        assert lcp_inf([0, INF], [INF, INF]) == 0


class TestPvCompare:

    def test_order(self):
        a = EXAMPLE_ALPHABET
        assert pv_compare(a.code("$"), a.code("a")) == -1
        assert pv_compare(a.number_code(5), INF) == -1
        assert pv_compare(a.number_code(2), a.number_code(2)) == 0
        assert pv_compare(a.number_code(1), a.code("a")) == 1

    def test_total_order_on_small_domain(self):
        alphabet = Alphabet.from_strings("ab", "x")
        domain = [0, 1, 2] + [alphabet.number_code(d) for d in range(1, 5)] + [INF]
        for x, y in itertools.product(domain, repeat=2):
            assert pv_compare(x, y) == -pv_compare(y, x)
            assert (pv_compare(x, y) == 0) == (x == y)
        for x, y, z in itertools.product(domain, repeat=3):
            if pv_compare(x, y) <= 0 and pv_compare(y, z) <= 0:
                assert pv_compare(x, z) <= 0
        # $ < statics < numbers < infinity, in declaration order
        assert sorted(domain, key=lambda c: c) == domain
