import random

import pytest

from alphabet_encoding import Alphabet, rot_encode
from errors import InputError, PositionError
from online_builder import OnlineBuilder, new
from oracle import build_tables, intermediate_columns, parameter_insert_position
from tests.text_factory import EXAMPLE_ALPHABET, EXAMPLE_PREPENDED, EXAMPLE_TEXT, PStringFactory

A = EXAMPLE_ALPHABET


def tokens(codes):
    return " ".join(A.tokens(codes))


@pytest.fixture
def example_builder():
    return OnlineBuilder.from_text(A, EXAMPLE_TEXT)


def assert_matches_oracle(builder, alphabet, text):
    tables = build_tables(alphabet, text)
    snap = builder.snapshot()
    assert snap.n == tables.n
    assert snap.L == tables.L
    assert snap.F == tables.F
    assert snap.LCPinf == tables.LCPinf
    return tables


class TestNew:

    def test_initial_state(self):
        builder = new(Alphabet.from_strings("a", "x"))
        snap = builder.snapshot()
        assert (snap.n, snap.L, snap.F, snap.LCPinf) == (1, [0], [0], [0])
        assert builder.C.to_list() == [0, 0, 1]
        assert builder.left == [0] and builder.right == [0] and builder.rm == [0]

    def test_minimal_alphabet(self):
        builder = new(Alphabet.from_strings("", ""))
        assert builder.C.to_list() == [0, 0]
        assert builder.pbwt() == [0]


class TestPrepend:

    def test_running_example(self, example_builder):
        snap = example_builder.snapshot()
        assert tokens(snap.L) == "a 3 3 1 3 1 $ 2 2 a a"
        assert tokens(snap.F) == "$ a a a 3 1 3 1 3 2 2"
        assert snap.LCPinf == [0, 0, 2, 0, 1, 1, 1, 1, 2, 2, 0]

    def test_prepend_parameter_to_running_example(self, example_builder):
        example_builder.prepend("y")
        snap = example_builder.snapshot()
        assert tokens(snap.L) == "a 3 3 1 2 1 2 2 2 $ a a"
        assert tokens(snap.F) == "$ a a a 3 1 3 1 2 2 2 2"
        assert example_builder.last_insert_position == 10
        assert_matches_oracle(example_builder, A, EXAMPLE_PREPENDED + "$")

    def test_static_onto_sentinel(self):
        builder = new(A)
        builder.prepend("a")
        assert tokens(builder.pbwt()) == "a $"
        assert tokens(builder.snapshot().F) == "$ a"
        assert builder.last_insert_position == 2

    def test_parameter_onto_sentinel(self):
        builder = new(A)
        builder.prepend("x")
        snap = builder.snapshot()
        assert tokens(snap.L) == "1 $"
        assert tokens(snap.F) == "$ 1"
        assert snap.LCPinf == [0, 0]

    def test_repeated_parameter(self):
        builder = OnlineBuilder.from_text(A, "xx")
        assert_matches_oracle(builder, A, "xx$")
        assert builder.snapshot().LCPinf == [0, 1, 0]

    def test_accepts_codes(self):
        builder = new(A)
        builder.prepend(A.code("z"))
        assert tokens(builder.pbwt()) == "1 $"

    def test_rejects_sentinel(self):
        with pytest.raises(InputError):
            new(A).prepend("$")
        with pytest.raises(InputError):
            new(A).prepend(0)

    def test_rejects_unknown_symbol(self):
        with pytest.raises(InputError):
            new(A).prepend("q")
        with pytest.raises(InputError):
            new(A).prepend(99)

    def test_extend_rejects_sentinel_in_text(self):
        with pytest.raises(InputError, match="position 2"):
            OnlineBuilder.from_text(A, "x$a")


class TestSteps:

    def test_update_lf_running_example(self, example_builder):
        k = example_builder.L.select(0, 1)
        example_builder.update_lf(A.code("y"), k)
        assert tokens(example_builder.L.to_list()) == "a 3 3 1 2 1 2 2 2 a a"
        assert tokens(example_builder.F.to_list()) == "$ a a a 3 1 3 1 2 2 2"

    def test_insert_row_running_example(self, example_builder):
        k = example_builder.L.select(0, 1)
        example_builder.update_lf(A.code("y"), k)
        assert example_builder.insert_row(k) == 10
        assert example_builder.L.access(10) == 0
        assert tokens([example_builder.F.access(10)]) == "2"

    def test_update_lcp_running_example(self, example_builder):
        truth = build_tables(A, EXAMPLE_PREPENDED + "$")
        k = example_builder.L.select(0, 1)
        example_builder.update_lf(A.code("y"), k)
        k_new = example_builder.insert_row(k)
        assert example_builder.update_lcp(k_new) == truth.LCPinf[k_new - 1]
        assert example_builder.update_lcp(k_new - 1) == truth.LCPinf[k_new - 2]

    def test_update_lcp_past_last_row(self, example_builder):
        assert example_builder.update_lcp(example_builder.n) == 0
        assert example_builder.update_lcp(0) == 0

    def test_update_lcp_sentinel_first_column(self, example_builder):
        # F[1] is the sentinel, F[2] is not
        assert example_builder.update_lcp(1) == 0

    def test_intermediate_columns_on_random_texts(self):
        rng = random.Random(47)
        for _ in range(60):
            alphabet, text = PStringFactory.create_random_case(rng, max_len=30)
            builder = OnlineBuilder.from_text(alphabet, text)
            c = rng.randrange(1, alphabet.size)
            last, first = intermediate_columns(alphabet, text + "$", c)
            builder.update_lf(c, builder.L.select(0, 1))
            assert builder.L.to_list() == last
            assert builder.F.to_list() == first

    def test_insert_position_matches_counting_terms(self):
        rng = random.Random(53)
        for _ in range(60):
            alphabet, text = PStringFactory.create_random_case(rng, max_len=30)
            builder = OnlineBuilder.from_text(alphabet, text)
            c = alphabet.code(rng.choice(alphabet.params))
            builder.prepend(c)
            assert builder.last_insert_position == parameter_insert_position(alphabet, text + "$", c)
            assert builder.last_insert_position >= 2


class TestViews:

    def test_lf_running_example(self, example_builder):
        assert example_builder.lf(1) == 2
        truth = build_tables(A, EXAMPLE_TEXT + "$")
        assert [example_builder.lf(i) for i in range(1, 12)] == truth.LF

    def test_lf_inverse(self, example_builder):
        for i in range(1, example_builder.n + 1):
            assert example_builder.lf_inv(example_builder.lf(i)) == i

    def test_lf_out_of_range(self, example_builder):
        with pytest.raises(PositionError):
            example_builder.lf(0)
        with pytest.raises(PositionError):
            example_builder.lf_inv(example_builder.n + 1)

    def test_recover_encoding(self, example_builder):
        assert tokens(example_builder.recover_encoding()) == "3 a 2 1 1 a 2 3 3 a $"
        assert new(A).recover_encoding() == [0]

    def test_pbwt_after_new(self):
        assert new(A).pbwt() == [0]

    def test_snapshot_after_new(self):
        snap = new(A).snapshot()
        assert (snap.L, snap.F, snap.LCPinf) == ([0], [0], [0])

    def test_static_counts(self):
        builder = OnlineBuilder.from_text(Alphabet.from_strings("ab", "x"), "abxbb")
        assert builder.static_counts() == {"$": 1, "a": 1, "b": 3}

    def test_rightmost_rows(self, example_builder):
        truth = build_tables(A, EXAMPLE_TEXT + "$")
        rows = example_builder.rightmost_rows()
        assert set(rows) == {"x", "y", "z"}
        for symbol, row in rows.items():
            a = A.code(symbol) - A.sigma_size
            assert truth.RA[row - 1] == example_builder.right[a] - 1


class TestEquivalence:

    def check_every_prefix(self, alphabet, text):
        builder = new(alphabet)
        assert_matches_oracle(builder, alphabet, "$")
        for step in range(1, len(text) + 1):
            suffix = text[-step:] + "$"
            before = builder.snapshot().LCPinf
            builder.prepend(text[-step])
            tables = assert_matches_oracle(builder, alphabet, suffix)
            k_new = builder.last_insert_position
            assert k_new == tables.k

            # every LCP entry away from k'-1 and k' is carried over
            after = builder.snapshot().LCPinf
            assert after[:k_new - 2] == before[:k_new - 2]
            assert after[k_new:] == before[k_new - 1:]

            for a, row in enumerate(builder.rm):
                if builder.left[a]:
                    assert 1 <= row <= builder.n
                    assert tables.RA[row - 1] == builder.right[a] - 1
                    assert alphabet.is_number(builder.L.access(row))
                else:
                    assert builder.right[a] == 0

            for code, symbol in enumerate(alphabet.statics):
                assert builder.C.count(code) == suffix.count(symbol) + 1

            statics = sum(1 for s in suffix if s in alphabet.statics)
            assert all(alphabet.is_static(f) for f in tables.F[:statics])
            assert not any(alphabet.is_static(f) for f in tables.F[statics:])

            lf = [builder.lf(i) for i in range(1, builder.n + 1)]
            assert lf == tables.LF
            assert [builder.lf_inv(j) for j in lf] == list(range(1, builder.n + 1))
        assert builder.recover_encoding() == rot_encode(alphabet, text + "$")

    @pytest.mark.parametrize("text", ["", "a", "x", "aaaa", "xyzxyz", "zzzz", "xyxyxy", EXAMPLE_PREPENDED])
    def test_golden_corpus(self, text):
        self.check_every_prefix(A, text)

    def test_all_parameter_texts(self):
        alphabet = Alphabet.from_strings("", "pqrs")
        self.check_every_prefix(alphabet, "pqprsspqrqs")

    def test_random_texts(self):
        rng = random.Random(59)
        for _ in range(60):
            alphabet, text = PStringFactory.create_random_case(rng, max_len=40)
            self.check_every_prefix(alphabet, text)

    def test_parameter_heavy_texts(self):
        rng = random.Random(61)
        for _ in range(40):
            alphabet = PStringFactory.create_alphabet(rng.randint(1, 2), rng.randint(3, 6))
            text = PStringFactory.create_text(alphabet, rng.randint(1, 40), rng, param_rate=0.9)
            self.check_every_prefix(alphabet, text)

    @pytest.mark.slow
    def test_full_sweep(self):
        rng = random.Random(67)
        for _ in range(500):
            alphabet = PStringFactory.create_alphabet(rng.randint(0, 3), rng.randint(1, 6))
            text = PStringFactory.create_text(alphabet, rng.randint(0, 199), rng)
            builder = new(alphabet)
            for step in range(1, len(text) + 1):
                builder.prepend(text[-step])
                assert_matches_oracle(builder, alphabet, text[-step:] + "$")
