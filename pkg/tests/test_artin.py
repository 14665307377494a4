import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import burau_is_identity, pure_words, words
from torustlk.artin import artin_is_identity, braid_equal, commutes
from torustlk.braid import BraidWord, compose, full_twist, inverse, power
from torustlk.errors import NotCommutingError, NotPureError, PreconditionError
from torustlk.pairs import CommutingPair, StructuredPair3, expand_structured


def W(m, *ints):
    return BraidWord.from_ints(m, ints)


def test_braid_relation_is_identity():
    assert artin_is_identity(W(3, 1, 2, 1, -2, -1, -2))


def test_generator_is_not_identity():
    assert not artin_is_identity(W(3, 1))


def test_full_twist_central():
    d = full_twist(4, 1)
    word = compose(compose(d, W(4, 2)), compose(inverse(d), W(4, -2)))
    assert artin_is_identity(word)


def test_far_commutation():
    assert braid_equal(W(4, 1, 3), W(4, 3, 1))
    assert not braid_equal(W(4, 1, 2), W(4, 2, 1))


@given(words())
def test_word_times_inverse(u):
    assert artin_is_identity(compose(u, inverse(u)))


@settings(max_examples=300)
@given(words(m=3, max_len=10))
def test_agrees_with_burau_on_three_strands(u):
    # Burau is faithful on B_3, so the two decisions must coincide
    assert artin_is_identity(u) == burau_is_identity(u)


@given(words(max_len=8), words(max_len=8))
def test_equal_action_implies_equal_burau(u, v):
    if u.m != v.m:
        return
    if braid_equal(u, v):
        assert burau_is_identity(compose(u, inverse(v)))


class TestCommutes:
    def test_twist_with_square(self):
        assert commutes(full_twist(3, 1), W(3, 1, 1))

    def test_adjacent_generators(self):
        assert not commutes(W(3, 1), W(3, 2))

    def test_powers_of_common_word(self):
        w = W(3, 1, 1, 2, 2)
        assert commutes(w, power(w, 2))

    def test_a_and_b_do_not_commute(self):
        assert not commutes(W(3, 1, 1), W(3, 2, 2))

    @given(words(max_len=6), words(max_len=6))
    def test_symmetric(self, a, b):
        if a.m == b.m:
            assert commutes(a, b) == commutes(b, a)


class TestPairs:
    def test_certifies(self):
        pair = CommutingPair(W(3, 1, 1), full_twist(3, 1))
        assert pair.product().to_ints() == [1, 1, 1, 2, 1, 2, 1, 2]

    def test_rejects_non_pure(self):
        with pytest.raises(NotPureError):
            CommutingPair(W(3, 1), W(3, 1))

    def test_rejects_non_commuting(self):
        with pytest.raises(NotCommutingError):
            CommutingPair(W(3, 1, 1), W(3, 2, 2))

    def test_rejects_mixed_m(self):
        with pytest.raises(PreconditionError):
            CommutingPair(W(3, 1, 1), W(4, 1, 1))

    def test_structured_a_delta(self):
        pair = expand_structured(StructuredPair3(W(3, 1, 1), 0, 1, 1, 0))
        assert pair.a == W(3, 1, 1)
        assert pair.b == full_twist(3, 1)

    def test_structured_trivial(self):
        pair = expand_structured(StructuredPair3(W(3, 2, -1, -1, -2), 0, 0, 0, 0))
        assert len(pair.a) == 0 and len(pair.b) == 0

    def test_structured_mixed(self):
        w = W(3, 1, 1, 2, 2)
        pair = expand_structured(StructuredPair3(w, 1, 2, 0, 1))
        assert pair.a == compose(full_twist(3, 1), power(w, 2))
        assert pair.b == w
        # certified independently of the pair constructor
        assert artin_is_identity(compose(compose(pair.a, pair.b), inverse(compose(pair.b, pair.a))))

    def test_structured_rejects_impure_w(self):
        with pytest.raises(NotPureError):
            StructuredPair3(W(3, 1), 1, 1, 1, 1)

    @given(pure_words(m=3, max_factors=2), st.integers(-2, 2), st.integers(-2, 2),
           st.integers(-2, 2), st.integers(-2, 2))
    def test_structured_always_commutes(self, w, k1, l1, k2, l2):
        pair = expand_structured(StructuredPair3(w, k1, l1, k2, l2))
        assert commutes(pair.a, pair.b)
