import random

import pytest

from charvar import numeric, relations, symmetry, words
from charvar.numeric import ToleranceConfig
from charvar.polyring import NormalForm, t
from charvar.words import (
    Irreducible,
    WordError,
    cyclic_reduce,
    free_reduce,
    invert,
    parse_word,
    trace_of,
    word_to_str,
)

CFG = ToleranceConfig(sample_count=100, seed=7)


def certified(word, expected):
    """Gate a symbolic claim on the matrix oracle before asserting it."""
    report = numeric.check_word_function_identity([(1, word)], expected, CFG)
    assert report.passed, f"oracle rejects tr({word_to_str(word)}): {report.max_residual:.2e}"
    assert trace_of(word) == expected


def test_free_and_cyclic_reduction():
    assert free_reduce((1, -1, 2)) == (2,)
    assert free_reduce((1, 2, -2, -1, 2)) == (2,)
    assert cyclic_reduce((1, 2, -1)) == (2,)
    assert cyclic_reduce((1, 2, 2, -1)) == (2, 2)
    assert invert((1, 2)) == (-2, -1)
    assert invert(invert((1, -2, 1))) == (1, -2, 1)


def test_word_parsing():
    assert parse_word("x1 x1 x2") == (1, 1, 2)
    assert parse_word("x1^-1 X2 x2'") == (-1, 2, -2)
    assert parse_word("") == ()
    with pytest.raises(WordError):
        parse_word("x3")
    with pytest.raises(WordError):
        parse_word("y1")


def test_generator_words():
    assert trace_of(()) == NormalForm.constant(3)
    for coord, word in words.COORDINATE_WORDS.items():
        assert trace_of(word) == t(coord)
    assert trace_of(words.COMMUTATOR_WORD) == t(5)
    alias = NormalForm.from_base(relations.big_P()) - t(5)
    assert trace_of(words.REVERSED_COMMUTATOR_WORD) == alias


def test_power_rule_square():
    certified((1, 1), t(1) ** 2 - 2 * t(-1))
    certified((-1, -1), t(-1) ** 2 - 2 * t(1))


def test_power_rule_with_tail():
    certified((1, 1, 2), t(1) * t(3) - t(-1) * t(2) + t(-4))


def test_block_power_rule():
    certified((1, 2, 1, 2), t(3) ** 2 - 2 * t(-3))


def test_mixed_identity():
    expected = (
        t(-1)
        + t(3) * t(4)
        + t(-2) * t(-4)
        + t(2) * t(-3)
        - t(-1) * t(2) * t(-2)
    )
    certified((1, 2, 1, -2), expected)


def test_mixed_identity_images_certified():
    for word in ((-1, 2, -1, -2), (2, 1, 2, -1), (-2, 1, -2, -1), (1, -2, 1, 2)):
        report = numeric.check_word_function_identity([(1, word)], trace_of(word), CFG)
        assert report.passed, word


def test_conjugation_invariance():
    rng = random.Random(41)
    letters = (1, -1, 2, -2)
    for _ in range(100):
        w = tuple(rng.choice(letters) for _ in range(rng.randint(1, 4)))
        u = tuple(rng.choice(letters) for _ in range(rng.randint(1, 3)))
        conjugated = u + w + invert(u)
        try:
            expected = trace_of(w)
        except Irreducible:
            continue
        assert trace_of(conjugated) == expected


def test_inverse_word_symmetry():
    inv = symmetry.element("i")
    for word in ((1,), (1, 2), (1, -2), (1, 1, 2), (1, 2, 1, -2), (1, 2, -1, -2)):
        negated = tuple(-l for l in word)
        assert trace_of(negated) == symmetry.apply_dihedral(inv, trace_of(word))


def test_irreducible_word_raises():
    with pytest.raises(Irreducible):
        trace_of((1, -2, -1, -2, 1, 2))


def test_longer_reducible_words_match_oracle():
    for word in ((1, 1, 1, 2), (2, 2, 1, 1), (1, 1, 2, 2), (-1, -1, 2, 2), (1, 2, 1, 2, 1, 2)):
        certified(word, trace_of(word))


def test_trace_of_accepts_unreduced_input():
    assert trace_of((1, -1, 2)) == t(2)
    # x2 x1 x2 x2^-1 x2^-1 is a conjugate of x1
    assert trace_of((2, 1, 2, -2, -2)) == t(1)
