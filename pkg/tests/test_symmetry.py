import random
from collections import Counter

import pytest

from charvar import relations, symmetry, verify, words
from charvar.numeric import ToleranceConfig
from charvar.polyring import BASE_COORDINATES, NormalForm, t
from charvar.symmetry import (
    GroupRingOperator,
    apply_dihedral,
    apply_nielsen,
    compose,
    element,
    element_order,
    nielsen,
)
from conftest import random_normal


def test_group_has_eight_distinct_elements():
    elements = symmetry.all_elements()
    assert len(elements) == 8
    assert len({g.images for g in elements}) == 8


def test_involutions_and_defining_composition():
    i1, tt = element("i1"), element("t")
    assert compose(i1, i1) == element("e")
    assert compose(tt, tt) == element("e")
    # the letter-inversion element factors through the two generators
    assert compose(tt, compose(i1, compose(tt, i1))) == element("i")
    assert compose(i1, compose(tt, compose(i1, tt))) == element("i")
    assert compose(tt, compose(i1, tt)) == element("i2")


def test_order_profile_is_dihedral():
    profile = Counter(element_order(g) for g in symmetry.all_elements())
    # D4 signature: identity, five involutions, two order-4 rotations
    assert profile == Counter({1: 1, 2: 5, 4: 2})
    assert all(8 % element_order(g) == 0 for g in symmetry.all_elements())


def test_action_examples():
    assert apply_dihedral(element("i1"), t(3)) == t(-4)
    assert apply_dihedral(element("i"), t(5)) == t(5)
    x = random_normal(random.Random(4))
    assert apply_dihedral(element("e"), x) == x
    big_p = NormalForm.from_base(relations.big_P())
    assert apply_dihedral(element("t"), big_p) == big_p


def test_reflections_flip_t5():
    flips = {g.name for g in symmetry.all_elements() if g.flips_t5}
    assert flips == {"t", "i1", "i2", "it"}
    alias = NormalForm.from_base(relations.big_P()) - t(5)
    assert apply_dihedral(element("t"), t(5)) == alias


def test_action_is_ring_homomorphism():
    rng = random.Random(99)
    for _ in range(100):
        g = element(rng.choice(symmetry.ELEMENT_NAMES))
        x, y = random_normal(rng), random_normal(rng)
        assert apply_dihedral(g, x * y) == apply_dihedral(g, x) * apply_dihedral(g, y)
        assert apply_dihedral(g, x + y) == apply_dihedral(g, x) + apply_dihedral(g, y)


def test_action_respects_composition():
    rng = random.Random(123)
    for _ in range(100):
        g = element(rng.choice(symmetry.ELEMENT_NAMES))
        h = element(rng.choice(symmetry.ELEMENT_NAMES))
        x = random_normal(rng)
        assert apply_dihedral(compose(g, h), x) == apply_dihedral(g, apply_dihedral(h, x))


def test_ideal_is_dihedral_invariant():
    for g in symmetry.all_elements():
        image = apply_dihedral(g, relations.defining_relation())
        assert image.reduce().is_zero, g.name


def test_symmetrization_corollaries():
    s_d = symmetry.s_dihedral()
    big_p = NormalForm.from_base(relations.big_P())
    big_q = NormalForm.from_base(relations.big_Q())
    assert s_d.apply(NormalForm.from_base(relations.little_p())) == big_p + 3
    assert s_d.apply(NormalForm.from_base(relations.little_q())) == big_q - 9


def test_half_sigma_product_expansion():
    expected = GroupRingOperator(
        {"e": 1, "i": 1, "i1": -1, "i2": -1, "t": -1, "it": -1, "i1t": 1, "i2t": 1}
    )
    assert symmetry.half_sigma1_sigma2() == expected


def test_group_ring_arithmetic():
    op = symmetry.sigma1() + symmetry.sigma2()
    assert dict(op.terms())["e"] == 2
    doubled = 2 * symmetry.sigma1()
    assert doubled / 2 == symmetry.sigma1()
    # e and i send t1 to t1, t-1; the subtracted i1, i2 produce the same pair
    assert symmetry.sigma1().apply(t(1)).is_zero


def test_nielsen_image_table():
    n2 = nielsen("n2")
    assert n2.table[4] == t(-2)
    assert n2.table[-4] == t(2)
    assert n2.table[2] == t(3)
    assert n2.table[-2] == t(-3)
    assert n2.table[3] == t(1) * t(3) - t(-1) * t(2) + t(-4)
    assert n2.table[-3] == t(-1) * t(-3) - t(1) * t(-2) + t(4)
    assert n2.table[5] == t(5)
    nm2 = nielsen("n-2")
    assert nm2.table[3] == t(-2)
    assert nm2.table[5] == NormalForm.from_base(relations.big_P()) - t(5)


def test_apply_nielsen_is_multiplicative():
    rng = random.Random(55)
    n2 = nielsen("n2")
    for _ in range(25):
        x, y = random_normal(rng, max_terms=2), random_normal(rng, max_terms=2)
        assert apply_nielsen(n2, x * y) == apply_nielsen(n2, x) * apply_nielsen(n2, y)


def test_oracle_certification_of_tables():
    cfg = ToleranceConfig(sample_count=100, seed=13)
    reports = verify.sym_suite(cfg)
    assert len(reports) == 8 * 9 + 2 * 9
    failed = [r.name for r in reports if not r.passed]
    assert not failed, failed


def test_unknown_names_rejected():
    with pytest.raises(ValueError):
        element("rotate")
    with pytest.raises(ValueError):
        nielsen("n3")
