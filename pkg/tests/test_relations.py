from fractions import Fraction

import pytest

from charvar import relations
from charvar.polyring import ALL_COORDINATES, NormalForm, t

ALL3 = {c: 3.0 + 0j for c in ALL_COORDINATES}


def test_big_P_shape():
    p = relations.big_P()
    assert p.term_count() == 10
    assert p.constant_term() == -3
    assert p.evaluate(ALL3) == pytest.approx(6.0)


def test_big_Q_shape():
    q = relations.big_Q()
    assert q.total_degree() == 6
    # forced by the relation at the identity representation: t5 = 3, P = 6
    assert q.evaluate(ALL3) == pytest.approx(9.0)


def test_little_p_and_q_denominators():
    for seed in (relations.little_p(), relations.little_q()):
        scaled = seed * 8
        assert all(coeff.denominator == 1 for _, coeff in scaled.terms())
    # frozen: (1/8)(81 - 4*27 + 2*9 + 2*9)
    assert relations.little_p().evaluate(ALL3) == pytest.approx(9 / 8)


def test_defining_relation():
    rel = relations.defining_relation()
    assert rel.t5_degree() == 2
    assert rel.reduce().is_zero
    assert rel.coefficient_of_t5(1) == -relations.big_P()
    assert rel.coefficient_of_t5(0) == relations.big_Q()


def test_Q_equals_t5_times_alias():
    big_p = NormalForm.from_base(relations.big_P())
    big_q = NormalForm.from_base(relations.big_Q())
    assert (big_q - t(5) * (big_p - t(5))).is_zero
