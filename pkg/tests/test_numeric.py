import numpy as np
import pytest

from charvar import numeric, relations, surfaces
from charvar.numeric import (
    RepresentationSample,
    ToleranceConfig,
    check_polynomial_identity,
    check_word_function_identity,
    evaluate_word,
    relative_residual,
    sample_batch,
    sample_sl3,
)
from charvar.polyring import NormalForm, t

CFG = ToleranceConfig(sample_count=200, seed=42)


def test_sample_is_unimodular():
    rng = np.random.default_rng(0)
    for _ in range(50):
        m = sample_sl3(rng)
        assert abs(np.linalg.det(m) - 1.0) < 1e-10


def test_sampling_is_deterministic():
    a = RepresentationSample.generate(42, 3)
    b = RepresentationSample.generate(42, 3)
    assert np.array_equal(a.A, b.A) and np.array_equal(a.B, b.B)
    c = RepresentationSample.generate(42, 4)
    assert not np.array_equal(a.A, c.A)


def test_sample_batch_is_counter_seeded():
    batch = sample_batch(42, 5)
    assert np.array_equal(batch[2].A, RepresentationSample.generate(42, 2).A)


def test_rejects_non_unimodular_matrices():
    with pytest.raises(ValueError):
        RepresentationSample(2 * np.eye(3, dtype=complex), np.eye(3, dtype=complex))


def test_evaluate_word():
    s = RepresentationSample.generate(1, 0)
    assert np.allclose(evaluate_word(s, ()), np.eye(3))
    assert np.allclose(evaluate_word(s, (1, -1)), np.eye(3), atol=1e-10)
    assert np.trace(evaluate_word(s, (1, 2, -1, -2))) == pytest.approx(s.coords[5])


def test_cached_coordinates_match_direct_products():
    from charvar.words import COORDINATE_WORDS, COMMUTATOR_WORD, REVERSED_COMMUTATOR_WORD

    for k in range(20):
        s = RepresentationSample.generate(11, k)
        for coord, word in COORDINATE_WORDS.items():
            assert abs(s.coords[coord] - np.trace(evaluate_word(s, word))) < 1e-10
        assert abs(s.coords[5] - np.trace(evaluate_word(s, COMMUTATOR_WORD))) < 1e-10
        assert abs(s.coords[-5] - np.trace(evaluate_word(s, REVERSED_COMMUTATOR_WORD))) < 1e-10


def test_identity_representation_point():
    s = RepresentationSample.identity()
    assert all(s.coords[c] == pytest.approx(3.0) for c in s.coords)


def test_kernel_relations_at_samples():
    big_p, big_q = relations.big_P(), relations.big_Q()
    for sample in sample_batch(42, 200):
        c = sample.coords
        assert relative_residual(c[5] + c[-5], big_p.evaluate(c)) < 1e-8
        assert relative_residual(c[5] * c[-5], big_q.evaluate(c)) < 1e-8


def test_check_polynomial_identity():
    alias_sum = (NormalForm.from_base(relations.big_P()) - t(5)) + t(5)
    report = check_polynomial_identity(alias_sum, relations.big_P(), CFG, "alias sum")
    assert report.passed and report.max_residual == 0.0

    report = check_polynomial_identity(relations.defining_relation(), 0, CFG)
    assert report.passed

    report = check_polynomial_identity(t(1), t(2), CFG)
    assert not report.passed


def test_check_word_function_identity():
    report = check_word_function_identity([(1, (1,))], t(1), CFG)
    assert report.passed and report.max_residual == 0.0
    report = check_word_function_identity([(1, (1, 1))], t(1) ** 2 - 2 * t(-1), CFG)
    assert report.passed
    # signed combinations of words and polynomial terms
    report = check_word_function_identity(
        [(1, (1, 1)), (-1, t(1) ** 2)], -2 * t(-1), CFG
    )
    assert report.passed


def test_report_serialization_types():
    report = check_polynomial_identity(t(1), t(1), CFG, "self")
    d = report.to_dict()
    assert isinstance(d["max_residual"], float)
    assert isinstance(d["pass"], bool)


def test_boundary_invariants_identity_rep():
    s = RepresentationSample.identity()
    pairs = numeric.boundary_invariants(s, surfaces.TRINION)
    assert len(pairs) == 3
    for c1, c2 in pairs:
        assert c1 == pytest.approx(3.0) and c2 == pytest.approx(3.0)


def test_boundary_invariants_torus_pair():
    s = RepresentationSample.generate(5, 0)
    ((c1, c2),) = numeric.boundary_invariants(s, surfaces.ONE_HOLED_TORUS)
    assert c1 == pytest.approx(s.coords[-5])
    assert c2 == pytest.approx(s.coords[5])


def test_trinion_third_boundary_is_product_inverse():
    s = RepresentationSample.generate(5, 1)
    pairs = numeric.boundary_invariants(s, surfaces.TRINION)
    c1, c2 = pairs[2]
    assert c1 == pytest.approx(np.trace(np.linalg.inv(s.B @ s.A)))
    assert c2 == pytest.approx(np.trace(s.B @ s.A))


def test_tolerance_config_validation():
    with pytest.raises(ValueError):
        ToleranceConfig(relative_tol=0)
    with pytest.raises(ValueError):
        ToleranceConfig(sample_count=0)
