"""Monte-Carlo verification backend.

Samples random pairs of unimodular 3x3 complex matrices and evaluates
words, trace coordinates, and polynomial identities at them.  Polynomial
identities that vanish on an open set vanish identically, so any
absolutely continuous sampling distribution works; i.i.d. complex standard
normal entries are the simplest choice.

Determinism contract: the k-th sample depends only on (seed, k), never on
a shared stream, so reports are independent of evaluation order or worker
count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

from .polyring import BasePolynomial, FreePolynomial, NormalForm
from .words import Word, as_word

_SEED_MASK = (1 << 64) - 1
_DET_FLOOR = 1e-6
_UNIMODULAR_TOL = 1e-10

Polynomial = Union[NormalForm, FreePolynomial, BasePolynomial, int]


def _as_free(value: Polynomial) -> FreePolynomial:
    if isinstance(value, FreePolynomial):
        return value
    if isinstance(value, NormalForm):
        return value.lift()
    if isinstance(value, BasePolynomial):
        return FreePolynomial.from_base(value)
    return FreePolynomial.constant(value)


@dataclass(frozen=True)
class ToleranceConfig:
    relative_tol: float = 1e-8
    sample_count: int = 1000
    seed: int = 42

    def __post_init__(self):
        if self.relative_tol <= 0:
            raise ValueError("relative_tol must be positive")
        if self.sample_count < 1:
            raise ValueError("sample_count must be at least 1")


@dataclass(frozen=True)
class VerificationReport:
    name: str
    samples: int
    max_residual: float
    passed: bool

    def __post_init__(self):
        object.__setattr__(self, "max_residual", float(self.max_residual))
        object.__setattr__(self, "passed", bool(self.passed))

    def to_dict(self) -> dict:
        return {
            "identity": self.name,
            "kind": "numeric",
            "n": self.samples,
            "max_residual": self.max_residual,
            "pass": self.passed,
        }


def _sample_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed & _SEED_MASK, spawn_key=(index,))
    )


def sample_sl3(rng: np.random.Generator, max_tries: int = 100) -> np.ndarray:
    """One matrix with unit determinant, entries i.i.d. complex normal.

    The raw matrix is rescaled by the principal cube root of 1/det;
    near-singular draws (|det| < 1e-6) are rejected and retried.
    """
    for _ in range(max_tries):
        raw = (rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))) / np.sqrt(2.0)
        det = np.linalg.det(raw)
        if abs(det) >= _DET_FLOOR:
            return raw * det ** (-1.0 / 3.0)
    raise RuntimeError(f"no well-conditioned sample after {max_tries} draws")


class RepresentationSample:
    """A pair of unimodular matrices with cached trace coordinates."""

    __slots__ = ("A", "B", "A_inv", "B_inv", "coords")

    def __init__(self, A: np.ndarray, B: np.ndarray):
        for m in (A, B):
            if abs(np.linalg.det(m) - 1.0) > _UNIMODULAR_TOL:
                raise ValueError("matrix is not unimodular within tolerance")
        self.A = A
        self.B = B
        self.A_inv = np.linalg.inv(A)
        self.B_inv = np.linalg.inv(B)
        tr = np.trace
        self.coords: Dict[int, complex] = {
            1: tr(A),
            -1: tr(self.A_inv),
            2: tr(B),
            -2: tr(self.B_inv),
            3: tr(A @ B),
            -3: tr(self.A_inv @ self.B_inv),
            4: tr(A @ self.B_inv),
            -4: tr(self.A_inv @ B),
            5: tr(A @ B @ self.A_inv @ self.B_inv),
            -5: tr(B @ A @ self.B_inv @ self.A_inv),
        }

    @classmethod
    def generate(cls, seed: int, index: int) -> "RepresentationSample":
        rng = _sample_rng(seed, index)
        return cls(sample_sl3(rng), sample_sl3(rng))

    @classmethod
    def identity(cls) -> "RepresentationSample":
        eye = np.eye(3, dtype=complex)
        return cls(eye, eye)


@lru_cache(maxsize=8)
def sample_batch(seed: int, count: int) -> Tuple[RepresentationSample, ...]:
    return tuple(RepresentationSample.generate(seed, k) for k in range(count))


def evaluate_word(sample: RepresentationSample, word: Word) -> np.ndarray:
    """Ordered matrix product of the word letters (identity for the empty word)."""
    letters = {1: sample.A, -1: sample.A_inv, 2: sample.B, -2: sample.B_inv}
    result = np.eye(3, dtype=complex)
    for letter in as_word(word):
        result = result @ letters[letter]
    return result


def relative_residual(lhs: complex, rhs: complex) -> float:
    return float(abs(lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs))))


def check_polynomial_identity(
    lhs: Polynomial,
    rhs: Polynomial,
    cfg: ToleranceConfig,
    name: str = "polynomial identity",
) -> VerificationReport:
    """Max relative residual of lhs = rhs over the seeded sample batch."""
    left = _as_free(lhs)
    right = _as_free(rhs)
    worst = 0.0
    for sample in sample_batch(cfg.seed, cfg.sample_count):
        worst = max(
            worst,
            relative_residual(left.evaluate(sample.coords), right.evaluate(sample.coords)),
        )
    return VerificationReport(name, cfg.sample_count, worst, worst < cfg.relative_tol)


WordTerm = Tuple[Union[int, float, complex], Union[Word, Polynomial]]


def check_word_function_identity(
    terms: Sequence[WordTerm],
    rhs: Polynomial,
    cfg: ToleranceConfig,
    name: str = "trace-word identity",
) -> VerificationReport:
    """Compare a signed sum of trace words (and polynomial terms) to rhs.

    Word terms are evaluated by direct matrix products, so this check works
    even when the symbolic rule set cannot reduce the words.
    """
    right = _as_free(rhs)
    prepared = [
        (coeff, part if isinstance(part, tuple) else _as_free(part))
        for coeff, part in terms
    ]
    worst = 0.0
    for sample in sample_batch(cfg.seed, cfg.sample_count):
        total = 0j
        for coeff, part in prepared:
            if isinstance(part, tuple):
                total += coeff * np.trace(evaluate_word(sample, part))
            else:
                total += coeff * part.evaluate(sample.coords)
        worst = max(worst, relative_residual(total, right.evaluate(sample.coords)))
    return VerificationReport(name, cfg.sample_count, worst, worst < cfg.relative_tol)


def boundary_invariants(sample: RepresentationSample, topology) -> list:
    """(tr, tr of inverse) per boundary word of a chi = -1 surface."""
    from . import surfaces

    pairs = []
    for word in surfaces.boundary_words(topology):
        m = evaluate_word(sample, word)
        pairs.append((np.trace(m), np.trace(np.linalg.inv(m))))
    return pairs
