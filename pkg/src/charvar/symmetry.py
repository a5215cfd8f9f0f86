"""Outer-automorphism machinery for the two-generator trace ring.

The letter-swap and letter-inversion automorphisms generate an order-8
dihedral group acting on the coordinate ring.  Every element acts on the
eight base coordinates by a permutation; its action on t5 is derived data,
obtained here by cyclically reducing the transformed commutator word, and
certified against the matrix oracle by ``certify_dihedral_action`` (the
result: rotations fix t5, reflections send it to P - t5).

Group-ring operators (formal rational combinations of elements) and the
two Nielsen moves used by the torus bracket tables live here as well.
Nielsen moves are not closed on the coordinate set: their images are
polynomials built through the word calculus and certified the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple, Union

from . import numeric, relations, words
from .polyring import (
    BASE_COORDINATES,
    ALL_COORDINATES,
    BasePolynomial,
    FreePolynomial,
    NormalForm,
    T5,
    free_t,
    t,
)

LetterImages = Tuple[int, int]

#: generator images (x1, x2) of the eight elements, as single signed letters
ELEMENT_IMAGES: Dict[str, LetterImages] = {
    "e": (1, 2),
    "t": (2, 1),
    "i1": (-1, 2),
    "i2": (1, -2),
    "i": (-1, -2),
    "i1t": (2, -1),
    "i2t": (-2, 1),
    "it": (-2, -1),
}

ELEMENT_NAMES = tuple(ELEMENT_IMAGES)


@dataclass(frozen=True)
class DihedralElement:
    name: str
    images: LetterImages
    perm: Mapping[int, int]
    flips_t5: bool

    def __repr__(self):
        return f"DihedralElement({self.name})"

    def coordinate_image(self, index: int) -> NormalForm:
        if index == T5:
            if self.flips_t5:
                return NormalForm.from_base(relations.big_P()) - t(5)
            return t(5)
        return t(self.perm[index])


def _image_word(coord: int, images: LetterImages) -> words.Word:
    source = words.COMMUTATOR_WORD if coord == T5 else words.COORDINATE_WORDS[coord]
    return words.apply_letter_map(source, ((images[0],), (images[1],)))


@lru_cache(maxsize=1)
def _registry() -> Dict[str, DihedralElement]:
    registry: Dict[str, DihedralElement] = {}
    p_minus_t5 = NormalForm.from_base(relations.big_P()) - t(5)
    for name, images in ELEMENT_IMAGES.items():
        perm: Dict[int, int] = {}
        for coord in BASE_COORDINATES:
            nf = words.trace_of(_image_word(coord, images))
            matches = [c for c in BASE_COORDINATES if nf == t(c)]
            if len(matches) != 1:
                raise AssertionError(f"{name} does not permute t{coord}")
            perm[coord] = matches[0]
        t5_image = words.trace_of(_image_word(T5, images))
        if t5_image == t(5):
            flips = False
        elif t5_image == p_minus_t5:
            flips = True
        else:
            raise AssertionError(f"unexpected t5 image under {name}")
        registry[name] = DihedralElement(name, images, perm, flips)
    return registry


def element(name: str) -> DihedralElement:
    try:
        return _registry()[name]
    except KeyError:
        raise ValueError(f"unknown dihedral element {name!r}; expected one of {ELEMENT_NAMES}") from None


def all_elements() -> Tuple[DihedralElement, ...]:
    return tuple(_registry().values())


def compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """Function composition: (g h)(x) = g(h(x))."""

    def push(letter: int) -> int:
        image = g.images[abs(letter) - 1]
        return image if letter > 0 else -image

    composed = (push(h.images[0]), push(h.images[1]))
    for candidate in _registry().values():
        if candidate.images == composed:
            return candidate
    raise AssertionError("dihedral composition escaped the group")


def element_order(g: DihedralElement) -> int:
    current = g
    identity = element("e")
    order = 1
    while current != identity:
        current = compose(g, current)
        order += 1
    return order


Ringlike = Union[BasePolynomial, NormalForm, FreePolynomial]


def apply_dihedral(g: DihedralElement, x: Ringlike) -> Ringlike:
    """Act by trace-coordinate substitution; NormalForms come back reduced."""
    if isinstance(x, BasePolynomial):
        return x.permuted(g.perm)
    if isinstance(x, NormalForm):
        a = x.a.permuted(g.perm)
        b = x.b.permuted(g.perm)
        if not g.flips_t5:
            return NormalForm(a, b)
        return NormalForm(a + relations.big_P() * b, -b)
    if isinstance(x, FreePolynomial):
        assignment = {c: free_t(g.perm[c]) for c in BASE_COORDINATES}
        if g.flips_t5:
            assignment[T5] = FreePolynomial.from_base(relations.big_P()) - free_t(5)
        return x.substitute(assignment)
    raise TypeError(f"cannot apply dihedral action to {type(x).__name__}")


class GroupRingOperator:
    """Formal rational combination of dihedral elements."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, Fraction | int] | None = None):
        clean: Dict[str, Fraction] = {}
        if terms:
            for name, coeff in terms.items():
                element(name)  # validate
                c = Fraction(coeff)
                if c:
                    clean[name] = c
        self._terms = clean

    def terms(self) -> Tuple[Tuple[str, Fraction], ...]:
        return tuple(sorted(self._terms.items(), key=lambda kv: ELEMENT_NAMES.index(kv[0])))

    def __add__(self, other: "GroupRingOperator") -> "GroupRingOperator":
        acc = dict(self._terms)
        for name, coeff in other._terms.items():
            acc[name] = acc.get(name, Fraction(0)) + coeff
        return GroupRingOperator(acc)

    def __sub__(self, other: "GroupRingOperator") -> "GroupRingOperator":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "GroupRingOperator":
        c = Fraction(scalar)
        return GroupRingOperator({n: c * v for n, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__rmul__(other)
        acc: Dict[str, Fraction] = {}
        for name_g, cg in self._terms.items():
            g = element(name_g)
            for name_h, ch in other._terms.items():
                product = compose(g, element(name_h))
                acc[product.name] = acc.get(product.name, Fraction(0)) + cg * ch
        return GroupRingOperator(acc)

    def __truediv__(self, scalar) -> "GroupRingOperator":
        return Fraction(1, scalar) * self

    def __eq__(self, other):
        if not isinstance(other, GroupRingOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "GroupRingOperator(0)"
        body = " + ".join(
            (f"{c}*{n}" if c != 1 else n) for n, c in self.terms()
        )
        return f"GroupRingOperator({body})"

    def apply(self, x: Ringlike) -> Ringlike:
        total = None
        for name, coeff in self._terms.items():
            part = coeff * apply_dihedral(element(name), x)
            total = part if total is None else total + part
        if total is None:
            return NormalForm.zero() if isinstance(x, NormalForm) else x * 0
        return total


def apply_operator(op: GroupRingOperator, x: Ringlike) -> Ringlike:
    return op.apply(x)


@lru_cache(maxsize=1)
def sigma1() -> GroupRingOperator:
    return GroupRingOperator({"e": 1, "i": 1, "i1": -1, "i2": -1})


@lru_cache(maxsize=1)
def sigma2() -> GroupRingOperator:
    return GroupRingOperator({"e": 1, "i": 1, "t": -1, "it": -1})


@lru_cache(maxsize=1)
def s_dihedral() -> GroupRingOperator:
    return GroupRingOperator({name: 1 for name in ELEMENT_NAMES})


@lru_cache(maxsize=1)
def half_sigma1_sigma2() -> GroupRingOperator:
    return (sigma1() * sigma2()) / 2


# -- Nielsen moves ----------------------------------------------------------------

NIELSEN_IMAGES: Dict[str, Tuple[words.Word, words.Word]] = {
    "n2": ((1,), (1, 2)),
    "n-2": ((1,), (-1, -2)),
}


@dataclass(frozen=True)
class NielsenMove:
    name: str
    images: Tuple[words.Word, words.Word]
    table: Mapping[int, NormalForm]

    def __repr__(self):
        return f"NielsenMove({self.name})"


@lru_cache(maxsize=1)
def _nielsen_registry() -> Dict[str, NielsenMove]:
    registry = {}
    for name, images in NIELSEN_IMAGES.items():
        table: Dict[int, NormalForm] = {}
        for coord in BASE_COORDINATES:
            table[coord] = words.trace_of(words.apply_letter_map(words.COORDINATE_WORDS[coord], images))
        table[T5] = words.trace_of(words.apply_letter_map(words.COMMUTATOR_WORD, images))
        registry[name] = NielsenMove(name, images, table)
    return registry


def nielsen(name: str) -> NielsenMove:
    try:
        return _nielsen_registry()[name]
    except KeyError:
        raise ValueError(f"unknown Nielsen move {name!r}; expected n2 or n-2") from None


def apply_nielsen(move: NielsenMove, x: NormalForm) -> NormalForm:
    assignment = {coord: nf.lift() for coord, nf in move.table.items()}
    return x.lift().substitute(assignment).reduce()


# -- oracle certification -----------------------------------------------------------

def certify_dihedral_action(cfg: numeric.ToleranceConfig) -> list:
    """Check every action-table entry against direct matrix computation."""
    reports = []
    for g in all_elements():
        for coord in ALL_COORDINATES:
            word = _image_word(coord, g.images)
            reports.append(
                numeric.check_word_function_identity(
                    [(1, word)],
                    g.coordinate_image(coord),
                    cfg,
                    name=f"dihedral {g.name}: t{coord}",
                )
            )
    return reports


def certify_nielsen_action(cfg: numeric.ToleranceConfig) -> list:
    reports = []
    for move in _nielsen_registry().values():
        for coord in ALL_COORDINATES:
            source = words.COMMUTATOR_WORD if coord == T5 else words.COORDINATE_WORDS[coord]
            word = words.apply_letter_map(source, move.images)
            reports.append(
                numeric.check_word_function_identity(
                    [(1, word)],
                    move.table[coord],
                    cfg,
                    name=f"nielsen {move.name}: t{coord}",
                )
            )
    return reports
