"""Exact sparse polynomial arithmetic for the rank-two SL(3,C) trace ring.

The nine trace coordinates are t1, t-1, t2, t-2, t3, t-3, t4, t-4 and t5.
Three layers share one sparse term representation (tuples of exponents over
the eight base coordinates, Fraction coefficients):

* ``BasePolynomial``: element of the base ring Q[t1, t-1, ..., t4, t-4].
* ``FreePolynomial``: element of the extension ring with t5 adjoined,
  stored as a map from t5-degree to base-ring coefficients.
* ``NormalForm``: canonical representative ``a + b*t5`` of a residue class
  modulo the quotient relation t5^2 - P*t5 + Q, with P and Q supplied by
  :mod:`charvar.relations`.  The quotient is a free rank-two module over
  the base ring, so two classes are equal iff their (a, b) parts are
  structurally equal.

The symbol t-5 is never a variable: it abbreviates P - t5 and is rewritten
away on every ingestion path.  All values are immutable and all operations
are pure functions, safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

BASE_COORDINATES: Tuple[int, ...] = (1, -1, 2, -2, 3, -3, 4, -4)
ALL_COORDINATES: Tuple[int, ...] = BASE_COORDINATES + (5,)
T5 = 5

#: fixed slot of each base coordinate inside an exponent tuple
_SLOT: Dict[int, int] = {c: k for k, c in enumerate(BASE_COORDINATES)}
#: fixed position of every coordinate, used for canonical pair ordering
COORD_POSITION: Dict[int, int] = {c: k for k, c in enumerate(ALL_COORDINATES)}

_ZERO_KEY: Tuple[int, ...] = (0,) * 8

Scalar = Union[int, Fraction]


class CoordinateError(ValueError):
    """Raised for symbols outside {t1, t-1, ..., t4, t-4, t5}."""


def check_coordinate(index: int, allow_t5: bool = True) -> int:
    if index in _SLOT or (allow_t5 and index == T5):
        return index
    raise CoordinateError(f"not a trace coordinate: t{index}")


def coordinate_name(index: int) -> str:
    return f"t{index}"


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _term_order_key(vec: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    # graded lexicographic over the fixed variable order
    return (sum(vec), vec)


class BasePolynomial:
    """Sparse polynomial over Q in the eight base coordinates."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, ...], Scalar] | None = None):
        clean: Dict[Tuple[int, ...], Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                c = _as_fraction(coeff)
                if c:
                    clean[tuple(key)] = c
        self._terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "BasePolynomial":
        return _BASE_ZERO

    @classmethod
    def one(cls) -> "BasePolynomial":
        return _BASE_ONE

    @classmethod
    def constant(cls, value: Scalar) -> "BasePolynomial":
        return cls({_ZERO_KEY: _as_fraction(value)})

    @classmethod
    def variable(cls, index: int) -> "BasePolynomial":
        check_coordinate(index, allow_t5=False)
        key = list(_ZERO_KEY)
        key[_SLOT[index]] = 1
        return cls({tuple(key): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping[int, int], coeff: Scalar = 1) -> "BasePolynomial":
        key = [0] * 8
        for index, exp in exponents.items():
            check_coordinate(index, allow_t5=False)
            if exp < 0:
                raise ValueError("negative exponent")
            key[_SLOT[index]] = exp
        return cls({tuple(key): _as_fraction(coeff)})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def term_count(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(k) for k in self._terms)

    def terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Terms in canonical (graded lexicographic, descending) order."""
        return sorted(self._terms.items(), key=lambda kv: _term_order_key(kv[0]), reverse=True)

    def coefficient(self, exponents: Mapping[int, int]) -> Fraction:
        key = [0] * 8
        for index, exp in exponents.items():
            key[_SLOT[check_coordinate(index, allow_t5=False)]] = exp
        return self._terms.get(tuple(key), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_KEY, Fraction(0))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BasePolynomial.constant(other)
        if not isinstance(other, BasePolynomial):
            return NotImplemented
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            new = acc.get(key, Fraction(0)) + coeff
            if new:
                acc[key] = new
            else:
                acc.pop(key, None)
        return _raw_base(acc)

    __radd__ = __add__

    def __neg__(self):
        return _raw_base({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BasePolynomial.constant(other)
        if not isinstance(other, BasePolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return _BASE_ZERO
            return _raw_base({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, BasePolynomial):
            return NotImplemented
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(k1, k2))
                new = acc.get(key, Fraction(0)) + c1 * c2
                if new:
                    acc[key] = new
                else:
                    acc.pop(key, None)
        return _raw_base(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = _BASE_ONE
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # -- calculus and mappings ----------------------------------------------

    def derivative(self, index: int) -> "BasePolynomial":
        check_coordinate(index, allow_t5=False)
        slot = _SLOT[index]
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for key, coeff in self._terms.items():
            e = key[slot]
            if e:
                new_key = key[:slot] + (e - 1,) + key[slot + 1:]
                acc[new_key] = acc.get(new_key, Fraction(0)) + coeff * e
        return _raw_base({k: c for k, c in acc.items() if c})

    def permuted(self, mapping: Mapping[int, int]) -> "BasePolynomial":
        """Relabel variables by a coordinate permutation (identity if absent)."""
        acc: Dict[Tuple[int, ...], Fraction] = {}
        for key, coeff in self._terms.items():
            new = [0] * 8
            for coord, slot in _SLOT.items():
                e = key[slot]
                if e:
                    new[_SLOT[mapping.get(coord, coord)]] += e
            tkey = tuple(new)
            acc[tkey] = acc.get(tkey, Fraction(0)) + coeff
        return _raw_base({k: c for k, c in acc.items() if c})

    def substitute(self, assignment: Mapping[int, "FreePolynomial"]) -> "FreePolynomial":
        return FreePolynomial.from_base(self).substitute(assignment)

    def evaluate(self, point: Mapping[int, complex]) -> complex:
        total = 0j
        for key, coeff in self.terms():
            value = complex(coeff)
            for coord, slot in _SLOT.items():
                e = key[slot]
                if e:
                    value *= point[coord] ** e
            total += value
        return total

    # -- housekeeping --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BasePolynomial.constant(other)
        if not isinstance(other, BasePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"BasePolynomial({format_terms(self._json_terms())})"

    def _json_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        return [(key + (0,), coeff) for key, coeff in self.terms()]

    def to_json(self) -> list:
        return terms_to_json(self._json_terms())

    def text(self) -> str:
        return format_terms(self._json_terms())


def _raw_base(terms: Dict[Tuple[int, ...], Fraction]) -> BasePolynomial:
    poly = BasePolynomial.__new__(BasePolynomial)
    poly._terms = terms
    return poly


_BASE_ZERO = _raw_base({})
_BASE_ONE = _raw_base({_ZERO_KEY: Fraction(1)})


class FreePolynomial:
    """Element of the free extension ring: base-ring coefficients by t5-degree."""

    __slots__ = ("_levels",)

    def __init__(self, levels: Mapping[int, BasePolynomial] | None = None):
        clean: Dict[int, BasePolynomial] = {}
        if levels:
            for degree, poly in levels.items():
                if degree < 0:
                    raise ValueError("negative t5 degree")
                if not poly.is_zero:
                    clean[degree] = poly
        self._levels = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "FreePolynomial":
        return _FREE_ZERO

    @classmethod
    def one(cls) -> "FreePolynomial":
        return cls({0: _BASE_ONE})

    @classmethod
    def constant(cls, value: Scalar) -> "FreePolynomial":
        return cls({0: BasePolynomial.constant(value)})

    @classmethod
    def variable(cls, index: int) -> "FreePolynomial":
        check_coordinate(index)
        if index == T5:
            return cls({1: _BASE_ONE})
        return cls({0: BasePolynomial.variable(index)})

    @classmethod
    def from_base(cls, poly: BasePolynomial) -> "FreePolynomial":
        return cls({0: poly})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._levels

    def t5_degree(self) -> int:
        """Degree in t5; -1 for the zero polynomial."""
        return max(self._levels) if self._levels else -1

    def coefficient_of_t5(self, degree: int) -> BasePolynomial:
        return self._levels.get(degree, _BASE_ZERO)

    def levels(self) -> List[Tuple[int, BasePolynomial]]:
        return sorted(self._levels.items())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_free(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._levels)
        for degree, poly in other._levels.items():
            new = acc.get(degree, _BASE_ZERO) + poly
            if new.is_zero:
                acc.pop(degree, None)
            else:
                acc[degree] = new
        return _raw_free(acc)

    __radd__ = __add__

    def __neg__(self):
        return _raw_free({d: -p for d, p in self._levels.items()})

    def __sub__(self, other):
        other = _coerce_free(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return _FREE_ZERO
            return _raw_free({d: p * c for d, p in self._levels.items()})
        other = _coerce_free(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[int, BasePolynomial] = {}
        for d1, p1 in self._levels.items():
            for d2, p2 in other._levels.items():
                degree = d1 + d2
                acc[degree] = acc.get(degree, _BASE_ZERO) + p1 * p2
        return _raw_free({d: p for d, p in acc.items() if not p.is_zero})

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = FreePolynomial.one()
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # -- calculus and mappings ----------------------------------------------

    def derivative(self, index: int) -> "FreePolynomial":
        """Formal partial derivative in the free ring (before any reduction)."""
        check_coordinate(index)
        if index == T5:
            return _raw_free(
                {d - 1: p * d for d, p in self._levels.items() if d > 0}
            )
        return _raw_free(
            {
                d: dp
                for d, p in self._levels.items()
                if not (dp := p.derivative(index)).is_zero
            }
        )

    def substitute(self, assignment: Mapping[int, "FreePolynomial"]) -> "FreePolynomial":
        """Simultaneous substitution; coordinates not assigned map to themselves."""
        images: Dict[int, FreePolynomial] = {}
        for coord in ALL_COORDINATES:
            images[coord] = assignment.get(coord, FreePolynomial.variable(coord))
        powers: Dict[int, List[FreePolynomial]] = {c: [FreePolynomial.one()] for c in ALL_COORDINATES}

        def power(coord: int, exp: int) -> FreePolynomial:
            cache = powers[coord]
            while len(cache) <= exp:
                cache.append(cache[-1] * images[coord])
            return cache[exp]

        total = _FREE_ZERO
        for degree, poly in self._levels.items():
            t5_part = power(T5, degree)
            for key, coeff in poly._terms.items():
                term = t5_part * coeff
                for coord, slot in _SLOT.items():
                    e = key[slot]
                    if e:
                        term = term * power(coord, e)
                total = total + term
        return total

    def reduce(self) -> "NormalForm":
        """Canonical image modulo t5^2 - P*t5 + Q, via Horner in t5."""
        result = NormalForm.zero()
        t5 = NormalForm.variable(T5)
        for degree in range(self.t5_degree(), -1, -1):
            result = result * t5 + NormalForm.from_base(self._levels.get(degree, _BASE_ZERO))
        return result

    def evaluate(self, point: Mapping[int, complex]) -> complex:
        total = 0j
        for degree, poly in sorted(self._levels.items()):
            value = poly.evaluate(point)
            if degree:
                value *= point[T5] ** degree
            total += value
        return total

    # -- housekeeping --------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_free(other)
        if other is NotImplemented:
            return NotImplemented
        return self._levels == other._levels

    def __hash__(self):
        return hash(frozenset((d, p) for d, p in self._levels.items()))

    def __bool__(self):
        return bool(self._levels)

    def __repr__(self):
        return f"FreePolynomial({self.text()})"

    def _json_terms(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        pairs = []
        for degree, poly in self._levels.items():
            for key, coeff in poly._terms.items():
                pairs.append((key + (degree,), coeff))
        pairs.sort(key=lambda kv: _term_order_key(kv[0]), reverse=True)
        return pairs

    def to_json(self) -> list:
        return terms_to_json(self._json_terms())

    def text(self) -> str:
        return format_terms(self._json_terms())


def _raw_free(levels: Dict[int, BasePolynomial]) -> FreePolynomial:
    poly = FreePolynomial.__new__(FreePolynomial)
    poly._levels = levels
    return poly


_FREE_ZERO = _raw_free({})


def _coerce_free(value):
    if isinstance(value, FreePolynomial):
        return value
    if isinstance(value, BasePolynomial):
        return FreePolynomial.from_base(value)
    if isinstance(value, (int, Fraction)):
        return FreePolynomial.constant(value)
    if isinstance(value, NormalForm):
        return value.lift()
    return NotImplemented


@lru_cache(maxsize=1)
def _relation_constants() -> Tuple[BasePolynomial, BasePolynomial]:
    # deferred import: relations builds its constants out of this module
    from charvar import relations

    return relations.big_P(), relations.big_Q()


class NormalForm:
    """Canonical residue ``a + b*t5`` modulo the quotient relation."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: BasePolynomial, b: BasePolynomial):
        self._a = a
        self._b = b

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "NormalForm":
        return _NF_ZERO

    @classmethod
    def one(cls) -> "NormalForm":
        return cls(_BASE_ONE, _BASE_ZERO)

    @classmethod
    def constant(cls, value: Scalar) -> "NormalForm":
        return cls(BasePolynomial.constant(value), _BASE_ZERO)

    @classmethod
    def variable(cls, index: int) -> "NormalForm":
        check_coordinate(index)
        if index == T5:
            return cls(_BASE_ZERO, _BASE_ONE)
        return cls(BasePolynomial.variable(index), _BASE_ZERO)

    @classmethod
    def from_base(cls, poly: BasePolynomial) -> "NormalForm":
        return cls(poly, _BASE_ZERO)

    # -- structure ---------------------------------------------------------

    @property
    def a(self) -> BasePolynomial:
        """The t5-free part."""
        return self._a

    @property
    def b(self) -> BasePolynomial:
        """The coefficient of t5."""
        return self._b

    @property
    def is_zero(self) -> bool:
        return self._a.is_zero and self._b.is_zero

    def lift(self) -> FreePolynomial:
        """Canonical free-ring representative of this class."""
        return _raw_free({d: p for d, p in ((0, self._a), (1, self._b)) if not p.is_zero})

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_normal(other)
        if other is NotImplemented:
            return NotImplemented
        return NormalForm(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __neg__(self):
        return NormalForm(-self._a, -self._b)

    def __sub__(self, other):
        other = _coerce_normal(other)
        if other is NotImplemented:
            return NotImplemented
        return NormalForm(self._a - other._a, self._b - other._b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NormalForm(self._a * other, self._b * other)
        other = _coerce_normal(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        if b1.is_zero or b2.is_zero:
            cross = _BASE_ZERO
        else:
            cross = b1 * b2
        a = a1 * a2
        b = a1 * b2 + a2 * b1
        if not cross.is_zero:
            big_p, big_q = _relation_constants()
            a = a - big_q * cross
            b = b + big_p * cross
        return NormalForm(a, b)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative exponent")
        result = NormalForm.one()
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, point: Mapping[int, complex]) -> complex:
        value = self._a.evaluate(point)
        if not self._b.is_zero:
            value += self._b.evaluate(point) * point[T5]
        return value

    # -- housekeeping --------------------------------------------------------

    def __eq__(self, other):
        other = _coerce_normal(other)
        if other is NotImplemented:
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __hash__(self):
        return hash((self._a, self._b))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"NormalForm({self.text()})"

    def to_json(self) -> list:
        return self.lift().to_json()

    def text(self) -> str:
        return self.lift().text()


def _coerce_normal(value):
    if isinstance(value, NormalForm):
        return value
    if isinstance(value, BasePolynomial):
        return NormalForm.from_base(value)
    if isinstance(value, (int, Fraction)):
        return NormalForm.constant(value)
    return NotImplemented


_NF_ZERO = NormalForm(_BASE_ZERO, _BASE_ZERO)


def t(index: int) -> NormalForm:
    """Shorthand for the coordinate t(index) as a NormalForm."""
    return NormalForm.variable(index)


def free_t(index: int) -> FreePolynomial:
    """Shorthand for the coordinate t(index) in the free ring."""
    return FreePolynomial.variable(index)


# -- canonical serialization ---------------------------------------------------

def terms_to_json(pairs: Iterable[Tuple[Tuple[int, ...], Fraction]]) -> list:
    """[[9 exponents (t5 last)], "num/den"] per term, in canonical order."""
    return [
        [list(vec), f"{coeff.numerator}/{coeff.denominator}"]
        for vec, coeff in pairs
    ]


def free_from_json(data: Iterable) -> FreePolynomial:
    levels: Dict[int, Dict[Tuple[int, ...], Fraction]] = {}
    for vec, coeff_str in data:
        if len(vec) != 9:
            raise ValueError("expected a 9-entry exponent vector")
        degree = int(vec[8])
        key = tuple(int(e) for e in vec[:8])
        coeff = Fraction(str(coeff_str))
        level = levels.setdefault(degree, {})
        level[key] = level.get(key, Fraction(0)) + coeff
    return _raw_free(
        {
            d: poly
            for d, terms in levels.items()
            if not (poly := _raw_base({k: c for k, c in terms.items() if c})).is_zero
        }
    )


def normal_from_json(data: Iterable) -> NormalForm:
    free = free_from_json(data)
    if free.t5_degree() > 1:
        raise ValueError("normal form must have t5-degree at most 1")
    return NormalForm(free.coefficient_of_t5(0), free.coefficient_of_t5(1))


# -- canonical text form -------------------------------------------------------

def _format_monomial(vec: Tuple[int, ...]) -> str:
    factors = []
    for coord, slot in _SLOT.items():
        e = vec[slot]
        if e == 1:
            factors.append(coordinate_name(coord))
        elif e > 1:
            factors.append(f"{coordinate_name(coord)}^{e}")
    e5 = vec[8]
    if e5 == 1:
        factors.append("t5")
    elif e5 > 1:
        factors.append(f"t5^{e5}")
    return "*".join(factors)


def _format_coeff(coeff: Fraction) -> str:
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return f"{coeff.numerator}/{coeff.denominator}"


def format_terms(pairs: List[Tuple[Tuple[int, ...], Fraction]]) -> str:
    """Canonical human/parser-readable text; round-trips through the CLI grammar."""
    if not pairs:
        return "0"
    chunks: List[str] = []
    for i, (vec, coeff) in enumerate(pairs):
        mono = _format_monomial(vec)
        magnitude = abs(coeff)
        if mono and magnitude == 1:
            body = mono
        elif mono:
            body = f"{_format_coeff(magnitude)}*{mono}"
        else:
            body = _format_coeff(magnitude)
        if i == 0:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)
