"""Exact scalars, weight vectors and Weyl-group normal forms.

Every spectral quantity in the package is a :class:`fractions.Fraction`;
nothing in here touches floating point.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


class DimensionError(ValueError):
    """Two objects that must have matching sizes do not."""


class DomainError(ValueError):
    """An argument lies outside the range where an operation is defined."""


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are refused on purpose: a float has already lost the value.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Lossless ``"num/den"`` encoding; integers keep the ``/1``."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def is_half_integer(x: Fraction) -> bool:
    """True for elements of (1/2)Z, integers included."""
    return (2 * x).denominator == 1


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


class WeylType(str, Enum):
    A = "A"
    BC = "BC"


@dataclass(frozen=True)
class WeightVector:
    coords: tuple[Fraction, ...]
    weyl_type: WeylType = WeylType.BC

    def __init__(self, coords: Iterable[RationalLike], weyl_type: WeylType = WeylType.BC):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in coords))
        object.__setattr__(self, "weyl_type", WeylType(weyl_type))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def _coords(v) -> tuple[Fraction, ...]:
    if isinstance(v, WeightVector):
        return v.coords
    if isinstance(v, Multiset):
        return v.entries
    return tuple(as_rational(c) for c in v)


def inner_product(v, w) -> Fraction:
    """Exact standard inner product of two coordinate vectors."""
    a, b = _coords(v), _coords(w)
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def norm2(v) -> Fraction:
    return sum((x * x for x in _coords(v)), Fraction(0))


def canonicalize(v: WeightVector) -> WeightVector:
    """Dominant representative of the Weyl orbit of ``v``.

    Type A acts by permutations: sort decreasing.  Type BC acts by signed
    permutations: absolute values sorted decreasing.
    """
    if v.weyl_type is WeylType.A:
        return WeightVector(sorted(v.coords, reverse=True), WeylType.A)
    return WeightVector(sorted((abs(c) for c in v.coords), reverse=True), WeylType.BC)


@dataclass(frozen=True)
class Multiset:
    """Unordered, multiplicity-sensitive collection of rationals.

    Entries are kept sorted decreasing so that equality and hashing are
    independent of insertion order.
    """

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[RationalLike] = ()):
        object.__setattr__(
            self, "entries", tuple(sorted((as_rational(e) for e in entries), reverse=True))
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def count(self, x: RationalLike) -> int:
        return self.entries.count(as_rational(x))

    def counter(self) -> Counter:
        return Counter(self.entries)

    def is_negation_symmetric(self) -> bool:
        c = self.counter()
        return all(c[x] == c[-x] for x in c)

    def __add__(self, other: "Multiset") -> "Multiset":
        return Multiset(self.entries + other.entries)

    def __sub__(self, other: "Multiset") -> "Multiset":
        """Multiset difference; raises if ``other`` is not contained in ``self``."""
        c = self.counter()
        c.subtract(other.counter())
        if any(v < 0 for v in c.values()):
            raise ValueError("subtrahend is not a sub-multiset")
        return Multiset(c.elements())


def multiset_equal(a, b) -> bool:
    return Counter(_coords(a)) == Counter(_coords(b))


def signed_permute(v: Sequence[Fraction], perm: Sequence[int], signs: Sequence[int]) -> list[Fraction]:
    """Apply the signed permutation ``x_i -> signs[i] * x_{perm[i]}``."""
    return [s * v[j] for j, s in zip(perm, signs)]
