"""Archimedean Arthur parameters, their infinitesimal characters and the
Casimir eigenvalues they produce on the quaternionic hyperbolic side.

A parameter is stored as the restriction of psi to C^x x SL(2): a list of
blocks ``chi (x) r`` with ``chi = z^p zbar^q`` and ``r`` the irreducible
SL(2)-module of dimension ``dim``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Union

from .core import (
    DimensionError,
    DomainError,
    Multiset,
    WeightVector,
    WeylType,
    as_rational,
    format_rational,
    is_integer,
    norm2,
)
from .groups import Family, GroupDatum, make_group

HALF = Fraction(1, 2)


class MalformedCharacterError(ValueError):
    pass


class RejectedParameterError(ValueError):
    def __init__(self, report: "ValidationReport"):
        super().__init__("parameter failed validation: " + ", ".join(report.kinds()))
        self.report = report


class RamificationError(ValueError):
    pass


class CharClass(str, Enum):
    TRIVIAL = "trivial"
    REAL = "real"
    UNITARY = "unitary-type"
    COMPLEX = "complex"


@dataclass(frozen=True, order=True)
class Character:
    """``z^p zbar^q`` with ``p - q`` an integer."""

    p: Fraction
    q: Fraction

    def __init__(self, p, q):
        p, q = as_rational(p), as_rational(q)
        if not is_integer(p - q):
            raise MalformedCharacterError(f"p - q = {p - q} is not an integer")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def inverse(self) -> "Character":
        return Character(-self.p, -self.q)

    def conj(self) -> "Character":
        return Character(self.q, self.p)

    @property
    def s(self) -> Fraction:
        return (self.p + self.q) / 2

    def __str__(self) -> str:
        return f"z^{self.p} zbar^{self.q}"


TRIVIAL = Character(0, 0)


def classify_character(chi: Character) -> CharClass:
    if chi.p == 0 and chi.q == 0:
        return CharClass.TRIVIAL
    if chi.p == chi.q:
        return CharClass.REAL
    if chi.p == -chi.q:
        return CharClass.UNITARY
    return CharClass.COMPLEX


@dataclass(frozen=True, order=True)
class ArthurBlock:
    chi: Character
    dim: int
    mult: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("SL(2) dimension must be >= 1")
        if self.mult < 1:
            raise DomainError("multiplicity must be >= 1")


@dataclass(frozen=True)
class ArchParameter:
    group: GroupDatum
    blocks: tuple[ArthurBlock, ...]
    ramanujan: bool = False

    def __init__(self, group: GroupDatum, blocks: Iterable[ArthurBlock], ramanujan: bool = False):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "ramanujan", bool(ramanujan))

    def multiplicities(self) -> Counter:
        """Total multiplicity of each ``(chi, dim)``, merging repeated entries."""
        c: Counter = Counter()
        for b in self.blocks:
            c[(b.chi, b.dim)] += b.mult
        return c

    def normalized(self) -> "ArchParameter":
        blocks = [ArthurBlock(chi, d, m) for (chi, d), m in sorted(self.multiplicities().items())]
        return ArchParameter(self.group, blocks, self.ramanujan)

    def key(self) -> tuple:
        return tuple(sorted(self.multiplicities().items()))

    @property
    def dimension(self) -> int:
        return sum(b.dim * b.mult for b in self.blocks)


# ---------------------------------------------------------------- validation

DIMENSION = "dimension"
DUALITY = "duality"
SYMPLECTIC_PARITY = "symplectic-parity"
LX2_PARITY = "LX2-parity"
LRS_BOUND = "LRS-bound"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> list[str]:
        seen = []
        for v in self.violations:
            if v.kind not in seen:
                seen.append(v.kind)
        return seen


def validate_parameter(param: ArchParameter) -> ValidationReport:
    """Collect every violated admissibility constraint.

    For the quaternionic family the dual group is SO(2n+3, C), so the
    parameter must be self-dual, stable under complex conjugation of the
    character, orthogonal (even multiplicity on symplectic trivial blocks),
    and satisfy the parity rule on unitary-type characters.  The unitary
    family only gets the dimension and exponent-bound checks.
    """
    g = param.group
    out: list[Violation] = []
    mult = param.multiplicities()

    if param.dimension != g.N:
        out.append(Violation(DIMENSION, f"total dimension {param.dimension} != N = {g.N}"))

    if g.quaternionic:
        for (chi, d), m in sorted(mult.items()):
            for partner, name in ((chi.inverse(), "inverse"), (chi.conj(), "conjugate")):
                if mult.get((partner, d), 0) != m:
                    out.append(
                        Violation(
                            DUALITY,
                            f"{chi} (x) r({d}) has multiplicity {m} but its {name} has "
                            f"{mult.get((partner, d), 0)}",
                        )
                    )
            cls = classify_character(chi)
            if cls is CharClass.TRIVIAL and d % 2 == 0 and m % 2 == 1:
                out.append(
                    Violation(SYMPLECTIC_PARITY, f"trivial (x) r({d}) has odd multiplicity {m}")
                )
            if cls is CharClass.UNITARY and chi.p > 0 and m % 2 == 1:
                want_odd = is_integer(chi.p)
                if (d % 2 == 1) != want_odd:
                    need = "odd" if want_odd else "even"
                    out.append(
                        Violation(
                            LX2_PARITY,
                            f"(z/zbar)^{chi.p} (x) r({d}) with odd multiplicity needs {need} dim",
                        )
                    )

    bound = g.eta
    for (chi, d) in sorted(mult):
        if param.ramanujan:
            if chi.p + chi.q != 0:
                out.append(Violation(LRS_BOUND, f"{chi}: p + q = {chi.p + chi.q} != 0"))
        elif abs(chi.s) > bound:
            out.append(Violation(LRS_BOUND, f"{chi}: |(p+q)/2| = {abs(chi.s)} > {bound}"))
    return ValidationReport(tuple(out))


# ------------------------------------------------------- infinitesimal char


def block_segment(p, n: int, positive_half: bool = False) -> list[Fraction]:
    """``p + (n-1)/2, p + (n-3)/2, ..., p + (1-n)/2``.

    With ``positive_half`` (only meaningful for ``p = 0`` and odd ``n``) the
    sequence stops at 0.
    """
    p = as_rational(p)
    seq = [p + Fraction(n - 1 - 2 * i, 2) for i in range(n)]
    if positive_half:
        seq = seq[: (n + 1) // 2]
    return seq


@dataclass(frozen=True)
class InfChar:
    P: Multiset
    Pprime: Optional[WeightVector] = None


def _orbit_representatives(mult: Counter) -> list[tuple[Character, int, int]]:
    """One ``(chi, dim, mult)`` per orbit of chi under inverse and conjugation."""
    reps = []
    seen = set()
    for (chi, d), m in sorted(mult.items()):
        if (chi, d) in seen:
            continue
        orbit = {chi, chi.inverse(), chi.conj(), chi.inverse().conj()}
        seen.update((c, d) for c in orbit)
        reps.append((max(orbit), d, m))
    return reps


def infinitesimal_character(param: ArchParameter) -> InfChar:
    """Expand each block into its segment of the infinitesimal character.

    ``Pprime`` is the raw half-assembly: one segment per orbit of a
    nontrivial character (two for a complex orbit), one ``[d]`` per pair of
    trivial blocks, ``[d]^+`` for a leftover odd trivial block, then
    surplus zeros are removed so that ``P = Pprime u {0} u -Pprime``.
    """
    report = validate_parameter(param)
    if not report.ok:
        raise RejectedParameterError(report)
    mult = param.multiplicities()
    P: list[Fraction] = []
    for (chi, d), m in sorted(mult.items()):
        P.extend(block_segment(chi.p, d) * m)
    P_ms = Multiset(P)
    if not param.group.quaternionic:
        return InfChar(P_ms, None)

    half: list[Fraction] = []
    for chi, d, m in _orbit_representatives(mult):
        cls = classify_character(chi)
        if cls in (CharClass.REAL, CharClass.UNITARY):
            half.extend(block_segment(chi.p, d) * m)
        elif cls is CharClass.COMPLEX:
            half.extend((block_segment(chi.p, d) + block_segment(chi.q, d)) * m)
    # even-dim trivial blocks first, then odd ones
    trivial = sorted(((d, m) for (chi, d), m in mult.items() if chi == TRIVIAL), key=lambda t: (t[0] % 2, t[0]))
    for d, m in trivial:
        half.extend(block_segment(0, d) * (m // 2))
        if m % 2:
            if d % 2 == 0:
                raise RejectedParameterError(report)  # unreachable after validation
            half.extend(block_segment(0, d, positive_half=True))

    zeros_needed = (P_ms.count(0) - 1) // 2
    if P_ms.count(0) % 2 == 0:
        raise DomainError("infinitesimal character has no middle zero")
    surplus = half.count(0) - zeros_needed
    if surplus < 1:
        raise DomainError("no zero available to remove from the half assembly")
    for _ in range(surplus):
        idx = len(half) - 1 - half[::-1].index(Fraction(0))
        del half[idx]
    n1 = param.group.n + 1
    if len(half) != n1:
        raise DimensionError(f"half assembly has {len(half)} coordinates, expected {n1}")
    return InfChar(P_ms, WeightVector(half, WeylType.BC))


def canonical_half(P: Multiset) -> WeightVector:
    """Positive-chamber half of a negation-symmetric multiset of odd size."""
    if not P.is_negation_symmetric() or len(P) % 2 == 0:
        raise DomainError("multiset is not the infinitesimal character of an odd orthogonal group")
    pos = [x for x in P if x > 0]
    zeros = [Fraction(0)] * ((P.count(0) - 1) // 2)
    return WeightVector(pos + zeros, WeylType.BC)


def _entries(P) -> tuple[Fraction, ...]:
    if isinstance(P, InfChar):
        return P.P.entries
    if isinstance(P, (Multiset, WeightVector)):
        return tuple(P)
    return tuple(as_rational(x) for x in P)


def casimir_eigenvalue(P, g: GroupDatum) -> Fraction:
    """Eigenvalue of the positive Laplacian: ``<rho,rho> - <P,P>``."""
    if not g.quaternionic:
        raise DomainError("Casimir normalization is only modelled for the quaternionic family")
    coords = _entries(P)
    if len(coords) != g.N:
        raise DimensionError(f"infinitesimal character has {len(coords)} coordinates, N = {g.N}")
    return norm2(g.rho) - norm2(coords)


# ------------------------------------------------------------ Langlands data


@dataclass(frozen=True)
class LanglandsData:
    m1: int
    s: Fraction
    P2: WeightVector


def langlands_data(p1, q1, P2) -> LanglandsData:
    """Langlands data of the principal series induced from ``z^p1 zbar^q1``.

    ``m1 = |p1 - q1|`` is the dimension of the Sp(1) type, so that its
    Casimir is ``m1^2 - 1``.
    """
    p1, q1 = as_rational(p1), as_rational(q1)
    if not is_integer(p1 - q1):
        raise MalformedCharacterError(f"p1 - q1 = {p1 - q1} is not an integer")
    if p1 == q1:
        raise RamificationError("p1 = q1: the inducing character must be ramified")
    P2 = P2 if isinstance(P2, WeightVector) else WeightVector(P2)
    return LanglandsData(int(abs(p1 - q1)), (p1 + q1) / 2, P2)


def pedon_eigenvalue(ld: LanglandsData, g: GroupDatum) -> Fraction:
    """Principal-series eigenvalue written through the Casimirs of the M-type:
    ``-4 s^2 + (2n+1)^2 - <P2,P2> - m1^2 + <rho2,rho2> + 1``."""
    if not g.quaternionic:
        raise DomainError("only defined for the quaternionic family")
    n = g.n
    return (
        -4 * ld.s * ld.s
        + (2 * n + 1) ** 2
        - norm2(ld.P2)
        - ld.m1 * ld.m1
        + norm2(g.rho2)
        + 1
    )


def principal_series_character(ld: LanglandsData) -> Multiset:
    """``(p1, q1, P2, -q1, -p1)`` reconstructed from Langlands data."""
    p1 = ld.s + Fraction(ld.m1, 2)
    q1 = ld.s - Fraction(ld.m1, 2)
    return Multiset([p1, q1, *ld.P2, -q1, -p1])


def spherical_langlands(P, g: GroupDatum) -> Optional[LanglandsData]:
    """Langlands data of the spherical representation with character ``P``.

    Returns None unless ``P`` is Weyl-conjugate to
    ``(s + 1/2, s - 1/2, rho2, 1/2 - s, -1/2 - s)``; ``s`` is returned
    nonnegative.
    """
    if not g.quaternionic:
        raise DomainError("only defined for the quaternionic family")
    ms = P.P if isinstance(P, InfChar) else Multiset(_entries(P))
    half = canonical_half(ms)
    rest = Counter(half.coords)
    rest.subtract(Counter(range(1, g.n)))
    if any(v < 0 for v in rest.values()):
        return None
    u, v = sorted(rest.elements(), reverse=True)
    if u - v == 1:
        s = (u + v) / 2
    elif u + v == 1:
        s = (u - v) / 2
    else:
        return None
    return LanglandsData(1, s, g.rho2)


# --------------------------------------------------------------- JSON format


def parameter_to_json(param: ArchParameter) -> dict:
    g = param.group
    return {
        "family": g.family.value,
        "n": g.n,
        "ramanujan": param.ramanujan,
        "blocks": [
            {
                "p": format_rational(b.chi.p),
                "q": format_rational(b.chi.q),
                "dim": b.dim,
                "mult": b.mult,
            }
            for b in param.normalized().blocks
        ],
    }


def parameter_from_json(data: dict, group: Optional[GroupDatum] = None) -> ArchParameter:
    """Inverse of :func:`parameter_to_json`.  Raises ValueError on malformed input."""
    try:
        if group is None:
            group = make_group(Family(data["family"]), int(data["n"]))
        blocks = [
            ArthurBlock(Character(b["p"], b["q"]), int(b["dim"]), int(b.get("mult", 1)))
            for b in data["blocks"]
        ]
        ramanujan = bool(data.get("ramanujan", False))
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed parameter file: {exc!r}") from exc
    return ArchParameter(group, blocks, ramanujan)


def load_parameter(path: Union[str, Path]) -> ArchParameter:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed parameter file: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("malformed parameter file: top level must be an object")
    return parameter_from_json(data)
