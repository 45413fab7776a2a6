"""Structural data for the unitary and quaternionic families."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional, Union

from .core import DomainError, WeightVector, WeylType, as_rational, format_rational, norm2

ALPHA_CONFIG_ENV = "AUTOSPEC_ALPHA_CONFIG"


class Family(str, Enum):
    UNITARY = "unitary"
    QUATERNIONIC = "quaternionic"


class _External:
    """Marker for a tempered bound this package does not know."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "External"

    def __bool__(self) -> bool:
        return False


External = _External()


def eta(N: int) -> Fraction:
    """Half-width of the region allowed for ``Re(p+q)/2`` by the known
    approximation to Ramanujan for GL(N)."""
    return Fraction(1, 2) - Fraction(1, N * N + 1)


def ramanujan_defect(N: int) -> Fraction:
    """``((N^2-1)/(N^2+1))^2``; equal to ``4 * eta(N)**2``."""
    return Fraction(N * N - 1, N * N + 1) ** 2


@dataclass(frozen=True)
class GroupDatum:
    family: Family
    n: int
    N: int
    eta: Fraction
    rho: Optional[WeightVector] = None
    rho2: Optional[WeightVector] = None
    alpha: Mapping[int, Fraction] = field(default_factory=dict, compare=False)

    @property
    def quaternionic(self) -> bool:
        return self.family is Family.QUATERNIONIC

    @property
    def max_degree(self) -> int:
        # real dimension of the symmetric space
        return 4 * self.n if self.quaternionic else 2 * self.n

    def with_alpha(self, alpha: Mapping[int, Fraction]) -> "GroupDatum":
        merged = dict(self.alpha)
        merged.update(alpha)
        _check_alpha(self, merged)
        return GroupDatum(self.family, self.n, self.N, self.eta, self.rho, self.rho2, merged)


def _segment(top: int) -> list[int]:
    return list(range(top, -top - 1, -1))


def make_group(
    family: Union[Family, str], n: int, alpha: Optional[Mapping[int, Fraction]] = None
) -> GroupDatum:
    """Build the datum for SU(n,1) (``unitary``) or Sp(n,1) (``quaternionic``).

    ``alpha`` optionally injects tempered bounds for degrees whose value is
    not known here.  When ``alpha`` is None the file named by
    ``$AUTOSPEC_ALPHA_CONFIG`` is consulted, if it matches ``(family, n)``.
    """
    family = Family(family)
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if family is Family.UNITARY:
        if n < 2:
            raise DomainError("unitary family requires n >= 2")
        N = n + 1
        g = GroupDatum(family, n, N, eta(N))
    else:
        if n < 1:
            raise DomainError("quaternionic family requires n >= 1")
        N = 2 * n + 3
        g = GroupDatum(
            family,
            n,
            N,
            eta(N),
            rho=WeightVector(_segment(n + 1), WeylType.BC),
            rho2=WeightVector(_segment(n - 1), WeylType.BC),
        )
    if alpha is None:
        alpha = _alpha_from_env(family, n)
    if alpha:
        g = g.with_alpha(alpha)
    return g


def _known_alpha(g: GroupDatum, k: int):
    if not g.quaternionic:
        return External
    n = g.n
    if k == 0:
        return Fraction((2 * n + 1) ** 2)
    if k in (2 * n - 1, 2 * n, 2 * n + 1):
        return Fraction(1)
    return External


def tempered_bound(g: GroupDatum, k: int):
    """Bottom of the tempered spectrum on L^2 k-forms of the symmetric space.

    Returns a Fraction when known (degrees 0 and the middle degree with its
    neighbours, quaternionic case) or injected, else :data:`External`.
    """
    if not 0 <= k <= g.max_degree:
        raise DomainError(f"degree {k} outside [0, {g.max_degree}]")
    known = _known_alpha(g, k)
    if known is not External:
        return known
    return g.alpha.get(k, External)


def _check_alpha(g: GroupDatum, alpha: Mapping[int, Fraction]) -> None:
    for k, a in alpha.items():
        if not 0 <= k <= g.max_degree:
            raise DomainError(f"alpha given for degree {k} outside [0, {g.max_degree}]")
        known = _known_alpha(g, k)
        if known is not External and known != a:
            raise DomainError(f"alpha_{k} = {a} contradicts the known value {known}")
        if a < 1:
            raise DomainError(f"alpha_{k} = {a} is below 1")
        if g.quaternionic and k <= 2 * g.n - 2 and a < 4:
            raise DomainError(f"alpha_{k} = {a} is below 4 for k <= 2n-2")


def parse_alpha_config(data: Mapping) -> tuple[Family, int, dict[int, Fraction]]:
    try:
        family = Family(data["family"])
        n = int(data["n"])
        alpha = {int(k): as_rational(v) for k, v in data.get("alpha", {}).items()}
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"malformed tempered-bound config: {exc}") from exc
    return family, n, alpha


def load_alpha_config(path: Union[str, Path]) -> tuple[Family, int, dict[int, Fraction]]:
    with open(path, encoding="utf-8") as fh:
        return parse_alpha_config(json.load(fh))


def dump_alpha_config(g: GroupDatum) -> dict:
    return {
        "family": g.family.value,
        "n": g.n,
        "alpha": {str(k): format_rational(v) for k, v in sorted(g.alpha.items())},
    }


def _alpha_from_env(family: Family, n: int) -> dict[int, Fraction]:
    path = os.environ.get(ALPHA_CONFIG_ENV)
    if not path:
        return {}
    cfg_family, cfg_n, alpha = load_alpha_config(path)
    if (cfg_family, cfg_n) != (family, n):
        return {}
    return alpha


@dataclass(frozen=True, order=True)
class MType:
    """Label sigma_{a,b} of an irreducible of M = U(1) x U(n-1)."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"sigma_{{{self.a},{self.b}}}"


def m_type_restriction(p: int, q: int) -> list[MType]:
    """M-types in the restriction of the K-type attached to primitive (p,q)-forms.

    Labels with a negative index do not exist and are dropped.
    """
    if p < 0 or q < 0:
        raise DomainError("Hodge indices must be nonnegative")
    out = []
    for a, b in ((p, q), (p - 1, q), (p, q - 1), (p - 1, q - 1)):
        if a >= 0 and b >= 0:
            out.append(MType(a, b))
    return out


def rho_norm_gap(g: GroupDatum) -> Fraction:
    """``<rho,rho> - <rho2,rho2>`` for a quaternionic datum."""
    if not g.quaternionic:
        raise DomainError("rho is only modelled for the quaternionic family")
    return norm2(g.rho) - norm2(g.rho2)
