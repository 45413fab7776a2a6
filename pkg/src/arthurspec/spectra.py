"""Closed-form Laplacian spectra, the parameter-shape classifier and the
even-integer / threshold dichotomy."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .arthur import (
    ArchParameter,
    CharClass,
    RejectedParameterError,
    classify_character,
    validate_parameter,
)
from .core import DomainError, as_rational, format_rational, is_integer
from .groups import External, GroupDatum, ramanujan_defect, tempered_bound


class InconsistencyError(ValueError):
    """A parameter mixes sources of non-integrality that cannot coexist."""


class UnresolvableError(ValueError):
    """The tempered bound needed for a check is neither known nor injected."""


@dataclass(frozen=True, order=True)
class HodgeType:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise DomainError("Hodge type must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "HodgeType":
        try:
            p, q = (int(t) for t in text.split(","))
        except ValueError as exc:
            raise DomainError(f"bad Hodge type {text!r}; expected P,Q") from exc
        return cls(p, q)


@dataclass(frozen=True)
class SpectrumDescription:
    """Discrete eigenvalues (with labels) and the lower edge of the continuum."""

    discrete: tuple[tuple[str, Fraction], ...]
    threshold_unconditional: Fraction
    threshold_ramanujan: Fraction

    @property
    def values(self) -> list[Fraction]:
        """Distinct discrete eigenvalues, ascending."""
        return sorted({v for _, v in self.discrete})

    def threshold(self, ramanujan: bool) -> Fraction:
        return self.threshold_ramanujan if ramanujan else self.threshold_unconditional

    @property
    def vacuous(self) -> bool:
        return self.threshold_unconditional < 0

    def to_json(self) -> dict:
        return {
            "discrete": [format_rational(v) for v in self.values],
            "labels": [[lab, format_rational(v)] for lab, v in self.discrete],
            "threshold_unconditional": format_rational(self.threshold_unconditional),
            "threshold_ramanujan": format_rational(self.threshold_ramanujan),
            "vacuous": self.vacuous,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SpectrumDescription":
        return cls(
            tuple((lab, as_rational(v)) for lab, v in data["labels"]),
            as_rational(data["threshold_unconditional"]),
            as_rational(data["threshold_ramanujan"]),
        )


def _sorted_discrete(pairs) -> tuple[tuple[str, Fraction], ...]:
    return tuple(sorted(set(pairs), key=lambda t: (t[1], t[0])))


# ----------------------------------------------------------- unitary family


def t1_discrete(n: int, hodge: HodgeType) -> list[tuple[int, int, int, Fraction]]:
    """Discrete eigenvalues on (p,q)-forms of an SU(n,1) quotient.

    Returns every ``(a, b, k, lambda)`` with ``a <= p``, ``b <= q``,
    ``|p - q - (a - b)| <= 1``, ``0 <= k <= (n-a-b)//2`` and
    ``lambda = (n-a-b)^2 - (n-a-b-2k)^2``, sorted.
    """
    p, q = hodge.p, hodge.q
    if p + q > n:
        raise DomainError(f"Hodge type ({p},{q}) exceeds n = {n}")
    out = []
    for a in range(p + 1):
        for b in range(q + 1):
            if abs(p - q - (a - b)) > 1:
                continue
            m = n - a - b
            for k in range(m // 2 + 1):
                out.append((a, b, k, Fraction(m * m - (m - 2 * k) ** 2)))
    return sorted(out)


def t1_threshold(n: int, a: int, b: int, ramanujan: bool, N: int) -> Fraction:
    """Bottom of the continuous part for the M-type (a,b).

    May be negative when ``a + b = n`` (no information); see
    :func:`vacuous`.
    """
    if a + b > n:
        raise DomainError("a + b must not exceed n")
    m = n - a - b
    base = Fraction(m * m)
    return base if ramanujan else base - ramanujan_defect(N)


def vacuous(threshold: Fraction) -> bool:
    return threshold < 0


def t1_spectrum(n: int, hodge: HodgeType) -> SpectrumDescription:
    rows = t1_discrete(n, hodge)
    N = n + 1
    pairs = {(a, b) for a, b, _, _ in rows}
    unc = min(t1_threshold(n, a, b, False, N) for a, b in pairs)
    ram = min(t1_threshold(n, a, b, True, N) for a, b in pairs)
    discrete = _sorted_discrete((f"a={a},b={b},k={k}", lam) for a, b, k, lam in rows)
    return SpectrumDescription(discrete, unc, ram)


def tu_spectrum(n: int, r: int) -> SpectrumDescription:
    """Spectrum on primitive, d'- and d''-coclosed forms of degree ``r < n``."""
    if not 0 <= r < n:
        raise DomainError(f"degree r = {r} must satisfy 0 <= r < n = {n}")
    m = n - r
    discrete = _sorted_discrete(
        (f"k={k}", Fraction(m * m - (m - 2 * k) ** 2)) for k in range(m // 2 + 1)
    )
    N = n + 1
    return SpectrumDescription(discrete, Fraction(m * m) - ramanujan_defect(N), Fraction(m * m))


def spectral_gap(n: int, r: int) -> Fraction:
    """Lower bound for the first nonzero eigenvalue on r-forms, 0 <= r <= 2n.

    Degrees above n are folded back by Hodge duality.
    """
    if not 0 <= r <= 2 * n:
        raise DomainError(f"degree r = {r} outside [0, {2 * n}]")
    if r > n:
        r = 2 * n - r
    if r in (n - 1, n, n + 1):
        return Fraction(2 * (n + 1), (n + 1) ** 2 + 1) ** 2
    return Fraction(4 * (n - r - 1))


# ------------------------------------------------------- quaternionic family


def t38_spectrum(n: int, ramanujan: bool = False) -> SpectrumDescription:
    """Spectrum on functions of an Sp(n,1) congruence quotient.

    Discrete part ``(2n+1)^2 - k^2`` for odd ``k <= 2n+1``.  The
    ``ramanujan`` flag is accepted for symmetry; both thresholds are always
    filled in.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    top = (2 * n + 1) ** 2
    discrete = _sorted_discrete(
        (f"k={k}", Fraction(top - k * k)) for k in range(1, 2 * n + 2, 2)
    )
    N = 2 * n + 3
    return SpectrumDescription(discrete, Fraction(top) - ramanujan_defect(N), Fraction(top))


def faraut_list(n: int) -> list[Fraction]:
    """Eigenvalues of the spherical discrete series of
    ``L^2(Sp(n-1,1) \\ Sp(n,1))``: ``(2n+1)^2 - (2a-1)^2`` for ``a = 1..n+1``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return [Fraction((2 * n + 1) ** 2 - (2 * a - 1) ** 2) for a in range(1, n + 2)]


# ------------------------------------------------------------ case analysis


class CaseLabel(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


def classify_case(param: ArchParameter) -> CaseLabel:
    """Shape of a validated quaternionic parameter by its source of
    non-integrality: symplectic trivial block (A), real character (B),
    complex character (C) or none (D)."""
    report = validate_parameter(param)
    if not report.ok:
        raise RejectedParameterError(report)
    symplectic = 0
    real = 0
    complex_ = 0
    for (chi, d), m in param.multiplicities().items():
        cls = classify_character(chi)
        if cls is CharClass.TRIVIAL and d % 2 == 0:
            symplectic += m // 2
        elif cls is CharClass.REAL and chi.p > 0:
            real += m
        elif cls is CharClass.COMPLEX and chi.p > 0 and chi.p > abs(chi.q):
            # one representative per orbit of four
            complex_ += m
    sources = symplectic + real + complex_
    if sources > 1:
        raise InconsistencyError(
            f"{sources} independent non-integral sources "
            f"(symplectic={symplectic}, real={real}, complex={complex_})"
        )
    if symplectic:
        return CaseLabel.A
    if real:
        return CaseLabel.B
    if complex_:
        return CaseLabel.C
    return CaseLabel.D


# --------------------------------------------------------------- dichotomy


@dataclass(frozen=True)
class DichotomyVerdict:
    kind: str  # "EvenInteger" | "AboveThreshold" | "Violation"
    value: Optional[Fraction] = None
    margin: Optional[Fraction] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.kind != "Violation"

    def __str__(self) -> str:
        if self.kind == "AboveThreshold":
            return f"AboveThreshold(margin {format_rational(self.margin)})"
        if self.kind == "Violation":
            return f"Violation({self.detail})"
        return self.kind

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.value is not None:
            out["value"] = format_rational(self.value)
        if self.margin is not None:
            out["margin"] = format_rational(self.margin)
        if self.detail:
            out["detail"] = self.detail
        return out


def resolve_alpha(g: GroupDatum, k: int) -> Fraction:
    a = tempered_bound(g, k)
    if a is External:
        raise UnresolvableError(
            f"tempered bound alpha_{k} for {g.family.value} n={g.n} is unknown; "
            "supply it through the tempered-bound config"
        )
    return a


def dichotomy_check(lam: Union[Fraction, int, str], k: int, g: GroupDatum, ramanujan: bool = False) -> DichotomyVerdict:
    """Either ``lam`` is a positive even integer, or it clears
    ``alpha_k - ((N^2-1)/(N^2+1))^2`` (``alpha_k`` itself under Ramanujan)."""
    lam = as_rational(lam)
    alpha = resolve_alpha(g, k)
    if lam <= 0:
        raise DomainError("dichotomy applies to positive eigenvalues only")
    if is_integer(lam) and lam.numerator % 2 == 0:
        return DichotomyVerdict("EvenInteger", value=lam)
    threshold = alpha if ramanujan else alpha - ramanujan_defect(g.N)
    margin = lam - threshold
    if margin >= 0:
        return DichotomyVerdict("AboveThreshold", value=lam, margin=margin)
    return DichotomyVerdict(
        "Violation",
        value=lam,
        margin=margin,
        detail=f"{format_rational(lam)} is neither even nor >= {format_rational(threshold)}",
    )
