"""Brute-force enumeration of admissible archimedean parameters and the
verification runs that compare it with the closed forms.

The search space is finite by construction:

* every character exponent satisfies ``|p|, |q| <= height``;
* every coordinate of the infinitesimal character satisfies
  ``|x| <= height + 1/2`` (for a spherical parameter this is ``|s| <= height``);
* real parts ``s`` of real and complex characters run over rationals with
  denominator ``<= max_real_denominator`` inside the allowed region.

Parameters are built from duality orbits ("atoms"), so closure under
``chi -> chi^-1`` and ``chi -> chi^c`` holds by construction; the parity
rules are left to :func:`validate_parameter`.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .arthur import (
    ArchParameter,
    ArthurBlock,
    Character,
    CharClass,
    casimir_eigenvalue,
    infinitesimal_character,
    parameter_to_json,
    spherical_langlands,
    validate_parameter,
)
from .core import DomainError, as_rational, format_rational, is_half_integer
from .groups import GroupDatum, make_group, Family
from .spectra import (
    HodgeType,
    dichotomy_check,
    resolve_alpha,
    t1_discrete,
    t38_spectrum,
)

log = logging.getLogger(__name__)

DEFAULT_CEILING = 10**7


class EnumerationCeilingError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationConfig:
    group: GroupDatum
    height_bound: Fraction
    ramanujan_mode: bool = False
    spherical_only: bool = False
    max_real_denominator: int = 4
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        h = as_rational(self.height_bound)
        object.__setattr__(self, "height_bound", h)
        if h < 0 or not is_half_integer(h):
            raise DomainError(f"height bound must be a nonnegative half-integer, got {h}")
        if not self.group.quaternionic:
            raise DomainError("enumeration is implemented for the quaternionic family")
        if self.max_real_denominator < 1:
            raise DomainError("max_real_denominator must be >= 1")


@dataclass(frozen=True, order=True)
class Atom:
    """One duality orbit of ``chi (x) r(dim)``, represented by ``chi``."""

    kind: CharClass
    p: Fraction
    q: Fraction
    dim: int

    @property
    def members(self) -> tuple[Character, ...]:
        chi = Character(self.p, self.q)
        if self.kind is CharClass.TRIVIAL:
            return (chi,)
        if self.kind is CharClass.COMPLEX:
            return (chi, chi.inverse(), chi.conj(), chi.inverse().conj())
        return (chi, chi.inverse())

    @property
    def weight(self) -> int:
        return self.dim * len(self.members)

    @property
    def reach(self) -> Fraction:
        """Largest |coordinate| the atom puts into the infinitesimal character."""
        return max(abs(self.p), abs(self.q)) + Fraction(self.dim - 1, 2)


def real_parts(bound: Fraction, max_den: int) -> list[Fraction]:
    """Positive rationals ``<= bound`` with denominator ``<= max_den``."""
    out = set()
    for den in range(1, max_den + 1):
        for num in range(1, int(bound * den) + 1):
            out.add(Fraction(num, den))
    return sorted(x for x in out if x <= bound)


def build_atoms(cfg: EnumerationConfig) -> list[Atom]:
    g, H, N = cfg.group, cfg.height_bound, cfg.group.N
    reach = H + Fraction(1, 2)
    atoms = [Atom(CharClass.TRIVIAL, Fraction(0), Fraction(0), d) for d in range(1, N + 1)]
    for j in range(1, int(2 * H) + 1):
        p = Fraction(j, 2)
        for d in range(1, N // 2 + 1):
            atoms.append(Atom(CharClass.UNITARY, p, -p, d))
    if not cfg.ramanujan_mode:
        grid = [s for s in real_parts(min(H, g.eta), cfg.max_real_denominator) if s <= g.eta]
        for s in grid:
            for d in range(1, N // 2 + 1):
                atoms.append(Atom(CharClass.REAL, s, s, d))
            m = 1
            while Fraction(m, 2) + s <= H:
                for d in range(1, N // 4 + 1):
                    atoms.append(Atom(CharClass.COMPLEX, Fraction(m, 2) + s, s - Fraction(m, 2), d))
                m += 1
    return sorted(a for a in atoms if a.reach <= reach and a.weight <= N)


def count_candidates(atoms: Sequence[Atom], N: int) -> int:
    """Number of atom multisets of total weight N (before parity filtering)."""
    ways = [1] + [0] * N
    for a in atoms:
        w = a.weight
        for t in range(w, N + 1):
            ways[t] += ways[t - w]
    return ways[N]


def _multisets(atoms: Sequence[Atom], start: int, remaining: int, acc: list) -> Iterator[list]:
    if remaining == 0:
        yield acc
        return
    for i in range(start, len(atoms)):
        w = atoms[i].weight
        if w > remaining:
            continue
        m = 1
        while m * w <= remaining:
            acc.append((atoms[i], m))
            yield from _multisets(atoms, i + 1, remaining - m * w, acc)
            acc.pop()
            m += 1


def _to_parameter(cfg: EnumerationConfig, chosen) -> ArchParameter:
    blocks = [ArthurBlock(chi, a.dim, m) for a, m in chosen for chi in a.members]
    return ArchParameter(cfg.group, blocks, cfg.ramanujan_mode).normalized()


def _accept(cfg: EnumerationConfig, param: ArchParameter) -> bool:
    if not validate_parameter(param).ok:
        return False
    if cfg.spherical_only:
        return spherical_langlands(infinitesimal_character(param), cfg.group) is not None
    return True


def _enumerate_from(cfg: EnumerationConfig, atoms: Sequence[Atom], first: int) -> list[ArchParameter]:
    """All admissible parameters whose smallest atom is ``atoms[first]``."""
    out = []
    N = cfg.group.N
    w = atoms[first].weight
    m = 1
    while m * w <= N:
        for rest in _multisets(atoms, first + 1, N - m * w, [(atoms[first], m)]):
            param = _to_parameter(cfg, rest)
            if _accept(cfg, param):
                out.append(param)
        m += 1
    return out


def _worker(args):
    cfg, atoms, first = args
    return first, _enumerate_from(cfg, atoms, first)


def enumerate_parameters(cfg: EnumerationConfig, jobs: int = 1) -> Iterator[ArchParameter]:
    """Stream every admissible parameter in the search space of ``cfg``.

    Work is split by the smallest atom of each multiset; the merged stream
    is in a fixed order independent of ``jobs``.
    """
    atoms = build_atoms(cfg)
    estimate = count_candidates(atoms, cfg.group.N)
    if estimate > cfg.ceiling:
        raise EnumerationCeilingError(
            f"{estimate} candidate parameters exceed the ceiling {cfg.ceiling}"
        )
    log.debug("enumerating %d candidates over %d atoms", estimate, len(atoms))
    tasks = [(cfg, atoms, i) for i in range(len(atoms))]
    if jobs <= 1 or len(tasks) < 2:
        for t in tasks:
            yield from _worker(t)[1]
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = dict(pool.map(_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    for i in range(len(tasks)):
        yield from results[i]


# ------------------------------------------------------------------ reports


@dataclass
class VerificationReport:
    kind: str
    n: int
    parameters_enumerated: int = 0
    parameters_rejected: int = 0
    parameters_nonunitary: int = 0
    eigenvalues_found: list = field(default_factory=list)
    expected: Optional[list] = None
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    dichotomy_failures: list = field(default_factory=list)
    settings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not (self.missing or self.extra or self.dichotomy_failures)

    def to_json(self) -> dict:
        def enc(xs):
            return [format_rational(x) if isinstance(x, Fraction) else x for x in xs]

        return {
            "kind": self.kind,
            "n": self.n,
            "settings": self.settings,
            "passed": self.passed,
            "parameters_enumerated": self.parameters_enumerated,
            "parameters_rejected": self.parameters_rejected,
            "parameters_nonunitary": self.parameters_nonunitary,
            "eigenvalues_found": enc(self.eigenvalues_found),
            "expected": None if self.expected is None else enc(self.expected),
            "missing": enc(self.missing),
            "extra": enc(self.extra),
            "dichotomy_failures": self.dichotomy_failures,
        }


def _compare(report: VerificationReport, found: set, expected: set) -> None:
    report.eigenvalues_found = sorted(found)
    report.expected = sorted(expected)
    report.missing = sorted(expected - found)
    report.extra = sorted(found - expected)


def verify_t38(n: int, height, jobs: int = 1, ceiling: int = DEFAULT_CEILING) -> VerificationReport:
    """Recompute the spherical spectrum below ``(2n+1)^2`` from all
    admissible parameters under Ramanujan and compare with the closed form."""
    g = make_group(Family.QUATERNIONIC, n)
    cfg = EnumerationConfig(g, as_rational(height), ramanujan_mode=True, spherical_only=True, ceiling=ceiling)
    report = VerificationReport("t38", n, settings=_settings(cfg))
    top = (2 * n + 1) ** 2
    found = set()
    for param in enumerate_parameters(cfg, jobs):
        report.parameters_enumerated += 1
        lam = casimir_eigenvalue(infinitesimal_character(param), g)
        if lam < 0:
            report.parameters_nonunitary += 1
            continue
        if lam < top:
            found.add(lam)
        if lam > 0:
            verdict = dichotomy_check(lam, 0, g, ramanujan=True)
            if not verdict.ok:
                report.dichotomy_failures.append(_failure(param, lam, verdict))
    _compare(report, found, set(t38_spectrum(n).values))
    return report


def verify_dichotomy(
    n: int,
    k_degree: int,
    height,
    ramanujan: bool = False,
    jobs: int = 1,
    ceiling: int = DEFAULT_CEILING,
    extra_parameters: Sequence[ArchParameter] = (),
    group: Optional[GroupDatum] = None,
) -> VerificationReport:
    """Check every enumerated eigenvalue contributing to ``k_degree``-forms
    against the even-integer / threshold alternative.

    Only functions (degree 0, spherical parameters) have a modelled
    contribution criterion; other degrees raise :class:`DomainError`.
    ``extra_parameters`` are pushed through the same validation gate.
    """
    g = group or make_group(Family.QUATERNIONIC, n)
    resolve_alpha(g, k_degree)
    if k_degree != 0:
        raise DomainError(
            "which parameters contribute to k-forms is only modelled for k = 0 (spherical)"
        )
    cfg = EnumerationConfig(g, as_rational(height), ramanujan_mode=ramanujan, spherical_only=True, ceiling=ceiling)
    report = VerificationReport("dichotomy", n, settings={**_settings(cfg), "degree": k_degree})
    found = set()

    def check(param: ArchParameter) -> None:
        lam = casimir_eigenvalue(infinitesimal_character(param), g)
        if lam < 0:
            report.parameters_nonunitary += 1
            return
        if lam == 0:
            return
        found.add(lam)
        verdict = dichotomy_check(lam, k_degree, g, ramanujan=ramanujan)
        if not verdict.ok:
            report.dichotomy_failures.append(_failure(param, lam, verdict))

    for param in enumerate_parameters(cfg, jobs):
        report.parameters_enumerated += 1
        check(param)
    for param in extra_parameters:
        if not _accept(cfg, param):
            report.parameters_rejected += 1
            continue
        report.parameters_enumerated += 1
        check(param)
    report.eigenvalues_found = sorted(found)
    return report


def verify_t1_constraints(n: int, hodge: HodgeType) -> VerificationReport:
    """Box search over ``(a, b, k)`` against :func:`t1_discrete`."""
    closed = t1_discrete(n, hodge)
    p, q = hodge.p, hodge.q
    brute = []
    for a in range(0, p + 1):
        for b in range(0, q + 1):
            for k in range(0, n + 1):
                if a > p or b > q:
                    continue
                if p - q - (a - b) not in (-1, 0, 1):
                    continue
                if not (0 <= k and 2 * k <= n - a - b):
                    continue
                lam = Fraction((n - a - b) ** 2 - (n - a - b - 2 * k) ** 2)
                brute.append((a, b, k, lam))
    report = VerificationReport("t1", n, settings={"hodge": [p, q]})
    report.parameters_enumerated = len(brute)
    _compare(report, {t[3] for t in brute}, {t[3] for t in closed})
    if sorted(brute) != closed:
        report.dichotomy_failures.append(
            {"detail": "labelled (a,b,k) triples differ between box search and closed form"}
        )
    return report


def _settings(cfg: EnumerationConfig) -> dict:
    return {
        "height": format_rational(cfg.height_bound),
        "ramanujan": cfg.ramanujan_mode,
        "spherical_only": cfg.spherical_only,
        "max_real_denominator": cfg.max_real_denominator,
    }


def _failure(param: ArchParameter, lam: Fraction, verdict) -> dict:
    return {
        "lambda": format_rational(lam),
        "verdict": verdict.to_json(),
        "parameter": parameter_to_json(param),
    }


def default_jobs() -> int:
    return os.cpu_count() or 1
