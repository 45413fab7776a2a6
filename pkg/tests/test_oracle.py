from collections import Counter
from fractions import Fraction as F
from itertools import combinations_with_replacement, product

import pytest

from arthurspec.arthur import ArchParameter, ArthurBlock, Character, infinitesimal_character, validate_parameter
from arthurspec.core import DomainError
from arthurspec.groups import Family, make_group
from arthurspec.oracle import (
    EnumerationCeilingError,
    EnumerationConfig,
    build_atoms,
    count_candidates,
    enumerate_parameters,
    verify_dichotomy,
    verify_t1_constraints,
    verify_t38,
)
from arthurspec.spectra import CaseLabel, HodgeType, InconsistencyError, UnresolvableError, classify_case

from helpers import lx2_violation_n1

Q = Family.QUATERNIONIC


def int_partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in int_partitions(n - k, k):
            yield (k,) + rest


def is_spherical_bruteforce(P, n):
    """Try every choice of two coordinates and signs for (p, q)."""
    pos = sorted((x for x in P if x > 0), reverse=True)
    zeros = (list(P).count(0) - 1) // 2
    half = pos + [F(0)] * zeros
    target = Counter(range(1, n))
    for i in range(len(half)):
        for j in range(len(half)):
            if i == j:
                continue
            rest = Counter(x for k, x in enumerate(half) if k not in (i, j))
            if rest != target:
                continue
            for si, sj in product((1, -1), repeat=2):
                if abs(si * half[i] - sj * half[j]) == 1:
                    return True
    return False


def direct_spherical_count(n, height):
    """Independent count: partitions of N into block dimensions, characters
    assigned block by block, duplicates removed, admissibility by the raw
    constraints."""
    g = make_group(Q, n)
    H = F(height)
    chars = [Character(F(j, 2), F(-j, 2)) for j in range(-int(2 * H), int(2 * H) + 1)]
    seen = set()
    for part in int_partitions(g.N):
        sizes = Counter(part)
        per_size = [
            [(d, combo) for combo in combinations_with_replacement(chars, c)] for d, c in sorted(sizes.items())
        ]
        for choice in product(*per_size):
            blocks = Counter()
            for d, combo in choice:
                for chi in combo:
                    blocks[(chi, d)] += 1
            key = tuple(sorted(blocks.items()))
            if key in seen:
                continue
            seen.add(key)
    count = 0
    for key in seen:
        param = ArchParameter(g, [ArthurBlock(chi, d, m) for (chi, d), m in key], ramanujan=True)
        if not validate_parameter(param).ok:
            continue
        P = infinitesimal_character(param).P
        if max(abs(x) for x in P) > H + F(1, 2):
            continue
        if is_spherical_bruteforce(P, n):
            count += 1
    return count


def test_exhaustiveness_cross_check():
    g = make_group(Q, 1)
    cfg = EnumerationConfig(g, F(5, 2), ramanujan_mode=True, spherical_only=True)
    stream = list(enumerate_parameters(cfg))
    assert len(stream) == direct_spherical_count(1, F(5, 2)) == 10


def test_n1_spherical_height_5_2():
    g = make_group(Q, 1)
    cfg = EnumerationConfig(g, F(5, 2), ramanujan_mode=True, spherical_only=True)
    halves = {infinitesimal_character(p).Pprime for p in enumerate_parameters(cfg)}
    canon = {tuple(sorted((abs(x) for x in h), reverse=True)) for h in halves}
    assert (1, 0) in canon and (2, 1) in canon
    assert (F(1, 2), F(1, 2)) in canon  # tempered point, lambda = 9


def test_height_half_n1():
    g = make_group(Q, 1)
    cfg = EnumerationConfig(g, F(1, 2), ramanujan_mode=False, spherical_only=True)
    from arthurspec.arthur import casimir_eigenvalue

    lams = {casimir_eigenvalue(infinitesimal_character(p), g) for p in enumerate_parameters(cfg)}
    assert 8 in lams and 9 in lams and 0 not in lams


def test_height_zero_only_trivial_characters():
    g = make_group(Q, 1)
    params = list(enumerate_parameters(EnumerationConfig(g, F(0))))
    assert params
    for p in params:
        assert all(b.chi == Character(0, 0) for b in p.blocks)
        assert max(abs(x) for x in infinitesimal_character(p).P) <= F(1, 2)


def test_every_emitted_parameter_is_admissible_and_symmetric():
    for n, h in [(1, F(5, 2)), (2, F(3, 2))]:
        g = make_group(Q, n)
        for p in enumerate_parameters(EnumerationConfig(g, h)):
            assert validate_parameter(p).ok
            P = infinitesimal_character(p).P
            assert len(P) == g.N
            assert P.is_negation_symmetric() and P.count(0) % 2 == 1


def test_case_coverage_n2():
    g = make_group(Q, 2)
    labels = Counter()
    for p in enumerate_parameters(EnumerationConfig(g, F(3, 2))):
        try:
            labels[classify_case(p)] += 1
        except InconsistencyError:
            labels["inconsistent"] += 1
    assert all(labels[c] > 0 for c in CaseLabel)


def test_determinism_and_job_independence():
    a = verify_t38(2, F(5, 2)).to_json()
    b = verify_t38(2, F(5, 2)).to_json()
    c = verify_t38(2, F(5, 2), jobs=3).to_json()
    assert a == b == c
    cfg = EnumerationConfig(make_group(Q, 2), F(3, 2))
    assert [p.key() for p in enumerate_parameters(cfg)] == [p.key() for p in enumerate_parameters(cfg, jobs=2)]


def test_ceiling():
    cfg = EnumerationConfig(make_group(Q, 2), F(7, 2), ceiling=10)
    assert count_candidates(build_atoms(cfg), 7) > 10
    with pytest.raises(EnumerationCeilingError):
        list(enumerate_parameters(cfg))


def test_config_validation():
    with pytest.raises(DomainError):
        EnumerationConfig(make_group(Q, 1), F(1, 3))
    with pytest.raises(DomainError):
        EnumerationConfig(make_group(Family.UNITARY, 3), F(1, 2))


@pytest.mark.parametrize("n, height, found", [(1, F(5, 2), [0, 8]), (2, F(7, 2), [0, 16, 24])])
def test_verify_t38_pass(n, height, found):
    r = verify_t38(n, height)
    assert r.passed and r.eigenvalues_found == found == r.expected


def test_verify_t38_height_too_small():
    r = verify_t38(1, F(1, 2))
    assert not r.passed and r.missing == [0] and r.extra == []


@pytest.mark.parametrize("n, height", [(1, F(5, 2)), (2, F(7, 2))])
@pytest.mark.parametrize("ramanujan", [False, True])
def test_verify_dichotomy(n, height, ramanujan):
    r = verify_dichotomy(n, 0, height, ramanujan=ramanujan)
    assert r.passed and r.dichotomy_failures == []
    if not ramanujan:
        # complementary-series witnesses above the threshold are present
        assert any(x.denominator > 1 for x in r.eigenvalues_found)


def test_verify_dichotomy_gate_excludes_invalid_injection():
    r = verify_dichotomy(1, 0, F(5, 2), extra_parameters=[lx2_violation_n1()])
    base = verify_dichotomy(1, 0, F(5, 2))
    assert r.parameters_rejected == 1
    assert r.parameters_enumerated == base.parameters_enumerated
    assert r.passed


def test_verify_dichotomy_unknown_alpha():
    with pytest.raises(UnresolvableError):
        verify_dichotomy(3, 2, F(7, 2))


@pytest.mark.parametrize(
    "n, hodge, values",
    [(3, HodgeType(1, 0), [0, 4, 8]), (2, HodgeType(0, 0), [0, 4]), (5, HodgeType(2, 2), None)],
)
def test_verify_t1_constraints(n, hodge, values):
    r = verify_t1_constraints(n, hodge)
    assert r.passed
    if values is not None:
        assert r.eigenvalues_found == values == r.expected
    assert r.parameters_enumerated > 0
