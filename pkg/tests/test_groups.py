import json
from fractions import Fraction as F

import pytest

from arthurspec.core import DomainError, inner_product, norm2
from arthurspec.groups import (
    ALPHA_CONFIG_ENV,
    External,
    Family,
    MType,
    eta,
    m_type_restriction,
    make_group,
    ramanujan_defect,
    rho_norm_gap,
    tempered_bound,
)

Q, U = Family.QUATERNIONIC, Family.UNITARY


def test_quaternionic_n1():
    g = make_group(Q, 1)
    assert g.N == 5
    assert g.rho.coords == (2, 1, 0, -1, -2)
    assert g.rho2.coords == (0,)
    assert g.eta == F(6, 13)


def test_quaternionic_n2_identity():
    g = make_group(Q, 2)
    assert g.N == 7
    assert norm2(g.rho) == 28 and norm2(g.rho2) == 2
    assert rho_norm_gap(g) == 26 == (2 * 2 + 1) ** 2 + 1


def test_unitary_n3():
    g = make_group(U, 3)
    assert g.N == 4 and g.eta == F(15, 34)
    assert g.rho is None


@pytest.mark.parametrize("family, n", [(U, 1), (Q, 0), (U, -3)])
def test_make_group_domain(family, n):
    with pytest.raises(DomainError):
        make_group(family, n)


@pytest.mark.parametrize("n", range(1, 51))
def test_rho_gap_identity(n):
    g = make_group(Q, n)
    assert inner_product(g.rho, g.rho) - inner_product(g.rho2, g.rho2) == (2 * n + 1) ** 2 + 1
    assert tempered_bound(g, 0) >= tempered_bound(g, 2 * n)


def test_eta_defect_bridge():
    for N in range(1, 201):
        assert 4 * eta(N) ** 2 == ramanujan_defect(N) == F(N * N - 1, N * N + 1) ** 2


def test_tempered_bound_known_and_external():
    g = make_group(Q, 3)
    assert tempered_bound(g, 0) == 49
    assert tempered_bound(g, 6) == 1
    assert tempered_bound(g, 2) is External
    with pytest.raises(DomainError):
        tempered_bound(g, 13)
    with pytest.raises(DomainError):
        tempered_bound(g, -1)


def test_alpha_injection_and_checks():
    g = make_group(Q, 3, {2: F(10)})
    assert tempered_bound(g, 2) == 10
    with pytest.raises(DomainError):
        make_group(Q, 3, {2: F(3)})  # below 4 for k <= 2n-2
    with pytest.raises(DomainError):
        make_group(Q, 3, {0: F(48)})  # contradicts the known value
    with pytest.raises(DomainError):
        make_group(Q, 3, {7: F(1, 2)})  # below 1


def test_alpha_from_environment(tmp_path, monkeypatch):
    cfg = tmp_path / "alpha.json"
    cfg.write_text(json.dumps({"family": "quaternionic", "n": 3, "alpha": {"1": "25/1", "2": "16"}}))
    monkeypatch.setenv(ALPHA_CONFIG_ENV, str(cfg))
    g = make_group(Q, 3)
    assert tempered_bound(g, 1) == 25 and tempered_bound(g, 2) == 16
    assert tempered_bound(make_group(Q, 2), 1) is External  # config is for n=3


@pytest.mark.parametrize(
    "p, q, expected",
    [
        (1, 1, [MType(1, 1), MType(0, 1), MType(1, 0), MType(0, 0)]),
        (0, 0, [MType(0, 0)]),
        (2, 0, [MType(2, 0), MType(1, 0)]),
    ],
)
def test_m_type_restriction(p, q, expected):
    assert m_type_restriction(p, q) == expected
