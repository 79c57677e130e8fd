import pytest
from hypothesis import given, strategies as st

from milnorzeta.divring import LambdaDivisor, ZetaForm, milnor_from_zeta
from milnorzeta.errors import InputError
from milnorzeta.isofam import (IsolationInput, compose_almost_zeta, isolation_invariants,
                               local_node_zeta, smooth_reference_zeta)
from milnorzeta.varch import brieskorn_zeta_oracle

L = LambdaDivisor.lam


@pytest.mark.parametrize("d, coef", [(3, -3), (4, -7), (6, -21)])
def test_smooth_reference(d, coef):
    assert smooth_reference_zeta(d).divisor == L(d, coef)


@pytest.mark.parametrize("d, m, period", [(4, 3, 7), (4, 1, 5), (6, 1, 7)])
def test_local_node(d, m, period):
    assert local_node_zeta(d, m).divisor == L(period, -1)


@pytest.mark.parametrize("m", range(1, 7))
def test_compose_examples(m):
    base = ZetaForm(L(4, -7))
    node = ZetaForm(L(4 + m, -1))
    assert compose_almost_zeta(base, [(4, 3)], [node] * 3, 3).divisor == L(4, -4) + L(4 + m, -3)
    assert compose_almost_zeta(base, [(4, 4)], [node] * 4, 3).divisor == L(4, -3) + L(4 + m, -4)
    assert compose_almost_zeta(base, [], [], 3) == base


@pytest.mark.parametrize("m", range(1, 7))
def test_quartic_families(m):
    r3 = isolation_invariants(IsolationInput(4, 3, m))
    assert r3.zeta.divisor == L(4, -4) + L(4 + m, -3)
    assert (r3.mu, r3.mu_star) == (27 + 3 * m, (27 + 3 * m, 9, 3))
    r4 = isolation_invariants(IsolationInput(4, 4, m))
    assert r4.zeta.divisor == L(4, -3) + L(4 + m, -4)
    assert (r4.mu, r4.mu_star) == (27 + 4 * m, (27 + 4 * m, 9, 3))


def test_sextic_nine_nodes():
    r = isolation_invariants(IsolationInput(6, 9, 1))
    assert r.zeta.divisor == L(6, -12) + L(7, -9)
    assert (r.mu, r.mu_star) == (134, (134, 25, 5))


@given(st.integers(3, 8), st.integers(0, 10), st.integers(1, 6))
def test_degree_and_multiplicity(d, k, m):
    r = isolation_invariants(IsolationInput(d, k, m))
    assert milnor_from_zeta(r.zeta, 3) == (d - 1) ** 3 + k * m
    pieces = compose_almost_zeta(smooth_reference_zeta(d), [(d, k)] if k else [],
                                 [local_node_zeta(d, m)] * k, 3)
    assert pieces == r.zeta
    if k < d * d - 3 * d + 3:
        assert r.zeta_multiplicity == (d, -(d * d - 3 * d + 3 - k))


@pytest.mark.parametrize("d", range(3, 9))
def test_smooth_case_is_brieskorn(d):
    r = isolation_invariants(IsolationInput(d, 0, 1))
    assert r.zeta == smooth_reference_zeta(d)
    assert r.mu == (d - 1) ** 3
    assert r.zeta.to_reduced() == brieskorn_zeta_oracle((d, d, d))


@pytest.mark.parametrize("args", [(2, 0, 1), (4, -1, 1), (4, 3, 0), (4, 3, 1, "A2")])
def test_invalid_inputs(args):
    with pytest.raises(InputError):
        IsolationInput(*args)


def test_report_json():
    data = isolation_invariants(IsolationInput(4, 3, 3)).to_json()
    assert data["rendered"] == "(1-t^4)^-4 (1-t^7)^-3"
    assert data["mu_star"] == [36, 9, 3]
    assert ZetaForm.from_json(data["zeta"]).divisor == L(4, -4) + L(7, -3)
