import random

import pytest
from hypothesis import given, strategies as st

from qtb.algebra import AlgElement, d, d1, d2, e, f, g, h
from qtb.bialgebra import (DEFAULT_PROBES, RMatrix, c_of_r, check_cybe, cojacobi_defect, cojacobi_gap,
                           compatibility_defect, delta_r, mybe_witness)
from qtb.sampling import rand_basis, rand_skew, rand_tensor2
from qtb.tensor import Tensor2Element, Tensor3Element, act3, is_skew, otimes

T = otimes
seeds = st.integers(0, 2 ** 32)
E0, F0 = e(0, 0), f(0, 0)


def wedge(x, y):
    return T(x, y) - T(y, x)


R_D1D2, R_DE, R_EF = wedge(d1, d2), wedge(d, E0), wedge(E0, F0)
SIX_TERMS = (T(d, E0, F0) - T(d, F0, E0) - T(E0, d, F0) + T(F0, d, E0) + T(E0, F0, d) - T(F0, E0, d))


def test_delta_examples():
    x = e(1, 2)
    expected = -T(x, d2) - T(d1, x).scale(2) + T(x, d1).scale(2) + T(d2, x)
    assert delta_r(R_D1D2, x) == expected
    assert delta_r(R_EF, AlgElement.zero()).is_zero()
    assert delta_r(Tensor2Element.zero(), x).is_zero()


def test_rmatrix_records_skewness():
    assert RMatrix(R_EF).skew
    assert not RMatrix(T(d, d)).skew
    assert delta_r(RMatrix(R_EF), E0) == delta_r(R_EF, E0)


def test_c_of_r_examples():
    assert c_of_r(R_D1D2).is_zero()
    assert c_of_r(R_DE).is_zero()
    assert c_of_r(R_EF) == SIX_TERMS


def test_check_cybe_examples():
    assert check_cybe(R_D1D2)
    assert check_cybe(R_DE)
    assert not check_cybe(R_EF)


def test_cojacobi_examples():
    for x in DEFAULT_PROBES:
        assert cojacobi_defect(R_DE, x).is_zero()
    assert cojacobi_defect(R_EF, AlgElement.zero()).is_zero()
    assert act3(d, c_of_r(R_EF)).is_zero()
    assert cojacobi_defect(R_EF, d).is_zero()


@given(seeds)
def test_cojacobi_equals_action_on_c(seed):
    rng = random.Random(seed)
    r = rand_skew(rng, 2)
    for x in DEFAULT_PROBES:
        assert cojacobi_gap(r, x).is_zero()


def test_compatibility_examples():
    assert compatibility_defect(R_EF, e(1, 1), e(1, 1)).is_zero()
    assert compatibility_defect(R_D1D2, E0, F0).is_zero()


@given(seeds)
def test_compatibility_cocycle(seed):
    rng = random.Random(seed)
    r = rand_tensor2(rng, 2)
    x, y = (AlgElement.from_key(rand_basis(rng, 2)) for _ in range(2))
    assert compatibility_defect(r, x, y).is_zero()


@given(seeds)
def test_image_axiom(seed):
    r = rand_skew(random.Random(seed), 2)
    for x in DEFAULT_PROBES:
        assert is_skew(delta_r(r, x))


def test_mybe_witness():
    assert mybe_witness(R_DE) is None
    probes = [d, d1, d2, E0, F0, g(0, 1), h(1, 0)]
    w = mybe_witness(R_EF, probes)
    assert w is not None
    assert any(w == p for p in (E0, F0, g(0, 1), h(1, 0)))
    for p in (d, d1, d2):
        assert act3(p, c_of_r(R_EF)).is_zero()
    with pytest.raises(ValueError):
        mybe_witness(R_EF, [])
