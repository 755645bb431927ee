import random

from hypothesis import given, strategies as st

from qtb.algebra import AlgElement, bracket, d, d1, e, f, g, h
from qtb.sampling import rand_element, rand_tensor2, rand_tensor3
from qtb.tensor import (Tensor2Element, Tensor3Element, act2, act3, cyclic, homogeneous_parts, is_skew, otimes,
                        skew_part, tensor_degree, twist)

T = otimes
seeds = st.integers(0, 2 ** 32)
E0, F0 = e(0, 0), f(0, 0)


def test_act2_examples():
    assert act2(d, T(e(1, 2), g(-1, -2))) == T(e(1, 2), g(-1, -2)).scale(2)
    assert act2(E0, T(F0, E0)) == T(d, E0)
    assert act2(e(3, 1), Tensor2Element.zero()).is_zero()
    assert act2(E0, T(h(1, 1), g(-1, -1))) == T(e(1, 1), g(-1, -1)) - T(h(1, 1), e(-1, -1))


def test_act3_examples():
    assert act3(d, T(E0, E0, F0)) == T(E0, E0, F0).scale(2)
    assert act3(g(1, 1), Tensor3Element.zero()).is_zero()
    assert act3(d1, T(e(1, 0), f(2, 0), d)) == T(e(1, 0), f(2, 0), d).scale(3)


def test_twist_and_cyclic():
    assert twist(T(E0, F0)) == T(F0, E0)
    assert twist(T(d, d)) == T(d, d)
    a, b, c = e(1, 0), f(0, 1), d
    assert cyclic(T(a, b, c)) == T(b, c, a)
    assert cyclic(T(d, d, d)) == T(d, d, d)


def test_skew_examples():
    assert is_skew(T(E0, F0) - T(F0, E0))
    assert not is_skew(T(d, d))
    assert is_skew(Tensor2Element.zero())
    assert skew_part(T(d, d)).is_zero()
    assert skew_part(T(E0, F0)) == (T(E0, F0) - T(F0, E0)).scale(1) / 2
    r = T(E0, F0) - T(F0, E0)
    assert skew_part(r) == r


@given(seeds)
def test_module_axiom(seed):
    rng = random.Random(seed)
    x, y = rand_element(rng, 2, denominators=True), rand_element(rng, 2)
    t2, t3 = rand_tensor2(rng, 2), rand_tensor3(rng, 2)
    assert act2(bracket(x, y), t2) == act2(x, act2(y, t2)) - act2(y, act2(x, t2))
    assert act3(bracket(x, y), t3) == act3(x, act3(y, t3)) - act3(y, act3(x, t3))


@given(seeds)
def test_twist_is_equivariant_involution(seed):
    rng = random.Random(seed)
    x, t = rand_element(rng, 3), rand_tensor2(rng, 3)
    assert twist(act2(x, t)) == act2(x, twist(t))
    assert twist(twist(t)) == t


@given(seeds)
def test_cyclic_has_order_three(seed):
    t = rand_tensor3(random.Random(seed), 3)
    assert cyclic(cyclic(cyclic(t))) == t


@given(seeds)
def test_skew_part_is_a_projection(seed):
    t = rand_tensor2(random.Random(seed), 3)
    s = skew_part(t)
    assert is_skew(s)
    assert skew_part(s) == s


@given(seeds)
def test_degree_additivity(seed):
    rng = random.Random(seed)
    x = AlgElement.from_key(next(iter(rand_element(rng, 3, terms=1).keys())))
    (m,) = x.degrees()
    t = rand_tensor2(rng, 3, terms=5)
    for n, part in homogeneous_parts(t).items():
        out = act2(x, part)
        assert all(tensor_degree(k) == (m[0] + n[0], m[1] + n[1]) for k in out.keys())
    assert sum(homogeneous_parts(t).values(), Tensor2Element.zero()) == t
