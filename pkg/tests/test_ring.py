from hypothesis import given
from hypothesis import strategies as st

from linkhomotopy.ring import AlexPair, elements, pair_index

moduli = st.sampled_from([0, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def pairs(draw, modulus=None):
    k = draw(moduli) if modulus is None else modulus
    bound = 50 if k == 0 else k - 1
    lo = -50 if k == 0 else 0
    return AlexPair(draw(st.integers(lo, bound)), draw(st.integers(lo, bound)), k)


@st.composite
def triples(draw):
    k = draw(moduli)
    return tuple(draw(pairs(k)) for _ in range(3))


def test_eps_squares_to_zero():
    for k in (0, 2, 7):
        e = AlexPair.eps(k)
        assert e * e == AlexPair.zero(k)


def test_t_is_one_minus_eps_and_a_unit():
    t = AlexPair.t(0)
    assert t == 1 - AlexPair.eps(0)
    assert t * (1 + AlexPair.eps(0)) == AlexPair.one(0)
    assert t.is_unit()


@given(triples())
def test_ring_axioms(xyz):
    x, y, z = xyz
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@given(triples())
def test_triangle_is_alexander_operation(xyz):
    x, y, _ = xyz
    t = AlexPair.t(x.modulus)
    assert x.triangle(y) == t * x + (1 - t) * y
    assert x.triangle(y).triangle_inv(y) == x


@given(triples())
def test_triangle_quandle_axioms(xyz):
    x, y, z = xyz
    assert x.triangle(x) == x
    assert x.triangle(y).triangle(z) == x.triangle(z).triangle(y.triangle(z))


def test_elements_and_index():
    els = elements(4)
    assert len(els) == 16
    assert [pair_index(e) for e in els] == list(range(16))


def test_mixed_moduli_rejected():
    import pytest

    with pytest.raises(ValueError):
        AlexPair(1, 0, 3) + AlexPair(1, 0, 5)
