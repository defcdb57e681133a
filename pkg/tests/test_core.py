import pytest
from hypothesis import given
from hypothesis import strategies as st

from caloop.core import (
    IDENTITY,
    IDENTITY4,
    Elem4,
    Elem8,
    basis,
    left_div_coords,
    mul4_coords,
    mul_coords,
    pow_coords,
    project_coords,
)

from support import ZERO8, make_rng, random_coords

coords8 = st.tuples(*[st.integers(min_value=-10 ** 9, max_value=10 ** 9)] * 8)


def test_generator_products():
    x, y = basis(1), basis(2)
    assert tuple(x * y) == (1, 1, 0, 0, 0, 0, 0, 0)
    assert tuple(Elem8((1, 1, 0, 0, 0, 0, 0, 0)) * x) == (2, 1, -1, 0, 0, 0, 0, 0)


def test_identity_element():
    assert tuple(IDENTITY) == ZERO8
    assert IDENTITY * basis(3) == basis(3)
    assert basis(5) * IDENTITY == basis(5)
    rng = make_rng(1)
    for _ in range(50):
        a = Elem8(random_coords(rng))
        assert a * IDENTITY == a


def test_commutativity_sampled():
    rng = make_rng(2)
    for _ in range(2000):
        a, b = random_coords(rng), random_coords(rng)
        assert mul_coords(a, b) == mul_coords(b, a)


def test_left_divide_examples():
    rng = make_rng(3)
    for _ in range(100):
        a = Elem8(random_coords(rng))
        assert a.left_divide(a) == IDENTITY
    c = Elem8(random_coords(rng))
    assert IDENTITY.left_divide(c) == c


def test_left_divide_round_trip_sampled():
    rng = make_rng(4)
    for _ in range(2000):
        a, b = random_coords(rng), random_coords(rng)
        assert left_div_coords(a, mul_coords(a, b)) == b


@given(coords8, coords8)
def test_division_round_trip_large_coordinates(a, b):
    assert left_div_coords(a, mul_coords(a, b)) == b
    assert mul_coords(a, left_div_coords(a, b)) == b


def test_inverse_examples():
    assert tuple(basis(1).inverse()) == (-1, 0, 0, 0, 0, 0, 0, 0)
    assert IDENTITY.inverse() == IDENTITY
    rng = make_rng(5)
    for _ in range(500):
        a, b = Elem8(random_coords(rng)), Elem8(random_coords(rng))
        assert (a * b).inverse() == a.inverse() * b.inverse()
        assert a * a.inverse() == IDENTITY
        assert a.inverse() * a == IDENTITY


def test_pow_examples():
    assert tuple(basis(1) ** 5) == (5, 0, 0, 0, 0, 0, 0, 0)
    rng = make_rng(6)
    a = Elem8(random_coords(rng))
    assert a ** 0 == IDENTITY
    assert a ** -1 == a.inverse()
    assert a ** 1 == a


def test_negative_powers_agree_with_repeated_division():
    rng = make_rng(13)
    for _ in range(20):
        a = random_coords(rng)
        acc = ZERO8
        for n in range(1, 7):
            acc = left_div_coords(a, acc)  # divide by a once more
            assert pow_coords(a, -n) == acc


def test_pow_addition_and_composition_laws():
    rng = make_rng(7)
    for _ in range(5):
        a = random_coords(rng)
        powers = {n: pow_coords(a, n) for n in range(-8, 9)}
        for i in range(-8, 9):
            for j in range(-8, 9):
                if -8 <= i + j <= 8:
                    assert mul_coords(powers[i], powers[j]) == powers[i + j]
                if -8 <= i * j <= 8:
                    assert pow_coords(powers[i], j) == powers[i * j]


def test_translations_injective_sampled():
    rng = make_rng(8)
    a = random_coords(rng)
    seen = {}
    for _ in range(500):
        b = random_coords(rng)
        prod = mul_coords(a, b)
        assert seen.setdefault(prod, b) == b
        assert left_div_coords(a, prod) == b


def test_mul4_examples():
    assert mul4_coords((1, 0, 0, 0), (0, 1, 0, 0)) == (1, 1, 0, 0)
    assert mul4_coords((1, 1, 0, 0), (1, 0, 0, 0)) == (2, 1, -1, 0)
    rng = make_rng(9)
    for _ in range(200):
        a = tuple(rng.randint(-5, 5) for _ in range(4))
        assert mul4_coords(a, (0, 0, 0, 0)) == a
        b = tuple(rng.randint(-5, 5) for _ in range(4))
        assert mul4_coords(a, b) == mul4_coords(b, a)


def test_projection_is_homomorphism():
    assert project_coords((2, 1, -1, 0, 7, 0, 0, 3)) == (2, 1, -1, 0)
    assert Elem8(ZERO8).project() == IDENTITY4
    rng = make_rng(10)
    for _ in range(2000):
        a, b = random_coords(rng), random_coords(rng)
        assert project_coords(mul_coords(a, b)) == mul4_coords(
            project_coords(a), project_coords(b)
        )


def test_projection_surjective_on_samples():
    rng = make_rng(11)
    for _ in range(100):
        four = tuple(rng.randint(-5, 5) for _ in range(4))
        assert project_coords(four + (0, 0, 0, 0)) == four


def test_elem_validation():
    with pytest.raises(ValueError):
        Elem8((1, 2, 3))
    with pytest.raises(ValueError):
        Elem8((1.5, 0, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        Elem4((1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        basis(9)


def test_elem_api_mirrors_coords_kernel():
    rng = make_rng(12)
    a, b = random_coords(rng), random_coords(rng)
    ea, eb = Elem8(a), Elem8(b)
    assert tuple(ea * eb) == mul_coords(a, b)
    assert tuple(~ea) == left_div_coords(a, ZERO8)
    assert ea.coords == a
    assert (Elem4(a[:4]) * Elem4(b[:4])).coords == mul4_coords(a[:4], b[:4])
