import pytest

from stargraph.galois import DivisionByZero, EvenOrder, FieldElement, FieldError, field, prime_power


@pytest.mark.parametrize("q, pn", [(2, (2, 1)), (9, (3, 2)), (125, (5, 3)), (12, None), (1, None)])
def test_prime_power(q, pn):
    assert prime_power(q) == pn


@pytest.mark.parametrize("q, xi", [(2, 1), (4, 2), (5, 2), (7, 3), (9, 4), (13, 2)])
def test_least_primitive_element(q, xi):
    # frozen from a brute-force order search over the integer encoding
    f = field(q)
    assert f.primitive_element() == xi
    assert f.order(xi) == q - 1


def test_quadratic_residues_of_13():
    assert field(13).quadratic_residues() == frozenset({1, 3, 4, 9, 10, 12})


def test_even_order_has_no_residue_set():
    with pytest.raises(EvenOrder):
        field(8).quadratic_residues()


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27, 49])
def test_field_axioms(q):
    f = field(q)
    for a in range(q):
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in range(q):
            assert f.mul(a, b) == f.mul(b, a)
            for c in (0, 1, q - 1):
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_characteristic_two_addition_is_xor():
    f = field(8)
    assert all(f.add(a, b) == a ^ b for a in range(8) for b in range(8))


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field(5).inv(0)


def test_bad_order():
    with pytest.raises(FieldError):
        field(6)


def test_element_wrapper():
    f = field(9)
    a, b = FieldElement(f, 4), FieldElement(f, 7)
    assert int(a * b) == f.mul(4, 7)
    assert int(a + b) == f.add(4, 7)
    assert a * a.inv() == FieldElement(f, 1)
