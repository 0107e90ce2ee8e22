"""Field construction, arithmetic, root finding and the field axioms."""

import pytest

from triplelines.errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonPrimeCharacteristic,
    ReducibleModulus,
    ZeroPolynomial,
)
from triplelines.field import (
    arith,
    cube_roots_of_unity,
    default_modulus,
    enumerate_elements,
    make_field,
    parse_field,
    roots_of,
)

SMALL_ORDERS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


def all_fields():
    return [make_field(p, k) for p, k in SMALL_ORDERS]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_make_prime_field():
    F = make_field(2, 1)
    assert F.order == 2
    assert [e.index for e in F.elements()] == [0, 1]


def test_make_gf4_default_modulus():
    F = make_field(2, 2)
    assert F.modulus == (1, 1, 1)  # x^2+x+1, the unique irreducible quadratic
    assert F.order == 4


def test_nonprime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4, 1)
    with pytest.raises(NonPrimeCharacteristic):
        make_field(1, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])  # x^2+1 = (x+1)^2 over GF(2)


def test_modulus_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        make_field(2, 2, [1, 1, 1, 1])


def test_degree_cap():
    with pytest.raises(DegreeMismatch):
        make_field(2, 5)


def test_default_modulus_is_lexicographically_smallest():
    # brute-force oracle: scan coefficient tuples low-degree-first and take
    # the first with no root/factor, via plain integer polynomial division
    def divides(f, g, p):
        r = list(g)
        while len(r) >= len(f):
            if r[-1] % p:
                lead = r[-1] * pow(f[-1], p - 2, p) % p
                for i in range(len(f)):
                    r[len(r) - len(f) + i] = (r[len(r) - len(f) + i] - lead * f[i]) % p
            del r[-1]
        return all(c % p == 0 for c in r)

    def monics(deg, p):
        for n in range(p ** deg):
            coeffs, t = [], n
            for _ in range(deg):
                coeffs.append(t % p)
                t //= p
            yield coeffs + [1]

    for p, k in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        expected = None
        for cand in monics(k, p):
            if not any(divides(f, cand, p)
                       for d in range(1, k // 2 + 1) for f in monics(d, p)):
                expected = tuple(cand)
                break
        assert default_modulus(p, k) == expected


def test_parse_field_notation():
    assert parse_field("5").order == 5
    assert parse_field("2^2").order == 4
    assert parse_field("2^2", [1, 1, 1]).modulus == (1, 1, 1)


# ---------------------------------------------------------------------------
# arithmetic operations
# ---------------------------------------------------------------------------

def test_gf4_multiplication_table_facts():
    F = make_field(2, 2)
    w = F.element([0, 1])
    w2 = w * w
    assert w2 == F.element([1, 1])
    assert w * w2 == F.one
    assert arith(w, w, "mul") == w2


def test_prime_field_facts():
    F5, F7 = make_field(5), make_field(7)
    assert arith(F5(2), None, "inv") == F5(3)
    assert F7(3) + F7(5) == F7(1)
    assert arith(F7(3), F7(5), "add") == F7(1)
    assert F5(2) - F5(4) == F5(3)
    assert F5(3) / F5(2) == F5(4)


def test_division_by_zero():
    F = make_field(5)
    with pytest.raises(DivisionByZero):
        F(1) / F(0)
    with pytest.raises(DivisionByZero):
        F(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        make_field(5)(1) + make_field(7)(1)


def test_element_canonical_form():
    F = make_field(5)
    assert F(7) == F(2)
    assert F(-1) == F(4)
    F9 = make_field(3, 2)
    assert F9.element([4, 5]) == F9.element([1, 2])


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def test_roots_examples():
    F4 = make_field(2, 2)
    w = F4.element([0, 1])
    assert roots_of([1, 1, 1], F4) == [w, w * w]
    assert roots_of([1, 1, 1], make_field(2)) == []
    assert [r.index for r in roots_of([-1, 1, 1], make_field(11))] == [3, 7]
    assert roots_of([-1, 1, 1], make_field(7)) == []


def test_roots_cross_check_against_evaluation():
    # roots_of IS the brute force; confirm both membership directions
    for F in all_fields():
        poly = [1, 1, 1]
        roots = set(roots_of(poly, F))
        for x in F.elements():
            value = F.from_int(1) + x + x * x
            assert (x in roots) == value.is_zero()


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        roots_of([7, 14], make_field(7))


def test_cube_roots_of_unity():
    assert [r.index for r in cube_roots_of_unity(make_field(2))] == [1]
    assert len(cube_roots_of_unity(make_field(2, 2))) == 3
    assert [r.index for r in cube_roots_of_unity(make_field(7))] == [1, 2, 4]
    assert len(cube_roots_of_unity(make_field(2, 3))) == 1  # 3 does not divide 7


# ---------------------------------------------------------------------------
# enumeration and axioms
# ---------------------------------------------------------------------------

def test_enumerate_sizes_and_determinism():
    for F in all_fields():
        elems = enumerate_elements(F)
        assert len(elems) == F.order == len(set(elems))
        assert elems == enumerate_elements(F)
        assert elems[0] == F.zero and elems[1] == F.one


@pytest.mark.parametrize("p,k", SMALL_ORDERS)
def test_field_axioms(p, k):
    F = make_field(p, k)
    elems = F.elements()
    for a in elems:
        assert a + F.zero == a
        assert a * F.one == a
        assert a + (-a) == F.zero
        if not a.is_zero():
            assert a * a.inverse() == F.one
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
    # associativity and distributivity over all triples
    for a in elems:
        for b in elems:
            for c in elems:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("p,k", SMALL_ORDERS)
def test_multiplicative_order_divides_q_minus_1(p, k):
    F = make_field(p, k)
    for x in F.elements():
        if not x.is_zero():
            assert x ** (F.order - 1) == F.one


@pytest.mark.parametrize("p,k", SMALL_ORDERS)
def test_frobenius_is_additive(p, k):
    F = make_field(p, k)
    for a in F.elements():
        for b in F.elements():
            assert (a + b) ** p == a ** p + b ** p
