from __future__ import annotations

import pytest

from symgraph import gf

from oracles import poly_has_root


def test_field_make_rejects_bad_p():
    with pytest.raises(ValueError):
        gf.Field(2, 1)
    with pytest.raises(ValueError):
        gf.Field(9, 1)
    with pytest.raises(ValueError):
        gf.Field(7, 0)


def test_modulus_gf9():
    # x^2 + 1 has no root mod 3: 0^2+1=1, 1^2+1=2, 2^2+1=2
    f = gf.field_make(3, 2)
    assert f.modulus == (1, 0, 1)
    assert not poly_has_root([1, 0, 1], 3)


def test_modulus_gf49_irreducible_by_root_oracle():
    f = gf.field_make(7, 2)
    assert f.modulus[-1] == 1
    assert not poly_has_root(list(f.modulus), 7)


def test_prime_field_is_plain_residues():
    f = gf.field_make(13, 1)
    assert [e for e in f.elements()] == [(i,) for i in range(13)]
    assert f.add((6,), (9,)) == (2,)


def test_gf9_x_squared_is_minus_one():
    f = gf.field_make(3, 2)
    assert f.mul((0, 1), (0, 1)) == (2, 0)


def test_gf7_inverse():
    f = gf.field_make(7, 1)
    assert f.inv((3,)) == (5,)
    with pytest.raises(ZeroDivisionError):
        f.inv((0,))


def test_field_axioms_sampled():
    for (p, r) in ((5, 1), (3, 2), (7, 2)):
        f = gf.field_make(p, r)
        elems = f.elements()
        for a in elems[:6]:
            for b in elems[:6]:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                if a != f.zero:
                    assert f.mul(a, f.inv(a)) == f.one


def test_squares_gf5():
    f = gf.field_make(5, 1)
    assert {f.index(e) for e in f.squares()} == {1, 4}


def test_squares_gf13():
    f = gf.field_make(13, 1)
    assert {f.index(e) for e in f.squares()} == {1, 3, 4, 9, 10, 12}


def test_squares_gf7():
    f = gf.field_make(7, 1)
    assert {f.index(e) for e in f.squares()} == {1, 2, 4}


@pytest.mark.parametrize("q", [5, 7, 9, 13, 17, 49])
def test_squares_size_and_euler_criterion(q):
    f = gf.field_for_order(q)
    sq = f.squares()
    assert len(sq) == (q - 1) // 2
    half = (q - 1) // 2
    for e in f.elements():
        if e == f.zero:
            continue
        assert (e in sq) == (f.pow(e, half) == f.one)


@pytest.mark.parametrize("q", [5, 7, 9, 13, 17, 49])
def test_minus_one_square_iff_q_1_mod_4(q):
    f = gf.field_for_order(q)
    assert (f.neg(f.one) in f.squares()) == (q % 4 == 1)


def test_primitive_roots():
    assert gf.field_make(7, 1).primitive_root() == (3,)
    assert gf.field_make(5, 1).primitive_root() == (2,)
    # exhaustive order check over the 8 candidates of GF(9)
    f9 = gf.field_make(3, 2)
    w = f9.primitive_root()
    assert w == (1, 1)
    assert f9.mult_order(w) == 8
    earlier = [e for e in f9.elements() if e != f9.zero and f9.index(e) < f9.index(w)]
    assert all(f9.mult_order(e) < 8 for e in earlier)


def test_factor_prime_power():
    assert gf.factor_prime_power(49) == (7, 2)
    assert gf.factor_prime_power(13) == (13, 1)
    with pytest.raises(ValueError):
        gf.factor_prime_power(12)


def test_index_element_roundtrip():
    f = gf.field_make(7, 2)
    for i in range(f.q):
        assert f.index(f.element(i)) == i
