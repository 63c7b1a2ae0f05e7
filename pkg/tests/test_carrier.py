import pytest

from neutra import Matrix, NeutroNumber, Poly, Scalar, Tuple, Z, Zn, degree, elem_add, scalar_act, zero_like
from neutra.carrier import canonical
from neutra.errors import ShapeMismatch


def n(a=0, b=0, ring=Z):
    return NeutroNumber(ring, a, b)


def test_tuple_addition():
    assert elem_add(Tuple([n(0, 1), n(2)]), Tuple([n(0, 2), n(1)])) == Tuple([n(0, 3), n(3)])


def test_matrix_addition():
    a = Matrix([[n(0, 1), n()], [n(), n(0, 1)]])
    b = Matrix([[n(0, 2), n()], [n(), n(0, 2)]])
    assert elem_add(a, b) == Matrix([[n(0, 3), n()], [n(), n(0, 3)]])


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        elem_add(Tuple([n(0, 1), n(0, 1)]), Tuple([n(0, 1), n(0, 1), n(0, 1)]))
    with pytest.raises(ShapeMismatch):
        elem_add(Tuple([n(1), n(1)]), Matrix([[n(1), n(1)]]))


def test_scalar_action():
    R = Zn(12)
    x = Tuple([n(0, 2, R), n(4, 0, R)], R)
    assert scalar_act(n(3, 0, R), x) == Tuple([n(0, 6, R), n(0, 0, R)], R)
    R = Zn(28)
    assert scalar_act(n(0, 1, R), Scalar(n(0, 4, R))) == Scalar(n(0, 4, R))
    for x in (Scalar(n(5, 2)), Tuple([n(1), n(0, 3)]), Poly([n(2), n(0, 1)], Z)):
        assert scalar_act(n(), x) == zero_like(x)


def test_zero_like():
    assert zero_like(Tuple([n(0, 1), n(2, 1)])) == Tuple([n(), n()])
    assert zero_like(Matrix([[n(1), n(2)], [n(3), n(4)]])) == Matrix([[n(), n()], [n(), n()]])
    assert zero_like(Poly([n(2), n(), n(), n(0, 1)], Z)).is_zero()


def test_degree():
    assert degree(Poly([n(2), n(), n(), n(0, 1)], Z)) == 3
    assert degree(Poly([n(0, 5)], Z)) == 0
    assert degree(Poly([], Z)) is None


def test_polynomial_trailing_zeros_trimmed():
    assert Poly([n(1), n(0, 1), n(), n()], Z) == Poly([n(1), n(0, 1)], Z)


def test_canonical_order_and_dedup():
    xs = [Scalar(n(2)), Scalar(n(0, 1)), Scalar(n(2)), Tuple([n(1), n(1)])]
    out = canonical(xs)
    assert len(out) == 3
    assert out == canonical(reversed(xs))


def test_str_forms():
    assert str(Tuple([n(0, 1), n(2, -1)])) == "(I, 2-I)"
    assert str(Matrix([[n(1), n()], [n(), n(0, 1)]])) == "[[1, 0], [0, I]]"
