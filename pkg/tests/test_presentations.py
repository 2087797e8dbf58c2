import pytest
from hypothesis import given, settings, strategies as st

from contrakit.errors import ValidationError
from contrakit.ideals import Ideal, ideal_equal
from contrakit.presentations import (
    AlgebraMap,
    FPAlgebra,
    eigen_split,
    involutions_commute,
    map_compose,
    map_is_iso,
    tensor,
    tensor_involution,
    validate_involution,
)

from conftest import SL2_THETA


def test_validate_involution_examples(sl2):
    A = FPAlgebra("QQ", ["w"])
    validate_involution(A, {"w": "-w"})
    validate_involution(sl2, SL2_THETA)
    with pytest.raises(ValidationError, match="squared"):
        validate_involution(A, {"w": "w + 1"})


def test_involution_must_preserve_relations():
    A = FPAlgebra("QQ", ["x", "y"], ["x^2 - y"])
    with pytest.raises(ValidationError, match="not preserved"):
        validate_involution(A, {"x": "y", "y": "x"})


def comps(split):
    return [str(p) for _, p in split.plus], [str(p) for _, p in split.minus]


def test_eigen_split_examples(sl2, sl2_theta):
    A = FPAlgebra("QQ", ["w"])
    assert comps(eigen_split(A, validate_involution(A, {"w": "-w"}))) == ([], ["w"])
    P = FPAlgebra("QQ", ["x", "y"])
    assert comps(eigen_split(P, validate_involution(P, {"x": "y", "y": "x"}))) == (
        ["1/2*x + 1/2*y"],
        ["1/2*x - 1/2*y"],
    )
    plus, minus = comps(eigen_split(sl2, sl2_theta))
    assert plus == ["1/2*a + 1/2*d", "1/2*b - 1/2*c"]
    assert minus == ["1/2*a - 1/2*d", "1/2*b + 1/2*c"]


def test_eigen_split_reconstruction_and_eigenvalues(sl2, sl2_theta):
    S = eigen_split(sl2, sl2_theta)
    for _, p in S.plus:
        assert sl2.equiv(sl2_theta(p), p)
    for _, m in S.minus:
        assert sl2.equiv(sl2_theta(m), -m)
    for v in sl2.vars:
        rec = S.reconstruct(v, [p for _, p in S.plus], [m for _, m in S.minus])
        assert sl2.equiv(rec, sl2.ring.var(v))


def test_eigen_split_custom_names(sl2, sl2_theta):
    S = eigen_split(sl2, sl2_theta, ["p1", "p2"], ["M1", "M2"])
    assert S.plus_names == ["p1", "p2"] and S.minus_names == ["M1", "M2"]
    with pytest.raises(ValidationError):
        eigen_split(sl2, sl2_theta, ["p1"], ["M1", "M2"])


def test_tensor_examples():
    X, Y = FPAlgebra("QQ", ["x"]), FPAlgebra("QQ", ["y"])
    T = tensor(X, Y)
    assert T.vars == ["x", "y"] and T.relations == []
    W = FPAlgebra("QQ", ["w"], ["w^2 - 1"])
    V = FPAlgebra("QQ", ["v"])
    T = tensor(W, V)
    assert ideal_equal(T.ideal, Ideal(T.ring, ["w^2 - 1"]))
    th = tensor_involution(T, validate_involution(W, {"w": "-w"}), validate_involution(V, {"v": "v"}))
    assert th.to_json() == {"w": "-w", "v": "v"}


def test_tensor_with_clashing_names_uses_suffixes():
    A = FPAlgebra("QQ", ["w"], ["w^2 - 1"])
    T = tensor(A, A)
    assert T.vars == ["w__1", "w__2"]
    assert ideal_equal(T.ideal, Ideal(T.ring, ["w__1^2 - 1", "w__2^2 - 1"]))


def test_tensor_symmetric_and_associative_up_to_renaming():
    A = FPAlgebra("QQ", ["a"], ["a^2 - 2"])
    B = FPAlgebra("QQ", ["b"], ["b^3"])
    C = FPAlgebra("QQ", ["c"], ["c^2 + c"])
    AB, BA = tensor(A, B), tensor(B, A)
    assert ideal_equal(AB.ideal, BA.ideal.embed(AB.ring))
    L, R = tensor(tensor(A, B), C), tensor(A, tensor(B, C))
    assert ideal_equal(L.ideal, R.ideal.embed(L.ring))


def test_map_examples():
    V, W = FPAlgebra("QQ", ["v"]), FPAlgebra("QQ", ["w"])
    idv = V.identity()
    assert map_compose(idv, idv).is_identity()
    f, g = AlgebraMap(V, W, {"v": "w"}), AlgebraMap(W, V, {"w": "v"})
    assert map_is_iso(f, g)
    f2 = AlgebraMap(V, W, {"v": "w^2"})
    assert not map_is_iso(f2, g)


def test_ill_defined_map():
    A = FPAlgebra("QQ", ["x"], ["x^2"])
    B = FPAlgebra("QQ", ["y"])
    f = AlgebraMap(A, B, {"x": "y"})
    assert not f.is_well_defined()
    assert [str(r) for r in f.relation_failures()] == ["x^2"]


def test_commuting_involutions(sl2):
    th = validate_involution(sl2, SL2_THETA)
    eta = validate_involution(sl2, {"a": "a", "b": "-b", "c": "-c", "d": "d"})
    assert involutions_commute(th, eta)
    swap = validate_involution(sl2, {"a": "d", "d": "a", "b": "b", "c": "c"})
    flip = validate_involution(sl2, {"a": "a", "d": "d", "b": "c", "c": "b"})
    assert involutions_commute(swap, flip)


def test_characteristic_two_rejected_for_algebras():
    from contrakit.errors import FieldError

    with pytest.raises(FieldError):
        FPAlgebra("GF(2)", ["x"])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3)), min_size=1, max_size=4))
def test_random_swap_invariant_relation(terms):
    # symmetrize a random polynomial so that the swap is a valid involution
    P = FPAlgebra("QQ", ["x", "y"])
    f = sum((P.ring.monomial((i, j), c) for i, j, c in terms), P.ring.zero)
    sym = f + f.substitute({"x": P.ring.var("y"), "y": P.ring.var("x")})
    A = FPAlgebra("QQ", ["x", "y"], [sym])
    th = validate_involution(A, {"x": "y", "y": "x"})
    S = eigen_split(A, th)
    for v in A.vars:
        rec = S.reconstruct(v, [p for _, p in S.plus], [m for _, m in S.minus])
        assert A.equiv(rec, A.ring.var(v))
