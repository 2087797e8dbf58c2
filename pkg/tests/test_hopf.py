import pytest

from contrakit.contraction import contract, identity_contraction
from contrakit.errors import ValidationError
from contrakit.hopf import (
    HopfData,
    cartan_motion_check,
    contract_hopf,
    contracted_axioms_check,
    determinant,
    sl2n_embedding_check,
    unit_fiber_hopf_check,
    validate_hopf,
)
from contrakit.poly import PolyRing
from contrakit.presentations import FPAlgebra, validate_involution

from conftest import SL2_THETA

GA = dict(comul={"w": "w__1 + w__2"}, counit={"w": "0"}, antipode={"w": "-w"})


@pytest.fixture
def ga():
    return HopfData(FPAlgebra("QQ", ["w"]), **GA)


@pytest.fixture
def sl2_ch(sl2_hopf, sl2_theta, sl2_contraction):
    return contract_hopf(sl2_hopf, sl2_theta, C=sl2_contraction)


def test_validate_examples(sl2_hopf, ga):
    assert validate_hopf(sl2_hopf).ok
    assert validate_hopf(ga).ok
    broken = HopfData(FPAlgebra("QQ", ["w"]), GA["comul"], GA["counit"], {"w": "w"})
    v = validate_hopf(broken)
    assert not v.ok and ["w", "antipode"] in [list(f) for f in v.details["failures"]]
    with pytest.raises(ValidationError, match="antipode"):
        validate_hopf(broken, strict=True)


def test_broken_coassociativity():
    H = HopfData(FPAlgebra("QQ", ["w"]), {"w": "w__1 + w__2 + w__1*w__2^2"}, {"w": "0"}, {"w": "-w"})
    axioms = {f[1] for f in validate_hopf(H).details["failures"]}
    assert "coassociativity" in axioms


def sl2_delta_p1_by_substitution():
    """(Delta(a) + Delta(d))/2 with a = p1 + s*M1 etc. in both copies, then s^2 -> t."""
    names = ["s", "t"] + [f"{g}__{k}" for k in (1, 2) for g in ("p1", "p2", "M1", "M2")]
    R = PolyRing("QQ", names)
    s = R.var("s")

    def mats(k):
        p1, p2, M1, M2 = (R.var(f"{g}__{k}") for g in ("p1", "p2", "M1", "M2"))
        return p1 + s * M1, p2 + s * M2, s * M2 - p2, p1 - s * M1

    a1, b1, c1, d1 = mats(1)
    a2, b2, c2, d2 = mats(2)
    da = a1 * a2 + b1 * c2
    dd = c1 * b2 + d1 * d2
    half = (da + dd) * R.field(1) / R.field(2)
    out = R.zero
    for e, c in half.terms.items():
        assert e[0] % 2 == 0
        out = out + R.monomial((0, e[1] + e[0] // 2) + e[2:], c)
    return out


def test_sl2_comultiplication(sl2_ch):
    R2 = sl2_ch.T2.ring
    got = sl2_ch.comul["p1"]
    literal = R2("p1__1*p1__2 - p2__1*p2__2 + t*(M1__1*M1__2 + M2__1*M2__2)")
    assert sl2_ch.T2.ideal.contains(got - literal)
    assert sl2_ch.T2.ideal.contains(got - sl2_delta_p1_by_substitution().embed(R2))


def test_sl2_counit_and_antipode(sl2_ch):
    assert {g: str(c) for g, c in sl2_ch.counit.items()} == {"p1": "1", "p2": "0", "M1": "0", "M2": "0"}
    assert {g: str(c) for g, c in sl2_ch.antipode.items()} == {"p1": "p1", "p2": "-p2", "M1": "-M1", "M2": "-M2"}


def test_contracted_axioms(sl2_ch):
    v = contracted_axioms_check(sl2_ch)
    assert v.ok


def test_antipode_involutive_and_counit_compatible(sl2_ch):
    A = sl2_ch.A
    for g in sl2_ch.gens:
        assert A.equiv(sl2_ch.S(sl2_ch.S(g)), A.ring.var(g))
        assert sl2_ch.eps(sl2_ch.S(g)) == sl2_ch.eps(g)


def test_additive_group(ga):
    th = validate_involution(ga.A, {"w": "-w"})
    C = contract(ga.A, th, minus_names=["v"])
    CH = contract_hopf(ga, th, C=C)
    assert str(CH.comul["v"]) == "v__1 + v__2"
    assert str(CH.counit["v"]) == "0"
    assert str(CH.antipode["v"]) == "-v"
    assert cartan_motion_check(ga, CH).ok


def test_cartan_sl2(sl2_hopf, sl2_ch):
    v = cartan_motion_check(sl2_hopf, sl2_ch)
    assert v.ok


def test_cartan_sl2_t0_comultiplication(sl2_ch):
    R2 = sl2_ch.T2.ring
    at0 = {n: R2.var(n) for n in R2.names}
    at0["t"] = R2.zero
    d_p1 = sl2_ch.comul["p1"].substitute(at0, R2)
    assert d_p1 == R2("p1__1*p1__2 - p2__1*p2__2")
    d_m1 = sl2_ch.comul["M1"].substitute(at0, R2)
    mm = [e for e in d_m1.terms if sum(e[R2.index[f"{m}__{k}"]] for m in ("M1", "M2") for k in (1, 2)) >= 2]
    assert not mm


def test_cartan_trivial_involution():
    torus = FPAlgebra("QQ", ["x", "y"], ["x*y - 1"])
    H = HopfData(torus, {"x": "x__1*x__2", "y": "y__1*y__2"}, {"x": "1", "y": "1"}, {"x": "y", "y": "x"})
    C = identity_contraction(torus)
    CH = contract_hopf(H, {"x": "x", "y": "y"}, C=C)
    assert cartan_motion_check(H, CH).ok


def test_torus_with_inversion():
    torus = FPAlgebra("QQ", ["x", "y"], ["x*y - 1"])
    H = HopfData(torus, {"x": "x__1*x__2", "y": "y__1*y__2"}, {"x": "1", "y": "1"}, {"x": "y", "y": "x"})
    CH = contract_hopf(H, {"x": "y", "y": "x"}, plus_names=["p"], minus_names=["m"])
    assert contracted_axioms_check(CH).ok
    assert cartan_motion_check(H, CH).ok


def test_unit_fiber_hopf(sl2_hopf, sl2_ch):
    assert unit_fiber_hopf_check(sl2_hopf, sl2_ch).ok


def test_non_hopf_involution_rejected(sl2_hopf, sl2):
    swap = validate_involution(sl2, {"a": "d", "d": "a", "b": "b", "c": "c"})
    with pytest.raises(ValidationError, match="commute"):
        contract_hopf(sl2_hopf, swap)


def test_sl4_embedding(sl2_ch):
    v = sl2n_embedding_check(sl2_ch, [["a", "b"], ["c", "d"]])
    assert v.ok
    assert v.details["entries"] == [
        ["p1", "p2", "t*M1", "t*M2"],
        ["-p2", "p1", "t*M2", "-t*M1"],
        ["M1", "M2", "p1", "p2"],
        ["M2", "-M1", "-p2", "p1"],
    ]
    assert v.details["det_is_one"] and v.details["coalgebra_map"]


def test_embedding_with_identity_involution(sl2, sl2_hopf):
    C = identity_contraction(sl2)
    CH = contract_hopf(sl2_hopf, {v: v for v in sl2.vars}, C=C)
    v = sl2n_embedding_check(CH, [["a", "b"], ["c", "d"]])
    assert v.ok
    ent = v.details["entries"]
    assert ent[0][:2] == ["a", "b"] and ent[0][2:] == ["0", "0"]


def test_determinant_by_expansion():
    R = PolyRing("QQ", ["x", "y"])
    x, y = R.var("x"), R.var("y")
    M = [[x, y, R.zero], [R.one, x, y], [R.zero, R.one, x]]
    assert determinant(M) == x**3 - 2 * x * y
    I3 = [[R.one if i == j else R.zero for j in range(3)] for i in range(3)]
    assert determinant(I3) == R.one


def test_sl2_theta_is_hopf(sl2_hopf, sl2):
    from contrakit.hopf import hopf_involution_failures

    assert hopf_involution_failures(sl2_hopf, validate_involution(sl2, SL2_THETA)) == []
