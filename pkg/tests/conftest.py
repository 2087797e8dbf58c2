import pytest

from contrakit import FPAlgebra, HopfData, LieData, contract, validate_involution

SL2_THETA = {"a": "d", "d": "a", "b": "-c", "c": "-b"}
SL2_COMUL = {
    "a": "a__1*a__2 + b__1*c__2",
    "b": "a__1*b__2 + b__1*d__2",
    "c": "c__1*a__2 + d__1*c__2",
    "d": "c__1*b__2 + d__1*d__2",
}
SL2_COUNIT = {"a": "1", "b": "0", "c": "0", "d": "1"}
SL2_ANTIPODE = {"a": "d", "b": "-b", "c": "-c", "d": "a"}
SL2_MATS = {"h": [[1, 0], [0, -1]], "e": [[0, 1], [0, 0]], "f": [[0, 0], [1, 0]]}


@pytest.fixture
def sl2():
    return FPAlgebra("QQ", ["a", "b", "c", "d"], ["a*d - b*c - 1"])


@pytest.fixture
def sl2_theta(sl2):
    return validate_involution(sl2, SL2_THETA)


@pytest.fixture
def sl2_contraction(sl2, sl2_theta):
    return contract(sl2, sl2_theta, plus_names=["p1", "p2"], minus_names=["M1", "M2"])


@pytest.fixture
def sl2_hopf(sl2):
    return HopfData(sl2, SL2_COMUL, SL2_COUNIT, SL2_ANTIPODE)


@pytest.fixture
def sl2_lie():
    return LieData.from_brackets(
        "QQ", ["h", "e", "f"], {"h,e": "2*e", "h,f": "-2*f", "e,f": "h"}, {"h": "-h", "e": "-f", "f": "-e"}
    )


@pytest.fixture
def sign_line():
    A = FPAlgebra("QQ", ["w"])
    return contract(A, {"w": "-w"}, minus_names=["v"])


@pytest.fixture
def split_points():
    A = FPAlgebra("QQ", ["w"], ["w^2 - 1"])
    return contract(A, {"w": "-w"}, minus_names=["v"])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.TITLES):
        terminalreporter.write_line(results.get(n, f"criterion {n:2d} FAIL: {mod.TITLES[n]} (not run)"))
