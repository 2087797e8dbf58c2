"""Contract SL2 along the Cartan involution and inspect the result."""

from contrakit import (
    FPAlgebra,
    HopfData,
    contract,
    contract_hopf,
    contracted_axioms_check,
    fiber_at_zero,
    fiber_descent_check,
    flatness_check,
    graded_fiber_check,
    validate_involution,
)

A = FPAlgebra("QQ", ["a", "b", "c", "d"], ["a*d - b*c - 1"])
theta = validate_involution(A, {"a": "d", "b": "-c", "c": "-b", "d": "a"})
C = contract(A, theta, plus_names=["p1", "p2"], minus_names=["M1", "M2"])

print("generators:", ", ".join(f"{g}({C.tags[g]})" for g in C.gens))
print("relations:", *C.relations(), sep="\n  ")
print("flat over QQ[t]:", flatness_check(C).ok)
print("fiber at t=0:", *fiber_at_zero(C).to_json()["relations"], sep="\n  ")
g = graded_fiber_check(C, max_degree=5)
print("hilbert function of the t=0 fiber:", g.details["hilbert_fiber"])
print("fiber at t=2 descends to SL2 after a quadratic extension:", fiber_descent_check(C, 2).ok)

H = HopfData(
    A,
    {"a": "a__1*a__2 + b__1*c__2", "b": "a__1*b__2 + b__1*d__2",
     "c": "c__1*a__2 + d__1*c__2", "d": "c__1*b__2 + d__1*d__2"},
    {"a": "1", "b": "0", "c": "0", "d": "1"},
    {"a": "d", "b": "-b", "c": "-c", "d": "a"},
)
CH = contract_hopf(H, theta, C=C)
print("comultiplication of p1:", CH.comul["p1"])
print("contracted Hopf axioms hold:", contracted_axioms_check(CH).ok)
