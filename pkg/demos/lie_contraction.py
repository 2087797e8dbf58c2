"""Contract sl2 along h -> -h, e <-> -f and sample random Lie algebras over F7."""

from contrakit import LieData, contract_lie, random_lie_data

L = LieData.from_brackets(
    "QQ", ["h", "e", "f"], {"h,e": "2*e", "h,f": "-2*f", "e,f": "h"}, {"h": "-h", "e": "-f", "f": "-e"}
)
CL = contract_lie(L, ["r", "h", "q"])
for pair, val in CL.brackets_text().items():
    print(f"[{pair}] = {val}")
print("Jacobi holds identically in t:", not CL.jacobi_failures())

bad = sum(bool(contract_lie(random_lie_data(seed, p=7, max_dim=6)).jacobi_failures()) for seed in range(50))
print(f"random Lie algebras over F7 with a failing contraction: {bad} of 50")
