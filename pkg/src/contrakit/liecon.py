"""Lie algebra contraction by structure constants, and contracted actions.

A Lie algebra is given by a basis, structure constants ``c[i][j][k]``
(``[e_i, e_j] = sum_k c[i][j][k] e_k``) and an involution ``theta`` whose
``i``-th column is the coordinate vector of ``theta(e_i)``.
"""

from __future__ import annotations

import random
from itertools import combinations

from .coeff import field_make
from .contraction import Verdict, contract
from .errors import ValidationError
from .poly import Poly, PolyRing
from .presentations import validate_involution


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------


def rref(rows, field):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    M = [[field(x) for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.one / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def nullspace(rows, ncols, field):
    """Basis of ``{v : rows . v = 0}`` in reduced echelon form."""
    R, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    out, _ = rref(basis, field) if basis else ([], [])
    return out


def solve(M, b, field):
    """Solve ``M x = b`` for square invertible ``M`` (lists of scalars)."""
    n = len(M)
    aug = [list(M[i]) + [b[i]] for i in range(n)]
    R, piv = rref(aug, field)
    if piv != list(range(n)):
        raise ValidationError("singular change of basis")
    return [R[i][n] for i in range(n)]


def mat_inverse(M, field):
    n = len(M)
    aug = [list(M[i]) + [field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    R, piv = rref(aug, field)
    if piv[:n] != list(range(n)):
        raise ValidationError("matrix is singular")
    return [row[n:] for row in R]


def mat_mul(A, B, field):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    return [[sum((A[i][k] * B[k][j] for k in range(m)), field.zero) for j in range(p)] for i in range(n)]


# ---------------------------------------------------------------------------
# Lie data
# ---------------------------------------------------------------------------


class LieData:
    """Finite-dimensional Lie algebra with an involution."""

    def __init__(self, field, labels, c, theta):
        self.field = field_make(field)
        self.labels = list(labels)
        self.n = len(self.labels)
        F = self.field
        self.c = [[[F(x) for x in c[i][j]] for j in range(self.n)] for i in range(self.n)]
        self.theta = [[F(x) for x in row] for row in theta]

    @classmethod
    def from_brackets(cls, field, labels, brackets, theta_images):
        """Build from ``{"x,y": "2*z"}`` and ``{"x": "-x"}`` style dicts."""
        F = field_make(field)
        labels = list(labels)
        ring = PolyRing(F, labels)
        n = len(labels)

        def vec(s):
            p = ring(s)
            v = [F.zero] * n
            for e, coef in p.terms.items():
                if sum(e) != 1:
                    raise ValidationError(f"{s!r} is not a linear combination of basis vectors")
                v[e.index(1)] = coef
            return v

        c = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
        for key, val in brackets.items():
            a, b = [x.strip() for x in key.split(",")]
            if a not in labels or b not in labels:
                raise ValidationError(f"unknown basis label in bracket {key!r}")
            i, j = labels.index(a), labels.index(b)
            v = vec(val)
            c[i][j] = v
            c[j][i] = [-x for x in v]
        cols = [vec(theta_images[x]) for x in labels]
        theta = [[cols[j][i] for j in range(n)] for i in range(n)]
        return cls(F, labels, c, theta)

    def bracket(self, u, v):
        F = self.field
        out = [F.zero] * self.n
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                cij = self.c[i][j]
                w = ui * vj
                for k in range(self.n):
                    if cij[k]:
                        out[k] = out[k] + w * cij[k]
        return out

    def apply_theta(self, v):
        F = self.field
        return [sum((self.theta[i][j] * v[j] for j in range(self.n)), F.zero) for i in range(self.n)]

    def unit(self, i):
        F = self.field
        return [F.one if j == i else F.zero for j in range(self.n)]

    def failures(self):
        F = self.field
        fails = []
        n = self.n
        for i in range(n):
            if any(self.c[i][i]):
                fails.append(f"[{self.labels[i]},{self.labels[i]}] != 0")
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(self.c[i][j], self.c[j][i])):
                    fails.append(f"antisymmetry fails for {self.labels[i]},{self.labels[j]}")
        for i, j, k in combinations(range(n), 3):
            x, y, z = self.unit(i), self.unit(j), self.unit(k)
            s = [F.zero] * n
            for a, b, cc in ((x, y, z), (y, z, x), (z, x, y)):
                s = [p + q for p, q in zip(s, self.bracket(a, self.bracket(b, cc)))]
            if any(s):
                fails.append(f"Jacobi fails for {self.labels[i]},{self.labels[j]},{self.labels[k]}")
        for i in range(n):
            if self.apply_theta(self.apply_theta(self.unit(i))) != self.unit(i):
                fails.append(f"theta^2 != id on {self.labels[i]}")
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.apply_theta(self.bracket(self.unit(i), self.unit(j)))
                rhs = self.bracket(self.apply_theta(self.unit(i)), self.apply_theta(self.unit(j)))
                if lhs != rhs:
                    fails.append(f"theta is not a bracket automorphism on {self.labels[i]},{self.labels[j]}")
        return fails

    def validate(self):
        fails = self.failures()
        if fails:
            raise ValidationError(fails[0])
        return self

    def brackets_text(self):
        ring = PolyRing(self.field, self.labels)
        out = {}
        for i, j in combinations(range(self.n), 2):
            v = self.c[i][j]
            if any(v):
                p = Poly(ring, {ring.var(self.labels[k]).lm(): v[k] for k in range(self.n) if v[k]})
                out[f"{self.labels[i]},{self.labels[j]}"] = str(p)
        return out

    def to_json(self):
        return {"basis": self.labels, "brackets": self.brackets_text()}


def lie_eigensplit(L, names=None):
    """Adapted basis: fixed vectors first, then anti-fixed, each in echelon form."""
    F = L.field
    n = L.n
    T = L.theta
    minus_id = [[T[i][j] - (F.one if i == j else F.zero) for j in range(n)] for i in range(n)]
    plus_id = [[T[i][j] + (F.one if i == j else F.zero) for j in range(n)] for i in range(n)]
    k = nullspace(minus_id, n, F)
    p = nullspace(plus_id, n, F)
    if len(k) + len(p) != n:
        raise ValidationError("theta is not diagonalizable with eigenvalues +1 and -1")
    vecs = k + p
    if names is None:
        names = []
        for idx, v in enumerate(vecs):
            nz = [i for i, x in enumerate(v) if x]
            if len(nz) == 1 and v[nz[0]] == 1 and L.labels[nz[0]] not in names:
                names.append(L.labels[nz[0]])
            else:
                stem = "k" if idx < len(k) else "p"
                num = idx + 1 if idx < len(k) else idx - len(k) + 1
                names.append(f"{stem}{num}")
    return AdaptedBasis(L, vecs, len(k), list(names))


class AdaptedBasis:
    def __init__(self, L, vectors, kdim, names):
        self.L = L
        self.vectors = vectors
        self.kdim = kdim
        self.names = names

    def is_k(self, a):
        return a < self.kdim

    def describe(self):
        ring = PolyRing(self.L.field, self.L.labels)
        out = {}
        for name, v in zip(self.names, self.vectors):
            out[name] = str(Poly(ring, {ring.var(self.L.labels[i]).lm(): x for i, x in enumerate(v) if x}))
        return out


class ContractedLie:
    """Structure constants over ``k[t]`` in an adapted basis."""

    def __init__(self, basis, c, tring):
        self.basis = basis
        self.names = basis.names
        self.kdim = basis.kdim
        self.c = c  # c[a][b] = list of Polys in t
        self.tring = tring
        self.n = len(self.names)

    def bracket_poly(self, a, b):
        ring = PolyRing(self.tring.field, ["t"] + self.names)
        out = ring.zero
        for k, coef in enumerate(self.c[a][b]):
            if coef:
                out = out + coef.embed(ring) * ring.var(self.names[k])
        return out

    def brackets_text(self):
        out = {}
        for a, b in combinations(range(self.n), 2):
            p = self.bracket_poly(a, b)
            if p:
                out[f"{self.names[a]},{self.names[b]}"] = str(p)
        return out

    def jacobi_failures(self):
        n = self.n
        zero = self.tring.zero
        fails = []

        def br(u, v):
            out = [zero] * n
            for i, ui in enumerate(u):
                if not ui:
                    continue
                for j, vj in enumerate(v):
                    if not vj:
                        continue
                    for k in range(n):
                        if self.c[i][j][k]:
                            out[k] = out[k] + ui * vj * self.c[i][j][k]
            return out

        one = self.tring.one

        def unit(i):
            return [one if j == i else zero for j in range(n)]

        for i, j, k in combinations(range(n), 3):
            x, y, z = unit(i), unit(j), unit(k)
            s = [zero] * n
            for a, b, cc in ((x, y, z), (y, z, x), (z, x, y)):
                s = [p + q for p, q in zip(s, br(a, br(b, cc)))]
            if any(s):
                fails.append((self.names[i], self.names[j], self.names[k]))
        return fails

    def grading_ok(self):
        """[k,k] and [k,p] are t-free and graded; [p,p] lies in t*k."""
        for a in range(self.n):
            for b in range(self.n):
                for k, coef in enumerate(self.c[a][b]):
                    if not coef:
                        continue
                    ka, kb, kk = a < self.kdim, b < self.kdim, k < self.kdim
                    if ka == kb:
                        if not kk:
                            return False
                    elif kk:
                        return False
                    if not ka and not kb:
                        if coef.degree_in("t") < 1 or any(e[0] == 0 for e in coef.terms):
                            return False
                    elif not coef.is_constant():
                        return False
        return True

    def to_json(self):
        return {
            "basis": self.names,
            "k_dim": self.kdim,
            "adapted": self.basis.describe(),
            "brackets": self.brackets_text(),
        }


def contract_lie(L, names=None):
    """Brackets of two anti-fixed vectors get a factor ``t``."""
    L.validate()
    B = lie_eigensplit(L, names)
    F = L.field
    n = L.n
    P = [[B.vectors[a][i] for a in range(n)] for i in range(n)]  # columns = adapted vectors
    Pinv = mat_inverse(P, F)
    tring = PolyRing(F, ["t"])
    t = tring.var("t")
    c = []
    for a in range(n):
        row = []
        for b in range(n):
            w = L.bracket(B.vectors[a], B.vectors[b])
            coords = [sum((Pinv[i][j] * w[j] for j in range(n)), F.zero) for i in range(n)]
            scale = t if (a >= B.kdim and b >= B.kdim) else tring.one
            row.append([scale * x if x else tring.zero for x in coords])
        c.append(row)
    return ContractedLie(B, c, tring)


def motion_fiber(CL, t0):
    """Specialize ``t := t0``; the adapted involution is diagonal."""
    F = CL.tring.field
    t0 = F(t0)
    n = CL.n
    c = [[[x.evaluate({"t": t0}) if x else F.zero for x in CL.c[a][b]] for b in range(n)] for a in range(n)]
    theta = [[(F.one if a < CL.kdim else -F.one) if a == b else F.zero for b in range(n)] for a in range(n)]
    return LieData(F, CL.names, c, theta)


def motion_fiber_check(CL):
    """At ``t = 0`` the anti-fixed part is an abelian ideal."""
    L0 = motion_fiber(CL, 0)
    n, kd = CL.n, CL.kdim
    abelian = all(not any(L0.c[a][b]) for a in range(kd, n) for b in range(kd, n))
    ideal = all(all(not L0.c[a][b][k] for k in range(kd)) for a in range(n) for b in range(kd, n))
    return Verdict("motion", abelian and ideal and not L0.failures(), {"brackets_t0": L0.brackets_text()})


def lie_check(L, names=None):
    CL = contract_lie(L, names)
    jac = CL.jacobi_failures()
    grading = CL.grading_ok()
    L1 = motion_fiber(CL, 1)
    # t = 1 recovers L in the adapted basis
    recovered = True
    F = L.field
    B = CL.basis
    for a in range(CL.n):
        for b in range(CL.n):
            w = L.bracket(B.vectors[a], B.vectors[b])
            back = [sum((L1.c[a][b][k] * B.vectors[k][i] for k in range(CL.n)), F.zero) for i in range(L.n)]
            if back != w:
                recovered = False
    mv = motion_fiber_check(CL)
    ok = not jac and grading and recovered and mv.ok
    return CL, Verdict(
        "lie",
        ok,
        {
            "contracted": CL.to_json(),
            "jacobi_failures": [list(f) for f in jac],
            "grading": grading,
            "t1_recovers_input": recovered,
            "motion_t0": mv.to_json(),
        },
    )


# ---------------------------------------------------------------------------
# random Lie data for property tests
# ---------------------------------------------------------------------------


def _sl2(F):
    labels = ["h", "e", "f"]
    return LieData.from_brackets(F, labels, {"h,e": "2*e", "h,f": "-2*f", "e,f": "h"}, {"h": "-h", "e": "-f", "f": "-e"})


def _two_step(F, rng, nv, nz):
    """Random 2-step nilpotent algebra V + Z with a grading-compatible involution."""
    n = nv + nz
    sv = [rng.choice((1, -1)) for _ in range(nv)]
    sz = [rng.choice((1, -1)) for _ in range(nz)]
    c = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i, j in combinations(range(nv), 2):
        for k in range(nz):
            if sv[i] * sv[j] == sz[k]:
                x = F(rng.randrange(F.characteristic or 7))
                c[i][j][nv + k] = x
                c[j][i][nv + k] = -x
    signs = sv + sz
    theta = [[F(signs[i]) if i == j else F.zero for j in range(n)] for i in range(n)]
    return LieData(F, [f"x{i}" for i in range(n)], c, theta)


def _sl2_variant(F, rng):
    kind = rng.randrange(3)
    if kind == 0:
        th = {"h": "-h", "e": "-f", "f": "-e"}
    elif kind == 1:
        th = {"h": "h", "e": "-e", "f": "-f"}
    else:
        th = {"h": "h", "e": "e", "f": "f"}
    return LieData.from_brackets(F, ["h", "e", "f"], {"h,e": "2*e", "h,f": "-2*f", "e,f": "h"}, th)


def direct_sum(L1, L2):
    F = L1.field
    n1, n2 = L1.n, L2.n
    n = n1 + n2
    c = [[[F.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            for k in range(n1):
                c[i][j][k] = L1.c[i][j][k]
    for i in range(n2):
        for j in range(n2):
            for k in range(n2):
                c[n1 + i][n1 + j][n1 + k] = L2.c[i][j][k]
    theta = [[F.zero] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            theta[i][j] = L1.theta[i][j]
    for i in range(n2):
        for j in range(n2):
            theta[n1 + i][n1 + j] = L2.theta[i][j]
    labels = [f"{x}_1" for x in L1.labels] + [f"{x}_2" for x in L2.labels]
    return LieData(F, labels, c, theta)


def change_basis(L, G):
    """Same algebra in the basis given by the columns of ``G``."""
    F = L.field
    n = L.n
    Ginv = mat_inverse(G, F)
    cols = [[G[i][a] for i in range(n)] for a in range(n)]
    c = []
    for a in range(n):
        row = []
        for b in range(n):
            w = L.bracket(cols[a], cols[b])
            row.append([sum((Ginv[i][j] * w[j] for j in range(n)), F.zero) for i in range(n)])
        c.append(row)
    theta = mat_mul(mat_mul(Ginv, L.theta, F), G, F)
    return LieData(F, [f"b{i}" for i in range(n)], c, theta)


def random_lie_data(seed, p=7, max_dim=6):
    """A random valid LieData over ``F_p`` of dimension at most ``max_dim``."""
    rng = random.Random(seed)
    F = field_make(f"GF({p})")
    kind = rng.randrange(4)
    if kind == 0:
        dim = rng.randint(1, max_dim)
        nz = rng.randint(0, dim - 1) if dim > 1 else 0
        L = _two_step(F, rng, dim - nz, nz)
    elif kind == 1:
        L = _sl2_variant(F, rng)
    elif kind == 2:
        rest = rng.randint(1, max_dim - 3)
        nz = rng.randint(0, rest - 1) if rest > 1 else 0
        L = direct_sum(_sl2_variant(F, rng), _two_step(F, rng, rest - nz, nz))
    else:
        L = direct_sum(_sl2_variant(F, rng), _sl2_variant(F, rng)) if max_dim >= 6 else _sl2_variant(F, rng)
    n = L.n
    while True:
        G = [[F(rng.randrange(p)) for _ in range(n)] for _ in range(n)]
        try:
            mat_inverse(G, F)
            break
        except ValidationError:
            continue
    return change_basis(L, G)


# ---------------------------------------------------------------------------
# contracted derivation actions
# ---------------------------------------------------------------------------


def apply_derivation(D, p, ring):
    """``sum dp/dv * D[v]`` for a derivation given on variables."""
    out = ring.zero
    for v in p.variables():
        if v in D and D[v]:
            out = out + p.derivative(v).embed(ring) * D[v]
    return out


class DerivationAction:
    """Derivations ``D_x`` of ``B`` for the basis vectors ``x`` of a Lie algebra."""

    def __init__(self, L, B, eta, derivations):
        self.L = L
        self.B = B
        self.eta = eta if not isinstance(eta, dict) else validate_involution(B, eta)
        self.D = {x: {v: B.ring(derivations[x].get(v, "0")) for v in B.vars} for x in L.labels}

    def of_vector(self, vec):
        """Derivation for a coordinate vector (linear in the vector)."""
        out = {v: self.B.ring.zero for v in self.B.vars}
        for i, x in enumerate(self.L.labels):
            if vec[i]:
                for v in self.B.vars:
                    out[v] = out[v] + self.D[x][v] * vec[i]
        return out

    def failures(self):
        B, L = self.B, self.L
        fails = []
        for x in L.labels:
            for r in B.relations:
                if not B.ideal.contains(apply_derivation(self.D[x], r, B.ring)):
                    fails.append((x, f"relation {r} not preserved"))
        for i, j in combinations(range(L.n), 2):
            Di, Dj = self.D[L.labels[i]], self.D[L.labels[j]]
            Dij = self.of_vector(L.c[i][j])
            for v in B.vars:
                comm = apply_derivation(Di, Dj[v], B.ring) - apply_derivation(Dj, Di[v], B.ring)
                if not B.equiv(comm, Dij[v]):
                    fails.append((f"{L.labels[i]},{L.labels[j]}", f"bracket fails on {v}"))
        for i in range(L.n):
            Dth = self.of_vector(L.apply_theta(L.unit(i)))
            Dx = self.D[L.labels[i]]
            for v in B.vars:
                lhs = apply_derivation(Dth, self.eta.images[v], B.ring)
                rhs = self.eta(Dx[v])
                if not B.equiv(lhs, rhs):
                    fails.append((L.labels[i], f"not compatible with the involutions on {v}"))
        return fails


class ContractedAction:
    def __init__(self, CL, C, D):
        self.CL = CL
        self.C = C
        self.D = D  # adapted name -> {generator: Poly in C.ring}

    def apply(self, a, p):
        D = self.D[a]
        return apply_derivation(D, p, self.C.ring)

    def to_json(self):
        return {a: {g: str(self.D[a][g]) for g in self.C.gens} for a in self.CL.names}


def contract_derivation_action(action, C=None, names=None, **contract_kw):
    """Weighted action of the contracted Lie algebra on the contraction of ``B``.

    Fixed vectors act by ``D_x``, anti-fixed ones by ``s*D_x`` on ``B[s, 1/s]``;
    the results are re-expressed in the generators of the contraction.
    """
    fails = action.failures()
    if fails:
        x, what = fails[0]
        raise ValidationError(f"invalid action at {x}: {what}")
    CL = contract_lie(action.L, names)
    B = action.B
    if C is None:
        C = contract(B, action.eta, **contract_kw)
    W = C.witness_ring
    s = W.var(C.s_name)
    D = {}
    for a, name in enumerate(CL.names):
        Dx = action.of_vector(CL.basis.vectors[a])
        weight = W.one if a < CL.kdim else s
        DW = {v: Dx[v].embed(W) * weight for v in B.vars}
        D[name] = {}
        for g in C.gens:
            D[name][g] = C.express(apply_derivation(DW, C.witness[g], W))
        D[name][C.tname] = C.ring.zero
    return ContractedAction(CL, C, D)


def action_check(CA):
    """Leibniz (relations preserved) and bracket compatibility over ``k[t]``."""
    C, CL = CA.C, CA.CL
    fails = []
    for a in CL.names:
        for r in C.ideal.gens:
            if not C.ideal.contains(CA.apply(a, r)):
                fails.append(f"{a} does not preserve {r}")
    for a, b in combinations(range(CL.n), 2):
        na, nb = CL.names[a], CL.names[b]
        for g in C.gens:
            x = C.ring.var(g)
            comm = CA.apply(na, CA.apply(nb, x)) - CA.apply(nb, CA.apply(na, x))
            want = C.ring.zero
            for k, coef in enumerate(CL.c[a][b]):
                if coef:
                    want = want + coef.embed(C.ring) * CA.apply(CL.names[k], x)
            if not C.ideal.contains(comm - want):
                fails.append(f"[{na},{nb}] fails on {g}")
    return Verdict("action", not fails, {"failures": fails, "action": CA.to_json(), "lie": CL.to_json()})


# ---------------------------------------------------------------------------
# Lie algebra of the contracted group via point derivations at the counit
# ---------------------------------------------------------------------------


def point_derivations(CH):
    """Basis of derivations at the counit, as dicts generator -> scalar.

    Requires the Jacobian of the relations at the counit to be free of ``t``.
    """
    C = CH.C
    F = C.A.field
    point = {g: CH.counit[g].constant_coeff() if CH.counit[g] else F.zero for g in C.gens}
    rows = []
    for r in C.ideal.gens:
        row = []
        for g in C.gens:
            d = r.derivative(g)
            sub = {h: d.ring.const(point[h]) for h in C.gens}
            sub[C.tname] = d.ring.var(C.tname)
            val = d.substitute(sub, d.ring)
            if not val.is_constant():
                raise ValidationError("Jacobian at the counit depends on t; unsupported")
            row.append(val.constant_coeff())
        rows.append(row)
    basis = nullspace(rows, len(C.gens), F) if rows else [
        [F.one if i == j else F.zero for j in range(len(C.gens))] for i in range(len(C.gens))
    ]
    return [dict(zip(C.gens, v)) for v in basis]


def _delta_on_monomial(delta, e, names, point, ring_t):
    """``delta`` applied to a monomial: sum of delta(factor) times counit of the rest."""
    out = ring_t.zero
    F = ring_t.field
    for i, k in enumerate(e):
        if not k or names[i] not in delta:
            continue
        rest = F.one
        for j, kj in enumerate(e):
            if not kj:
                continue
            pw = kj - 1 if j == i else kj
            if pw:
                rest = rest * point[names[j]] ** pw
        if rest:
            out = out + delta[names[i]] * (rest * k)
    return out


def convolution_bracket(CH, d1, d2):
    """``(d1 (x) d2 - d2 (x) d1) o Delta`` on the generators."""
    C = CH.C
    F = C.A.field
    tring = PolyRing(F, [C.tname])
    point = {g: CH.counit[g].constant_coeff() if CH.counit[g] else F.zero for g in C.gens}
    out = {}
    for g in C.gens:
        d = CH.comul[g]
        names = d.ring.names
        total = tring.zero
        for e, coef in d.terms.items():
            tpow = e[names.index(C.tname)]
            e1 = {n.rsplit("__", 1)[0]: k for n, k in zip(names, e) if k and n.endswith("__1")}
            e2 = {n.rsplit("__", 1)[0]: k for n, k in zip(names, e) if k and n.endswith("__2")}
            for a, b, sign in ((d1, d2, 1), (d2, d1, -1)):
                va = _eval_pd(a, e1, point, tring)
                vb = _eval_pd(b, e2, point, tring)
                total = total + va * vb * (coef * sign) * tring.var(C.tname) ** tpow
        out[g] = total
    return out


def _eval_pd(delta, mono, point, tring):
    names = list(mono)
    e = tuple(mono[n] for n in names)
    return _delta_on_monomial(delta, e, names, point, tring)


def lie_algebra_cross_check(CH, CA):
    """Point derivations ``xi_x = counit o D_x`` form a copy of the contracted Lie algebra."""
    C, CL = CH.C, CA.CL
    F = C.A.field
    tring = PolyRing(F, [C.tname])
    point = {g: CH.counit[g].constant_coeff() if CH.counit[g] else F.zero for g in C.gens}

    def at_counit(p):
        sub = {g: tring.const(point[g]) for g in C.gens}
        sub[C.tname] = tring.var(C.tname)
        return p.substitute(sub, tring)

    xi = {a: {g: at_counit(CA.D[a][g]) for g in C.gens} for a in CL.names}
    pds = point_derivations(CH)
    # each xi_x must satisfy the linearized relations at the counit
    span_ok = True
    for a in CL.names:
        for r in C.ideal.gens:
            val = tring.zero
            for g in C.gens:
                val = val + at_counit(r.derivative(g)) * xi[a][g]
            if val:
                span_ok = False
    # bracket compatibility: [xi_a, xi_b] = xi_[a,b]
    hom_ok = True
    for a, b in combinations(range(CL.n), 2):
        na, nb = CL.names[a], CL.names[b]
        br = convolution_bracket(CH, xi[na], xi[nb])
        for g in C.gens:
            want = tring.zero
            for k, coef in enumerate(CL.c[a][b]):
                if coef:
                    want = want + coef.embed(tring) * xi[CL.names[k]][g]
            if br[g] != want:
                hom_ok = False
    # bijectivity: the matrix of xi in the point-derivation basis is invertible over k
    mat_ok = False
    free_gens = [g for g in C.gens if any(pd[g] for pd in pds)]
    if len(pds) == CL.n:
        try:
            rows = []
            for a in CL.names:
                row = []
                for g in free_gens:
                    v = xi[a][g]
                    if not v.is_constant():
                        raise ValidationError("t-dependent")
                    row.append(v.constant_coeff())
                rows.append(row)
            R, piv = rref(rows, F)
            mat_ok = len(piv) == CL.n
        except ValidationError:
            mat_ok = False
    ok = span_ok and hom_ok and mat_ok
    return Verdict(
        "lie_of_group",
        ok,
        {
            "point_derivations": len(pds),
            "xi": {a: {g: str(xi[a][g]) for g in C.gens} for a in CL.names},
            "in_tangent_space": span_ok,
            "bracket_hom": hom_ok,
            "bijective": mat_ok,
        },
    )


def matrix_action(L, B, matrix, eta, mats):
    """Derivations ``D_x(g) = g X`` for an algebra with a matrix ``g`` of generators."""
    n = len(matrix)
    ring = B.ring
    F = B.field
    D = {}
    for x in L.labels:
        X = [[F(v) for v in row] for row in mats[x]]
        D[x] = {}
        for i in range(n):
            for j in range(n):
                acc = ring.zero
                for k in range(n):
                    if X[k][j]:
                        acc = acc + ring.var(matrix[i][k]) * X[k][j]
                D[x][matrix[i][j]] = acc
    return DerivationAction(L, B, eta, D)
