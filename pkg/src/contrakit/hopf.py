"""Hopf structures on presented algebras and their contraction.

Structure maps are given on generators.  Tensor powers name the copies of a
variable ``v`` as ``v__1, v__2, ...``; variables listed as ``base`` (such as
``t`` for a contraction) are scalars and are shared by all copies.
"""

from __future__ import annotations

from itertools import permutations

from .contraction import (
    PLUS,
    Verdict,
    contract,
    fiber_at_zero,
    graded_fiber_check,
    tensor_contraction,
)
from .errors import ExpressionError, ValidationError
from .ideals import Ideal
from .poly import Poly, PolyRing
from .presentations import AlgebraMap, FPAlgebra, validate_involution


class HopfStructure:
    """Comultiplication, counit and antipode on the generators of ``algebra``."""

    def __init__(self, algebra, comul, counit, antipode, base=()):
        self.A = algebra
        self.base = list(base)
        self.gens = [v for v in algebra.vars if v not in self.base]
        self.T2 = self.tensor_power(2)
        self.T3 = self.tensor_power(3)
        self.K = FPAlgebra(algebra.field, self.base, [])
        self.comul = {v: self.T2.ring(comul[v]) for v in self.gens}
        self.counit = {v: self.K.ring(counit[v]) for v in self.gens}
        self.antipode = {v: algebra.ring(antipode[v]) for v in self.gens}

    def tensor_power(self, n):
        names = self.base + [f"{v}__{k}" for k in range(1, n + 1) for v in self.gens]
        ring = PolyRing(self.A.field, names)
        rels = []
        for k in range(1, n + 1):
            m = self.copy(ring, k)
            rels += [r.substitute(m, ring) for r in self.A.relations]
        return FPAlgebra.from_ideal(Ideal(ring, rels))

    def copy(self, ring, k):
        m = {b: ring.var(b) for b in self.base}
        for v in self.gens:
            m[v] = ring.var(f"{v}__{k}")
        return m

    def _recopy(self, p, ring, mapping):
        """Rename tensor copies of ``p`` (copy index -> copy index) into ``ring``."""
        sub = {b: ring.var(b) for b in self.base}
        for name in p.ring.names:
            if name in sub:
                continue
            v, k = name.rsplit("__", 1)
            sub[name] = ring.var(f"{v}__{mapping[int(k)]}")
        return p.substitute(sub, ring)

    def _with_base(self, images, ring):
        out = dict(images)
        for b in self.base:
            out[b] = ring.var(b)
        return out

    # -- maps --------------------------------------------------------------------

    def delta(self, p):
        p = self.A.ring(p)
        return p.substitute(self._with_base(self.comul, self.T2.ring), self.T2.ring)

    def eps(self, p):
        p = self.A.ring(p)
        return p.substitute(self._with_base(self.counit, self.K.ring), self.K.ring)

    def S(self, p):
        p = self.A.ring(p)
        return p.substitute(self._with_base(self.antipode, self.A.ring), self.A.ring)

    def maps(self):
        return (
            AlgebraMap(self.A, self.T2, self._with_base(self.comul, self.T2.ring)),
            AlgebraMap(self.A, self.K, self._with_base(self.counit, self.K.ring)),
            AlgebraMap(self.A, self.A, self._with_base(self.antipode, self.A.ring)),
        )

    # -- axioms ------------------------------------------------------------------

    def axiom_failures(self):
        """List of (generator or relation, axiom) pairs that fail."""
        fails = []
        for name, f in zip(("comultiplication", "counit", "antipode"), self.maps()):
            for r in f.relation_failures():
                fails.append((str(r), f"{name} not well defined"))
        R3 = self.T3.ring
        A = self.A
        for v in self.gens:
            d = self.comul[v]
            left = d.substitute(
                self._merge(
                    {f"{w}__1": self._recopy(self.comul[w], R3, {1: 1, 2: 2}) for w in self.gens},
                    {f"{w}__2": R3.var(f"{w}__3") for w in self.gens},
                    R3,
                ),
                R3,
            )
            right = d.substitute(
                self._merge(
                    {f"{w}__1": R3.var(f"{w}__1") for w in self.gens},
                    {f"{w}__2": self._recopy(self.comul[w], R3, {1: 2, 2: 3}) for w in self.gens},
                    R3,
                ),
                R3,
            )
            if not self.T3.ideal.contains(left - right):
                fails.append((v, "coassociativity"))
            x = A.ring.var(v)
            e_left = d.substitute(
                self._merge(
                    {f"{w}__1": self.counit[w].embed(A.ring) for w in self.gens},
                    {f"{w}__2": A.ring.var(w) for w in self.gens},
                    A.ring,
                ),
                A.ring,
            )
            e_right = d.substitute(
                self._merge(
                    {f"{w}__1": A.ring.var(w) for w in self.gens},
                    {f"{w}__2": self.counit[w].embed(A.ring) for w in self.gens},
                    A.ring,
                ),
                A.ring,
            )
            if not A.equiv(e_left, x) or not A.equiv(e_right, x):
                fails.append((v, "counit"))
            ev = self.counit[v].embed(A.ring)
            s_left = d.substitute(
                self._merge(
                    {f"{w}__1": self.antipode[w] for w in self.gens},
                    {f"{w}__2": A.ring.var(w) for w in self.gens},
                    A.ring,
                ),
                A.ring,
            )
            s_right = d.substitute(
                self._merge(
                    {f"{w}__1": A.ring.var(w) for w in self.gens},
                    {f"{w}__2": self.antipode[w] for w in self.gens},
                    A.ring,
                ),
                A.ring,
            )
            if not A.equiv(s_left, ev) or not A.equiv(s_right, ev):
                fails.append((v, "antipode"))
        return fails

    def _merge(self, a, b, ring):
        out = {**a, **b}
        for x in self.base:
            out[x] = ring.var(x)
        return out

    def validate(self):
        fails = self.axiom_failures()
        return Verdict("hopf_axioms", not fails, {"failures": [list(f) for f in fails]})

    def to_json(self):
        return {
            "comul": {v: str(self.comul[v]) for v in self.gens},
            "counit": {v: str(self.counit[v]) for v in self.gens},
            "antipode": {v: str(self.antipode[v]) for v in self.gens},
        }


class HopfData(HopfStructure):
    """Hopf algebra over the field: ``comul`` images use ``v__1``/``v__2``."""

    def __init__(self, algebra, comul, counit, antipode):
        super().__init__(algebra, comul, counit, antipode, base=())


def validate_hopf(H, strict=False):
    v = H.validate()
    if strict and not v.ok:
        gen, axiom = v.details["failures"][0]
        raise ValidationError(f"Hopf axiom {axiom} fails on {gen}")
    return v


def hopf_involution_failures(H, theta):
    A = H.A
    fails = []
    T2 = H.T2.ring
    th2 = {}
    for k in (1, 2):
        for w in H.gens:
            th2[f"{w}__{k}"] = _copy_poly(theta.images[w], T2, k)
    for v in H.gens:
        lhs = H.delta(theta.images[v])
        rhs = H.comul[v].substitute(th2, T2)
        if not H.T2.ideal.contains(lhs - rhs):
            fails.append((v, "comultiplication"))
        if H.eps(theta.images[v]) != H.counit[v]:
            fails.append((v, "counit"))
        if not A.equiv(H.S(theta.images[v]), theta(H.antipode[v])):
            fails.append((v, "antipode"))
    return fails


def _copy_poly(p, ring, k):
    return p.substitute({v: ring.var(f"{v}__{k}") for v in p.ring.names}, ring)


# ---------------------------------------------------------------------------
# contraction
# ---------------------------------------------------------------------------


class ContractedHopf(HopfStructure):
    """Hopf structure over ``k[t]`` on a contraction presentation."""

    def __init__(self, C, comul, counit, antipode):
        self.C = C
        super().__init__(C.algebra, comul, counit, antipode, base=[C.tname])


def contract_hopf(H, theta, C=None, **contract_kw):
    """Transport the Hopf structure of ``H`` to the contraction of ``(H.A, theta)``."""
    A = H.A
    if not isinstance(theta, AlgebraMap):
        theta = validate_involution(A, theta)
    fails = hopf_involution_failures(H, theta)
    if fails:
        gen, what = fails[0]
        raise ValidationError(f"involution does not commute with the {what} on {gen}")
    if C is None:
        C = contract(A, theta, **contract_kw)
    CT, left, right = tensor_contraction(C, C)
    WT = CT.witness_ring
    # Delta on A[s, u]: v -> Delta(v) in the witness ring of A (x) A
    dsub = {v: H.comul[v].embed(WT) for v in A.vars}
    dsub[C.s_name] = WT.var(CT.s_name)
    dsub[C.u_name] = WT.var(CT.u_name)
    W = C.witness_ring
    ssub = {v: H.antipode[v].embed(W) for v in A.vars}
    ssub[C.s_name], ssub[C.u_name] = W.var(C.s_name), W.var(C.u_name)
    Kring = PolyRing(A.field, [C.s_name, C.u_name])
    esub = {v: H.counit[v].embed(Kring) if H.counit[v] else Kring.zero for v in A.vars}
    esub[C.s_name], esub[C.u_name] = Kring.var(C.s_name), Kring.var(C.u_name)
    comul, counit, antipode = {}, {}, {}
    for g in C.gens:
        w = C.witness[g]
        comul[g] = CT.express(w.substitute(dsub, WT))
        e = w.substitute(esub, Kring)
        if not e.is_constant():
            raise ExpressionError(f"counit of {g} is not a scalar: {e}")
        counit[g] = e.constant_coeff()
        antipode[g] = C.express(w.substitute(ssub, W))
    CH = ContractedHopf(C, {g: comul[g].embed(_t2_ring(C, CT)) for g in C.gens}, counit, antipode)
    return CH


def _t2_ring(C, CT):
    names = [C.tname] + [f"{g}__{k}" for k in (1, 2) for g in C.gens]
    return PolyRing(C.A.field, names)


def counit_vanishes_on_minus(CH):
    return all(not CH.counit[g] for g in CH.C.gens if CH.C.tags[g] != PLUS)


# ---------------------------------------------------------------------------
# the t = 0 fiber
# ---------------------------------------------------------------------------


def _at_zero(p, ring, C, kill_minus=False):
    """Set ``t = 0`` (and optionally all minus generators) in a tensor-power polynomial."""
    sub = {}
    for name in p.ring.names:
        base = name.rsplit("__", 1)[0]
        if name == C.tname:
            sub[name] = ring.zero
        elif kill_minus and C.tags.get(base) != PLUS:
            sub[name] = ring.zero
        else:
            sub[name] = ring.var(name)
    return p.substitute(sub, ring)


def cartan_motion_check(H, CH):
    """Structure of the ``t = 0`` fiber: a semidirect product of ``K`` with a vector group."""
    C = CH.C
    A = H.A
    details = {}
    # (a) algebra part agrees with the associated graded ring
    gv = graded_fiber_check(C)
    details["graded"] = gv.ok
    # (b) modulo the minus generators: the fixed subgroup A/I with its comultiplication
    plus = C.gens_with_tag(PLUS)
    minus = [g for g in C.gens if C.tags[g] != PLUS]
    F0 = fiber_at_zero(C).algebra
    Qring = PolyRing(A.field, plus)
    Qimg = {g: (Qring.var(g) if g in plus else Qring.zero) for g in C.gens}
    Q = FPAlgebra.from_ideal(Ideal(Qring, [r.substitute(Qimg, Qring) for r in F0.relations]))
    AI = A.quotient([p for _, p in C.split.minus])
    HI = HopfData(AI, H.comul, H.counit, H.antipode)
    hopf_ok = HI.validate().ok
    to_AI = {n: p.embed(AI.ring) for n, p in C.split.plus}
    from_AI = {}
    qplus = [Qring.var(n) for n in C.split.plus_names]
    for v in A.vars:
        r = C.split.reconstruct(v, qplus, [Qring.zero] * len(C.split.minus))
        from_AI[v] = r if r is not None else Qring.zero
    from .presentations import map_is_iso

    iso = map_is_iso(AlgebraMap(Q, AI, to_AI), AlgebraMap(AI, Q, from_AI))
    comul_ok = True
    T2I = HI.T2
    for g in plus:
        d0 = _at_zero(CH.comul[g], CH.T2.ring, C, kill_minus=True)
        sub = {}
        for name in d0.ring.names:
            if name == C.tname:
                sub[name] = T2I.ring.zero
                continue
            base, k = name.rsplit("__", 1)
            if base in to_AI:
                sub[name] = _copy_poly(to_AI[base], T2I.ring, int(k))
            else:
                sub[name] = T2I.ring.zero
        img = d0.substitute(sub, T2I.ring)
        want = HI.delta([p for n, p in C.split.plus if n == g][0].embed(AI.ring))
        if not T2I.ideal.contains(img - want):
            comul_ok = False
    details.update({"fixed_subgroup_hopf": hopf_ok, "quotient_iso": iso, "quotient_comul": comul_ok})
    # (c) minus generators: comultiplication at t = 0 has degree exactly 1 in minus generators
    F2 = CH.tensor_power(2)
    ring0 = F2.ring
    z = {n: ring0.var(n) for n in ring0.names}
    z[C.tname] = ring0.zero
    ideal0 = Ideal(ring0, [r.substitute(z, ring0) for r in F2.relations])
    mnames = {f"{g}__{k}" for g in minus for k in (1, 2)}
    midx = [ring0.index[n] for n in mnames]
    linear_ok = True
    offenders = []
    for g in minus:
        d0 = CH.comul[g].substitute(z, ring0)
        by_deg = {}
        for e, c in d0.terms.items():
            by_deg.setdefault(sum(e[i] for i in midx), {})[e] = c
        for deg, terms in by_deg.items():
            if deg != 1 and not ideal0.contains(Poly(ring0, terms)):
                linear_ok = False
                offenders.append(g)
    details["minus_linear"] = linear_ok
    details["offenders"] = offenders
    details["comul_at_zero"] = {g: str(CH.comul[g].substitute(z, ring0)) for g in C.gens}
    ok = gv.ok and hopf_ok and iso and comul_ok and linear_ok
    return Verdict("cartan", ok, details)


def unit_fiber_hopf_check(H, CH, alpha=1):
    """At ``t = alpha^2`` the contracted Hopf algebra is that of ``H``."""
    C = CH.C
    A = H.A
    alpha = A.field(alpha)
    t0 = alpha * alpha
    ainv = 1 / alpha if not hasattr(alpha, "inverse") else alpha.inverse()
    sub = {v: A.ring.var(v) for v in A.vars}
    sub[C.s_name], sub[C.u_name] = A.ring.const(alpha), A.ring.const(ainv)
    phi = {g: C.witness[g].substitute(sub, A.ring) for g in C.gens}
    R2 = H.T2.ring
    ok = True
    for g in C.gens:
        img = {C.tname: R2.const(t0)}
        for name in CH.comul[g].ring.names:
            if name == C.tname:
                continue
            base, k = name.rsplit("__", 1)
            img[name] = _copy_poly(phi[base], R2, int(k))
        lhs = CH.comul[g].substitute(img, R2)
        if not H.T2.ideal.contains(lhs - H.delta(phi[g])):
            ok = False
    return Verdict("unit_fiber_hopf", ok, {"alpha": str(alpha)})


# ---------------------------------------------------------------------------
# block embedding into SL_2n
# ---------------------------------------------------------------------------


def _matmul(X, Y, reduce=None):
    n, m, p = len(X), len(Y), len(Y[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = X[i][0] * Y[0][j]
            for k in range(1, m):
                acc = acc + X[i][k] * Y[k][j]
            row.append(reduce(acc) if reduce else acc)
        out.append(row)
    return out


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def determinant(M):
    n = len(M)
    ring = M[0][0].ring
    total = ring.zero
    for p in permutations(range(n)):
        term = ring.one
        for i in range(n):
            term = term * M[i][p[i]]
            if not term:
                break
        if term:
            total = total + term * _perm_sign(p)
    return total


def sl2n_embedding(C, matrix):
    """Entries of ``M(s) diag(g, theta g) M(s)^-1`` in ``A[s, u]``, expressed in ``C``."""
    A = C.A
    W = C.witness_ring
    s, u = W.var(C.s_name), W.var(C.u_name)
    n = len(matrix)
    g = [[W.var(x) for x in row] for row in matrix]
    tg = [[C.theta.images[x].embed(W) for x in row] for row in matrix]
    Z = W.zero
    half = A.field(1) / A.field(2)

    def block(a, b, c, d):
        return [ra + rb for ra, rb in zip(a, b)] + [rc + rd for rc, rd in zip(c, d)]

    I = [[W.one if i == j else Z for j in range(n)] for i in range(n)]
    O = [[Z] * n for _ in range(n)]

    def scal(X, c):
        return [[x * c for x in row] for row in X]

    M = block(scal(I, s), scal(I, -s), I, I)
    Minv = block(scal(I, u * half), scal(I, half), scal(I, -u * half), scal(I, half))
    D = block(g, O, O, tg)
    rel = Ideal(W, [s * u - 1])

    check = _matmul(M, Minv, rel.reduce)
    identity_ok = all(check[i][j] == (W.one if i == j else Z) for i in range(2 * n) for j in range(2 * n))
    E = _matmul(_matmul(M, D, rel.reduce), Minv, rel.reduce)
    return E, identity_ok


def sl2n_embedding_check(CH, matrix):
    """Entries lie in the contraction, the determinant is 1 and comultiplication is matrix-like."""
    C = CH.C
    E, identity_ok = sl2n_embedding(C, matrix)
    n2 = len(E)
    try:
        X = [[C.express(e) for e in row] for row in E]
    except ExpressionError as exc:
        return Verdict("embedding", False, {"error": str(exc)})
    det = determinant(X)
    det_ok = C.ideal.contains(det - 1)
    R2 = CH.T2.ring
    c1 = {g: R2.var(f"{g}__1") for g in C.gens}
    c1[C.tname] = R2.var(C.tname)
    c2 = {g: R2.var(f"{g}__2") for g in C.gens}
    c2[C.tname] = R2.var(C.tname)
    dsub = dict(CH.comul)
    dsub[C.tname] = R2.var(C.tname)
    coalg_ok = True
    for i in range(n2):
        for j in range(n2):
            lhs = X[i][j].substitute(dsub, R2)
            rhs = R2.zero
            for k in range(n2):
                rhs = rhs + X[i][k].substitute(c1, R2) * X[k][j].substitute(c2, R2)
            if not CH.T2.ideal.contains(lhs - rhs):
                coalg_ok = False
    ok = identity_ok and det_ok and coalg_ok
    return Verdict(
        "embedding",
        ok,
        {
            "witness_entries": [[str(e) for e in row] for row in E],
            "entries": [[str(x) for x in row] for row in X],
            "conjugator_inverse_ok": identity_ok,
            "det_is_one": det_ok,
            "coalgebra_map": coalg_ok,
        },
    )


def contracted_axioms_check(CH):
    v = CH.validate()
    return Verdict("hopf", v.ok and counit_vanishes_on_minus(CH), {**v.details, "comul": CH.to_json()["comul"]})
