"""Contraction algebras and the checks built on them.

For an algebra ``A`` with involution ``theta`` the contraction algebra is the
``k[t]``-subalgebra of ``A[s, 1/s]`` (``s^2 = t``) generated by the fixed
components ``a_+`` and the scaled anti-fixed components ``a_-/s``.  Its
presentation is the kernel of ``k[t, X] -> A[s, u]/(su - 1)``, computed by
one elimination of ``y`` (the variables of ``A``), ``s`` and ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coeff import quadratic_ext
from .errors import ExpressionError, ValidationError
from .ideals import (
    Ideal,
    _Elt,
    _make_key,
    _normal_form,
    buchberger,
    colon,
    ideal_equal,
    standard_monomial_counts,
    subalgebra_express,
)
from .poly import Block, Poly, PolyRing
from .presentations import (
    AlgebraMap,
    EigenSplit,
    FPAlgebra,
    _proportional,
    eigen_split,
    identity_involution,
    involutions_commute,
    map_is_iso,
    tensor,
    tensor_involution,
    validate_involution,
)


@dataclass
class Verdict:
    """Outcome of a check, with enough detail to audit it."""

    name: str
    ok: bool
    details: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "details": _jsonable(self.details)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Verdict):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def fresh_name(stem, taken):
    taken = set(taken)
    name = stem
    k = 0
    while name in taken:
        k += 1
        name = f"{stem}{k}"
    return name


# ---------------------------------------------------------------------------
# graph ideals with an elimination basis
# ---------------------------------------------------------------------------


class GraphIdeal:
    """Graph of ``k[back] -> A[aux]/(aux relations)`` with its elimination basis.

    The witness ring is ``field[A.vars + aux]``; internally every front
    variable gets a private name so that ``back`` may reuse any name.
    ``aux_rels`` is a callable ``(aux, back) -> list`` of polynomials in the
    ambient ring, where ``aux`` and ``back`` are dicts of ambient variables.
    """

    def __init__(self, A, aux, aux_rels, back, images):
        self.A = A
        self.aux = list(aux)
        self.back = list(back)
        fld = A.field
        self.witness_ring = PolyRing(fld, A.vars + self.aux)
        ynames = [f"_y{i}" for i in range(len(A.vars))]
        anames = [f"_a{j}" for j in range(len(self.aux))]
        for b in self.back:
            if b.startswith("_"):
                raise ValidationError(f"generator names may not start with '_': {b!r}")
        self.ambient = PolyRing(fld, ynames + anames + self.back)
        self._to_amb = dict(zip(A.vars + self.aux, ynames + anames))
        self.back_ring = PolyRing(fld, self.back)
        amb = self.ambient
        gens = [self.to_ambient(r) for r in self._witness_rels()]
        gens += aux_rels(
            {a: amb.var(n) for a, n in zip(self.aux, anames)},
            {b: amb.var(b) for b in self.back},
        )
        for b in self.back:
            if b in images:
                gens.append(amb.var(b) - self.to_ambient(images[b]))
        self.nfront = len(ynames) + len(anames)
        self.order = Block(range(self.nfront), amb.n)
        self.gb = buchberger(gens, self.order)
        self._key = _make_key(self.order)
        self._basis = [_Elt(g.terms, g.lm(self.order), 0) for g in self.gb]
        nf = self.nfront
        rels = []
        for g in self.gb:
            if all(not any(e[:nf]) for e in g.terms):
                rels.append(Poly(self.back_ring, {e[nf:]: c for e, c in g.terms.items()}))
        self.ideal = Ideal(self.back_ring, rels)
        self.ideal.set_groebner(rels)

    def _witness_rels(self):
        ring = self.witness_ring
        return [r.embed(ring) for r in self.A.relations]

    def to_ambient(self, p):
        p = self.witness_ring(p) if not isinstance(p, Poly) or p.ring != self.witness_ring else p
        return p.substitute({v: self.ambient.var(self._to_amb[v]) for v in p.ring.names}, self.ambient)

    def express(self, f):
        """Preimage of ``f`` (in the witness ring) as a polynomial in ``back``."""
        p = self.to_ambient(f)
        r = _normal_form(p.terms, self._basis, self._key)
        nf = self.nfront
        for e in r:
            if any(e[:nf]):
                raise ExpressionError(f"{f} does not lie in the subalgebra")
        return Poly(self.back_ring, {e[nf:]: c for e, c in r.items()})

    def contains(self, f):
        try:
            self.express(f)
        except ExpressionError:
            return False
        return True


def _sqrt_aux(s, u, t):
    return [s * u - 1, t - s * s]


# ---------------------------------------------------------------------------
# the contraction
# ---------------------------------------------------------------------------


PLUS, MINUS_OVER, MINUS_TIMES = "plus", "minus_over", "minus_times"


class ContractionPresentation:
    """Presentation of the contraction algebra over ``k[t]``.

    ``algebra`` lives in ``field[t, gens]``; ``tags`` gives each generator's
    kind and ``witness`` its image in ``A[s, u]`` with ``u = 1/s``.
    """

    def __init__(self, A, theta, split, raw_4lambda=False, tname="t"):
        self.A = A
        self.theta = theta
        self.split = split
        self.raw_4lambda = raw_4lambda
        self.tname = tname
        self.s_name = fresh_name("s", A.vars)
        self.u_name = fresh_name("u", A.vars + [self.s_name])
        W = PolyRing(A.field, A.vars + [self.s_name, self.u_name])
        s, u = W.var(self.s_name), W.var(self.u_name)
        gens, tags, witness = [], {}, {}
        if not raw_4lambda:
            for n, p in split.plus:
                gens.append(n)
                tags[n] = PLUS
                witness[n] = p.embed(W)
            for n, p in split.minus:
                gens.append(n)
                tags[n] = MINUS_OVER
                witness[n] = u * p.embed(W)
        else:
            for n, p in split.plus:
                for ij in ("11", "22"):
                    g = f"{n}_{ij}"
                    gens.append(g)
                    tags[g] = PLUS
                    witness[g] = p.embed(W)
            for n, p in split.minus:
                g12, g21 = f"{n}_12", f"{n}_21"
                gens += [g12, g21]
                tags[g12] = MINUS_TIMES
                tags[g21] = MINUS_OVER
                witness[g12] = s * p.embed(W)
                witness[g21] = u * p.embed(W)
        if tname in gens or len(set(gens)) != len(gens):
            raise ValidationError(f"generator names {gens} clash with each other or with {tname!r}")
        self.gens = gens
        self.tags = tags
        self.witness = witness
        images = dict(witness)
        images[tname] = s * s
        self.graph = GraphIdeal(
            A,
            [self.s_name, self.u_name],
            lambda aux, back: _sqrt_aux(aux[self.s_name], aux[self.u_name], back[tname]),
            [tname] + gens,
            images,
        )
        self.algebra = FPAlgebra.from_ideal(self.graph.ideal)

    @property
    def ring(self):
        return self.algebra.ring

    @property
    def ideal(self):
        return self.algebra.ideal

    @property
    def witness_ring(self):
        return self.graph.witness_ring

    @property
    def t(self):
        return self.ring.var(self.tname)

    def gens_with_tag(self, tag):
        return [g for g in self.gens if self.tags[g] == tag]

    def relations(self):
        return self.algebra.basis()

    def express(self, f):
        """Write an element of ``A[s, 1/s]`` in the generators (ExpressionError if impossible)."""
        return self.graph.express(f)

    def witness_map_images(self):
        W = self.witness_ring
        im = dict(self.witness)
        im[self.tname] = W.var(self.s_name) ** 2
        return im

    def witness_sound(self):
        """Every relation vanishes on the witness images in ``A[s, u]/(su - 1)``."""
        W = self.witness_ring
        target = Ideal(W, [r.embed(W) for r in self.A.relations] + [W.var(self.s_name) * W.var(self.u_name) - 1])
        im = self.witness_map_images()
        return all(target.contains(r.substitute(im, W)) for r in self.ideal.gens)

    def to_json(self):
        return {
            "field": self.A.field.to_json(),
            "t": self.tname,
            "gens": [{"name": g, "tag": self.tags[g], "witness": str(self.witness[g])} for g in self.gens],
            "relations": self.relations(),
            "sqrt_t": self.s_name,
            "inv_sqrt_t": self.u_name,
        }


def contract(A, theta, raw_4lambda=False, plus_names=None, minus_names=None, split=None):
    """Presentation of the contraction algebra of ``(A, theta)``."""
    if not isinstance(theta, AlgebraMap):
        theta = validate_involution(A, theta)
    if split is None:
        split = eigen_split(A, theta, plus_names, minus_names)
    return ContractionPresentation(A, theta, split, raw_4lambda=raw_4lambda)


# ---------------------------------------------------------------------------
# fibers
# ---------------------------------------------------------------------------


@dataclass
class FiberAlgebra:
    algebra: FPAlgebra
    t_value: object
    source: ContractionPresentation

    def is_zero_ring(self):
        return self.algebra.is_zero_ring()

    def to_json(self):
        d = self.algebra.to_json()
        d["t"] = str(self.t_value)
        d["zero_ring"] = self.is_zero_ring()
        return d


def _fiber(C, value, field=None):
    fld = field or C.A.field
    ring = PolyRing(fld, C.gens)
    images = {g: ring.var(g) for g in C.gens}
    images[C.tname] = ring.const(value)
    rels = [r.substitute(images, ring) for r in C.ideal.gens]
    return FPAlgebra.from_ideal(Ideal(ring, rels))


def fiber_at_zero(C):
    return FiberAlgebra(_fiber(C, 0), 0, C)


def fiber_at_unit(C, t0):
    t0 = C.A.field(t0)
    if not t0:
        raise ValidationError("t0 must be nonzero; use fiber_at_zero for t = 0")
    return FiberAlgebra(_fiber(C, t0), t0, C)


def _witness_at(C, alpha, target_ring):
    """Witness images with ``s := alpha`` (and ``u := 1/alpha``) in ``target_ring``."""
    ainv = 1 / alpha if not hasattr(alpha, "inverse") else alpha.inverse()
    imgs = {v: target_ring.var(v) for v in C.A.vars}
    imgs[C.s_name] = target_ring.const(alpha)
    imgs[C.u_name] = target_ring.const(ainv)
    return {g: C.witness[g].substitute(imgs, target_ring) for g in C.gens}


def _inverse_images(C, root, target_ring):
    """``y -> cp*P + cm*root*M`` into the fiber ring (``root`` plays ``s``)."""
    plus = [target_ring.var(n) for n in C.split.plus_names]
    minus = [target_ring.var(n) * root for n in C.split.minus_names]
    out = {}
    for v in C.A.vars:
        r = C.split.reconstruct(v, plus, minus)
        out[v] = r if r is not None else target_ring.zero
    return out


def _require_normalized(C, what):
    if C.raw_4lambda:
        raise ValidationError(f"{what} expects the normalized presentation (raw_4lambda=False)")


def unit_fiber_iso(C, t0, alpha):
    """Verify that the fiber at ``t0 = alpha^2`` is isomorphic to ``A``."""
    _require_normalized(C, "unit_fiber_iso")
    fld = C.A.field
    t0, alpha = fld(t0), fld(alpha)
    if alpha * alpha != t0:
        raise ValidationError(f"alpha^2 = {alpha * alpha} differs from t0 = {t0}")
    F = fiber_at_unit(C, t0).algebra
    A = C.A
    phi = AlgebraMap(F, A, _witness_at(C, alpha, A.ring))
    psi = AlgebraMap(A, F, _inverse_images(C, alpha, F.ring))
    ok = map_is_iso(phi, psi)
    return Verdict("unit_fiber", ok, {"t0": str(t0), "alpha": str(alpha), "to_A": phi.to_json(), "from_A": psi.to_json()})


def _pick_gen_name(taken):
    for g in ("i", "j", "r", "x"):
        if g not in taken:
            return g
    return fresh_name("r", taken)


def fiber_descent_check(C, t0):
    """Over ``k[x]/(x^2 - t0)`` the fiber at ``t0`` becomes isomorphic to ``A``."""
    _require_normalized(C, "fiber_descent_check")
    k = C.A.field
    t0 = k(t0)
    if not t0:
        raise ValidationError("t0 must be nonzero")
    if k.sqrt(t0) is not None:
        raise ValidationError(f"t0 = {t0} is a square in {k}; use unit_fiber_iso")
    K = quadratic_ext(k, t0, _pick_gen_name(C.A.vars + C.gens))
    x = K.gen
    F = fiber_at_unit(C, t0).algebra.with_field(K)
    AK = C.A.with_field(K)
    phi = AlgebraMap(F, AK, _witness_at(C, x, AK.ring))
    psi = AlgebraMap(AK, F, _inverse_images(C, x, F.ring))
    ok = map_is_iso(phi, psi)
    return Verdict(
        "descent",
        ok,
        {"t0": str(t0), "extension": repr(K), "to_A": phi.to_json(), "from_A": psi.to_json()},
    )


def is_t_torsion_free(ideal, tname="t"):
    return ideal_equal(colon(ideal, ideal.ring.var(tname)), ideal)


def flatness_check(C):
    ok = is_t_torsion_free(C.ideal, C.tname)
    return Verdict("flat", ok, {"colon_equals_ideal": ok})


# ---------------------------------------------------------------------------
# extended Rees algebra and the associated graded ring
# ---------------------------------------------------------------------------


class ReesPresentation:
    """Extended Rees algebra ``A[s] + sum I^n s^-n`` of ``(A, I)``.

    Generators: ``s``, one ``Y`` per variable of ``A`` (same names) and one
    ``z`` per generator of ``I`` (standing for ``g/s``).
    """

    def __init__(self, A, igens):
        self.A = A
        self.igens = [A.ring(g) for g in igens]
        self.s_name = fresh_name("s", A.vars)
        self.u_name = fresh_name("u", A.vars + [self.s_name])
        taken = A.vars + [self.s_name, self.u_name]
        self.z_names = []
        for j in range(len(self.igens)):
            z = fresh_name(f"z{j + 1}", taken)
            taken.append(z)
            self.z_names.append(z)
        W = PolyRing(A.field, A.vars + [self.s_name, self.u_name])
        s, u = W.var(self.s_name), W.var(self.u_name)
        images = {self.s_name: s}
        for v in A.vars:
            images[v] = W.var(v)
        for z, g in zip(self.z_names, self.igens):
            images[z] = u * g.embed(W)
        self.witness = images
        self.graph = GraphIdeal(
            A,
            [self.s_name, self.u_name],
            lambda aux, back: [aux[self.s_name] * aux[self.u_name] - 1],
            [self.s_name] + A.vars + self.z_names,
            images,
        )
        self.algebra = FPAlgebra.from_ideal(self.graph.ideal)

    def graded(self):
        """``gr_I(A)``: the Rees algebra modulo ``s``."""
        names = self.A.vars + self.z_names
        ring = PolyRing(self.A.field, names)
        imgs = {n: ring.var(n) for n in names}
        imgs[self.s_name] = ring.zero
        return FPAlgebra.from_ideal(Ideal(ring, [r.substitute(imgs, ring) for r in self.algebra.relations]))


def anti_invariant_ideal_gens(C):
    return [p for _, p in C.split.minus]


def graded_fiber_check(C, max_degree=6):
    """Compare the ``t = 0`` fiber with ``gr_I(A)`` computed from the Rees algebra."""
    _require_normalized(C, "graded_fiber_check")
    A = C.A
    F = fiber_at_zero(C).algebra
    R = ReesPresentation(A, anti_invariant_ideal_gens(C))
    G = R.graded()
    # fiber -> gr: P -> class of a_+ in degree 0, M -> z
    to_gr = {}
    for n, p in C.split.plus:
        to_gr[n] = p.embed(G.ring)
    for n, z in zip(C.split.minus_names, R.z_names):
        to_gr[n] = G.ring.var(z)
    # gr -> fiber: y -> plus part (minus part lies in I), z -> M
    from_gr = _inverse_images(C, 0, F.ring)
    for n, z in zip(C.split.minus_names, R.z_names):
        from_gr[z] = F.ring.var(n)
    phi = AlgebraMap(F, G, to_gr)
    psi = AlgebraMap(G, F, from_gr)
    iso = map_is_iso(phi, psi)
    hf_fiber = standard_monomial_counts(F.ideal, max_degree)
    hf_gr = standard_monomial_counts(G.ideal, max_degree)
    ok = iso and hf_fiber == hf_gr
    return Verdict(
        "fiber0",
        ok,
        {
            "fiber_relations": F.basis(),
            "graded_relations": G.basis(),
            "iso": iso,
            "hilbert_fiber": hf_fiber,
            "hilbert_graded": hf_gr,
            "zero_ring": F.is_zero_ring(),
        },
    )


def rees_comparison(C):
    """The contraction with ``t := s^2`` equals the extended Rees algebra of ``(A[s], I)``."""
    _require_normalized(C, "rees_comparison")
    A = C.A
    R = ReesPresentation(A, anti_invariant_ideal_gens(C))
    s_name = R.s_name
    names = [s_name] + C.gens
    ring = PolyRing(A.field, names)
    imgs = {g: ring.var(g) for g in C.gens}
    imgs[C.tname] = ring.var(s_name) ** 2
    Cs = FPAlgebra.from_ideal(Ideal(ring, [r.substitute(imgs, ring) for r in C.ideal.gens]))
    Rr = R.algebra.ring
    to_rees = {s_name: Rr.var(s_name)}
    for n, p in C.split.plus:
        to_rees[n] = p.embed(Rr)
    for n, z in zip(C.split.minus_names, R.z_names):
        to_rees[n] = Rr.var(z)
    from_rees = _inverse_images(C, ring.var(s_name), ring)
    from_rees[s_name] = ring.var(s_name)
    for n, z in zip(C.split.minus_names, R.z_names):
        from_rees[z] = ring.var(n)
    phi = AlgebraMap(Cs, R.algebra, to_rees)
    psi = AlgebraMap(R.algebra, Cs, from_rees)
    ok = map_is_iso(phi, psi)
    return Verdict("rees", ok, {"rees_relations": R.algebra.basis(), "to_rees": phi.to_json(), "from_rees": psi.to_json()})


# ---------------------------------------------------------------------------
# localization and chart gluing
# ---------------------------------------------------------------------------


def eigen_sign(A, theta, f):
    f = A.ring(f)
    tf = theta(f)
    if A.equiv(tf, f):
        return 1
    if A.equiv(tf, -f):
        return -1
    return 0


def _localized_algebra(A, theta, f, sign, gname):
    B = FPAlgebra(A.field, A.vars + [gname], [r.embed(PolyRing(A.field, A.vars + [gname])) for r in A.relations])
    g = B.ring.var(gname)
    B = B.quotient([g * f.embed(B.ring) - 1])
    images = {v: theta.images[v].embed(B.ring) for v in A.vars}
    images[gname] = g * sign
    return B, validate_involution(B, images)


def _express_with_inverse(CB_target, elem, h_name, fbold_witness):
    """Express ``elem`` (in ``witness[h]``) where ``h`` stands for ``1/fbold``."""
    W = elem.ring
    n = elem.degree_in(h_name) if h_name in W.index else 0
    n = max(n, 0)
    for extra in range(3):
        N = n + extra
        # fbold^N * elem, with h*fbold = 1
        parts = elem.coefficient_polys([h_name])
        total = W.zero
        for (k,), c in parts.items():
            total = total + c * fbold_witness ** (N - k)
        try:
            return CB_target.express(total.embed(CB_target.witness_ring)), N
        except ExpressionError:
            continue
    raise ExpressionError(f"cannot write {elem} over the localization")


def localize_check(C, f, inv_name=None, h_name=None):
    """Contraction commutes with inverting an eigenvector ``f``."""
    _require_normalized(C, "localize_check")
    A, theta = C.A, C.theta
    f = A.ring(f)
    sign = eigen_sign(A, theta, f)
    if sign == 0:
        raise ValidationError(f"{f} is not an eigenvector of the involution")
    gname = inv_name or fresh_name("g", A.vars)
    B, thB = _localized_algebra(A, theta, f, sign, gname)
    CB = contract(B, thB)
    # A_f side: C plus h with h * fbold = 1
    W = C.witness_ring
    fw = f.embed(W)
    fbold_w = fw if sign == 1 else W.var(C.s_name) * fw
    fbold = C.express(fbold_w)
    h = h_name or fresh_name("h", C.gens + [C.tname])
    Lring = PolyRing(A.field, [C.tname] + C.gens + [h])
    L = FPAlgebra.from_ideal(
        Ideal(Lring, [r.embed(Lring) for r in C.ideal.gens] + [Lring.var(h) * fbold.embed(Lring) - 1])
    )
    # L -> CB
    WB = CB.witness_ring
    sB, uB = WB.var(CB.s_name), WB.var(CB.u_name)
    to_B = {C.tname: CB.t}
    sub = {v: WB.var(v) for v in A.vars}
    sub[C.s_name], sub[C.u_name] = sB, uB
    for gname_ in C.gens:
        to_B[gname_] = CB.express(C.witness[gname_].substitute(sub, WB))
    inv_f = WB.var(gname) if sign == 1 else uB * WB.var(gname)
    to_B[h] = CB.express(inv_f)
    # CB -> L: witness in B[s, u]; g -> 1/f, i.e. h (plus) or s*h (minus)
    Wh = PolyRing(A.field, list(W.names) + [h])
    subB = {v: Wh.var(v) for v in A.vars}
    subB[CB.s_name], subB[CB.u_name] = Wh.var(C.s_name), Wh.var(C.u_name)
    subB[gname] = Wh.var(h) if sign == 1 else Wh.var(C.s_name) * Wh.var(h)
    from_B = {CB.tname: Lring.var(C.tname)}
    for gb in CB.gens:
        elem = CB.witness[gb].substitute(subB, Wh)
        expr, N = _express_with_inverse(C, elem, h, fbold_w.embed(Wh))
        from_B[gb] = expr.embed(Lring) * Lring.var(h) ** N
    phi = AlgebraMap(L, CB.algebra, to_B)
    psi = AlgebraMap(CB.algebra, L, from_B)
    ok = map_is_iso(phi, psi)
    return Verdict(
        "localize",
        ok,
        {
            "f": str(f),
            "sign": "plus" if sign == 1 else "minus",
            "f_bold": str(fbold),
            "localized_relations": L.basis(),
            "contracted_localization": CB.relations(),
            "to_B": phi.to_json(),
            "from_B": psi.to_json(),
        },
    )


def chart_gluing(C):
    """Transition between the two affine charts of the sign line.

    ``C`` must be the contraction of ``k[w]`` with ``w -> -w``.  The second
    chart uses ``w2 = 1/w``; on the overlap ``v1 = 1/(t*v2)``.
    """
    A = C.A
    if len(A.vars) != 1 or A.relations or len(C.gens) != 1 or C.tags[C.gens[0]] != MINUS_OVER:
        raise ValidationError("chart gluing needs the sign line k[w], w -> -w")
    w = A.vars[0]
    v = C.gens[0]
    v1, v2 = v + "1", v + "2"
    loc = localize_check(C, w)
    # overlap: k[w, g]/(wg - 1), second chart coordinate w2 = g
    g = fresh_name("g", A.vars)
    B, thB = _localized_algebra(A, C.theta, A.ring.var(w), -1, g)
    CB = contract(B, thB)
    WB = CB.witness_ring
    uB = WB.var(CB.u_name)
    img1 = CB.express(uB * WB.var(w))  # chart-1 coordinate v1 = w/s
    img2 = CB.express(uB * WB.var(g))  # chart-2 coordinate v2 = w2/s
    # transition identity v1 * (t * v2) = 1 on the overlap
    ident = img1 * img2 * CB.t - 1
    ok_ident = CB.ideal.contains(ident)
    # second chart is the same contraction with w2; its localization at w2 gives the same overlap
    A2 = FPAlgebra(A.field, [w + "2"])
    C2 = contract(A2, {w + "2": f"-{w}2"}, minus_names=[v2])
    loc2 = localize_check(C2, w + "2")
    ok = bool(loc) and bool(loc2) and ok_ident
    return Verdict(
        "chart_gluing",
        ok,
        {
            "transition": f"{v1} -> 1/({C.tname}*{v2})",
            "overlap_relations": CB.relations(),
            "v1_on_overlap": str(img1),
            "v2_on_overlap": str(img2),
            "identity_holds": ok_ident,
            "chart1_localization": loc.ok,
            "chart2_localization": loc2.ok,
        },
    )


# ---------------------------------------------------------------------------
# double contraction
# ---------------------------------------------------------------------------


_CLASSES = (("p", "p"), ("p", "m"), ("m", "p"), ("m", "m"))


class DoubleContraction:
    """Contraction along two commuting involutions over ``k[t1, t2]``."""

    def __init__(self, A, theta, eta, t_names=("t1", "t2")):
        if not involutions_commute(theta, eta):
            raise ValidationError("the two involutions do not commute")
        self.A, self.theta, self.eta = A, theta, eta
        self.t_names = tuple(t_names)
        fld = A.field
        quarter = fld(1) / fld(4)
        kept = {c: [] for c in _CLASSES}
        for v in A.vars:
            x = A.ring.var(v)
            tx, ex = theta.images[v], eta.images[v]
            tex = theta(ex)
            for c in _CLASSES:
                e1 = 1 if c[0] == "p" else -1
                e2 = 1 if c[1] == "p" else -1
                comp = (x + tx * e1 + ex * e2 + tex * (e1 * e2)) * quarter
                if not A.reduce(comp):
                    continue
                if _proportional(A, comp, kept[c]) is not None:
                    continue
                kept[c].append((f"{v}_{c[0]}{c[1]}", comp))
        self.classes = kept
        names = []
        for c in _CLASSES:
            names += [n for n, _ in kept[c]]
        self.gens = names
        self.s_names = [fresh_name(f"s{k}", A.vars) for k in (1, 2)]
        self.u_names = [fresh_name(f"u{k}", A.vars + self.s_names) for k in (1, 2)]
        aux = self.s_names + self.u_names
        W = PolyRing(fld, A.vars + aux)
        s1, s2 = W.var(self.s_names[0]), W.var(self.s_names[1])
        u1, u2 = W.var(self.u_names[0]), W.var(self.u_names[1])
        weight = {("p", "p"): W.one, ("p", "m"): u2, ("m", "p"): u1, ("m", "m"): u1 * u2}
        images = {self.t_names[0]: s1 * s1, self.t_names[1]: s2 * s2}
        self.witness = {}
        for c in _CLASSES:
            for n, p in kept[c]:
                self.witness[n] = weight[c] * p.embed(W)
                images[n] = self.witness[n]
        sn, un, tn = self.s_names, self.u_names, self.t_names

        def aux_rels(a, b):
            return [
                a[sn[0]] * a[un[0]] - 1,
                a[sn[1]] * a[un[1]] - 1,
                b[tn[0]] - a[sn[0]] ** 2,
                b[tn[1]] - a[sn[1]] ** 2,
            ]

        self.graph = GraphIdeal(A, aux, aux_rels, list(self.t_names) + names, images)
        self.algebra = FPAlgebra.from_ideal(self.graph.ideal)

    @property
    def ideal(self):
        return self.algebra.ideal

    def relations(self):
        return self.algebra.basis()

    def to_json(self):
        return {
            "t": list(self.t_names),
            "gens": [{"name": g, "witness": str(self.witness[g])} for g in self.gens],
            "relations": self.relations(),
        }


def double_contract(A, theta, eta):
    """Double contraction and the verdict that swapping the involutions swaps ``t1, t2``."""
    if not isinstance(theta, AlgebraMap):
        theta = validate_involution(A, theta)
    if not isinstance(eta, AlgebraMap):
        eta = validate_involution(A, eta)
    D1 = DoubleContraction(A, theta, eta)
    D2 = DoubleContraction(A, eta, theta)
    # a generator of class (e1, e2) in D2 is the (e2, e1) generator of D1
    ring = D1.algebra.ring
    mapping = {D2.t_names[0]: D1.t_names[1], D2.t_names[1]: D1.t_names[0]}
    for g in D2.gens:
        base, cls = g.rsplit("_", 1)
        mapping[g] = f"{base}_{cls[1]}{cls[0]}"
    ok = set(mapping.values()) == set(ring.names)
    if ok:
        swapped = Ideal(ring, [r.substitute({n: ring.var(mapping[n]) for n in D2.algebra.ring.names}, ring) for r in D2.ideal.gens])
        ok = ideal_equal(swapped, D1.ideal)
    return D1, Verdict("double", ok, {"presentation": D1.to_json(), "swapped_relations": D2.relations()})


# ---------------------------------------------------------------------------
# monoidality, base change, surjections
# ---------------------------------------------------------------------------


def tensor_contraction(C1, C2):
    """Contraction of ``A1 (x) A2`` with generators named after those of ``C1`` and ``C2``.

    Returns the presentation and the renamings ``(left, right)`` of generator
    names.  When the variable names of the factors clash the generators are
    suffixed ``__1``/``__2``, exactly like the variables.
    """
    suffix = bool(set(C1.gens) & set(C2.gens)) or bool(set(C1.A.vars) & set(C2.A.vars))
    T = tensor(C1.A, C2.A, force_suffix=suffix)
    thT = tensor_involution(T, C1.theta, C2.theta)
    ln = (lambda n: f"{n}__1") if suffix else (lambda n: n)
    rn = (lambda n: f"{n}__2") if suffix else (lambda n: n)
    s1 = C1.split.renamed(T, T.left_map, ln)
    s2 = C2.split.renamed(T, T.right_map, rn)
    split = EigenSplit(T, s1.plus + s2.plus, s1.minus + s2.minus, dict(s1.recon))
    np1 = len(s1.plus)
    nm1 = len(s1.minus)
    for v, ((pi, cp), (mi, cm)) in s2.recon.items():
        split.recon[v] = ((None if pi is None else pi + np1, cp), (None if mi is None else mi + nm1, cm))
    CT = ContractionPresentation(T, thT, split, raw_4lambda=C1.raw_4lambda)
    return CT, {g: ln(g) for g in C1.gens}, {g: rn(g) for g in C2.gens}


def tensor_over_kt(C1, C2, left, right):
    """``C1 (x)_{k[t]} C2`` as an algebra on ``t`` plus the renamed generators."""
    names = [C1.tname] + [left[g] for g in C1.gens] + [right[g] for g in C2.gens]
    ring = PolyRing(C1.A.field, names)
    m1 = {g: ring.var(left[g]) for g in C1.gens}
    m1[C1.tname] = ring.var(C1.tname)
    m2 = {g: ring.var(right[g]) for g in C2.gens}
    m2[C2.tname] = ring.var(C1.tname)
    rels = [r.substitute(m1, ring) for r in C1.ideal.gens] + [r.substitute(m2, ring) for r in C2.ideal.gens]
    return FPAlgebra.from_ideal(Ideal(ring, rels))


def tensor_compat_check(C1, C2):
    """Contraction of the tensor product equals the tensor product of contractions."""
    CT, left, right = tensor_contraction(C1, C2)
    P = tensor_over_kt(C1, C2, left, right)
    ok = set(CT.ring.names) == set(P.ring.names)
    if ok:
        ok = ideal_equal(CT.ideal, P.ideal.embed(CT.ring))
    # the matched witnesses must agree as well
    if ok:
        W = CT.witness_ring
        for src, ren, inj in ((C1, left, CT.A.inj_left), (C2, right, CT.A.inj_right)):
            for g in src.gens:
                sub = {v: inj(src.A.ring.var(v)).embed(W) for v in src.A.vars}
                sub[src.s_name] = W.var(CT.s_name)
                sub[src.u_name] = W.var(CT.u_name)
                if src.witness[g].substitute(sub, W) != CT.witness[ren[g]]:
                    ok = False
    return Verdict("tensor", ok, {"tensor_contraction": CT.relations(), "product": P.basis()})


def flat_base_change_check(C, field):
    """Contract after extending scalars vs extend after contracting."""
    k = C.A.field
    if field != k and not (field.kind == "quadratic" and field.base == k):
        raise ValidationError(f"unsupported extension {k} -> {field}")
    AK = C.A.with_field(field)
    thK = validate_involution(AK, {v: C.theta.images[v].embed(AK.ring) for v in C.A.vars})
    CK = contract(
        AK,
        thK,
        raw_4lambda=C.raw_4lambda,
        plus_names=C.split.plus_names,
        minus_names=C.split.minus_names,
    )
    ext = C.ideal.embed(CK.ring) if CK.ring.names == C.ring.names else None
    ok = ext is not None and ideal_equal(CK.ideal, ext)
    return Verdict("base_change", ok, {"extension": repr(field), "relations": CK.relations()})


def induced_map(C1, C2):
    """Map of contractions induced by an equivariant map ``A1 -> A2`` that is the identity on variables."""
    W2 = C2.witness_ring
    sub = {v: W2.var(v) for v in C1.A.vars}
    sub[C1.s_name], sub[C1.u_name] = W2.var(C2.s_name), W2.var(C2.u_name)
    images = {C1.tname: C2.t}
    for g in C1.gens:
        images[g] = C2.express(C1.witness[g].substitute(sub, W2))
    return AlgebraMap(C1.algebra, C2.algebra, images)


def surjection_check(C, extra_relations):
    """For a theta-stable ideal J, the contraction of ``A -> A/J`` is surjective."""
    A, theta = C.A, C.theta
    Q = A.quotient(extra_relations)
    thQ = validate_involution(Q, theta.images)
    CQ = contract(Q, thQ)
    f = induced_map(C, CQ)
    wd = f.is_well_defined()
    # surjectivity: every generator of CQ lies in the subalgebra generated by the images
    names = [f"_z{i}" for i in range(len(C.ring.names))]
    surj = True
    for g in [CQ.tname] + CQ.gens:
        if subalgebra_express(CQ.ideal, [f.images[n] for n in C.ring.names], CQ.ring.var(g), names) is None:
            surj = False
    return Verdict("surjection", wd and surj, {"well_defined": wd, "surjective": surj, "map": f.to_json()})


def trivial_check(C):
    """With the identity involution the contraction is ``A[t]``."""
    A = C.A
    ring = PolyRing(A.field, [C.tname] + A.vars)
    ok = C.ring.names == ring.names and ideal_equal(C.ideal, A.ideal.embed(ring))
    return Verdict("trivial", ok, {"relations": C.relations()})


def identity_contraction(A):
    th = identity_involution(A)
    return contract(A, th, plus_names=A.vars)
