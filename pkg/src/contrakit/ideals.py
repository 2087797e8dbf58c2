"""Buchberger's algorithm and the ideal operations built on it.

Reduced monic Groebner bases are the canonical form of an ideal: two ideals
of the same ring are equal iff their reduced bases (for one fixed order)
coincide.  Elimination uses block orders, saturation the Rabinowitsch trick,
and kernels of ring maps the graph ideal.
"""

from __future__ import annotations

import contextlib
import contextvars
import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NotInvertibleError, RingMismatchError, ResourceLimitError, ValidationError
from .poly import GREVLEX, Block, Poly, PolyRing


@dataclass(frozen=True)
class Limits:
    max_pairs: int = 10**6
    max_degree: int = 60


def _env_limits():
    return Limits(
        max_pairs=int(os.environ.get("CONTRAKIT_MAX_PAIRS", 10**6)),
        max_degree=int(os.environ.get("CONTRAKIT_MAX_DEGREE", 60)),
    )


_LIMITS = contextvars.ContextVar("contrakit_limits", default=None)


def current_limits():
    lim = _LIMITS.get()
    return lim if lim is not None else _env_limits()


@contextlib.contextmanager
def resource_limits(max_pairs=None, max_degree=None):
    """Temporarily override the Groebner caps for the current context."""
    base = current_limits()
    lim = Limits(
        max_pairs=base.max_pairs if max_pairs is None else max_pairs,
        max_degree=base.max_degree if max_degree is None else max_degree,
    )
    token = _LIMITS.set(lim)
    try:
        yield lim
    finally:
        _LIMITS.reset(token)


class Counters:
    """Work counters, reported by the CLI.  Deterministic for fixed input."""

    def __init__(self):
        self.reset()

    def reset(self):
        self.groebner_calls = 0
        self.spairs = 0
        self.zero_reductions = 0

    def snapshot(self):
        return {
            "groebner_calls": self.groebner_calls,
            "spairs": self.spairs,
            "zero_reductions": self.zero_reductions,
        }


COUNTERS = Counters()


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _inv(c):
    if isinstance(c, Fraction):
        if not c:
            raise NotInvertibleError("division by zero")
        return 1 / c
    return c.inverse()


class _Elt:
    __slots__ = ("terms", "lm", "sugar")

    def __init__(self, terms, lm, sugar):
        self.terms = terms
        self.lm = lm
        self.sugar = sugar


def _make_key(order):
    cache = {}
    okey = order.key

    def key(e):
        k = cache.get(e)
        if k is None:
            k = cache[e] = okey(e)
        return k

    return key


def _normal_form(terms, basis, key, full=True):
    """Remainder of ``terms`` on division by ``basis`` (monic elements)."""
    p = dict(terms)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        red = None
        for g in basis:
            if _divides(g.lm, e):
                red = g
                break
        if red is None:
            rem[e] = c
            del p[e]
            if not full:
                rem.update(p)
                return rem
            continue
        q = tuple([x - y for x, y in zip(e, red.lm)])
        for ge, gc in red.terms.items():
            ne = tuple([x + y for x, y in zip(ge, q)])
            v = p.get(ne)
            nv = -c * gc if v is None else v - c * gc
            if nv:
                p[ne] = nv
            elif v is not None:
                del p[ne]
    return rem


def _monic(terms, key):
    lm = max(terms, key=key)
    c = terms[lm]
    if c == 1:
        return terms, lm
    inv = _inv(c)
    return {e: v * inv for e, v in terms.items()}, lm


def _spoly(f, g, lcm):
    qf = tuple([x - y for x, y in zip(lcm, f.lm)])
    qg = tuple([x - y for x, y in zip(lcm, g.lm)])
    out = {}
    for e, c in f.terms.items():
        out[tuple([x + y for x, y in zip(e, qf)])] = c
    for e, c in g.terms.items():
        ne = tuple([x + y for x, y in zip(e, qg)])
        v = out.get(ne)
        nv = -c if v is None else v - c
        if nv:
            out[ne] = nv
        elif v is not None:
            del out[ne]
    return out


def buchberger(polys, order=GREVLEX, limits=None):
    """Reduced monic Groebner basis of the ideal generated by ``polys``.

    Pairs are processed by (sugar, lcm) with the coprime and chain criteria
    applied through the Gebauer-Moeller update.  Output is sorted by
    increasing leading monomial.
    """
    polys = [p for p in polys if p]
    if not polys:
        return []
    ring = polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise RingMismatchError("generators live in different rings")
    limits = limits or current_limits()
    COUNTERS.groebner_calls += 1
    key = _make_key(order)

    elts = []  # every element ever added, indexed
    active = []  # indices of elements not made redundant
    pairs = set()

    def deg(e):
        return sum(e)

    def update(h_idx):
        nonlocal pairs, active
        h = elts[h_idx]
        hlm = h.lm
        cands = [(gi, _lcm(hlm, elts[gi].lm), _coprime(hlm, elts[gi].lm)) for gi in active]
        # chain criterion among the new pairs (Gebauer-Moeller)
        kept = []
        for idx, (gi, l, cop) in enumerate(cands):
            if cop:
                kept.append((gi, l, cop))
                continue
            rest = cands[idx + 1:]
            if any(_divides(l2, l) for _, l2, _ in rest) or any(
                _divides(l2, l) for _, l2, _ in kept
            ):
                continue
            kept.append((gi, l, cop))
        # coprime criterion
        new_pairs = {(gi, h_idx) for gi, l, cop in kept if not cop}
        old = set()
        for (i, j) in pairs:
            lij = _lcm(elts[i].lm, elts[j].lm)
            if (
                not _divides(hlm, lij)
                or _lcm(elts[i].lm, hlm) == lij
                or _lcm(elts[j].lm, hlm) == lij
            ):
                old.add((i, j))
        pairs = old | new_pairs
        active = [gi for gi in active if not _divides(hlm, elts[gi].lm)]
        active.append(h_idx)

    def add(terms, sugar):
        terms, lm = _monic(terms, key)
        if deg(lm) > limits.max_degree:
            raise ResourceLimitError(
                f"basis element of degree {deg(lm)} exceeds max_degree={limits.max_degree}"
            )
        elts.append(_Elt(terms, lm, sugar))
        update(len(elts) - 1)

    inputs = sorted((dict(p.terms) for p in polys), key=lambda t: key(max(t, key=key)))
    for t in inputs:
        basis = [elts[i] for i in active]
        r = _normal_form(t, basis, key)
        if r:
            add(r, max(sum(e) for e in r))

    processed = 0
    while pairs:
        def pair_key(pr):
            i, j = pr
            fi, fj = elts[i], elts[j]
            l = _lcm(fi.lm, fj.lm)
            s = max(fi.sugar + deg(l) - deg(fi.lm), fj.sugar + deg(l) - deg(fj.lm))
            return (s, key(l), i, j)

        pr = min(pairs, key=pair_key)
        pairs.discard(pr)
        processed += 1
        COUNTERS.spairs += 1
        if processed > limits.max_pairs:
            raise ResourceLimitError(f"more than max_pairs={limits.max_pairs} S-pairs")
        i, j = pr
        fi, fj = elts[i], elts[j]
        l = _lcm(fi.lm, fj.lm)
        sugar = pair_key(pr)[0]
        s = _spoly(fi, fj, l)
        if not s:
            COUNTERS.zero_reductions += 1
            continue
        basis = [elts[k] for k in active]
        r = _normal_form(s, basis, key)
        if not r:
            COUNTERS.zero_reductions += 1
            continue
        add(r, sugar)

    # reduce
    basis = [elts[i] for i in active]
    basis.sort(key=lambda g: key(g.lm))
    minimal = []
    for g in basis:
        if not any(_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _normal_form(g.terms, others, key)
        r, lm = _monic(r, key)
        reduced.append(_Elt(r, lm, g.sugar))
    reduced.sort(key=lambda g: key(g.lm))
    return [Poly(ring, g.terms) for g in reduced]


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def is_groebner(basis, order=GREVLEX):
    """True iff every S-polynomial of ``basis`` reduces to zero."""
    key = _make_key(order)
    elts = []
    for p in basis:
        if p:
            t, lm = _monic(dict(p.terms), key)
            elts.append(_Elt(t, lm, 0))
    for f, g in itertools.combinations(elts, 2):
        s = _spoly(f, g, _lcm(f.lm, g.lm))
        if s and _normal_form(s, elts, key):
            return False
    return True


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """Ideal of a :class:`PolyRing` given by generators, with a per-order basis cache."""

    def __init__(self, ring, gens=()):
        self.ring = ring
        self.gens = [g for g in (ring(x) for x in gens) if g]
        self._gb = {}

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(str(g) for g in self.gens)}])"

    def groebner(self, order=GREVLEX, limits=None):
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.gens, order, limits)
            self._gb[order] = gb
        return list(gb)

    def set_groebner(self, basis, order=GREVLEX):
        """Record an already reduced basis (e.g. one produced by elimination)."""
        self._gb[order] = list(basis)

    def reduce(self, p, order=GREVLEX):
        p = self.ring(p)
        gb = self.groebner(order)
        if not gb or not p:
            return p
        key = _make_key(order)
        basis = [_Elt(g.terms, g.lm(order), 0) for g in gb]
        return Poly(self.ring, _normal_form(p.terms, basis, key))

    def contains(self, p):
        return not self.reduce(p)

    __contains__ = contains

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self):
        return not self.gens

    def __add__(self, other):
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def embed(self, ring):
        return Ideal(ring, [g.embed(ring) for g in self.gens])

    def basis_strings(self, order=GREVLEX):
        return [str(g) for g in self.groebner(order)]


def groebner(I, order=GREVLEX, limits=None):
    return I.groebner(order, limits)


def reduce(p, I, order=GREVLEX):
    return I.reduce(p, order)


def ideal_equal(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideal_equal needs ideals of the same ring")
    return I.groebner() == J.groebner()


def _fresh(ring, stem):
    name = stem
    k = 0
    while name in ring.index:
        k += 1
        name = f"{stem}{k}"
    return name


def eliminate(I, drop):
    """``I`` intersected with the polynomial ring in the variables not in ``drop``."""
    ring = I.ring
    drop = [d for d in ring.names if d in set(drop)]
    keep = [v for v in ring.names if v not in set(drop)]
    if not drop:
        return Ideal(ring, I.gens)
    big = PolyRing(ring.field, drop + keep)
    order = Block(range(len(drop)), big.n)
    gb = buchberger([g.embed(big) for g in I.gens], order)
    small = PolyRing(ring.field, keep)
    nd = len(drop)
    out = []
    for g in gb:
        if all(not any(e[:nd]) for e in g.terms):
            out.append(Poly(small, {e[nd:]: c for e, c in g.terms.items()}))
    J = Ideal(small, out)
    J.set_groebner(out)
    return J


def saturate(I, f):
    """``I : f^infinity`` via a fresh variable ``z`` with ``z*f - 1``."""
    ring = I.ring
    f = ring(f)
    z = _fresh(ring, "_z")
    big = ring.extend([z])
    gens = [g.embed(big) for g in I.gens] + [big.var(z) * f.embed(big) - 1]
    J = eliminate(Ideal(big, gens), [z])
    return Ideal(ring, [g.embed(ring) for g in J.gens])


def intersect(I, J):
    ring = I.ring
    w = _fresh(ring, "_w")
    big = ring.extend([w])
    W = big.var(w)
    gens = [W * g.embed(big) for g in I.gens] + [(1 - W) * g.embed(big) for g in J.gens]
    K = eliminate(Ideal(big, gens), [w])
    return Ideal(ring, [g.embed(ring) for g in K.gens])


def exact_divide(h, f, order=GREVLEX):
    """``h / f``; raises ValidationError if ``f`` does not divide ``h``."""
    q = h.ring.zero
    r = h
    fe, fc = f.lt(order)
    finv = _inv(fc)
    while r:
        e, c = r.lt(order)
        if not _divides(fe, e):
            raise ValidationError(f"{f} does not divide {h}")
        m = tuple(x - y for x, y in zip(e, fe))
        q = q + Poly(h.ring, {m: c * finv})
        r = r - f.mul_term(m, c * finv)
    return q


def colon(I, f):
    """``{g : g*f in I}``."""
    ring = I.ring
    f = ring(f)
    if not f:
        return Ideal(ring, [ring.one])
    if not I.gens:
        return Ideal(ring, [])
    K = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [exact_divide(g, f) for g in K.gens])


def map_kernel(source_names, target, images):
    """Kernel of ``field[source_names] -> target`` sending names to ``images``.

    ``target`` is an :class:`Ideal` (the relations of the target quotient
    ring) or any object with an ``ideal`` attribute.  Source names must be
    disjoint from the target's variable names.
    """
    tI = target if isinstance(target, Ideal) else target.ideal
    tring = tI.ring
    source_names = list(source_names)
    clash = set(source_names) & set(tring.names)
    if clash:
        raise ValidationError(f"source and target share variable names {sorted(clash)}")
    big = PolyRing(tring.field, list(tring.names) + source_names)
    gens = [g.embed(big) for g in tI.gens]
    if isinstance(images, dict):
        images = [images[n] for n in source_names]
    for n, img in zip(source_names, images):
        gens.append(big.var(n) - tring(img).embed(big))
    return eliminate(Ideal(big, gens), list(tring.names))


def standard_monomial_counts(I, max_degree):
    """Affine Hilbert function: number of standard monomials of each degree <= max_degree."""
    ring = I.ring
    lms = [g.lm() for g in I.groebner()]
    counts = []
    for d in range(max_degree + 1):
        c = 0
        for e in _monomials_of_degree(ring.n, d):
            if not any(_divides(m, e) for m in lms):
                c += 1
        counts.append(c)
    return counts


def _monomials_of_degree(n, d):
    if n == 0:
        if d == 0:
            yield ()
        return
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def free_hilbert_counts(n, max_degree):
    """Standard monomial counts of a polynomial ring in ``n`` variables."""
    return [comb(d + n - 1, n - 1) if n else int(d == 0) for d in range(max_degree + 1)]


def subalgebra_express(I, images, element, names):
    """Write ``element`` as a polynomial in ``images`` modulo ``I``.

    Returns a polynomial in ``field[names]`` (one name per image) or None
    when the element is not in the subalgebra generated by the images.
    """
    ring = I.ring
    big = PolyRing(ring.field, list(ring.names) + list(names))
    gens = [g.embed(big) for g in I.gens]
    gens += [big.var(n) - ring(p).embed(big) for n, p in zip(names, images)]
    order = Block(range(ring.n), big.n)
    gb = buchberger(gens, order)
    key = _make_key(order)
    basis = [_Elt(g.terms, g.lm(order), 0) for g in gb]
    r = _normal_form(ring(element).embed(big).terms, basis, key)
    if any(any(e[: ring.n]) for e in r):
        return None
    small = PolyRing(ring.field, list(names))
    return Poly(small, {e[ring.n:]: c for e, c in r.items()})
