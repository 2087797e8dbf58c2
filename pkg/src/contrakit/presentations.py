"""Finitely presented commutative algebras, maps between them, involutions."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .coeff import field_make
from .errors import RingMismatchError, ValidationError
from .ideals import Ideal, ideal_equal
from .poly import Poly, PolyRing


class FPAlgebra:
    """``field[vars] / relations``."""

    def __init__(self, field, vars, relations=()):
        self.field = field_make(field)
        self.ring = PolyRing(self.field, vars)
        self.ideal = Ideal(self.ring, relations)

    @classmethod
    def from_ideal(cls, ideal):
        A = cls.__new__(cls)
        A.field = ideal.ring.field
        A.ring = ideal.ring
        A.ideal = ideal
        return A

    @property
    def vars(self):
        return list(self.ring.names)

    @property
    def relations(self):
        return list(self.ideal.gens)

    def __call__(self, x):
        return self.ring(x)

    def __repr__(self):
        rels = ", ".join(str(g) for g in self.ideal.gens)
        return f"FPAlgebra({self.ring!r} / ({rels}))"

    def reduce(self, p):
        return self.ideal.reduce(self.ring(p))

    def equiv(self, p, q):
        return self.ideal.contains(self.ring(p) - self.ring(q))

    def is_zero_ring(self):
        return self.ideal.is_unit()

    def basis(self):
        """Reduced grevlex basis of the relations, as strings."""
        return self.ideal.basis_strings()

    def with_field(self, field):
        """Base change along a field extension."""
        ring = self.ring.with_field(field)
        return FPAlgebra.from_ideal(self.ideal.embed(ring))

    def quotient(self, extra):
        return FPAlgebra(self.field, self.vars, self.relations + [self.ring(e) for e in extra])

    def identity(self):
        return AlgebraMap(self, self, {v: self.ring.var(v) for v in self.vars})

    def same_as(self, other):
        return self.ring == other.ring and ideal_equal(self.ideal, other.ideal)

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "vars": self.vars,
            "relations": self.basis(),
        }


class AlgebraMap:
    """Algebra map ``source -> target`` given by images of the source variables."""

    def __init__(self, source, target, images):
        if source.field != target.field:
            raise RingMismatchError("algebra maps must be over one field")
        self.source = source
        self.target = target
        missing = [v for v in source.vars if v not in images]
        if missing:
            raise ValidationError(f"no image given for {missing}")
        self.images = {v: target.ring(images[v]) for v in source.vars}

    def __call__(self, p):
        return self.source.ring(p).substitute(self.images, self.target.ring)

    def relation_failures(self):
        """Source relations whose image is not zero in the target."""
        return [r for r in self.source.relations if not self.target.ideal.contains(self(r))]

    def is_well_defined(self):
        return not self.relation_failures()

    def compose(self, other):
        """``self o other`` (apply ``other`` first)."""
        return map_compose(self, other)

    def is_identity(self):
        if self.source.ring != self.target.ring:
            return False
        return all(self.source.equiv(self.images[v], self.source.ring.var(v)) for v in self.source.vars)

    def to_json(self):
        return {v: str(self.images[v]) for v in self.source.vars}


def map_compose(f, g):
    """``f o g``: first ``g: A -> B``, then ``f: B -> C``."""
    if g.target.ring != f.source.ring:
        raise RingMismatchError("maps are not composable")
    return AlgebraMap(g.source, f.target, {v: f(g.images[v]) for v in g.source.vars})


def map_is_iso(f, g):
    """True iff ``f`` and ``g`` are well-defined and mutually inverse modulo relations."""
    if f.target.ring != g.source.ring or g.target.ring != f.source.ring:
        raise RingMismatchError("maps are not mutually composable")
    if not (f.is_well_defined() and g.is_well_defined()):
        return False
    return map_compose(g, f).is_identity() and map_compose(f, g).is_identity()


# ---------------------------------------------------------------------------
# involutions
# ---------------------------------------------------------------------------


class Involution(AlgebraMap):
    pass


def validate_involution(A, images):
    """Check that ``images`` defines an algebra involution of ``A``."""
    th = images if isinstance(images, AlgebraMap) else AlgebraMap(A, A, images)
    bad = th.relation_failures()
    if bad:
        raise ValidationError(f"involution is not well defined: relation {bad[0]} is not preserved")
    for v in A.vars:
        back = th(th.images[v])
        if not A.equiv(back, A.ring.var(v)):
            raise ValidationError(f"involution squared is not the identity on {v}: gives {back}")
    inv = Involution.__new__(Involution)
    inv.source = inv.target = A
    inv.images = th.images
    return inv


def identity_involution(A):
    return validate_involution(A, {v: A.ring.var(v) for v in A.vars})


def involutions_commute(th, eta):
    A = th.source
    return all(A.equiv(th(eta.images[v]), eta(th.images[v])) for v in A.vars)


@dataclass
class EigenSplit:
    """Eigen-components of the generators of an algebra with involution.

    ``plus`` and ``minus`` list (name, component) pairs after dropping zero
    components and components proportional to one kept earlier.  ``recon``
    records, for every variable, ``(plus_index, coeff)`` and
    ``(minus_index, coeff)`` (index None when the component is zero) so that
    ``var == cp*plus[i] + cm*minus[j]`` modulo relations.
    """

    algebra: FPAlgebra
    plus: list
    minus: list
    recon: dict = dc_field(default_factory=dict)

    @property
    def plus_names(self):
        return [n for n, _ in self.plus]

    @property
    def minus_names(self):
        return [n for n, _ in self.minus]

    def reconstruct(self, v, plus_images, minus_images):
        """``cp*plus_images[i] + cm*minus_images[j]`` for variable ``v``."""
        (pi, cp), (mi, cm) = self.recon[v]
        out = None
        if pi is not None:
            out = plus_images[pi] * cp
        if mi is not None:
            term = minus_images[mi] * cm
            out = term if out is None else out + term
        return out

    def renamed(self, algebra, var_map, name_map):
        """The same split transported along a variable renaming."""
        def mv(p):
            return p.substitute({v: algebra.ring.var(var_map[v]) for v in p.ring.names}, algebra.ring)

        return EigenSplit(
            algebra,
            [(name_map(n), mv(p)) for n, p in self.plus],
            [(name_map(n), mv(p)) for n, p in self.minus],
            {var_map[v]: r for v, r in self.recon.items()},
        )


def _proportional(A, p, kept):
    """Index and factor c with p == c*kept[i] modulo relations, or None."""
    np_ = A.reduce(p)
    for i, (_, q) in enumerate(kept):
        nq = A.reduce(q)
        if not nq:
            continue
        e, cq = nq.lt()
        cp = np_.terms.get(e)
        if cp is None:
            continue
        c = cp / cq
        if not (np_ - nq * c):
            return i, c
    return None


def eigen_split(A, th, plus_names=None, minus_names=None):
    """Split every generator into its +1 and -1 eigen-components."""
    half = A.field(1) / A.field(2)
    plus, minus, recon = [], [], {}
    pn = list(plus_names) if plus_names else None
    mn = list(minus_names) if minus_names else None
    for v in A.vars:
        x = A.ring.var(v)
        tx = th.images[v]
        entry = []
        for sign, kept, names, suffix in ((1, plus, pn, "_p"), (-1, minus, mn, "_m")):
            comp = (x + tx * sign) * half
            if not A.reduce(comp):
                entry.append((None, 0))
                continue
            hit = _proportional(A, comp, kept)
            if hit is not None:
                i, c = hit
                # comp == c*kept[i]; the variable gets coefficient c
                entry.append((i, c))
                continue
            if names is not None:
                if not names:
                    raise ValidationError("too few generator names supplied")
                name = names.pop(0)
            else:
                name = v + suffix
            kept.append((name, comp))
            entry.append((len(kept) - 1, A.field.one))
        recon[v] = (entry[0], entry[1])
    for names in (pn, mn):
        if names:
            raise ValidationError(f"unused generator names {names}")
    return EigenSplit(A, plus, minus, recon)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------


class TensorAlgebra(FPAlgebra):
    """``A (x) B`` with the variable renamings of both factors recorded."""

    left_map: dict
    right_map: dict

    def inj_left(self, p):
        return p.substitute({v: self.ring.var(self.left_map[v]) for v in p.ring.names}, self.ring)

    def inj_right(self, p):
        return p.substitute({v: self.ring.var(self.right_map[v]) for v in p.ring.names}, self.ring)


def tensor(A, B, force_suffix=False):
    """Tensor product over the common field.

    Variables are kept when the two name sets are disjoint, otherwise they
    are suffixed with ``__1`` and ``__2``.
    """
    if A.field != B.field:
        raise RingMismatchError("tensor factors must share the field")
    if force_suffix or set(A.vars) & set(B.vars):
        lm = {v: f"{v}__1" for v in A.vars}
        rm = {v: f"{v}__2" for v in B.vars}
    else:
        lm = {v: v for v in A.vars}
        rm = {v: v for v in B.vars}
    T = TensorAlgebra.__new__(TensorAlgebra)
    FPAlgebra.__init__(T, A.field, [lm[v] for v in A.vars] + [rm[v] for v in B.vars])
    T.left_map, T.right_map = lm, rm
    rels = [T.inj_left(r) for r in A.relations] + [T.inj_right(r) for r in B.relations]
    T.ideal = Ideal(T.ring, rels)
    return T


def tensor_power(A, n):
    """``A^{(x) n}`` with variables ``v__1 ... v__n``."""
    names = [f"{v}__{k}" for k in range(1, n + 1) for v in A.vars]
    ring = PolyRing(A.field, names)
    rels = []
    for k in range(1, n + 1):
        m = {v: ring.var(f"{v}__{k}") for v in A.vars}
        rels += [r.substitute(m, ring) for r in A.relations]
    return FPAlgebra.from_ideal(Ideal(ring, rels))


def copy_map(A, ring, k):
    """Substitution dict sending each variable of ``A`` to its ``k``-th tensor copy."""
    return {v: ring.var(f"{v}__{k}") for v in A.vars}


def tensor_involution(T, th, eta):
    """``th (x) eta`` on a tensor algebra built by :func:`tensor`."""
    images = {}
    for v, w in T.left_map.items():
        images[w] = T.inj_left(th.images[v])
    for v, w in T.right_map.items():
        images[w] = T.inj_right(eta.images[v])
    return validate_involution(T, images)


def rename_poly(p, mapping, ring):
    """Rename variables of ``p`` (old name -> new name) into ``ring``."""
    return p.substitute({v: ring.var(mapping.get(v, v)) for v in p.ring.names}, ring)


def poly_in(ring, p):
    """Coerce ``p`` (string, scalar or Poly by names) into ``ring``."""
    if isinstance(p, Poly):
        return p if p.ring == ring else p.embed(ring)
    return ring(p)
