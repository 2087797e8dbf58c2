"""Sparse multivariate polynomials over the fields of :mod:`contrakit.coeff`.

A polynomial is a dict from dense exponent tuples to nonzero coefficients.
Term order is only needed for leading terms and for printing, so it is not
stored in the polynomial; every order-sensitive method takes an optional
:class:`MonomialOrder` and falls back to grevlex.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from operator import add

from .coeff import GF, QQ, Field, Quad, extend_scalar, field_make
from .errors import RingMismatchError, ValidationError


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """A term order given by a sort key: larger key means larger monomial."""

    name = "abstract"

    def key(self, e):
        raise NotImplementedError

    def compare(self, e1, e2):
        k1, k2 = self.key(e1), self.key(e2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, repr(self)))


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, e):
        return (sum(e), tuple([-x for x in reversed(e)]))

    def __repr__(self):
        return "grevlex"


class Lex(MonomialOrder):
    name = "lex"

    def key(self, e):
        return e

    def __repr__(self):
        return "lex"


class Block(MonomialOrder):
    """Elimination order: variables in ``front`` dominate everything else.

    ``front`` is a tuple of variable indices; inner orders apply to the
    sub-exponent vectors of the front and back blocks.
    """

    name = "block"

    def __init__(self, front, nvars, front_order=None, back_order=None):
        self.front = tuple(front)
        fs = set(self.front)
        self.back = tuple(i for i in range(nvars) if i not in fs)
        self.front_order = front_order or Grevlex()
        self.back_order = back_order or Grevlex()

    def key(self, e):
        fe = tuple([e[i] for i in self.front])
        be = tuple([e[i] for i in self.back])
        return (self.front_order.key(fe), self.back_order.key(be))

    def __repr__(self):
        return f"block({self.front}|{self.back}; {self.front_order!r}, {self.back_order!r})"


GREVLEX = Grevlex()
LEX = Lex()


def order_from_name(name):
    if name == "grevlex":
        return GREVLEX
    if name == "lex":
        return LEX
    raise ValueError(f"unknown monomial order {name!r}")


def compare(m1, m2, order=GREVLEX):
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    return order.compare(tuple(m1), tuple(m2))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def mono_div(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def mono_mul(a, b):
    return tuple(map(add, a, b))


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------


class PolyRing:
    """Polynomial ring ``field[names]``.  Equality ignores nothing but field and names."""

    def __init__(self, field, names):
        self.field = field_make(field)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValidationError(f"duplicate variable names in {self.names}")
        self.n = len(self.names)
        self.index = {v: i for i, v in enumerate(self.names)}
        self._zero_exp = (0,) * self.n

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.names)}]"

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return Poly(self, {self._zero_exp: self.field.one})

    def const(self, c):
        c = self.field(c)
        return Poly(self, {self._zero_exp: c} if c else {})

    def var(self, name):
        e = [0] * self.n
        e[self.index[name]] = 1
        return Poly(self, {tuple(e): self.field.one})

    @property
    def gens(self):
        return [self.var(v) for v in self.names]

    def monomial(self, exps, coeff=None):
        c = self.field.one if coeff is None else self.field(coeff)
        return Poly(self, {tuple(exps): c} if c else {})

    def __call__(self, x):
        if isinstance(x, Poly):
            if x.ring == self:
                return x
            return x.embed(self)
        if isinstance(x, str):
            return parse_poly(x, self)
        return self.const(x)

    def parse(self, s):
        return parse_poly(s, self)

    def extend(self, extra):
        """A ring with ``extra`` variable names appended."""
        return PolyRing(self.field, self.names + tuple(extra))

    def with_field(self, field):
        return PolyRing(field, self.names)


class Poly:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- construction helpers ------------------------------------------------

    def _same(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction, GF, Quad)):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._same(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GF, Quad)):
            return self.scale(other)
        o = self._same(other)
        if o is NotImplemented:
            return o
        if len(self.terms) > len(o.terms):
            a, b = o.terms, self.terms
        else:
            a, b = self.terms, o.terms
        t = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(add, e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.ring, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = self.ring.field(c) if not isinstance(c, (Quad,)) else c
        if not c:
            return self.ring.zero
        return Poly(self.ring, {e: v * c for e, v in self.terms.items()})

    def mul_term(self, e, c):
        """Multiply by the single term ``c * x^e``."""
        return Poly(self.ring, {tuple(map(add, e, f)): c * v for f, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a nonzero scalar (or constant polynomial)."""
        if isinstance(other, Poly):
            if not other.is_constant() or not other:
                raise ValueError("can only divide by nonzero constants")
            other = other.constant_coeff()
        return self.scale(1 / self.ring.field(other) if not isinstance(other, Quad) else other.inverse())

    # -- comparison ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, GF, Quad)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------------

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=-1)

    def variables(self):
        """Names of the variables that occur."""
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return [self.ring.names[i] for i in sorted(used)]

    def sorted_terms(self, order=None):
        order = order or GREVLEX
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lm(self, order=None):
        order = order or GREVLEX
        return max(self.terms, key=order.key)

    def lt(self, order=None):
        e = self.lm(order)
        return e, self.terms[e]

    def lc(self, order=None):
        return self.terms[self.lm(order)]

    def monic(self, order=None):
        if not self.terms:
            return self
        c = self.lc(order)
        if c == 1:
            return self
        inv = c.inverse() if not isinstance(c, Fraction) else 1 / c
        return Poly(self.ring, {e: v * inv for e, v in self.terms.items()})

    # -- ring maps -----------------------------------------------------------------

    def substitute(self, images, target=None):
        """Apply the ring map sending each variable to ``images[name]``.

        ``images`` maps variable names to Polys in ``target`` (or anything
        ``target`` can coerce).  Variables that do not occur need no image.
        """
        if target is None:
            first = next((v for v in images.values() if isinstance(v, Poly)), None)
            target = first.ring if first is not None else self.ring
        imgs = {}
        for i, name in enumerate(self.ring.names):
            if name in images:
                imgs[i] = target(images[name])
        powers = {}

        def power(i, k):
            key = (i, k)
            p = powers.get(key)
            if p is None:
                if i not in imgs:
                    raise ValidationError(f"no image given for variable {self.ring.names[i]!r}")
                p = imgs[i] if k == 1 else power(i, k - 1) * imgs[i]
                powers[key] = p
            return p

        result = {}
        tf = target.field
        for e, c in self.terms.items():
            c = extend_scalar(c, tf)
            term = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    term = p if term is None else term * p
            if term is None:
                term = target.one
            for te, tc in term.terms.items():
                v = result.get(te)
                result[te] = tc * c if v is None else v + tc * c
        return Poly(target, {e: c for e, c in result.items() if c})

    def embed(self, ring):
        """Reinterpret in ``ring`` by variable names (all used names must exist there)."""
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring.index.get(name))
        terms = {}
        tf = ring.field
        for e, c in self.terms.items():
            ne = [0] * ring.n
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j is None:
                        raise RingMismatchError(
                            f"variable {self.ring.names[i]!r} does not exist in {ring!r}"
                        )
                    ne[j] = k
            terms[tuple(ne)] = extend_scalar(c, tf)
        return Poly(ring, terms)

    def rename(self, mapping, ring):
        """Rename variables via ``mapping`` (old name -> new name) into ``ring``."""
        return self.substitute({v: ring.var(mapping.get(v, v)) for v in self.variables()}, ring)

    def derivative(self, name):
        i = self.ring.index[name]
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return Poly(self.ring, {e: c for e, c in t.items() if c})

    def evaluate(self, point):
        """Evaluate at ``point`` (name -> scalar), returning a scalar."""
        f = self.ring.field
        total = f.zero
        vals = [f(point[n]) if n in point else None for n in self.ring.names]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    if vals[i] is None:
                        raise ValidationError(f"no value for {self.ring.names[i]!r}")
                    term = term * vals[i] ** k
            total = total + term
        return total

    def coefficient_polys(self, names):
        """Split as ``sum m * coeff_m`` over monomials ``m`` in ``names``.

        Returns a dict from exponent tuples (over ``names``) to Polys in the
        same ring free of those variables.
        """
        idx = [self.ring.index[n] for n in names]
        out = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: Poly(self.ring, v) for k, v in out.items()}

    # -- printing ------------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _fmt_mono(e, names):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(names[i])
        elif k:
            parts.append(f"{names[i]}^{k}")
    return "*".join(parts)


def format_poly(p, order=None):
    """Deterministic text form, terms sorted descending in ``order`` (grevlex)."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.sorted_terms(order):
        mono = _fmt_mono(e, p.ring.names)
        neg = False
        if isinstance(c, Fraction):
            neg = c < 0
            cs = str(-c if neg else c)
        elif isinstance(c, Quad) and not c.b and isinstance(c.a, Fraction):
            neg = c.a < 0
            cs = str(-c.a if neg else c.a)
        else:
            cs = str(c)
        if mono:
            text = mono if cs == "1" else f"{cs}*{mono}"
        else:
            text = cs
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def parse_poly(text, ring):
    """Parse ``text`` (grammar: numbers, names, ``+ - * / ^``, parentheses).

    Division is allowed by nonzero constants only.  In a quadratic field the
    generator name (default ``i``) denotes the adjoined square root.
    """
    src = str(text).replace("^", "**").strip()
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValidationError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _eval_node(tree.body, ring, text)


def _eval_node(node, ring, text):
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, ring, text)
        if isinstance(node.op, ast.Pow):
            n = _const_int(node.right, text)
            return left ** n
        right = _eval_node(node.right, ring, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or not right:
                raise ValidationError(f"division by a non-constant in {text!r}")
            return left / right
        raise ValidationError(f"unsupported operator in {text!r}")
    if isinstance(node, ast.UnaryOp):
        val = _eval_node(node.operand, ring, text)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        raise ValidationError(f"unsupported unary operator in {text!r}")
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ValidationError(f"only integer literals are allowed in {text!r}")
        return ring.const(node.value)
    if isinstance(node, ast.Name):
        name = node.id
        if name in ring.index:
            return ring.var(name)
        if ring.field.kind == "quadratic" and name == ring.field.gen_name:
            return ring.const(ring.field.gen)
        raise ValidationError(f"unknown variable {name!r} in {text!r}")
    raise ValidationError(f"unsupported syntax in {text!r}")


def _const_int(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        if node.value < 0:
            raise ValidationError(f"negative exponent in {text!r}")
        return node.value
    raise ValidationError(f"exponent must be a non-negative integer literal in {text!r}")


def ring_of(names, field=QQ):
    """Convenience: ``ring_of("x,y")`` -> (ring, x, y)."""
    if isinstance(names, str):
        names = [n.strip() for n in names.split(",") if n.strip()]
    R = PolyRing(field, names)
    return (R, *R.gens)


def substitute(p, images, target=None):
    return p.substitute(images, target)


def poly_arith(op, p, q=None):
    """Functional form of ring arithmetic: ``op`` in add, mul, neg, scalar_mul."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    if op == "scalar_mul":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "MonomialOrder",
    "Grevlex",
    "Lex",
    "Block",
    "GREVLEX",
    "LEX",
    "PolyRing",
    "Poly",
    "Field",
    "compare",
    "format_poly",
    "parse_poly",
    "ring_of",
    "substitute",
    "poly_arith",
    "order_from_name",
]
