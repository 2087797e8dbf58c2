"""Exact coefficient fields.

Three kinds are supported: the rationals (backed by :class:`fractions.Fraction`),
odd prime fields, and one quadratic layer ``base[x]/(x^2 - t0)`` over either of
those.  The quadratic layer may be split (``t0`` a square); it is then a ring,
and inverting a zero divisor raises :class:`NotInvertibleError`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from .errors import FieldError, NotInvertibleError


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@total_ordering
class GF:
    """Element of the prime field F_p, stored as its representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GF(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GF(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GF(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GF(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.v, self.p)

    def inverse(self):
        if self.v == 0:
            raise NotInvertibleError(f"division by zero in F_{self.p}")
        return GF(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * GF(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GF(o, self.p) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return GF(pow(self.v, n, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GF):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == self._coerce(other) % self.p
        return NotImplemented

    def __lt__(self, other):
        return self.v < other.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"GF({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Quad:
    """Element ``a + b*x`` of ``base[x]/(x^2 - t0)``."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field):
        self.a = a
        self.b = b
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.field != self.field:
                raise FieldError("mixing different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction, GF)):
            return Quad(self.field.base(other), self.field.base.zero, self.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t0 = self.field.t0
        return Quad(self.a * o.a + t0 * self.b * o.b, self.a * o.b + self.b * o.a, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.field)

    def conjugate(self):
        return Quad(self.a, -self.b, self.field)

    def norm(self):
        return self.a * self.a - self.field.t0 * self.b * self.b

    def inverse(self):
        n = self.norm()
        if not n:
            if not self.a and not self.b:
                raise NotInvertibleError("division by zero")
            # split case: self * conjugate == 0 exhibits a zero divisor
            raise NotInvertibleError(
                f"{self} is a zero divisor in {self.field}", factor=self.conjugate()
            )
        ninv = 1 / n
        return Quad(self.a * ninv, -self.b * ninv, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, Quad) else other
        if o is NotImplemented:
            return NotImplemented
        return self.field == o.field and self.a == o.a and self.b == o.b

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Quad({self.a!r}, {self.b!r})"

    def __str__(self):
        g = self.field.gen_name
        if not self.b:
            return str(self.a)
        bs = str(self.b)
        neg = bs.startswith("-")
        mag = bs[1:] if neg else bs
        tail = g if mag == "1" else f"{mag}*{g}"
        if not self.a:
            return f"-{tail}" if neg else tail
        return f"({self.a} {'-' if neg else '+'} {tail})"


class Field:
    """Arithmetic context for one of the supported coefficient fields.

    Build instances with :func:`rationals`, :func:`prime_field`,
    :func:`quadratic_ext` or :func:`field_make`.
    """

    def __init__(self, kind, p=None, base=None, t0=None, gen_name="i"):
        self.kind = kind
        self.p = p
        self.base = base
        self.t0 = t0
        self.gen_name = gen_name
        if kind == "rationals":
            self.zero, self.one = Fraction(0), Fraction(1)
        elif kind == "prime":
            if not isinstance(p, int) or not _is_prime(p):
                raise FieldError(f"{p} is not a prime")
            if p == 2:
                raise FieldError("characteristic 2 is excluded: 1/2 must exist in k")
            self.zero, self.one = GF(0, p), GF(1, p)
        elif kind == "quadratic":
            if base is None or base.kind == "quadratic":
                raise FieldError("quadratic extensions need a rational or prime base")
            self.t0 = base(t0)
            if not self.t0:
                raise FieldError("quadratic extension needs t0 != 0")
            self.zero = Quad(base.zero, base.zero, self)
            self.one = Quad(base.one, base.zero, self)
        else:
            raise FieldError(f"unknown field kind {kind!r}")

    @property
    def key(self):
        if self.kind == "quadratic":
            return ("quadratic", self.base.key, self.t0)
        return (self.kind, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.kind == "rationals":
            return "QQ"
        if self.kind == "prime":
            return f"GF({self.p})"
        return f"{self.base!r}[{self.gen_name}]/({self.gen_name}^2 - {self.t0})"

    __str__ = __repr__

    @property
    def characteristic(self):
        if self.kind == "quadratic":
            return self.base.characteristic
        return 0 if self.kind == "rationals" else self.p

    def __call__(self, x):
        """Coerce an int, Fraction, base scalar or pair ``(a, b)`` into this field."""
        if self.kind == "rationals":
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise FieldError(f"cannot coerce {x!r} into QQ")
        if self.kind == "prime":
            if isinstance(x, GF):
                if x.p != self.p:
                    raise FieldError(f"cannot coerce {x!r} into GF({self.p})")
                return x
            if isinstance(x, str):
                x = Fraction(x)
            if isinstance(x, int):
                return GF(x, self.p)
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise NotInvertibleError(f"{x} has denominator divisible by {self.p}")
                return GF(x.numerator * pow(x.denominator, -1, self.p), self.p)
            raise FieldError(f"cannot coerce {x!r} into GF({self.p})")
        if isinstance(x, Quad):
            if x.field != self:
                raise FieldError("cannot coerce between quadratic extensions")
            return x
        if isinstance(x, tuple):
            return Quad(self.base(x[0]), self.base(x[1]), self)
        return Quad(self.base(x), self.base.zero, self)

    @property
    def gen(self):
        """The adjoined square root of ``t0`` (quadratic fields only)."""
        if self.kind != "quadratic":
            raise FieldError(f"{self} has no quadratic generator")
        return Quad(self.base.zero, self.base.one, self)

    def inv(self, s):
        return scalar_invert(s)

    def is_field(self):
        """False for a split quadratic extension."""
        if self.kind != "quadratic":
            return True
        return not self.base_is_square(self.t0)

    def base_is_square(self, c):
        return self.base.sqrt(c) is not None

    def sqrt(self, c):
        """A square root of ``c`` in this field, or None.

        Exhaustive over prime fields; exact rational square roots over QQ.
        """
        c = self(c)
        if self.kind == "rationals":
            if c < 0:
                return None
            n, d = c.numerator, c.denominator
            rn, rd = _isqrt_exact(n), _isqrt_exact(d)
            if rn is None or rd is None:
                return None
            return Fraction(rn, rd)
        if self.kind == "prime":
            for r in range(self.p):
                if (r * r - c.v) % self.p == 0:
                    return GF(r, self.p)
            return None
        if not c.b:
            r = self.base.sqrt(c.a)
            if r is not None:
                return self(r)
            r = self.base.sqrt(c.a / self.t0)
            if r is not None:
                return Quad(self.base.zero, r, self)
        return None

    def to_json(self):
        if self.kind == "rationals":
            return {"kind": "rationals"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {
            "kind": "quadratic",
            "base": self.base.to_json(),
            "t0": str(self.t0),
            "gen": self.gen_name,
        }

    def fmt(self, s):
        return str(s)


def _isqrt_exact(n):
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


QQ = Field("rationals")


def rationals():
    return QQ


def prime_field(p):
    return Field("prime", p=p)


def quadratic_ext(base, t0, gen_name="i"):
    return Field("quadratic", base=base, t0=t0, gen_name=gen_name)


def field_make(desc):
    """Build a :class:`Field` from a JSON-style description.

    Accepted forms: ``"QQ"``, ``"GF(7)"``, ``{"kind": "rationals"}``,
    ``{"kind": "prime", "p": 7}`` and
    ``{"kind": "quadratic", "base": ..., "t0": "2", "gen": "i"}``.
    """
    if isinstance(desc, Field):
        return desc
    if isinstance(desc, str):
        s = desc.strip().replace(" ", "")
        if s in ("QQ", "Q", "rationals"):
            return QQ
        if s.startswith("GF(") and s.endswith(")"):
            return prime_field(int(s[3:-1]))
        raise FieldError(f"unknown field {desc!r}")
    kind = desc.get("kind")
    if kind == "rationals":
        return QQ
    if kind in ("prime", "prime_field"):
        return prime_field(int(desc["p"]))
    if kind in ("quadratic", "quadratic_ext"):
        base = field_make(desc.get("base", "QQ"))
        return quadratic_ext(base, Fraction(str(desc["t0"])), desc.get("gen", "i"))
    raise FieldError(f"unknown field description {desc!r}")


def scalar_invert(s):
    """Multiplicative inverse; raises :class:`NotInvertibleError` for 0 or zero divisors."""
    if isinstance(s, Fraction):
        if not s:
            raise NotInvertibleError("division by zero")
        return 1 / s
    return s.inverse()


def extend_scalar(s, field):
    """Image of a base-field scalar under the inclusion into ``field``."""
    if field.kind == "quadratic" and not isinstance(s, Quad):
        return Quad(field.base(s), field.base.zero, field)
    return field(s)
