"""Exact scalar fields: the rationals, prime fields, and GF(p^2).

Rationals are plain ``fractions.Fraction`` values.  Prime-field residues are
``ModP`` instances that refuse to mix with other moduli or with Fractions.
Each field is described by a small descriptor object that coerces inputs,
serializes coefficients and supplies a total order for canonical sorting.
"""

from fractions import Fraction

from .errors import FieldMismatch, ValidationError


def is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatch(f"cannot combine residues mod {self.p} and mod {other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            raise FieldMismatch("cannot combine a rational with a prime-field residue")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pow__(self, k):
        if k < 0:
            return ModP(pow(self.v, -1, self.p), self.p) ** (-k)
        return ModP(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, ModP):
            raise FieldMismatch("cannot coerce a prime-field residue to a rational")
        if isinstance(x, str):
            return Fraction(x)
        return Fraction(x)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def contains(self, x):
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def sort_key(self, x):
        return Fraction(x)

    def to_json(self):
        return "Q"

    def coef_to_json(self, c):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def coef_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise ValidationError(f"bad rational coefficient {obj!r}")
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad rational coefficient {obj!r}: {exc}") from None

    def random_element(self, rng, lo=-5, hi=5, denominators=(1,)):
        return Fraction(rng.randint(lo, hi), rng.choice(denominators))


class PrimeField:
    def __init__(self, p):
        p = int(p)
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatch(f"residue mod {x.p} is not in GF({self.p})")
            return x
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def contains(self, x):
        return isinstance(x, ModP) and x.p == self.p

    def sort_key(self, x):
        return x.v

    def to_json(self):
        return {"Fp": self.p}

    def coef_to_json(self, c):
        return c.v

    def coef_from_json(self, obj):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise ValidationError(f"bad residue {obj!r}")
        try:
            return self(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad residue {obj!r}: {exc}") from None

    def random_element(self, rng, lo=None, hi=None, denominators=None):
        return ModP(rng.randrange(self.p), self.p)


QQ = RationalField()


def GF(p):
    return PrimeField(p)


def field_from_json(obj):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return PrimeField(obj["Fp"])
    raise ValidationError(f"unknown field descriptor {obj!r}")


def parse_field(text):
    """Parse a command-line field name: ``Q``, ``F101`` or ``Fp:101``."""
    t = text.strip()
    if t.upper() in ("Q", "QQ"):
        return QQ
    for prefix in ("Fp:", "FP:", "GF", "F"):
        if t.startswith(prefix):
            try:
                return PrimeField(int(t[len(prefix):].strip("()")))
            except ValueError:
                break
    raise ValidationError(f"cannot parse field {text!r}; use Q or F<p>")


class GFp2Element:
    """a + b*s in GF(p)[s]/(s^2 - d) with d a quadratic non-residue."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field):
        self.a = a % field.p
        self.b = b % field.p
        self.field = field

    def _other(self, other):
        if isinstance(other, GFp2Element):
            if other.field != self.field:
                raise FieldMismatch("elements of different quadratic extensions")
            return other
        if isinstance(other, int):
            return GFp2Element(other, 0, self.field)
        if isinstance(other, (Fraction, ModP)):
            raise FieldMismatch("cannot mix GF(p^2) elements with other scalars")
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFp2Element(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFp2Element(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else GFp2Element(o.a - self.a, o.b - self.b, self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        d = self.field.nonresidue
        return GFp2Element(
            self.a * o.a + d * self.b * o.b, self.a * o.b + self.b * o.a, self.field
        )

    __rmul__ = __mul__

    def inverse(self):
        p, d = self.field.p, self.field.nonresidue
        norm = (self.a * self.a - d * self.b * self.b) % p
        if norm == 0:
            raise ZeroDivisionError("division by zero in GF(p^2)")
        inv = pow(norm, -1, p)
        return GFp2Element(self.a * inv, -self.b * inv, self.field)

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o * self.inverse()

    def __neg__(self):
        return GFp2Element(-self.a, -self.b, self.field)

    def __pow__(self, k):
        result = GFp2Element(1, 0, self.field)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def frobenius(self):
        """x -> x^p, which sends a + b*s to a - b*s."""
        return GFp2Element(self.a, -self.b, self.field)

    def __eq__(self, other):
        if isinstance(other, GFp2Element):
            return self.field == other.field and (self.a, self.b) == (other.a, other.b)
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.field.p))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"GFp2Element({self.a}, {self.b}; p={self.field.p})"


class QuadraticExtension:
    """GF(p^2) for odd p; only used to exercise Galois invariance."""

    def __init__(self, p):
        if not is_prime(p) or p == 2:
            raise ValidationError(f"need an odd prime, got {p}")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}^2"
        self.nonresidue = next(d for d in range(2, p) if pow(d, (p - 1) // 2, p) == p - 1)
        self.zero = GFp2Element(0, 0, self)
        self.one = GFp2Element(1, 0, self)

    def __call__(self, x, y=0):
        if isinstance(x, GFp2Element):
            return x
        return GFp2Element(int(x), int(y), self)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))

    def __repr__(self):
        return f"GF({self.p}^2)"

    def sort_key(self, x):
        return (x.a, x.b)

    def random_element(self, rng, lo=None, hi=None, denominators=None):
        return GFp2Element(rng.randrange(self.p), rng.randrange(self.p), self)
