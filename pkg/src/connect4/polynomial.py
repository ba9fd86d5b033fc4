"""Sparse multivariate polynomials under the lex order x_1 > ... > x_n,
reduced lex bases indexed by staircase corners, and normal forms.
"""

import threading

from .errors import DimensionMismatch, FieldMismatch, InvalidBasis, ValidationError
from .fields import field_from_json
from .staircase import StandardSet, corners, divides


class LexPolynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero scalars."""

    __slots__ = ("field", "dim", "terms")

    def __init__(self, field, dim, terms=None):
        self.field = field
        self.dim = dim
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != dim:
                    raise DimensionMismatch(f"exponent {exp} does not have length {dim}")
                c = field(c)
                if c:
                    clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, dim, terms):
        # terms must already be clean (no zeros, coerced scalars)
        p = cls.__new__(cls)
        p.field = field
        p.dim = dim
        p.terms = terms
        return p

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, field, dim):
        return cls._raw(field, dim, {})

    @classmethod
    def constant(cls, field, dim, c):
        return cls(field, dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, field, exp, c=None):
        exp = tuple(exp)
        return cls(field, len(exp), {exp: field.one if c is None else c})

    @classmethod
    def variable(cls, field, dim, i):
        """x_i (1-based)."""
        exp = tuple(1 if j == i - 1 else 0 for j in range(dim))
        return cls._raw(field, dim, {exp: field.one})

    # -- inspection ----------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def support(self):
        """Exponents in decreasing lex order."""
        return sorted(self.terms, reverse=True)

    def items(self):
        """(exponent, coefficient) pairs in decreasing lex order."""
        return [(e, self.terms[e]) for e in self.support()]

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.field.zero)

    def leading_exponent(self):
        if not self.terms:
            raise ValidationError("the zero polynomial has no leading term")
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.leading_exponent()]

    def is_monic(self):
        return bool(self.terms) and self.leading_coefficient() == self.field.one

    def tail(self):
        """Everything except the leading term."""
        lead = self.leading_exponent()
        return LexPolynomial._raw(self.field, self.dim, {e: c for e, c in self.terms.items() if e != lead})

    def degree_in(self, i):
        return max((e[i - 1] for e in self.terms), default=-1)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if other.dim != self.dim:
            raise DimensionMismatch(f"polynomials in {self.dim} and {other.dim} variables")
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field!r} and {other.field!r}")

    def _scalar(self, c):
        if isinstance(c, LexPolynomial):
            return None
        try:
            return self.field(c)
        except (TypeError, ValueError) as exc:
            raise FieldMismatch(str(exc)) from None

    def __add__(self, other):
        if not isinstance(other, LexPolynomial):
            other = LexPolynomial.constant(self.field, self.dim, self._scalar(other))
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LexPolynomial._raw(self.field, self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return LexPolynomial._raw(self.field, self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LexPolynomial):
            other = LexPolynomial.constant(self.field, self.dim, self._scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self._scalar(c)
        if not c:
            return LexPolynomial.zero(self.field, self.dim)
        return LexPolynomial._raw(self.field, self.dim, {e: c * v for e, v in self.terms.items()})

    def shift(self, exp, c=None):
        """Multiply by the term c * x^exp."""
        exp = tuple(exp)
        c = self.field.one if c is None else self._scalar(c)
        if not c:
            return LexPolynomial.zero(self.field, self.dim)
        return LexPolynomial._raw(
            self.field,
            self.dim,
            {tuple(a + b for a, b in zip(e, exp)): c * v for e, v in self.terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, LexPolynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, self.field.zero) + c1 * c2
        return LexPolynomial._raw(self.field, self.dim, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, LexPolynomial):
            return self.dim == other.dim and self.field == other.field and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    # -- variable manipulation ----------------------------------------------
    def lift(self):
        """View as a polynomial in one more (last) variable."""
        return LexPolynomial._raw(self.field, self.dim + 1, {e + (0,): c for e, c in self.terms.items()})

    def substitute_last(self, value):
        """Set x_n = value, giving a polynomial in the first n-1 variables."""
        value = self.field(value)
        out = {}
        for e, c in self.terms.items():
            key = e[:-1]
            out[key] = out.get(key, self.field.zero) + c * value ** e[-1]
        return LexPolynomial._raw(self.field, self.dim - 1, {e: c for e, c in out.items() if c})

    def change_field(self, field):
        """Map every coefficient into ``field`` (e.g. reduce rationals mod p)."""
        return LexPolynomial(field, self.dim, self.terms)

    def evaluate(self, pt):
        total = self.field.zero
        for e, c in self.terms.items():
            m = c
            for x, k in zip(pt, e):
                if k:
                    m = m * x ** k
            total = total + m
        return total

    # -- output ----------------------------------------------------------------
    def __repr__(self):
        return f"LexPolynomial({self.field!r}, {self.dim}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}" for j, k in enumerate(e) if k
            )
            coef = str(c)
            if mono:
                text = {"1": mono, "-1": f"-{mono}"}.get(coef, f"{coef}*{mono}")
            else:
                text = coef
            out.append(text)
        return " + ".join(out).replace("+ -", "- ")

    def to_json(self):
        return {
            "dim": self.dim,
            "field": self.field.to_json(),
            "terms": [{"exp": list(e), "coef": self.field.coef_to_json(c)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj, field=None):
        try:
            f = field_from_json(obj["field"]) if "field" in obj else field
            if f is None:
                raise ValidationError("polynomial JSON has no field")
            dim = int(obj["dim"])
            terms = {}
            for t in obj["terms"]:
                e = tuple(int(k) for k in t["exp"])
                if e in terms:
                    raise ValidationError(f"repeated exponent {e}")
                if any(k < 0 for k in e):
                    raise ValidationError(f"negative exponent {e}")
                terms[e] = f.coef_from_json(t["coef"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad polynomial JSON: {exc}") from None
        return cls(f, dim, terms)


def exponent_key(exp):
    return ",".join(str(k) for k in exp)


def parse_exponent_key(key, dim):
    parts = [p for p in key.split(",") if p.strip() != ""]
    exp = tuple(int(p) for p in parts)
    if len(exp) != dim:
        raise ValidationError(f"corner key {key!r} does not have {dim} entries")
    return exp


class ReducedGB:
    """Reduced lex basis {f_alpha : alpha corner of Delta} of a monic ideal.

    Only the shape is validated: every f_alpha is monic with leading exponent
    alpha and all other exponents in Delta and lex-below alpha.  Whether the
    entries really form a Groebner basis is the caller's responsibility.
    """

    def __init__(self, delta, entries, field):
        self.delta = delta
        self.field = field
        self.dim = delta.dim
        want = corners(delta) if delta.dim else ()
        entries = {tuple(k): v for k, v in entries.items()}
        if set(entries) != set(want):
            raise InvalidBasis(
                f"basis keys {sorted(entries)} are not the corners {list(want)} of the staircase"
            )
        for alpha in want:
            f = entries[alpha]
            if f.dim != self.dim or f.field != field:
                raise InvalidBasis(f"entry for {alpha} has the wrong ring")
            if f.is_zero() or f.leading_exponent() != alpha or not f.is_monic():
                raise InvalidBasis(f"entry for {alpha} is not monic with leading exponent {alpha}")
            for e in f.terms:
                if e != alpha and (e not in delta or e > alpha):
                    raise InvalidBasis(f"entry for {alpha} has exponent {e} outside the staircase")
        self.entries = {a: entries[a] for a in want}
        self._memo = dict(self.entries)
        self._lock = threading.Lock()

    def __eq__(self, other):
        if not isinstance(other, ReducedGB):
            return NotImplemented
        return self.delta == other.delta and self.field == other.field and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(str(f) for f in self.entries.values())
        return f"ReducedGB({self.delta.pretty()}: {body})"

    def polynomials(self):
        return list(self.entries.values())

    def to_json(self):
        return {
            "delta": self.delta.to_json(),
            "field": self.field.to_json(),
            "entries": {exponent_key(a): f.to_json() for a, f in self.entries.items()},
        }

    @classmethod
    def from_json(cls, obj, field=None):
        try:
            delta = StandardSet.from_json(obj["delta"])
            if "field" in obj:
                field = field_from_json(obj["field"])
            raw = obj["entries"]
            if field is None:
                first = next(iter(raw.values()), None)
                if first is None or "field" not in first:
                    raise ValidationError("cannot determine the coefficient field")
                field = field_from_json(first["field"])
            entries = {
                parse_exponent_key(k, delta.dim): LexPolynomial.from_json(v, field)
                for k, v in raw.items()
            }
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError(f"bad basis JSON: {exc}") from None
        return cls(delta, entries, field)

    def change_field(self, field):
        return ReducedGB(
            self.delta, {a: f.change_field(field) for a, f in self.entries.items()}, field
        )

    @classmethod
    def monomial_ideal(cls, delta, field):
        """The basis {x^alpha} of the monomial ideal with staircase Delta."""
        return cls(delta, {a: LexPolynomial.monomial(field, a) for a in corners(delta)}, field)

    # -- reduction -------------------------------------------------------------
    def _cached(self, alpha):
        return self._memo.get(alpha)

    def _store(self, alpha, f):
        with self._lock:
            self._memo.setdefault(alpha, f)

    def _divisor(self, beta):
        for a in self.entries:
            if divides(a, beta):
                return a
        raise InvalidBasis(f"no corner divides {beta}")


def normal_form(p, G):
    """The unique representative of p modulo <G> supported on Delta.

    Repeatedly cancels the lex-greatest term outside Delta.  Cached
    ``extend_basis`` results are used as one-step reducers.
    """
    if p.dim != G.dim:
        raise DimensionMismatch(f"polynomial in {p.dim} variables, basis in {G.dim}")
    if p.field != G.field:
        raise FieldMismatch(f"polynomial over {p.field!r}, basis over {G.field!r}")
    delta = G.delta
    terms = dict(p.terms)
    zero = G.field.zero
    while True:
        bad = [e for e in terms if e not in delta]
        if not bad:
            break
        beta = max(bad)
        c = terms[beta]
        reducer = G._cached(beta)
        if reducer is None:
            a = G._divisor(beta)
            shift = tuple(x - y for x, y in zip(beta, a))
            reducer = G.entries[a].shift(shift)
        for e, v in reducer.terms.items():
            s = terms.get(e, zero) - c * v
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
    return LexPolynomial._raw(p.field, p.dim, terms)


def extend_basis(G, alpha):
    """The unique monic element of <G> with leading exponent alpha and tail in Delta.

    Computed as x^alpha - normal_form(x^alpha) and memoized on G.
    """
    alpha = tuple(alpha)
    if alpha in G.delta:
        raise ValidationError(f"{alpha} lies in the staircase; no basis element exists")
    f = G._cached(alpha)
    if f is not None:
        return f
    mono = LexPolynomial.monomial(G.field, alpha)
    f = mono - normal_form(mono, G)
    G._store(alpha, f)
    return f


def is_reduced(G):
    """Each entry's tail is already in normal form w.r.t. the other entries."""
    return all(normal_form(f.tail(), G) == f.tail() for f in G.entries.values())


def is_groebner(G):
    """Buchberger's criterion: every S-polynomial of two entries reduces to 0."""
    items = list(G.entries.items())
    for k, (a, f) in enumerate(items):
        for b, g in items[k + 1:]:
            lcm = tuple(max(x, y) for x, y in zip(a, b))
            sp = f.shift(tuple(x - y for x, y in zip(lcm, a))) - g.shift(
                tuple(x - y for x, y in zip(lcm, b))
            )
            if not _reduces_to_zero_by_division(sp, G):
                return False
    return True


def _reduces_to_zero_by_division(p, G):
    # plain multivariate division without using cached extensions
    terms = dict(p.terms)
    zero = G.field.zero
    while terms:
        beta = max(terms)
        if beta in G.delta:
            return False
        c = terms[beta]
        a = G._divisor(beta)
        red = G.entries[a].shift(tuple(x - y for x, y in zip(beta, a)))
        for e, v in red.terms.items():
            s = terms.get(e, zero) - c * v
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
    return True
