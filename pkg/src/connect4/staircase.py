"""Finite standard sets (staircases) in N^n and Connect Four addition.

A standard set is a finite subset of N^n closed under taking predecessors
``beta - e_i``.  Exponents are plain tuples of ints; Python's tuple ordering
is exactly the lex order with x_1 most significant, so ``sorted`` gives the
canonical order everywhere.
"""

from collections import Counter

from .errors import ClosureViolation, DimensionMismatch, ValidationError


def unit(dim, i):
    """The unit vector e_i in N^dim (1-based index)."""
    return tuple(1 if j == i - 1 else 0 for j in range(dim))


def add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def divides(a, b):
    """Componentwise a <= b, i.e. x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def predecessors(beta):
    """Yield (i, beta - e_i) for every i with beta_i > 0 (1-based i)."""
    for j, c in enumerate(beta):
        if c > 0:
            yield j + 1, beta[:j] + (c - 1,) + beta[j + 1:]


def successors(beta):
    for j in range(len(beta)):
        yield beta[:j] + (beta[j] + 1,) + beta[j + 1:]


class StandardSet:
    """An immutable finite staircase.

    Stores the canonical (lex-increasing) element tuple, a frozenset for
    membership tests, and the column-height map ``q^n(beta) -> height``.
    """

    __slots__ = ("dim", "elements", "_set", "_columns", "_hash")

    def __init__(self, elements, dim, *, check=True):
        if dim < 0:
            raise ValidationError(f"dimension must be non-negative, got {dim}")
        elems = set()
        for e in elements:
            e = tuple(int(c) for c in e)
            if len(e) != dim:
                raise DimensionMismatch(f"exponent {e} has length {len(e)}, expected {dim}")
            if any(c < 0 for c in e):
                raise ValidationError(f"exponent {e} has a negative entry")
            elems.add(e)
        self.dim = dim
        self.elements = tuple(sorted(elems))
        self._set = frozenset(elems)
        if check:
            for beta in self.elements:
                for i, pred in predecessors(beta):
                    if pred not in self._set:
                        raise ClosureViolation(beta, i)
        cols = Counter(beta[:-1] for beta in self.elements) if dim else Counter()
        self._columns = dict(sorted(cols.items()))
        self._hash = hash((dim, self.elements))

    # -- container protocol -------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, beta):
        return tuple(beta) in self._set

    def __eq__(self, other):
        if not isinstance(other, StandardSet):
            return NotImplemented
        return self.dim == other.dim and self.elements == other.elements

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"StandardSet({list(self.elements)}, dim={self.dim})"

    def sort_key(self):
        """Canonical key: size first, then the element list."""
        return (len(self.elements), self.elements)

    def __lt__(self, other):
        return (self.dim, self.sort_key()) < (other.dim, other.sort_key())

    @property
    def columns(self):
        """Column heights over q^n(Delta), keyed by (n-1)-tuples in lex order."""
        return dict(self._columns)

    def column_height(self, col):
        return self._columns.get(tuple(col), 0)

    def max_coordinate(self):
        return max((max(e) for e in self.elements if e), default=0)

    def to_json(self):
        return {"dim": self.dim, "elements": [list(e) for e in self.elements]}

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            elements = obj["elements"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad staircase JSON: {exc}") from None
        return cls(elements, dim)

    def pretty(self):
        """Human-readable form such as ``{0, e1, e2, 2e1+e3}``."""
        return "{" + ", ".join(format_exponent(e) for e in self.elements) + "}"


def format_exponent(beta):
    parts = []
    for j, c in enumerate(beta):
        if c == 1:
            parts.append(f"e{j + 1}")
        elif c > 1:
            parts.append(f"{c}e{j + 1}")
    return "+".join(parts) or "0"


def validate_standard_set(candidate, dim):
    """Return the canonical StandardSet for ``candidate`` or raise.

    Raises DimensionMismatch for exponents of the wrong length and
    ClosureViolation(beta, i) when beta - e_i is missing.
    """
    return StandardSet(candidate, dim)


def empty(dim):
    return StandardSet((), dim, check=False)


def point(dim=0):
    """The one-element staircase {0}; in dimension 0 this is the point of D_0."""
    return StandardSet([(0,) * dim], dim, check=False)


def corners(delta):
    """Minimal generators of N^n minus Delta, in lex order.

    Every corner other than 0 is a successor of an element of Delta, so the
    search runs over the border only; for empty Delta the only corner is 0.
    """
    if not delta.elements:
        return ((0,) * delta.dim,)
    found = set()
    for c in _border_set(delta):
        if all(p in delta._set for _, p in predecessors(c)):
            found.add(c)
    return tuple(sorted(found))


def _border_set(delta):
    out = set()
    for beta in delta.elements:
        for s in successors(beta):
            if s not in delta._set:
                out.add(s)
    return out


def border(delta):
    """(union_i (N + e_i)) minus N, in lex order."""
    return tuple(sorted(_border_set(delta)))


def project(delta, j):
    """q_j(Delta): keep coordinates j..n (1-based)."""
    n = delta.dim
    if not 1 <= j <= n:
        raise ValidationError(f"projection index {j} outside 1..{n}")
    return StandardSet({beta[j - 1:] for beta in delta.elements}, n - j + 1, check=False)


def embed(delta):
    """Delta x {0}: the same staircase one dimension up."""
    return StandardSet([beta + (0,) for beta in delta.elements], delta.dim + 1, check=False)


def height(delta):
    """#q_n(Delta), the number of horizontal layers."""
    if not delta.elements:
        return 0
    return max(beta[-1] for beta in delta.elements) + 1


def from_columns(columns, dim):
    """Build the staircase with the given column heights over N^(dim-1)."""
    elems = [col + (k,) for col, h in columns.items() for k in range(h)]
    return StandardSet(elems, dim, check=False)


def connect_four_add(a, b):
    """Connect Four sum: stack the columns of ``b`` on top of those of ``a``.

    Both operands must share the ambient dimension; embed lower-dimensional
    summands first (or use ``connect_four_sum``).
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot add staircases of dimensions {a.dim} and {b.dim}")
    if a.dim == 0:
        raise DimensionMismatch("Connect Four addition needs dimension >= 1")
    cols = Counter(a._columns)
    cols.update(b._columns)
    return from_columns(cols, a.dim)


def connect_four_sum(parts, dim):
    """Sum of an iterable of staircases in N^(dim-1) or N^dim."""
    total = empty(dim)
    for p in parts:
        total = connect_four_add(total, embed(p) if p.dim + 1 == dim else p)
    return total


def horizontal_slices(delta):
    """The trivial decomposition: layer i is q^n(Delta ∩ {beta_n = i})."""
    n = delta.dim
    return [
        StandardSet([beta[:-1] for beta in delta.elements if beta[-1] == i], n - 1, check=False)
        for i in range(height(delta))
    ]


def enumerate_standard_sets(dim, size):
    """All standard sets of the given size in N^dim, sorted canonically."""
    if dim == 0:
        return [empty(0)] if size == 0 else ([point(0)] if size == 1 else [])
    level = {frozenset()}
    for _ in range(size):
        nxt = set()
        for s in level:
            st = StandardSet(s, dim, check=False)
            for c in corners(st):
                nxt.add(s | {c})
        level = nxt
    return sorted((StandardSet(s, dim, check=False) for s in level), key=StandardSet.sort_key)


def standard_subsets(delta):
    """All standard sets contained in ``delta`` (including the empty one)."""
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            st = StandardSet(s, delta.dim, check=False)
            for c in corners(st):
                if c in delta._set:
                    t = s | {c}
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
        frontier = nxt
    return sorted((StandardSet(s, delta.dim, check=False) for s in seen), key=StandardSet.sort_key)


def random_standard_set(rng, dim, size):
    """Grow a staircase by adding uniformly chosen addable cells."""
    cur = empty(dim)
    for _ in range(size):
        cells = corners(cur)
        cur = StandardSet(cur.elements + (rng.choice(cells),), dim, check=False)
    return cur
