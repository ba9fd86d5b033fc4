"""Ground truth by linear algebra: vanishing ideals of finite point sets,
slicing by the last coordinate, and intersections of sliced ideals via the
Chinese Remainder Theorem.

Nothing here calls into the interpolation/reduction construction, so these
functions can serve as an independent check on it.
"""

from dataclasses import dataclass

from .errors import DimensionMismatch, DuplicateEvaluationPoints, DuplicatePoints, ValidationError
from .fields import field_from_json
from .linalg import buchberger_moeller
from .polynomial import LexPolynomial, normal_form


@dataclass(frozen=True)
class PointSet:
    dim: int
    field: object
    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(self.field(c) for c in p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise DimensionMismatch(f"point {p} does not have {self.dim} coordinates")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("point set contains repeated points")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def to_json(self):
        f = self.field
        return {
            "dim": self.dim,
            "field": f.to_json(),
            "points": [[f.coef_to_json(c) for c in p] for p in self.points],
        }

    @classmethod
    def from_json(cls, obj, field=None):
        try:
            f = field_from_json(obj["field"]) if "field" in obj else field
            if f is None:
                raise ValidationError("point set JSON has no field")
            pts = [tuple(f.coef_from_json(c) for c in p) for p in obj["points"]]
            return cls(int(obj["dim"]), f, tuple(pts))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad point set JSON: {exc}") from None

    def lifted(self, value):
        """The points placed in the hyperplane x_{n+1} = value."""
        v = self.field(value)
        return PointSet(self.dim + 1, self.field, tuple(p + (v,) for p in self.points))


def vanishing_ideal_gb(A):
    """Reduced lex Groebner basis of I(A) by Buchberger-Moeller."""
    if not A.points:
        raise ValidationError("the point set must be nonempty")
    field = A.field
    pts = A.points

    cache = {}

    def vector_of(beta):
        v = cache.get(beta)
        if v is None:
            v = []
            for p in pts:
                m = field.one
                for x, k in zip(p, beta):
                    if k:
                        m = m * x ** k
                v.append(m)
            cache[beta] = v
        return v

    return buchberger_moeller(field, A.dim, len(pts), vector_of, len(pts))


def standard_set_of(A):
    """D(A): the lex staircase of the vanishing ideal of A."""
    return vanishing_ideal_gb(A).delta


def slice_points(A):
    """Group points by their last coordinate and drop it.

    Returns a dict {lambda: PointSet in dimension n-1}, keys in the field's
    canonical order.
    """
    if A.dim < 1:
        raise ValidationError("slicing needs at least one coordinate")
    groups = {}
    for p in A.points:
        groups.setdefault(p[-1], []).append(p[:-1])
    keys = sorted(groups, key=A.field.sort_key)
    return {lam: PointSet(A.dim - 1, A.field, tuple(groups[lam])) for lam in keys}


def intersect_ideals_gb(bases):
    """Reduced lex basis of the intersection of <G_i> + <x_n - lambda_i>.

    ``bases`` is a list of (ReducedGB in n-1 variables, lambda).  The
    intersection's quotient is the direct sum of the summands' quotients, so
    x^beta maps to the stacked normal forms of x^bar(beta) * lambda_i^beta_n.
    """
    if not bases:
        raise ValidationError("need at least one summand")
    field = bases[0][0].field
    m = bases[0][0].dim
    lams = []
    for G, lam in bases:
        if G.field != field:
            raise ValidationError("summands over different fields")
        if G.dim != m:
            raise DimensionMismatch("summands in different numbers of variables")
        lams.append(field(lam))
    if len(set(lams)) != len(lams):
        raise DuplicateEvaluationPoints("the lambda values must be pairwise distinct")
    offsets = []
    total = 0
    for G, _ in bases:
        offsets.append(total)
        total += len(G.delta)
    index = [{b: k for k, b in enumerate(G.delta.elements)} for G, _ in bases]

    nf_cache = [{} for _ in bases]

    def vector_of(beta):
        head, k = beta[:-1], beta[-1]
        vec = [field.zero] * total
        for i, ((G, _), lam) in enumerate(zip(bases, lams)):
            nf = nf_cache[i].get(head)
            if nf is None:
                nf = normal_form(LexPolynomial.monomial(field, head), G)
                nf_cache[i][head] = nf
            scale = lam ** k
            for e, c in nf.terms.items():
                vec[offsets[i] + index[i][e]] = c * scale
        return vec

    bound = max(total, max((G.delta.max_coordinate() + 1 for G, _ in bases), default=0))
    return buchberger_moeller(field, m + 1, total, vector_of, bound)


def frobenius_points(A):
    """Apply the Frobenius of GF(p^2) to every coordinate."""
    return PointSet(A.dim, A.field, tuple(tuple(c.frobenius() for c in p) for p in A.points))
