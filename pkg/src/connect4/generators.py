"""Seeded random inputs: point sets, monic ideals with a prescribed
staircase, and sliced instances.  All randomness comes from the
``random.Random`` passed in.
"""

from fractions import Fraction

from .connect4gb import SlicedInstance, Summand
from .decomposition import enumerate_decompositions
from .errors import ValidationError
from .fields import RationalField
from .pointset import PointSet, intersect_ideals_gb, vanishing_ideal_gb
from .polynomial import LexPolynomial, ReducedGB
from .staircase import random_standard_set

IDEAL_KINDS = ("points", "generic", "monomial")


def distinct_values(rng, field, count, lo=-6, hi=6):
    """``count`` pairwise distinct field elements."""
    if isinstance(field, RationalField):
        pool = list(range(lo, hi + 1))
        if count > len(pool):
            pool = list(range(-count, count + 1))
        return [Fraction(v) for v in rng.sample(pool, count)]
    if count > field.p:
        raise ValidationError(f"GF({field.p}) has fewer than {count} elements")
    return [field(v) for v in rng.sample(range(field.p), count)]


def random_point_set(rng, field, dim, size, lo=-3, hi=3):
    """``size`` distinct points with coordinates from a small range.

    The range is widened when it cannot hold ``size`` distinct points.
    """
    while (hi - lo + 1) ** dim < size:
        lo, hi = lo - 1, hi + 1
    seen = set()
    pts = []
    tries = 0
    while len(pts) < size:
        tries += 1
        if tries > 10000 + 100 * size:
            raise ValidationError("could not draw enough distinct points")
        if isinstance(field, RationalField):
            p = tuple(Fraction(rng.randint(lo, hi)) for _ in range(dim))
        else:
            p = tuple(field(rng.randint(lo, hi)) for _ in range(dim))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet(dim, field, tuple(pts))


def realize_points(rng, field, delta):
    """A point set A with D(A) = delta, built slice by slice along a random decomposition."""
    n = delta.dim
    if n == 0:
        return PointSet(0, field, ((),) if delta.elements else ())
    dec = rng.choice(enumerate_decompositions(delta))
    parts = dec.expanded()
    lams = distinct_values(rng, field, len(parts))
    pts = []
    for part, lam in zip(parts, lams):
        pts.extend(realize_points(rng, field, part).lifted(lam).points)
    return PointSet(n, field, tuple(pts))


def random_monic_ideal(rng, field, delta, kind=None):
    """A reduced lex basis whose staircase is exactly ``delta``.

    kind "points": vanishing ideal of a realizing point set;
    "monomial": the monomial ideal;
    "generic": a random monic univariate polynomial in one variable, and
    otherwise an intersection of random slices (possibly non-radical).
    """
    kind = kind or rng.choice(IDEAL_KINDS)
    if delta.dim == 0 or kind == "monomial":
        return ReducedGB.monomial_ideal(delta, field)
    if kind == "points":
        return vanishing_ideal_gb(realize_points(rng, field, delta))
    if kind != "generic":
        raise ValidationError(f"unknown ideal kind {kind!r}")
    if delta.dim == 1:
        r = len(delta)
        terms = {(r,): field.one}
        for k in range(r):
            terms[(k,)] = _random_coef(rng, field)
        return ReducedGB(delta, {(r,): LexPolynomial(field, 1, terms)}, field)
    dec = rng.choice(enumerate_decompositions(delta))
    parts = dec.expanded()
    lams = distinct_values(rng, field, len(parts))
    bases = [(random_monic_ideal(rng, field, p), lam) for p, lam in zip(parts, lams)]
    return intersect_ideals_gb(bases)


def _random_coef(rng, field):
    if isinstance(field, RationalField):
        return Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
    return field(rng.randrange(field.p))


def random_instance(rng, field, n, max_size, *, min_size=1, kinds=IDEAL_KINDS):
    """A sliced instance in n variables whose total staircase has at most ``max_size`` elements."""
    size = rng.randint(min_size, max_size)
    delta = random_standard_set(rng, n, size)
    dec = rng.choice(enumerate_decompositions(delta))
    parts = dec.expanded()
    lams = distinct_values(rng, field, len(parts))
    summands = [
        Summand(random_monic_ideal(rng, field, p, rng.choice(kinds)), lam) for p, lam in zip(parts, lams)
    ]
    return SlicedInstance(field, summands)
