"""Dimension and component counts of the Groebner stratum of reduced points.

Everything here is formula-derived: the dimension is sum_j #q_j(Delta) and
both component counts equal the decomposition number.  Nothing attempts a
primary decomposition of the stratum's coordinate ring.
"""

from dataclasses import dataclass

from .decomposition import decomposition_number
from .errors import ValidationError
from .staircase import enumerate_standard_sets, height, project

CAVEAT = (
    "Counts refer to the stratum of reduced points. The full stratum of all "
    "monic ideals with this staircase can have strictly more irreducible "
    "components and larger dimension; those are not computed here."
)


@dataclass(frozen=True)
class StratumReport:
    delta: object
    dimension: int
    irreducible_components: int
    connected_components: int
    caveat: str = CAVEAT

    def to_json(self):
        return {
            "delta": self.delta.to_json(),
            "dimension": self.dimension,
            "irreducible_components": self.irreducible_components,
            "connected_components": self.connected_components,
            "caveat": self.caveat,
        }


def projection_sizes(delta):
    """[#q_1(Delta), ..., #q_n(Delta)]."""
    return [len(project(delta, j)) for j in range(1, delta.dim + 1)]


def stratum_dimension(delta):
    return sum(projection_sizes(delta))


def report(delta):
    if delta.dim < 1 or not delta.elements:
        raise ValidationError("need a nonempty staircase in dimension >= 1")
    d = decomposition_number(delta)
    return StratumReport(delta, stratum_dimension(delta), d, d)


@dataclass(frozen=True)
class DimensionBound:
    dimension: int
    bound: int

    @property
    def relation(self):
        if self.dimension == self.bound:
            return "equal"
        return "strict" if self.dimension < self.bound else "violated"

    def to_json(self):
        return {"dimension": self.dimension, "n_times_r": self.bound, "relation": self.relation}


def dimension_vs_nr(delta):
    """Compare sum_j #q_j(Delta) with n * #Delta."""
    return DimensionBound(stratum_dimension(delta), delta.dim * len(delta))


def decomposition_dimension(dec):
    """sum over parts of their stratum dimension, plus the number of parts.

    Each part contributes its own stratum plus one free coordinate for its
    hyperplane; this must reproduce the dimension of the parent.
    """
    total = 0
    for part, mult in dec.parts:
        total += mult * (stratum_dimension(part) if part.dim else 0)
    return total + len(dec)


def stratum_table(dim, size):
    """One row per staircase of the given size in N^dim."""
    rows = []
    for delta in enumerate_standard_sets(dim, size):
        bound = dimension_vs_nr(delta)
        rows.append(
            {
                "delta": delta,
                "dimension": bound.dimension,
                "d": decomposition_number(delta),
                "n_times_r": bound.bound,
                "height": height(delta),
            }
        )
    return rows
