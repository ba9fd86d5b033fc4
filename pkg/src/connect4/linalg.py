"""Exact incremental Gaussian elimination and a generic Buchberger-Moeller loop."""

from .errors import InternalReductionFailure
from .polynomial import LexPolynomial, ReducedGB
from .staircase import StandardSet, divides, successors


class IncrementalEliminator:
    """Row-echelon basis of inserted vectors, remembering how each row was built.

    Every inserted vector carries a label (here: an exponent).  ``insert``
    either accepts the vector as new and independent, or returns the linear
    relation ``label + sum c_s * s == 0`` among labels that it witnesses.
    """

    def __init__(self, field, length):
        self.field = field
        self.length = length
        self.rows = []  # (pivot, vector, combination dict)

    def reduce(self, vec, label):
        vec = list(vec)
        combo = {label: self.field.one}
        zero = self.field.zero
        for pivot, row, rcombo in self.rows:
            c = vec[pivot]
            if c:
                for k in range(pivot, self.length):
                    if row[k]:
                        vec[k] = vec[k] - c * row[k]
                for s, v in rcombo.items():
                    combo[s] = combo.get(s, zero) - c * v
        return vec, {s: v for s, v in combo.items() if v}

    def insert(self, vec, label):
        """Return None if independent (and store it), else the relation dict."""
        vec, combo = self.reduce(vec, label)
        pivot = next((k for k, v in enumerate(vec) if v), None)
        if pivot is None:
            return combo
        inv = self.field.one / vec[pivot]
        vec = [v * inv for v in vec]
        combo = {s: v * inv for s, v in combo.items()}
        # keep rows fully reduced so the pivot columns stay clean
        new_rows = []
        for p, row, rcombo in self.rows:
            c = row[pivot]
            if c:
                row = [a - c * b for a, b in zip(row, vec)]
                merged = dict(rcombo)
                for s, v in combo.items():
                    merged[s] = merged.get(s, self.field.zero) - c * v
                rcombo = {s: v for s, v in merged.items() if v}
            new_rows.append((p, row, rcombo))
        new_rows.append((pivot, vec, combo))
        new_rows.sort(key=lambda r: r[0])
        self.rows = new_rows
        return None

    @property
    def rank(self):
        return len(self.rows)


def buchberger_moeller(field, dim, length, vector_of, max_exponent):
    """Lex staircase and reduced basis of the kernel of ``x^beta -> vector_of(beta)``.

    ``vector_of`` must be induced by a surjective algebra map onto a
    quotient of dimension ``length``.  Candidates are visited in increasing
    lex order among the border of the current staircase; a candidate joins
    the staircase iff its vector is independent of those already there.
    """
    elim = IncrementalEliminator(field, length)
    staircase = []
    leading = []
    relations = {}
    candidates = {(0,) * dim}
    while candidates:
        t = min(candidates)
        candidates.discard(t)
        if any(divides(a, t) for a in leading):
            continue
        if max(t, default=0) > max_exponent:
            raise InternalReductionFailure(f"candidate {t} exceeds the degree bound {max_exponent}")
        rel = elim.insert(vector_of(t), t)
        if rel is None:
            staircase.append(t)
            candidates.update(successors(t))
        else:
            leading.append(t)
            relations[t] = rel
    if len(staircase) != length:
        raise InternalReductionFailure(
            f"found {len(staircase)} standard monomials for a quotient of dimension {length}"
        )
    delta = StandardSet(staircase, dim, check=False)
    entries = {t: LexPolynomial(field, dim, rel) for t, rel in relations.items()}
    return ReducedGB(delta, entries, field)
