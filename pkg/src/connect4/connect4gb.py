"""Reduced lex Groebner basis of an intersection of sliced ideals
  <J_i> + <x_n - lambda_i>
built by Lagrange interpolation across the slices followed by reduction.

Each summand is a monic ideal J_i in n-1 variables (given by its reduced
basis over the staircase Delta_i) placed in the hyperplane x_n = lambda_i.
The staircase of the intersection is the Connect Four sum of the Delta_i.
"""

import json
from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    DuplicateEvaluationPoints,
    InternalReductionFailure,
    ValidationError,
)
from .fields import field_from_json
from .polynomial import LexPolynomial, ReducedGB, extend_basis, normal_form
from .staircase import StandardSet, connect_four_sum, corners, divides, unit


@dataclass(frozen=True)
class Summand:
    basis: ReducedGB
    lam: object

    @property
    def delta(self):
        return self.basis.delta


class SlicedInstance:
    """A list of summands (J_i, lambda_i) with pairwise distinct lambdas.

    Summands are put in canonical order, sorted by (staircase, lambda), so
    that permuting the input never changes the output.
    """

    def __init__(self, field, summands):
        summands = list(summands)
        if not summands:
            raise ValidationError("an instance needs at least one summand")
        m = summands[0].basis.dim
        fixed = []
        for s in summands:
            if s.basis.field != field:
                raise ValidationError("summand basis is over a different field")
            if s.basis.dim != m:
                raise DimensionMismatch("summands live in different numbers of variables")
            if not s.delta.elements:
                raise ValidationError("summand staircases must be nonempty")
            fixed.append(Summand(s.basis, field(s.lam)))
        lams = [s.lam for s in fixed]
        if len(set(lams)) != len(lams):
            raise DuplicateEvaluationPoints("the lambda values must be pairwise distinct")
        fixed.sort(key=lambda s: (s.delta.sort_key(), field.sort_key(s.lam)))
        self.field = field
        self.summands = tuple(fixed)
        self.n = m + 1
        self.delta = connect_four_sum([s.delta for s in fixed], self.n)

    @property
    def lams(self):
        return [s.lam for s in self.summands]

    def __len__(self):
        return len(self.summands)

    def change_field(self, field):
        return SlicedInstance(
            field, [Summand(s.basis.change_field(field), field(s.lam)) for s in self.summands]
        )

    def to_json(self):
        f = self.field
        return {
            "field": f.to_json(),
            "summands": [
                {
                    "delta": s.delta.to_json(),
                    "basis": s.basis.to_json(),
                    "lambda": f.coef_to_json(s.lam),
                }
                for s in self.summands
            ],
        }

    @classmethod
    def from_json(cls, obj):
        try:
            f = field_from_json(obj["field"])
            summands = []
            for s in obj["summands"]:
                basis = ReducedGB.from_json(s["basis"], f)
                if "delta" in s and StandardSet.from_json(s["delta"]) != basis.delta:
                    raise ValidationError("summand 'delta' disagrees with its basis")
                summands.append(Summand(basis, f.coef_from_json(s["lambda"])))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad instance JSON: {exc}") from None
        return cls(f, summands)


@dataclass(frozen=True)
class AlphaPartition:
    """S = slices whose staircase contains bar(alpha), T = the rest, and Gamma."""

    S: tuple
    T: tuple
    gamma: tuple


def alpha_partition(inst, alpha):
    abar = tuple(alpha[:-1])
    S = tuple(i for i, s in enumerate(inst.summands) if abar in s.delta)
    T = tuple(i for i in range(len(inst.summands)) if i not in S)
    gamma = set()
    for i in T:
        gamma.update(b for b in inst.summands[i].delta.elements if b < abar)
    return AlphaPartition(S, T, tuple(sorted(gamma)))


def characteristic_poly(T, i, lams, field, dim=1):
    """prod_{j in T, j != i} (x_n - lam_j) / (lam_i - lam_j) as a polynomial in ``dim`` variables.

    Equals 1 at lam_i and 0 at every other node of T.
    """
    T = list(T)
    if i not in T:
        raise ValidationError(f"index {i} is not among the nodes {T}")
    nodes = [lams[j] for j in T]
    if len(set(nodes)) != len(nodes):
        raise DuplicateEvaluationPoints("interpolation nodes must be distinct")
    xn = LexPolynomial.variable(field, dim, dim)
    poly = LexPolynomial.constant(field, dim, field.one)
    for j in T:
        if j != i:
            poly = (poly * (xn - lams[j])).scale(field.one / (lams[i] - lams[j]))
    return poly


def check_interpolation(T, lams, field):
    """Partition of unity and the 0/1 evaluation table for the nodes T, exactly."""
    chis = {i: characteristic_poly(T, i, lams, field) for i in T}
    total = LexPolynomial.zero(field, 1)
    for c in chis.values():
        total = total + c
    if total != LexPolynomial.constant(field, 1, field.one):
        return False
    for i, c in chis.items():
        for j in T:
            want = field.one if i == j else field.zero
            if c.evaluate((lams[j],)) != want:
                return False
    return True


def build_phi(inst, alpha, *, nodes_seen=None):
    """The interpolated generator phi_alpha of the intersection ideal.

    theta = sum_{i in T} chi(T, i) * f_{i, bar(alpha)} glues the slice bases
    (for T empty it is the monomial x^bar(alpha)); phi = theta times
    prod_{i in S}(x_n - lambda_i).  When alpha_n exceeds #S the result is
    further multiplied by x_n^(alpha_n - #S) so that the leading exponent is
    alpha itself.
    """
    alpha = tuple(alpha)
    if len(alpha) != inst.n:
        raise DimensionMismatch(f"{alpha} is not an exponent in {inst.n} variables")
    if alpha in inst.delta:
        raise ValidationError(f"{alpha} lies in the staircase")
    f, n = inst.field, inst.n
    lams = inst.lams
    part = alpha_partition(inst, alpha)
    abar = alpha[:-1]
    if part.T:
        if nodes_seen is not None:
            nodes_seen.add(tuple(lams[i] for i in part.T))
        theta = LexPolynomial.zero(f, n)
        for i in part.T:
            fi = extend_basis(inst.summands[i].basis, abar).lift()
            theta = theta + characteristic_poly(part.T, i, lams, f, n) * fi
    else:
        theta = LexPolynomial.monomial(f, abar + (0,))
    xn = LexPolynomial.variable(f, n, n)
    phi = theta
    for i in part.S:
        phi = phi * (xn - lams[i])
    extra = alpha[-1] - len(part.S)
    if extra:
        phi = phi.shift((0,) * (n - 1) + (extra,))
    return phi


@dataclass
class ConnectFourResult:
    delta: StandardSet
    psi: ReducedGB
    trace: list = None
    interpolation_nodes: set = field(default_factory=set)

    def to_json(self, include_trace=False):
        out = {"delta": self.delta.to_json(), "psi": self.psi.to_json()}
        if include_trace and self.trace is not None:
            out["trace"] = self.trace
        return out


class _Reduction:
    """Demand-driven form of the double induction over corners and exponents.

    f(alpha) is built at stage mu(alpha) = the lex-largest corner <= alpha:
    at alpha == mu it is phi_mu with every term lying in an earlier corner
    cone cancelled; otherwise it is x_i * f(alpha - e_i) with the same kind
    of cancellation.  Every demanded exponent must be lex-smaller than the
    one being built.
    """

    def __init__(self, inst, pick, record):
        if pick not in ("smallest", "largest"):
            raise ValidationError(f"pick must be 'smallest' or 'largest', not {pick!r}")
        self.inst = inst
        self.delta = inst.delta
        self.corners = corners(inst.delta)
        self.pick = pick
        self.memo = {}
        self.active = []
        self.trace = [] if record else None
        self.nodes = set()

    def stage(self, alpha):
        below = [c for c in self.corners if c <= alpha]
        if not below:
            raise InternalReductionFailure(f"{alpha} lies below every corner")
        return below[-1]

    def in_cones(self, beta, mu):
        return any(c <= mu and divides(c, beta) for c in self.corners)

    def demand(self, gamma, parent):
        if not gamma < parent:
            raise InternalReductionFailure(f"{gamma} demanded while building {parent}, not lex-smaller")
        return self.f(gamma)

    def f(self, alpha):
        got = self.memo.get(alpha)
        if got is not None:
            return got
        if alpha in self.active:
            raise InternalReductionFailure(f"cyclic demand for {alpha}")
        self.active.append(alpha)
        mu = self.stage(alpha)
        field = self.inst.field
        if alpha == mu:
            base = build_phi(self.inst, alpha, nodes_seen=self.nodes)
            rule, var = "interpolate", None
            pairs = [(g, base.coefficient(g)) for g in base.support() if g != alpha and self.in_cones(g, mu)]
        else:
            choices = [
                i
                for i in range(1, len(alpha) + 1)
                if alpha[i - 1] > 0 and self.in_cones(_minus(alpha, i), mu)
            ]
            if not choices:
                raise InternalReductionFailure(f"no predecessor of {alpha} lies in the cones up to {mu}")
            var = choices[0] if self.pick == "smallest" else choices[-1]
            prev_exp = _minus(alpha, var)
            prev = self.demand(prev_exp, alpha)
            step = unit(len(alpha), var)
            base = prev.shift(step)
            rule = "shift"
            pairs = []
            for d, c in prev.items():
                if d == prev_exp:
                    continue
                g = tuple(a + b for a, b in zip(d, step))
                if self.in_cones(g, mu):
                    pairs.append((g, c))
        result = base
        for g, c in pairs:
            result = result - self.demand(g, alpha).scale(c)
        self._check(alpha, result)
        if self.trace is not None:
            self.trace.append(
                {
                    "alpha": list(alpha),
                    "stage": list(mu),
                    "rule": rule,
                    "variable": var,
                    "subtracted": [
                        {"exp": list(g), "coef": field.coef_to_json(c)} for g, c in pairs
                    ],
                }
            )
        self.memo[alpha] = result
        self.active.pop()
        return result

    def _check(self, alpha, poly):
        if poly.is_zero() or poly.leading_exponent() != alpha or not poly.is_monic():
            raise InternalReductionFailure(f"polynomial built for {alpha} has the wrong leading term")
        for e in poly.terms:
            if e != alpha and e not in self.delta:
                raise InternalReductionFailure(f"polynomial built for {alpha} keeps exponent {e}")


def _minus(alpha, i):
    return alpha[: i - 1] + (alpha[i - 1] - 1,) + alpha[i:]


def reduce_to_psi(inst, *, trace=False, pick="smallest"):
    """Run interpolation and reduction; return psi_alpha for every corner of Delta.

    ``pick`` chooses which variable to peel off in the shift step.  The
    result does not depend on it, which makes a useful self-check.
    """
    red = _Reduction(inst, pick, trace)
    entries = {}
    for c in red.corners:
        entries[c] = red.f(c)
    psi = ReducedGB(inst.delta, entries, inst.field)
    return ConnectFourResult(inst.delta, psi, red.trace, red.nodes)


@dataclass
class MembershipReport:
    results: dict

    @property
    def ok(self):
        return all(self.results.values())

    def failures(self):
        return [k for k, v in self.results.items() if not v]

    def to_json(self):
        return [
            {"alpha": list(a), "summand": i, "pass": v} for (a, i), v in sorted(self.results.items())
        ]


def membership_check(inst, result):
    """Check psi_alpha in <J_i> + <x_n - lambda_i> for every corner and slice.

    Substitutes x_n = lambda_i and reduces modulo the slice basis.
    """
    out = {}
    for alpha, psi in result.psi.entries.items():
        for i, s in enumerate(inst.summands):
            out[(alpha, i)] = normal_form(psi.substitute_last(s.lam), s.basis).is_zero()
    return MembershipReport(out)


def result_key(result):
    """Deterministic text form used to compare runs byte for byte."""
    return json.dumps(result.to_json(), sort_keys=True)


__all__ = [
    "AlphaPartition",
    "ConnectFourResult",
    "MembershipReport",
    "SlicedInstance",
    "Summand",
    "alpha_partition",
    "build_phi",
    "characteristic_poly",
    "check_interpolation",
    "membership_check",
    "reduce_to_psi",
    "result_key",
]
