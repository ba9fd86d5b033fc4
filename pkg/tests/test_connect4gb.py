import random
from fractions import Fraction

import pytest

from connect4 import (
    GF,
    QQ,
    DuplicateEvaluationPoints,
    LexPolynomial,
    PointSet,
    ReducedGB,
    SlicedInstance,
    Summand,
    build_phi,
    characteristic_poly,
    connect_four_sum,
    corners,
    extend_basis,
    intersect_ideals_gb,
    membership_check,
    reduce_to_psi,
    vanishing_ideal_gb,
)
from connect4.connect4gb import ConnectFourResult, alpha_partition, check_interpolation, result_key
from connect4.generators import random_instance, random_monic_ideal, random_point_set
from connect4.staircase import random_standard_set

from conftest import TETRA, ss


def tetra_instance(field=QQ):
    A0 = PointSet(2, field, ((0, 0), (1, 0), (0, 1)))
    A1 = PointSet(2, field, ((0, 0),))
    return SlicedInstance(
        field, [Summand(vanishing_ideal_gb(A0), 0), Summand(vanishing_ideal_gb(A1), 1)]
    )


def oracle(inst):
    return intersect_ideals_gb([(s.basis, s.lam) for s in inst.summands])


# -- characteristic polynomials ----------------------------------------------


def test_chi_single_node_is_one():
    assert characteristic_poly([0], 0, [Fraction(7)], QQ) == LexPolynomial.constant(QQ, 1, 1)


def test_chi_two_nodes():
    lams = [Fraction(0), Fraction(1)]
    x = LexPolynomial.variable(QQ, 1, 1)
    assert characteristic_poly([0, 1], 0, lams, QQ) == 1 - x
    assert characteristic_poly([0, 1], 1, lams, QQ) == x


def test_chi_partition_of_unity():
    lams = [Fraction(0), Fraction(1), Fraction(2)]
    total = sum((characteristic_poly([0, 1, 2], i, lams, QQ) for i in range(3)), LexPolynomial.zero(QQ, 1))
    assert total == LexPolynomial.constant(QQ, 1, 1)
    assert check_interpolation([0, 1, 2], lams, QQ)
    F = GF(101)
    assert check_interpolation(range(5), [F(v) for v in (3, 99, 0, 50, 7)], F)


def test_chi_rejects_repeated_nodes():
    with pytest.raises(DuplicateEvaluationPoints):
        characteristic_poly([0, 1], 0, [Fraction(2), Fraction(2)], QQ)


# -- phi -----------------------------------------------------------------------


def test_minimal_corner_phi_is_product():
    inst = tetra_instance()
    alpha = (0, 0, 2)
    x3 = LexPolynomial.variable(QQ, 3, 3)
    assert build_phi(inst, alpha) == x3 * (x3 - 1)


def allowed_phi_exponents(inst, alpha):
    part = alpha_partition(inst, alpha)
    h = len(inst)
    out = {g + (k,) for g in part.gamma for k in range(h)}
    out |= {alpha[:-1] + (k,) for k in range(len(part.S))}
    return out


def test_phi_properties_on_random_instances():
    rng = random.Random(21)
    checked = 0
    for k in range(60):
        field = QQ if k % 2 else GF(101)
        inst = random_instance(rng, field, rng.choice((2, 3)), 8)
        for alpha in corners(inst.delta):
            phi = build_phi(inst, alpha)
            assert phi.leading_exponent() == alpha and phi.is_monic()
            part = alpha_partition(inst, alpha)
            assert set(phi.tail().terms) <= allowed_phi_exponents(inst, alpha)
            for i in part.S:
                assert phi.substitute_last(inst.lams[i]).is_zero()
            if not part.S:
                for i in part.T:
                    want = extend_basis(inst.summands[i].basis, alpha[:-1])
                    assert phi.substitute_last(inst.lams[i]) == want
                    checked += 1
    assert checked > 0


# -- psi -----------------------------------------------------------------------


def test_tetrahedron_example():
    inst = tetra_instance()
    res = reduce_to_psi(inst)
    assert res.delta == TETRA
    assert res.psi == oracle(inst)
    A = PointSet(3, QQ, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert res.psi == vanishing_ideal_gb(A)
    assert membership_check(inst, res).ok


def test_single_summand_reproduces_basis():
    rng = random.Random(3)
    for _ in range(20):
        delta = random_standard_set(rng, rng.randint(1, 3), rng.randint(1, 6))
        G = random_monic_ideal(rng, QQ, delta)
        lam = Fraction(rng.randint(-5, 5))
        inst = SlicedInstance(QQ, [Summand(G, lam)])
        res = reduce_to_psi(inst)
        n = delta.dim + 1
        xn = LexPolynomial.variable(QQ, n, n)
        want = {a + (0,): f.lift() for a, f in G.entries.items()}
        want[(0,) * (n - 1) + (1,)] = xn - lam
        assert res.psi.entries == want
        assert membership_check(inst, res).ok


def test_point_slices_give_vanishing_ideal_of_union():
    rng = random.Random(5)
    for _ in range(25):
        m = rng.randint(1, 2)
        lams = rng.sample(range(-4, 5), rng.randint(1, 3))
        slices = [random_point_set(rng, QQ, m, rng.randint(1, 3)) for _ in lams]
        inst = SlicedInstance(QQ, [Summand(vanishing_ideal_gb(S), l) for S, l in zip(slices, lams)])
        union = PointSet(m + 1, QQ, tuple(p for S, l in zip(slices, lams) for p in S.lifted(l)))
        assert reduce_to_psi(inst).psi == vanishing_ideal_gb(union)


@pytest.mark.parametrize("seed,field", [(1, QQ), (2, GF(101)), (3, GF(32003))], ids=["Q", "F101", "F32003"])
def test_random_instances_match_oracle(seed, field):
    rng = random.Random(seed)
    for _ in range(40):
        inst = random_instance(rng, field, rng.choice((2, 3)), 8)
        res = reduce_to_psi(inst)
        assert res.delta == connect_four_sum([s.delta for s in inst.summands], inst.n)
        assert res.psi.to_json() == oracle(inst).to_json()
        assert membership_check(inst, res).ok
        for nodes in res.interpolation_nodes:
            assert check_interpolation(range(len(nodes)), list(nodes), field)


def test_four_variables():
    rng = random.Random(8)
    for _ in range(8):
        inst = random_instance(rng, QQ, 4, 7)
        assert reduce_to_psi(inst).psi == oracle(inst)


def test_variable_choice_does_not_matter():
    rng = random.Random(9)
    for _ in range(30):
        inst = random_instance(rng, QQ, rng.choice((2, 3)), 8)
        a = reduce_to_psi(inst, pick="smallest")
        b = reduce_to_psi(inst, pick="largest")
        assert result_key(a) == result_key(b)


def test_perturbed_result_fails_membership():
    rng = random.Random(10)
    for _ in range(20):
        inst = random_instance(rng, QQ, rng.choice((2, 3)), 8)
        res = reduce_to_psi(inst)
        alpha = rng.choice(sorted(res.psi.entries))
        zero = (0,) * inst.n
        entries = dict(res.psi.entries)
        entries[alpha] = entries[alpha] + LexPolynomial.monomial(QQ, zero)
        bad = ConnectFourResult(res.delta, ReducedGB(res.delta, entries, QQ))
        report = membership_check(inst, bad)
        assert not report.ok
        assert all(a == alpha for a, _ in report.failures())


def test_specialization_to_prime_field_commutes():
    rng = random.Random(11)
    F = GF(32003)
    for _ in range(25):
        inst = random_instance(rng, QQ, rng.choice((2, 3)), 7)
        over_q = reduce_to_psi(inst).psi
        over_p = reduce_to_psi(inst.change_field(F)).psi
        assert over_q.change_field(F) == over_p


def test_permuting_summands_gives_identical_bytes():
    rng = random.Random(12)
    part = ss((0, 0), (1, 0))
    for _ in range(10):
        summands = [
            Summand(random_monic_ideal(rng, QQ, part), Fraction(lam)) for lam in rng.sample(range(-9, 9), 3)
        ]
        summands.append(Summand(random_monic_ideal(rng, QQ, ss((0, 0))), Fraction(20)))
        keys = set()
        for _ in range(4):
            rng.shuffle(summands)
            keys.add(result_key(reduce_to_psi(SlicedInstance(QQ, summands), trace=True)))
        assert len(keys) == 1


def test_trace_records_every_step():
    res = reduce_to_psi(tetra_instance(), trace=True)
    assert {tuple(t["alpha"]) for t in res.trace} >= set(corners(TETRA))
    assert {t["rule"] for t in res.trace} <= {"interpolate", "shift"}
    assert "trace" in res.to_json(include_trace=True)


def test_instance_json_round_trip():
    rng = random.Random(13)
    for field in (QQ, GF(101)):
        inst = random_instance(rng, field, 3, 6)
        again = SlicedInstance.from_json(inst.to_json())
        assert again.to_json() == inst.to_json()


def test_repeated_lambda_rejected():
    G = vanishing_ideal_gb(PointSet(1, QQ, ((0,),)))
    with pytest.raises(DuplicateEvaluationPoints):
        SlicedInstance(QQ, [Summand(G, 1), Summand(G, 1)])
