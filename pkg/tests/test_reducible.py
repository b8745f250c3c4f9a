import pytest

from palindroma import matrices, reducible
from palindroma.reducible import ReducibleError


WORKED = matrices.matrix([[1, 2, 2], [0, 3, 4], [0, 2, 3]])
LOWER = matrices.matrix([[3, 4, 2], [2, 3, 2], [0, 0, 1]])


def test_zero_pattern_reducible():
    is_red, patterns = reducible.zero_pattern_reducible(WORKED)
    assert is_red and "d=g=0" in patterns
    cyc = matrices.matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert reducible.zero_pattern_reducible(cyc) == (False, [])
    with pytest.raises(ReducibleError):
        reducible.zero_pattern_reducible(matrices.matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))


def test_reduce_by_permutation_upper_left():
    form = reducible.reduce_by_permutation(WORKED)
    assert form is not None
    assert form.orientation == reducible.UPPER_LEFT
    assert form.e == 1
    assert form.a2 == matrices.matrix([[3, 4], [2, 3]])
    assert form.coupling == (1, 1)
    # the recorded permutation actually produces the block form
    conj = matrices.mul(
        matrices.inverse_unimodular(form.permutation),
        matrices.mul(WORKED, form.permutation),
    )
    assert conj == form.coupled()


def test_reduce_by_permutation_lower_right():
    form = reducible.reduce_by_permutation(LOWER, reducible.LOWER_RIGHT)
    assert form is not None
    assert form.orientation == reducible.LOWER_RIGHT
    assert form.e == 1
    assert form.a2 == matrices.matrix([[3, 4], [2, 3]])
    assert form.coupling == (1, 1)


def test_reduce_by_permutation_irreducible_returns_none():
    cyc = matrices.matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert reducible.reduce_by_permutation(cyc) is None


def test_coupled_decoupled():
    form = reducible.reduce_by_permutation(WORKED)
    assert form.coupled() == WORKED
    assert form.decoupled() == matrices.matrix([[1, 0, 0], [0, 3, 4], [0, 2, 3]])


def test_sim_invariants_worked_values():
    inv = reducible.sim_invariants(matrices.matrix([[3, 4], [2, 3]]), 1)
    assert (inv.e, inv.tau, inv.delta, inv.m) == (1, 6, 1, 4)
    assert inv.a0 == matrices.matrix([[-2, 4], [2, -2]])


def test_sim_invariants_validation():
    with pytest.raises(ReducibleError):
        reducible.sim_invariants(matrices.matrix([[2, 0], [0, 1]]), 1)
    with pytest.raises(ReducibleError):
        reducible.sim_invariants(matrices.matrix([[1, 0], [0, 1]]), 2)
    with pytest.raises(ReducibleError):
        reducible.sim_invariants(matrices.identity(3), 1)


def test_decide_sim1_worked_negative():
    form = reducible.reduce_by_permutation(WORKED)
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.NOT_CONJUGATE
    assert verdict.residue == (0, 2)
    assert verdict.witness is None
    assert verdict.invariants.m == 4


def test_decide_sim1_positive_with_witness():
    form = reducible.ReducibleForm(
        reducible.UPPER_LEFT, 1, matrices.matrix([[3, 4], [2, 3]]), (2, 2),
        matrices.identity(3),
    )
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.CONJUGATE
    assert verdict.witness == matrices.matrix([[1, 0, -2], [0, 3, 4], [0, 2, 3]])
    assert reducible.conjugation_residual(
        form.coupled(), form.decoupled(), verdict.witness
    ) == matrices.zero(3)
    assert matrices.is_in_hatGL(verdict.witness)


def test_decide_sim1_zero_coupling_identity_witness():
    form = reducible.ReducibleForm(
        reducible.UPPER_LEFT, 1, matrices.matrix([[3, 4], [2, 3]]), (0, 0),
        matrices.identity(3),
    )
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.CONJUGATE
    assert verdict.witness == matrices.identity(3)


def test_decide_sim1_inapplicable_for_trace_two():
    form = reducible.ReducibleForm(
        reducible.UPPER_LEFT, 1, matrices.matrix([[1, 2], [0, 1]]), (1, 0),
        matrices.identity(3),
    )
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.INAPPLICABLE


def test_decide_sim1_lower_right_negative():
    form = reducible.reduce_by_permutation(LOWER, reducible.LOWER_RIGHT)
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.NOT_CONJUGATE
    assert verdict.residue == (0, 2)


def test_decide_sim1_lower_right_positive_witness_back_transformed():
    form = reducible.ReducibleForm(
        reducible.LOWER_RIGHT, 1, matrices.matrix([[3, 4], [2, 3]]), (2, 2),
        matrices.identity(3),
    )
    verdict = reducible.decide_sim1(form)
    assert verdict.kind == reducible.CONJUGATE
    w = verdict.witness
    assert matrices.is_in_hatGL(w)
    assert reducible.conjugation_residual(form.coupled(), form.decoupled(), w) \
        == matrices.zero(3)


def _form(a2_rows, e, r, s):
    return reducible.ReducibleForm(
        reducible.UPPER_LEFT, e, matrices.matrix(a2_rows), (r, s),
        matrices.identity(3),
    )


def test_decide_sim1_m_zero_swap_block():
    # tau = 0, delta = -1 gives m = 0; the swap block is conjugate for
    # coupling (1, -1) and not for (1, 0)
    assert reducible.sim_invariants(matrices.matrix([[0, 1], [1, 0]]), 1).m == 0
    good = reducible.decide_sim1(_form([[0, 1], [1, 0]], 1, 1, -1))
    assert good.kind == reducible.CONJUGATE
    assert matrices.is_in_hatGL(good.witness)
    bad = reducible.decide_sim1(_form([[0, 1], [1, 0]], 1, 1, 0))
    assert bad.kind == reducible.NOT_CONJUGATE


def test_decide_sim1_m_zero_residue_vanishing_is_not_sufficient():
    # exact-zero residue, conjugate over GL_3(Z), yet every parity-subgroup
    # intertwiner has even determinant: the witness equation detects this
    verdict = reducible.decide_sim1(_form([[1, 0], [2, -1]], 1, 1, -1))
    assert verdict.kind == reducible.NOT_CONJUGATE
    assert verdict.residue == (0, 0)
    assert "no integer solution" in verdict.reason
    form = _form([[1, 0], [2, -1]], 1, 1, -1)
    assert reducible.bounded_conjugator_scan(
        form.coupled(), form.decoupled(), 5, hat_only=True
    ) == []
    assert reducible.bounded_conjugator_scan(
        form.coupled(), form.decoupled(), 5, hat_only=False
    )  # GL conjugators do exist
    # doubling the coupling restores solvability
    doubled = reducible.decide_sim1(_form([[1, 0], [2, -1]], 1, 2, -2))
    assert doubled.kind == reducible.CONJUGATE
    assert matrices.is_in_hatGL(doubled.witness)


def test_conjugation_residual():
    a = matrices.matrix([[1, 2], [0, 1]])
    b = matrices.matrix([[1, 0], [2, 1]])
    g = matrices.matrix([[0, 1], [1, 0]])
    assert reducible.conjugation_residual(a, b, g) == matrices.zero(2)
    assert reducible.conjugation_residual(a, a, g) != matrices.zero(2)
    with pytest.raises(ReducibleError):
        reducible.conjugation_residual(a, b, matrices.identity(3))


def test_solve_conjugation_system_commutant_of_identity():
    system = reducible.solve_conjugation_system(matrices.identity(2), matrices.identity(2))
    assert system.rank == 4


def test_solve_conjugation_system_worked_constraints():
    form = reducible.reduce_by_permutation(WORKED)
    system = reducible.solve_conjugation_system(WORKED, form.decoupled())
    assert system.rank == 3
    for x in system.basis:
        assert x[1, 0] == 0 and x[2, 0] == 0 and x[0, 1] == 0
        assert x[0, 0] == -x[0, 2]


def test_enumerate_intertwiners_no_hat_conjugator_for_worked():
    form = reducible.reduce_by_permutation(WORKED)
    system = reducible.solve_conjugation_system(WORKED, form.decoupled())
    assert reducible.enumerate_intertwiners(system, 5, hat_only=True) == []
    # without the parity restriction, unimodular intertwiners do appear
    assert reducible.bounded_conjugator_scan(
        WORKED, WORKED, 1, hat_only=True
    )  # identity commutes with itself


def test_enumerate_intertwiners_sorted_and_unimodular():
    m = matrices.matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    found = reducible.bounded_conjugator_scan(m, m, 1, hat_only=True)
    assert found == sorted(found, key=lambda x: x.entries)
    assert all(matrices.det(x) in (1, -1) for x in found)
    assert matrices.identity(3) in found
