import pytest

from palindroma import centralizer, matrices
from palindroma.centralizer import CentralizerError


CYCLE = matrices.matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
SWAP = matrices.matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def test_commutes():
    assert centralizer.commutes(matrices.identity(3), CYCLE)
    assert centralizer.commutes(CYCLE, matrices.mul(CYCLE, CYCLE))
    assert not centralizer.commutes(SWAP, CYCLE)
    with pytest.raises(CentralizerError):
        centralizer.commutes(matrices.identity(2), CYCLE)


def test_commutant_ranks():
    assert centralizer.commutant(centralizer.shear_12_matrix()).rank == 5
    assert centralizer.commutant(SWAP).rank == 5
    assert centralizer.commutant(CYCLE).rank == 3
    assert centralizer.commutant(matrices.identity(3)).rank == 9
    assert centralizer.commutant(centralizer.unipotent_family_a(1, 1)).rank == 3
    assert centralizer.commutant(centralizer.unipotent_family_b(1)).rank == 5


def test_commutant_basis_commutes():
    lattice = centralizer.commutant(centralizer.unipotent_family_b(2))
    for x in lattice.basis:
        assert centralizer.commutes(x, lattice.base)


def test_centralizer_enumerate_cycle():
    elements = centralizer.centralizer_enumerate(CYCLE, 1)
    assert len(elements) == 6
    assert matrices.identity(3) in elements
    assert matrices.scale(-1, matrices.identity(3)) in elements
    assert CYCLE in elements
    for x in elements:
        assert centralizer.commutes(x, CYCLE)
        assert matrices.is_in_hatGL(x)


def test_centralizer_enumerate_validation():
    with pytest.raises(CentralizerError):
        centralizer.centralizer_enumerate(CYCLE, 0)


def test_order_census_cycle():
    census = centralizer.order_census(CYCLE, 2)
    assert census.counts == {1: 1, 2: 1, 3: 2, 6: 2}
    assert census.infinite == 0
    assert census.order2_witnesses == (matrices.scale(-1, matrices.identity(3)),)
    assert census.order4_witnesses == ()


def test_order_census_swap_has_infinite_part():
    census = centralizer.order_census(SWAP, 2)
    assert census.counts[1] == 1
    assert census.counts[2] == 23
    assert census.infinite == 16


def test_infOr2_classify():
    shear = centralizer.shear_12_matrix()
    for x in centralizer.centralizer_enumerate(shear, 2):
        cls = centralizer.infOr2_classify(x)
        assert cls.case[0] in (1, -1) and cls.case[1] in (1, -1)
        if cls.result.finite:
            assert cls.result.value in (1, 2)
    with pytest.raises(CentralizerError):
        centralizer.infOr2_classify(CYCLE)  # does not commute with the shear


def test_unipotent_families():
    assert centralizer.unipotent_family_a(1, 1) == matrices.matrix(
        [[1, 2, -2], [0, 1, 2], [0, 0, 1]]
    )
    assert centralizer.unipotent_family_b(3) == matrices.matrix(
        [[1, 6, -6], [0, 1, 0], [0, 0, 1]]
    )
    assert matrices.is_in_hatGL(centralizer.unipotent_family_a(2, -3))


def test_verify_family_shear_shape():
    rep = centralizer.verify_family("A12_form", (), 1)
    assert rep.instances_commute
    assert rep.shape_covers
    assert rep.checked_elements == 4


def test_verify_family_swap_and_cycle_shapes():
    for fam in ("tau12_form", "tau123_form"):
        rep = centralizer.verify_family(fam, (), 1)
        assert rep.instances_commute, fam
        assert rep.shape_covers, fam


def test_verify_family_sign_diag():
    for i in (1, 2, 3):
        rep = centralizer.verify_family("sign_diag", (i,), 1)
        assert rep.instances_commute
        assert rep.shape_covers


def test_verify_family_first_unipotent():
    rep = centralizer.verify_family("P3_A", (1, 1), 1)
    assert rep.instances_commute
    assert rep.shape_covers


def test_verify_family_second_unipotent_displayed_form_fails():
    # the displayed second-family centralizer includes members that do not
    # commute with the base matrix; the audit must report them
    rep = centralizer.verify_family("P3_B", (1,), 1)
    assert not rep.instances_commute
    assert len(rep.instance_failures) > 0
    # the true bounded centralizer still matches the corrected shape
    assert rep.shape_covers


def test_verify_family_validation():
    with pytest.raises(CentralizerError):
        centralizer.verify_family("sign_diag", (4,), 1)
    with pytest.raises(CentralizerError):
        centralizer.verify_family("unknown", (), 1)
