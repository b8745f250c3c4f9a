import random

import pytest

from palindroma import abelianize, matrices, words
from palindroma.abelianize import MembershipError


def test_psi_generator_images():
    assert abelianize.psi(words.gen_Aij(3, 1, 2)) == matrices.matrix(
        [[1, 2, 0], [0, 1, 0], [0, 0, 1]]
    )
    assert abelianize.psi(words.gen_sigma(3, 1)) == matrices.matrix(
        [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]
    )
    assert abelianize.psi(words.gen_tau(3, (2, 1, 3))) == matrices.matrix(
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    )


def test_psi_counts_signed_exponents():
    f = words.EndoMap(
        2,
        (
            words.parse_word("a1 a2^-3 a1", 2),
            words.parse_word("a2", 2),
        ),
    )
    assert abelianize.psi(f) == matrices.matrix([[2, -3], [0, 1]])


def test_psi_product_law():
    rng = random.Random(4)
    gens = [
        words.gen_Aij(3, 1, 2),
        words.gen_Aij(3, 3, 1),
        words.gen_sigma(3, 2),
        words.gen_tau(3, (3, 1, 2)),
    ]
    for _ in range(20):
        f = rng.choice(gens)
        g = rng.choice(gens)
        assert abelianize.psi_product_law_check(f, g)


def test_lift_known_matrix():
    m = matrices.matrix([[1, 2, 2], [0, 3, 4], [0, 2, 3]])
    f = abelianize.lift(m)
    assert words.is_palindromic(f)
    assert abelianize.psi(f) == m
    assert [words.format_word(w) for w in f.images] == [
        "a3 a2 a1 a2 a3",
        "a3^2 a2^3 a3^2",
        "a2 a3^3 a2",
    ]


def test_lift_nests_flanks_outward_by_distance():
    # row (4, 2, 1): the odd entry a3 is central; the farther column 1
    # contributes the outermost flank
    m = matrices.matrix([[4, 2, 1], [0, 1, 0], [1, 0, 0]])
    f = abelianize.lift(m)
    assert words.format_word(f.image(1)) == "a1^2 a2 a3 a2 a1^2"


def test_lift_negative_and_zero_entries():
    m = matrices.matrix([[-1, 0, 0], [0, 1, -2], [0, 0, 1]])
    f = abelianize.lift(m)
    assert words.format_word(f.image(1)) == "a1^-1"
    assert words.format_word(f.image(2)) == "a3^-1 a2 a3^-1"
    assert abelianize.psi(f) == m


def test_lift_round_trip_random():
    for seed in range(30):
        m = matrices.random_hat_element(seed, seed % 7)
        f = abelianize.lift(m)
        assert words.is_palindromic(f)
        assert abelianize.psi(f) == m


def test_membership_rejects_bad_determinant():
    report = abelianize.membership_report(matrices.matrix([[2, 0], [0, 1]]))
    assert not report.member
    assert "det" in report.obstruction


def test_membership_rejects_wrong_parity():
    report = abelianize.membership_report(
        matrices.matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    )
    assert not report.member
    assert "row 1" in report.obstruction
    with pytest.raises(MembershipError):
        abelianize.lift(matrices.matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))


def test_membership_accepts_identity():
    report = abelianize.membership_report(matrices.identity(3))
    assert report.member
    assert report.lifted == words.identity_endo(3)
