"""Exponent-sum matrices of endomorphisms, the parity membership test, and
the explicit palindromic lift back from a matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import matrices, words
from .matrices import IntMatrix
from .words import EndoMap, Word


class MembershipError(ValueError):
    pass


def psi(f: EndoMap) -> IntMatrix:
    """Row i = exponent sums of the generators in the image of a_i."""
    n = f.rank
    rows = []
    for i in range(1, n + 1):
        counts = [0] * n
        for lt in f.image(i).letters:
            counts[lt.index - 1] += lt.sign
        rows.append(tuple(counts))
    return IntMatrix(tuple(rows))


def psi_product_law_check(f: EndoMap, g: EndoMap) -> bool:
    """psi(f o g) = psi(g) * psi(f) under left-action composition."""
    lhs = psi(words.compose(f, g))
    rhs = matrices.mul(psi(g), psi(f))
    return lhs == rhs


def _row_odd_columns(row: tuple[int, ...]) -> list[int]:
    return [j for j, x in enumerate(row) if x % 2 != 0]


def _lift_row(row: tuple[int, ...], rank: int) -> Word:
    """One palindromic word with the given exponent-sum row.

    The unique odd entry becomes the central block; each even entry 2k
    contributes a symmetric flank of exponent k, nested farther out the
    farther its column is from the central one.
    """
    odd = _row_odd_columns(row)
    assert len(odd) == 1
    center = odd[0]
    flanks = [j for j in range(rank) if j != center and row[j] != 0]
    # outermost first: larger distance from the central column, ties by column
    flanks.sort(key=lambda j: (abs(j - center), j), reverse=True)
    pairs = [(j + 1, row[j] // 2) for j in flanks]
    left = words.word(rank, *pairs)
    middle = words.word(rank, (center + 1, row[center]))
    return words.concat(words.concat(left, middle), words.reversal(left))


def lift(m: IntMatrix) -> EndoMap:
    """A palindromic endomorphism whose exponent-sum matrix is m."""
    report = membership_report(m)
    if not report.member:
        raise MembershipError(report.obstruction or "not a member")
    assert report.lifted is not None
    return report.lifted


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    lifted: Optional[EndoMap] = None
    obstruction: Optional[str] = None


def membership_report(m: IntMatrix) -> MembershipReport:
    """Decide whether m is the exponent-sum matrix of a palindromic
    automorphism; on success include a lift, on failure name the obstruction."""
    d = matrices.det(m)
    if d not in (1, -1):
        return MembershipReport(False, obstruction=f"det = {d}, not a unit")
    for i, row in enumerate(m.entries):
        odd = _row_odd_columns(row)
        if len(odd) != 1:
            return MembershipReport(
                False,
                obstruction=f"row {i + 1} has {len(odd)} odd entries (need exactly 1)",
            )
    images = tuple(_lift_row(row, m.n) for row in m.entries)
    f = EndoMap(m.n, images)
    # construction guarantees both; cheap to re-check
    assert words.is_palindromic(f)
    assert psi(f) == m
    return MembershipReport(True, lifted=f)
