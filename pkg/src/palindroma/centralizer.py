"""Commutant lattices, bounded centralizer enumeration in the parity
subgroup, order censuses, and audits of parametric centralizer families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from . import matrices, reducible
from .matrices import IntMatrix, OrderResult


class CentralizerError(ValueError):
    pass


def commutes(a: IntMatrix, b: IntMatrix) -> bool:
    if a.n != b.n:
        raise CentralizerError("dimension mismatch")
    return matrices.mul(a, b) == matrices.mul(b, a)


@dataclass(frozen=True)
class CommutantLattice:
    """Primitive integer basis of {X : X M = M X}."""

    base: IntMatrix
    basis: tuple[IntMatrix, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def commutant(m: IntMatrix) -> CommutantLattice:
    system = reducible.solve_conjugation_system(m, m)
    for x in system.basis:
        assert commutes(x, m)
    return CommutantLattice(m, system.basis)


def centralizer_enumerate(m: IntMatrix, bound: int) -> list[IntMatrix]:
    """All X with entries in [-bound, bound], X M = M X, det +-1, and one odd
    entry per row; sorted deterministically by entries."""
    if bound < 1:
        raise CentralizerError("bound must be >= 1")
    system = reducible.solve_conjugation_system(m, m)
    return reducible.enumerate_intertwiners(system, bound, hat_only=True)


@dataclass(frozen=True)
class OrderCensus:
    base: IntMatrix
    bound: int
    counts: dict[int, int]          # finite order -> count
    infinite: int
    order2_witnesses: tuple[IntMatrix, ...]
    order4_witnesses: tuple[IntMatrix, ...]


def order_census(m: IntMatrix, bound: int) -> OrderCensus:
    counts: dict[int, int] = {}
    infinite = 0
    w2: list[IntMatrix] = []
    w4: list[IntMatrix] = []
    for x in centralizer_enumerate(m, bound):
        res = matrices.order(x)
        if res.finite:
            counts[res.value] = counts.get(res.value, 0) + 1
            if res.value == 2:
                w2.append(x)
            elif res.value == 4:
                w4.append(x)
        else:
            infinite += 1
    return OrderCensus(m, bound, counts, infinite, tuple(w2), tuple(w4))


def shear_12_matrix() -> IntMatrix:
    """The exponent-sum matrix of a_1 -> a_2 a_1 a_2 (rank 3)."""
    return matrices.matrix([[1, 2, 0], [0, 1, 0], [0, 0, 1]])


@dataclass(frozen=True)
class ShearCentralizerClass:
    """Order classification of a centralizer element of the a_1 -> a_2 a_1 a_2
    shear image, tagged with the determining diagonal sign pair."""

    result: OrderResult
    case: tuple[int, int]


def infOr2_classify(x: IntMatrix) -> ShearCentralizerClass:
    """Classify an element of the shear centralizer as order 1, 2, or
    infinite by its diagonal sign pair; cross-checked against the direct
    power computation.

    Centralizer elements have the form [[a,b,c],[0,a,0],[0,h,j]] with
    a, j = +-1; finite order then forces X^2 = I.
    """
    base = shear_12_matrix()
    if not commutes(x, base):
        raise CentralizerError("matrix does not commute with the shear image")
    if not matrices.is_in_hatGL(x):
        raise CentralizerError("matrix is not in the parity subgroup")
    a, j = x[0, 0], x[2, 2]
    assert a in (1, -1) and j in (1, -1)
    ident = matrices.identity(3)
    if x == ident:
        result = OrderResult(True, 1)
    elif matrices.mul(x, x) == ident:
        result = OrderResult(True, 2)
    else:
        result = OrderResult(False)
    direct = matrices.order(x)
    if direct != result:
        raise AssertionError(f"sign-case classification {result} != direct {direct}")
    return ShearCentralizerClass(result, (a, j))


# ---------------------------------------------------------------------------
# Parametric family audits


@dataclass(frozen=True)
class FamilyReport:
    family: str
    base: IntMatrix
    bound: int
    checked_instances: int
    instance_failures: tuple[IntMatrix, ...]   # displayed instances that fail to commute
    checked_elements: int
    shape_outliers: tuple[IntMatrix, ...]      # bounded centralizer elements off the shape

    @property
    def instances_commute(self) -> bool:
        return not self.instance_failures

    @property
    def shape_covers(self) -> bool:
        return not self.shape_outliers


@dataclass(frozen=True)
class _Family:
    base: Callable[..., IntMatrix]
    instances: Callable[..., Iterator[IntMatrix]]
    matches: Callable[..., Callable[[IntMatrix], bool]]


def _sign_diag_base(i: int) -> IntMatrix:
    return matrices.matrix(
        [[-1 if (r == c == i - 1) else (1 if r == c else 0) for c in range(3)]
         for r in range(3)]
    )


_SIGN_DIAG_FREE = {
    1: [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)],
    2: [(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)],
    3: [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)],
}


def _pattern_instances(cells: list[tuple[int, int]], bound: int) -> Iterator[IntMatrix]:
    for values in itertools.product(range(-bound, bound + 1), repeat=len(cells)):
        rows = [[0] * 3 for _ in range(3)]
        for (r, c), v in zip(cells, values):
            rows[r][c] = v
        yield matrices.matrix(rows)


def _pattern_matcher(cells: list[tuple[int, int]]) -> Callable[[IntMatrix], bool]:
    cellset = set(cells)

    def check(x: IntMatrix) -> bool:
        return all(
            x[r, c] == 0 for r in range(3) for c in range(3) if (r, c) not in cellset
        )

    return check


def _shear_shape_instances(bound: int) -> Iterator[IntMatrix]:
    rng = range(-bound, bound + 1)
    for a, b, c, h, j in itertools.product(rng, repeat=5):
        yield matrices.matrix([[a, b, c], [0, a, 0], [0, h, j]])


def _shear_shape_match(x: IntMatrix) -> bool:
    return (
        x[1, 0] == 0 and x[1, 2] == 0 and x[2, 0] == 0 and x[1, 1] == x[0, 0]
    )


def _swap_shape_instances(bound: int) -> Iterator[IntMatrix]:
    rng = range(-bound, bound + 1)
    for a, b, c, u, w in itertools.product(rng, repeat=5):
        yield matrices.matrix([[a, b, c], [b, a, c], [u, u, w]])


def _swap_shape_match(x: IntMatrix) -> bool:
    return (
        x[0, 0] == x[1, 1]
        and x[0, 1] == x[1, 0]
        and x[0, 2] == x[1, 2]
        and x[2, 0] == x[2, 1]
    )


def _cycle_shape_instances(bound: int) -> Iterator[IntMatrix]:
    rng = range(-bound, bound + 1)
    for a, b, c in itertools.product(rng, repeat=3):
        yield matrices.matrix([[a, b, c], [c, a, b], [b, c, a]])


def _cycle_shape_match(x: IntMatrix) -> bool:
    a, b, c = x[0, 0], x[0, 1], x[0, 2]
    return x.entries == ((a, b, c), (c, a, b), (b, c, a))


def unipotent_family_a(n: int, l: int) -> IntMatrix:
    return matrices.matrix([[1, 2 * n, -2 * n], [0, 1, 2 * l], [0, 0, 1]])


def unipotent_family_b(m: int) -> IntMatrix:
    return matrices.matrix([[1, 2 * m, -2 * m], [0, 1, 0], [0, 0, 1]])


def _family_a_instances(n: int, l: int, bound: int) -> Iterator[IntMatrix]:
    # displayed form: +-1 diagonal, (1,2) = b*n, (2,3) = b*l, (1,3) = c with
    # b, c even; the sign applies to the whole diagonal at once (mixed signs
    # do not commute with the base matrix when n and l are nonzero)
    evens = [2 * k for k in range(-bound, bound + 1)]
    for s in (1, -1):
        for b, c in itertools.product(evens, repeat=2):
            yield matrices.matrix(
                [[s, b * n, c], [0, s, b * l], [0, 0, s]]
            )


def _family_a_matcher(n: int, l: int) -> Callable[[IntMatrix], bool]:
    def check(x: IntMatrix) -> bool:
        if x[1, 0] or x[2, 0] or x[2, 1]:
            return False
        if x[0, 0] not in (1, -1) or not x[0, 0] == x[1, 1] == x[2, 2]:
            return False
        if x[0, 2] % 2:
            return False
        # (1,2) = b*n and (2,3) = b*l for one even b
        if n == 0 and l == 0:
            return x[0, 1] == 0 and x[1, 2] == 0
        if n != 0:
            if x[0, 1] % (2 * n):
                return False
            b = x[0, 1] // n
            return b % 2 == 0 and x[1, 2] == b * l
        b = x[1, 2] // l if x[1, 2] % l == 0 else None
        return b is not None and b % 2 == 0 and x[0, 1] == 0
    return check


def _family_b_instances(m: int, bound: int) -> Iterator[IntMatrix]:
    # displayed form: [[a,b,c],[0,v,w],[0,y,a+w]] with the unimodular
    # determinant constraint; y is a free parameter in the display
    rng = range(-bound, bound + 1)
    for a, b, c, v, w, y in itertools.product(rng, repeat=6):
        if a * (v * (a + w) - w * y) not in (1, -1):
            continue
        yield matrices.matrix([[a, b, c], [0, v, w], [0, y, a + w]])


def _family_b_matcher(m: int) -> Callable[[IntMatrix], bool]:
    def check(x: IntMatrix) -> bool:
        return (
            x[1, 0] == 0
            and x[2, 0] == 0
            and x[2, 2] == x[0, 0] + x[1, 2]
        )
    return check


def verify_family(family: str, params: tuple[int, ...], bound: int) -> FamilyReport:
    """Two-sided audit of a displayed centralizer family.

    Direction (a): does every displayed instance (parameters in
    [-bound, bound]) commute with the base matrix? Direction (b): does every
    bounded commutant element match the displayed shape? Counterexamples are
    reported, never silently dropped: at least one displayed family is known
    to fail direction (a).
    """
    if family == "sign_diag":
        (i,) = params
        if i not in (1, 2, 3):
            raise CentralizerError("sign_diag index must be 1..3")
        base = _sign_diag_base(i)
        cells = _SIGN_DIAG_FREE[i]
        instances = _pattern_instances(cells, bound)
        match = _pattern_matcher(cells)
    elif family == "A12_form":
        base = shear_12_matrix()
        instances = _shear_shape_instances(bound)
        match = _shear_shape_match
    elif family == "tau12_form":
        base = matrices.matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        instances = _swap_shape_instances(bound)
        match = _swap_shape_match
    elif family == "tau123_form":
        base = matrices.matrix([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        instances = _cycle_shape_instances(bound)
        match = _cycle_shape_match
    elif family == "P3_A":
        n, l = params
        base = unipotent_family_a(n, l)
        instances = _family_a_instances(n, l, bound)
        match = _family_a_matcher(n, l)
    elif family == "P3_B":
        (m,) = params
        base = unipotent_family_b(m)
        instances = _family_b_instances(m, bound)
        match = _family_b_matcher(m)
    else:
        raise CentralizerError(f"unknown family {family!r}")

    failures = []
    checked = 0
    for inst in instances:
        checked += 1
        if not commutes(inst, base):
            failures.append(inst)
    outliers = []
    elements = 0
    for x in centralizer_enumerate(base, bound):
        elements += 1
        if not match(x):
            outliers.append(x)
    return FamilyReport(
        family, base, bound, checked, tuple(failures), elements, tuple(outliers)
    )
