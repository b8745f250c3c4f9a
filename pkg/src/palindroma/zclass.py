"""z-class witnesses and distinguishers: generator-image conjugators,
order-spectrum separations, the parametric unipotent families, and block
embedding into higher rank."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import abelianize, centralizer, matrices, reducible, words
from .matrices import IntMatrix


class ZClassError(ValueError):
    pass


def family_A(n: int, l: int) -> IntMatrix:
    """[[1, 2n, -2n], [0, 1, 2l], [0, 0, 1]]"""
    return centralizer.unipotent_family_a(n, l)


def family_B(m: int) -> IntMatrix:
    """[[1, 2m, -2m], [0, 1, 0], [0, 0, 1]]"""
    return centralizer.unipotent_family_b(m)


GENERATOR_IDS = (
    "A12", "A13", "A21", "A23", "A31", "A32",
    "sigma1", "sigma2", "sigma3",
    "tau12", "tau13", "tau23", "tau123", "tau132",
)

# Cycle ids follow the source convention where tau123 is the 3-cycle whose
# matrix has rows e3, e1, e2 (a1 -> a3, a2 -> a1, a3 -> a2).
_TAU_PERMS = {
    "tau12": (2, 1, 3),
    "tau13": (3, 2, 1),
    "tau23": (1, 3, 2),
    "tau123": (3, 1, 2),
    "tau132": (2, 3, 1),
}


def generator_matrix(gen_id: str) -> IntMatrix:
    """The exponent-sum matrix of a named rank-3 generator."""
    if gen_id.startswith("A") and len(gen_id) == 3:
        i, j = int(gen_id[1]), int(gen_id[2])
        return abelianize.psi(words.gen_Aij(3, i, j))
    if gen_id.startswith("sigma"):
        return abelianize.psi(words.gen_sigma(3, int(gen_id[5:])))
    if gen_id in _TAU_PERMS:
        return abelianize.psi(words.gen_tau(3, _TAU_PERMS[gen_id]))
    raise ZClassError(f"unknown generator id {gen_id!r}")


def signed_permutation_matrices() -> list[IntMatrix]:
    """The 48 signed 3x3 permutation matrices; all lie in the parity subgroup."""
    mats = []
    for p in reducible.PERMUTATION_MATRICES:
        for signs in itertools.product((1, -1), repeat=3):
            mats.append(matrices.matrix(
                [[signs[i] * p[i, j] for j in range(3)] for i in range(3)]
            ))
    return mats


@dataclass(frozen=True)
class ZClassWitness:
    """Either an explicit conjugator between the two sides, or a list of
    invariant values distinguishing them, or inconclusive at the bound."""

    sides: tuple[IntMatrix, IntMatrix]
    conjugator: Optional[IntMatrix] = None
    distinguishers: tuple[tuple[str, object, object], ...] = ()
    bound: Optional[int] = None

    @property
    def kind(self) -> str:
        if self.conjugator is not None:
            return "ConjugatorFound"
        if self.distinguishers:
            return "Distinguisher"
        return "Inconclusive"


def generator_zclass_witness(g1: str, g2: str, bound: int = 2) -> ZClassWitness:
    """Search signed permutation matrices for a conjugator between two
    generator images; on failure compute distinguishing invariants."""
    m1, m2 = generator_matrix(g1), generator_matrix(g2)
    for p in signed_permutation_matrices():
        if not matrices.is_in_hatGL(p):
            continue
        if reducible.conjugation_residual(m1, m2, p) == matrices.zero(3):
            return ZClassWitness((m1, m2), conjugator=p)
    dist: list[tuple[str, object, object]] = []
    o1, o2 = matrices.order(m1), matrices.order(m2)
    if o1 != o2:
        dist.append(("order", str(o1), str(o2)))
    c1 = centralizer.order_census(m1, bound)
    c2 = centralizer.order_census(m2, bound)
    n1, n2 = c1.counts.get(2, 0), c2.counts.get(2, 0)
    if n1 != n2:
        dist.append(("order-2 census of centralizer", n1, n2))
    r1 = centralizer.commutant(m1).rank
    r2 = centralizer.commutant(m2).rank
    if r1 != r2:
        dist.append(("commutant rank", r1, r2))
    if not dist:
        return ZClassWitness((m1, m2), bound=bound)
    return ZClassWitness((m1, m2), distinguishers=tuple(dist), bound=bound)


def _shear_shape_char_poly_check(samples: range = range(-3, 4)) -> None:
    """Confirm the characteristic polynomial of the shear-centralizer shape
    [[a,b,c],[0,a,0],[0,h,j]] is (t-a)^2 (t-j), independent of b, c, h.

    First-column expansion gives the identity exactly; this check replays it
    on a grid plus large off-diagonal values as a guard against regressions.
    """
    big = (997, -1003)
    values = list(samples) + list(big)
    for a, j in itertools.product((1, -1), repeat=2):
        expected = _poly_from_roots((a, a, j))
        for b, c, h in itertools.product(values[:5], repeat=3):
            x = matrices.matrix([[a, b, c], [0, a, 0], [0, h, j]])
            if matrices.char_poly(x).coeffs != expected:
                raise AssertionError("shape characteristic polynomial drifted")
        for b in big:
            x = matrices.matrix([[a, b, big[0]], [0, a, 0], [0, big[1], j]])
            if matrices.char_poly(x).coeffs != expected:
                raise AssertionError("shape characteristic polynomial drifted")


def _poly_from_roots(roots: tuple[int, ...]) -> tuple[int, ...]:
    coeffs = [1]
    for r in roots:
        coeffs = [0] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return tuple(coeffs)


def distinguish_A12_sigma(bound: int = 3) -> ZClassWitness:
    """The order-4 separation between the shear image and the sign-flip
    image: the sign-flip centralizer contains an explicit order-4 element,
    while every element of the shear centralizer has order 1, 2, or infinity.

    The shear side is argued parametrically: every commutant basis element
    matches the rank-5 shape [[a,b,c],[0,a,0],[0,h,j]] (a linear condition,
    so the whole lattice does), and the shape's characteristic polynomial is
    (t-a)^2 (t-j) with a, j = +-1 in the parity subgroup, so all eigenvalues
    are +-1 and order 4 is impossible. A bounded scan cross-checks.
    """
    shear = centralizer.shear_12_matrix()
    signflip = abelianize.psi(words.gen_sigma(3, 1))
    quarter_turn = matrices.matrix([[1, 0, 0], [0, 0, -1], [0, 1, 0]])
    if not centralizer.commutes(quarter_turn, signflip):
        raise AssertionError("order-4 witness fails to commute")
    if matrices.order(quarter_turn) != matrices.OrderResult(True, 4):
        raise AssertionError("witness order is not 4")

    for x in centralizer.commutant(shear).basis:
        if not (x[1, 0] == x[1, 2] == x[2, 0] == 0 and x[1, 1] == x[0, 0]):
            raise AssertionError("shear commutant basis leaves the expected shape")
    _shear_shape_char_poly_check()

    for x in centralizer.centralizer_enumerate(shear, bound):
        res = matrices.order(x)
        if res.finite and res.value not in (1, 2):
            raise AssertionError(f"shear centralizer element of order {res.value}")
    return ZClassWitness(
        (shear, signflip),
        distinguishers=(("order-4 element exists", False, True),),
        bound=bound,
    )


def block_embed(m: IntMatrix, dim: int) -> IntMatrix:
    """Block diagonal [[m, 0], [0, I_{dim-3}]]; preserves parity membership."""
    if m.n != 3:
        raise ZClassError("block_embed expects a 3x3 matrix")
    if dim < 3:
        raise ZClassError("target dimension must be >= 3")
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < 3 and j < 3:
                row.append(m[i, j])
            else:
                row.append(1 if i == j else 0)
        rows.append(row)
    return matrices.matrix(rows)


def conjugation_equations(d1: IntMatrix, d2: IntMatrix) -> list[str]:
    """The entrywise linear equations of G d1 = d2 G in the unknown entries
    g11..g33, rendered as strings; identities 0 = 0 are dropped."""
    n = d1.n
    names = [[f"g{i + 1}{j + 1}" for j in range(n)] for i in range(n)]
    equations = []
    for i in range(n):
        for j in range(n):
            coeffs: dict[str, int] = {}
            for k in range(n):
                coeffs[names[i][k]] = coeffs.get(names[i][k], 0) + d1[k, j]
                coeffs[names[k][j]] = coeffs.get(names[k][j], 0) - d2[i, k]
            terms = [(name, c) for name, c in sorted(coeffs.items()) if c != 0]
            if not terms:
                continue
            parts = []
            for name, c in terms:
                if c == 1:
                    txt = name
                elif c == -1:
                    txt = f"-{name}"
                else:
                    txt = f"{c}*{name}"
                if parts and not txt.startswith("-"):
                    parts.append(f"+ {txt}")
                elif parts:
                    parts.append(f"- {txt[1:]}")
                else:
                    parts.append(txt)
            equations.append(" ".join(parts) + " = 0")
    return equations


@dataclass(frozen=True)
class FamilyPairAudit:
    """Desk-scale audit of the two parametric unipotent families."""

    n: int
    l: int
    m: int
    bound: int
    rank_a: int
    rank_b: int
    eigen_all_unit: bool
    eigen_checked: int
    erratum_residual: IntMatrix
    erratum_nonzero: bool
    displayed_instance_failures: int
    equations: tuple[str, ...] = ()
    pair_t: int = 0
    hat_conjugators_found: int = 0
    gl_conjugators_found: int = 0

    @property
    def rank_distinguisher(self) -> bool:
        return self.rank_a != self.rank_b


# the displayed centralizer member whose commutation with the second family
# fails for m != 0; re-derived here with its exact residual
def displayed_witness(b: int = 0, c: int = 0) -> IntMatrix:
    return matrices.matrix([[1, b, c], [0, 2, 1], [0, 3, 2]])


def p3_audit(n: int, l: int, m: int, bound: int = 2) -> FamilyPairAudit:
    """Audit the infinite-family separation at concrete parameters.

    Computes commutant ranks of both families by the integer kernel solver,
    classifies eigenvalues over the bounded centralizer of the first family,
    re-derives the residual of the displayed-but-incorrect centralizer
    member of the second family, and regenerates the intertwiner equations
    for a pair of distinct first-family matrices.
    """
    if n == 0 or l == 0 or m == 0:
        raise ZClassError("parameters must be nonzero")
    if bound < 2:
        raise ZClassError("bound must be >= 2")
    a_mat = family_A(n, l)
    b_mat = family_B(m)
    rank_a = centralizer.commutant(a_mat).rank
    rank_b = centralizer.commutant(b_mat).rank

    checked = 0
    all_unit = True
    for x in centralizer.centralizer_enumerate(a_mat, bound):
        checked += 1
        if not matrices.eigen_classify(x).all_unit:
            all_unit = False

    witness = displayed_witness()
    residual = reducible.conjugation_residual(b_mat, b_mat, witness)
    report = centralizer.verify_family("P3_B", (m,), bound)

    t = abs(n) + abs(l) + abs(m) + 1
    d1 = matrices.matrix([[1, 2 * n, 2], [0, 1, 2 * l], [0, 0, 1]])
    d2 = matrices.matrix([[1, 2 * m, 2], [0, 1, 2 * t], [0, 0, 1]])
    equations = tuple(conjugation_equations(d1, d2))
    hat = reducible.bounded_conjugator_scan(d1, d2, bound, hat_only=True)
    full = reducible.bounded_conjugator_scan(d1, d2, bound, hat_only=False)

    return FamilyPairAudit(
        n=n,
        l=l,
        m=m,
        bound=bound,
        rank_a=rank_a,
        rank_b=rank_b,
        eigen_all_unit=all_unit,
        eigen_checked=checked,
        erratum_residual=residual,
        erratum_nonzero=residual != matrices.zero(3),
        displayed_instance_failures=len(report.instance_failures),
        equations=equations,
        pair_t=t,
        hat_conjugators_found=len(hat),
        gl_conjugators_found=len(full),
    )
