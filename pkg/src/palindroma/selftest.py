"""End-to-end reproduction suite: every headline computation the library is
built to audit, runnable as `palindroma selftest` and reused by the
acceptance tests.

Each check returns (status, detail). Status is PASS or FAIL, except the one
documented ERRATUM item: the displayed centralizer member of the second
unipotent family fails direct commutation, and reproducing the display is
deliberately not a pass criterion."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import abelianize, centralizer, matrices, reducible, words, zclass
from .matrices import IntMatrix

PASS = "PASS"
FAIL = "FAIL"
ERRATUM = "ERRATUM"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str


def _elementary_gl3(rng: random.Random) -> IntMatrix:
    kind = rng.randrange(3)
    if kind == 0:
        i, j = rng.sample(range(3), 2)
        k = rng.choice([-2, -1, 1, 2])
        rows = [[1 if r == c else 0 for c in range(3)] for r in range(3)]
        rows[i][j] = k
        return matrices.matrix(rows)
    if kind == 1:
        i, j = rng.sample(range(3), 2)
        rows = [[0] * 3 for _ in range(3)]
        perm = list(range(3))
        perm[i], perm[j] = perm[j], perm[i]
        for r in range(3):
            rows[r][perm[r]] = 1
        return matrices.matrix(rows)
    i = rng.randrange(3)
    rows = [[(-1 if r == c == i else 1 if r == c else 0) for c in range(3)]
            for r in range(3)]
    return matrices.matrix(rows)


def random_gl3(rng: random.Random, length: int) -> IntMatrix:
    result = matrices.identity(3)
    for _ in range(length):
        result = matrices.mul(result, _elementary_gl3(rng))
    return result


def random_generator_product(rng: random.Random, length: int, n: int = 3) -> words.EndoMap:
    gens: list[words.EndoMap] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                gens.append(words.gen_Aij(n, i, j))
        gens.append(words.gen_sigma(n, i))
    for perm in itertools.permutations(range(1, n + 1)):
        gens.append(words.gen_tau(n, perm))
    f = words.identity_endo(n)
    for _ in range(length):
        f = words.compose(f, rng.choice(gens))
    return f


def hat_matrices_with_entries_bounded(bound: int):
    """All parity-subgroup matrices with entries in [-bound, bound]."""
    odds = [x for x in range(-bound, bound + 1) if x % 2]
    evens = [x for x in range(-bound, bound + 1) if x % 2 == 0]
    row_choices = []
    for pos in range(3):
        for odd in odds:
            for ev in itertools.product(evens, repeat=2):
                row = list(ev[:pos]) + [odd] + list(ev[pos:])
                row_choices.append(tuple(row))
    for rows in itertools.product(row_choices, repeat=3):
        m = IntMatrix(rows)
        if matrices.det(m) in (1, -1):
            yield m


# ---------------------------------------------------------------------------
# Checks 1..11


def check_generator_images() -> CheckResult:
    expected = {
        "A12": [[1, 2, 0], [0, 1, 0], [0, 0, 1]],
        "sigma1": [[-1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "tau12": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        "tau123": [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    }
    for gen_id, rows in expected.items():
        if zclass.generator_matrix(gen_id) != matrices.matrix(rows):
            return CheckResult("generator images", FAIL, f"{gen_id} mismatch")
    return CheckResult("generator images", PASS, "4 generator matrices exact")


def check_membership_roundtrip(seed: int = 20240901) -> CheckResult:
    rng = random.Random(seed)
    for k in range(500):
        f = random_generator_product(rng, rng.randrange(1, 13))
        if not matrices.is_in_hatGL(abelianize.psi(f)):
            return CheckResult("membership round trip", FAIL,
                               f"forward image escaped the parity subgroup (case {k})")
    for k in range(500):
        m = matrices.random_hat_element(seed + k, rng.randrange(0, 13))
        f = abelianize.lift(m)
        if not words.is_palindromic(f) or abelianize.psi(f) != m:
            return CheckResult("membership round trip", FAIL, f"lift failed (case {k})")
    rejected = 0
    attempts = 0
    while rejected < 10_000:
        attempts += 1
        if attempts > 200_000:
            return CheckResult("membership round trip", FAIL,
                               "could not generate enough odd-row matrices")
        m = random_gl3(rng, rng.randrange(2, 9))
        if any(sum(x % 2 != 0 for x in row) >= 2 for row in m.entries):
            if abelianize.membership_report(m).member:
                return CheckResult("membership round trip", FAIL,
                                   f"odd-row matrix accepted: {m}")
            rejected += 1
    return CheckResult("membership round trip", PASS,
                       "500 forward, 500 lifts, 10000 rejections")


def check_reducibility_biconditional() -> CheckResult:
    count = 0
    for m in hat_matrices_with_entries_bounded(2):
        count += 1
        patt, _ = reducible.zero_pattern_reducible(m)
        form = reducible.reduce_by_permutation(m)
        if patt != (form is not None):
            return CheckResult("reducibility biconditional", FAIL, f"mismatch at {m}")
    return CheckResult("reducibility biconditional", PASS,
                       f"exhaustive over {count} matrices, zero mismatches")


# a unimodular 3x3 matrix need not have +-1 in its spectrum: the companion
# matrix of the irreducible t^3 - t - 1, and a parity-subgroup example
UNIT_EIGENVALUE_COUNTEREXAMPLES = (
    matrices.matrix([[0, 0, 1], [1, 0, 1], [0, 1, 0]]),
    matrices.matrix([[0, 0, 1], [1, 6, 10], [0, 1, 2]]),
)


def check_unit_eigenvalue(seed: int = 77, samples: int = 1000) -> CheckResult:
    """Reducible block forms always carry the unit eigenvalue of their 1x1
    block; the unrestricted statement for all of GL_3(Z) is false, and the
    check verifies explicit counterexamples (one inside the parity subgroup)."""
    rng = random.Random(seed)
    for k in range(samples):
        a2 = _random_admissible_block(rng)
        e = rng.choice([1, -1])
        orientation = rng.choice([reducible.UPPER_LEFT, reducible.LOWER_RIGHT])
        form = reducible.ReducibleForm(
            orientation, e, a2,
            (rng.randrange(-3, 4), rng.randrange(-3, 4)), matrices.identity(3)
        )
        p = rng.choice(reducible.PERMUTATION_MATRICES)
        m = matrices.mul(p, matrices.mul(form.coupled(),
                                         matrices.inverse_unimodular(p)))
        if e not in matrices.unit_eigenvalue(m):
            return CheckResult("unit eigenvalue", FAIL,
                               f"reducible sample missing unit root: {m}")
    for ce in UNIT_EIGENVALUE_COUNTEREXAMPLES:
        if matrices.det(ce) not in (1, -1) or matrices.unit_eigenvalue(ce):
            return CheckResult("unit eigenvalue", FAIL,
                               f"counterexample has a unit root: {ce}")
        kinds = [e.kind for e in matrices.eigen_classify(ce).eigenvalues]
        if kinds != ["cubic"]:
            return CheckResult("unit eigenvalue", FAIL,
                               f"counterexample spectrum not irreducible: {kinds}")
    if not matrices.is_in_hatGL(UNIT_EIGENVALUE_COUNTEREXAMPLES[1]):
        return CheckResult("unit eigenvalue", FAIL,
                           "parity counterexample left the subgroup")
    return CheckResult("unit eigenvalue", PASS,
                       f"{samples} reducible samples carry their unit block "
                       "eigenvalue; irreducible-spectrum counterexamples verified")


WORKED_EXAMPLE = matrices.matrix([[1, 2, 2], [0, 3, 4], [0, 2, 3]])


def check_worked_example() -> CheckResult:
    form = reducible.reduce_by_permutation(WORKED_EXAMPLE)
    if form is None or form.orientation != reducible.UPPER_LEFT:
        return CheckResult("worked conjugacy example", FAIL, "block form not found")
    verdict = reducible.decide_sim1(form)
    inv = verdict.invariants
    ok = (
        verdict.kind == reducible.NOT_CONJUGATE
        and inv is not None
        and (inv.e, inv.tau, inv.delta, inv.m) == (1, 6, 1, 4)
        and inv.a0 == matrices.matrix([[-2, 4], [2, -2]])
        and verdict.residue == (0, 2)
    )
    if not ok:
        return CheckResult("worked conjugacy example", FAIL, f"verdict {verdict.kind}")
    system = reducible.solve_conjugation_system(WORKED_EXAMPLE, form.decoupled())
    for x in system.basis:
        if not (x[1, 0] == 0 and x[2, 0] == 0 and x[0, 1] == 0
                and x[0, 0] == -x[0, 2]):
            return CheckResult("worked conjugacy example", FAIL,
                               "intertwiner constraints not reproduced")
    scan = reducible.enumerate_intertwiners(system, 5, hat_only=True)
    if scan:
        return CheckResult("worked conjugacy example", FAIL,
                           f"unexpected bounded conjugator {scan[0]}")
    return CheckResult("worked conjugacy example", PASS,
                       "invariants (1,6,1,4), residue (0,2), no bounded conjugator")


def _random_admissible_block(rng: random.Random) -> IntMatrix:
    # even shear coefficients keep each row and column at exactly one odd
    # entry, so the assembled 3x3 block form stays in the parity subgroup
    while True:
        a2 = matrices.identity(2)
        for _ in range(rng.randrange(1, 6)):
            k = rng.choice([-4, -2, 2, 4])
            if rng.random() < 0.5:
                e = matrices.matrix([[1, k], [0, 1]])
            else:
                e = matrices.matrix([[1, 0], [k, 1]])
            if rng.random() < 0.25:
                e = matrices.mul(e, matrices.matrix([[0, 1], [1, 0]]))
            a2 = matrices.mul(a2, e)
        if abs(matrices.trace(a2)) != 2:
            return a2


def check_conjugacy_criterion(seed: int = 5150, samples: int = 20) -> CheckResult:
    a2 = matrices.matrix([[3, 4], [2, 3]])
    form = reducible.ReducibleForm(
        reducible.UPPER_LEFT, 1, a2, (2, 2), matrices.identity(3)
    )
    verdict = reducible.decide_sim1(form)
    expected_witness = matrices.matrix([[1, 0, -2], [0, 3, 4], [0, 2, 3]])
    if verdict.kind != reducible.CONJUGATE or verdict.witness != expected_witness:
        return CheckResult("conjugacy criterion", FAIL, "positive instance mismatch")
    rng = random.Random(seed)
    conj = 0
    not_conj = 0
    for _ in range(samples):
        a2 = _random_admissible_block(rng)
        e = rng.choice([1, -1])
        r, s = rng.randrange(-3, 4), rng.randrange(-3, 4)
        orientation = rng.choice([reducible.UPPER_LEFT, reducible.LOWER_RIGHT])
        form = reducible.ReducibleForm(
            orientation, e, a2, (r, s), matrices.identity(3)
        )
        v = reducible.decide_sim1(form)
        if v.kind == reducible.CONJUGATE:
            conj += 1  # witness already verified inside decide_sim1
        elif v.kind == reducible.NOT_CONJUGATE:
            scan = reducible.bounded_conjugator_scan(
                form.coupled(), form.decoupled(), 3, hat_only=True
            )
            if scan:
                return CheckResult("conjugacy criterion", FAIL,
                                   f"bounded conjugator contradicts verdict: {scan[0]}")
            not_conj += 1
        else:
            return CheckResult("conjugacy criterion", FAIL,
                               f"unexpected verdict {v.kind} for |tau| != 2")
    return CheckResult("conjugacy criterion", PASS,
                       f"witnessed {conj} conjugate, {not_conj} scanned non-conjugate")


def check_shear_centralizer_orders() -> CheckResult:
    shear = centralizer.shear_12_matrix()
    elements = centralizer.centralizer_enumerate(shear, 3)
    for x in elements:
        cls = centralizer.infOr2_classify(x)  # cross-checks against direct order
        if cls.result.finite and cls.result.value not in (1, 2):
            return CheckResult("shear centralizer orders", FAIL, f"order {cls.result}")
    return CheckResult("shear centralizer orders", PASS,
                       f"{len(elements)} elements, orders in {{1, 2, inf}}")


def check_order4_distinguisher() -> CheckResult:
    witness = zclass.distinguish_A12_sigma(bound=3)
    if witness.kind != "Distinguisher":
        return CheckResult("order-4 distinguisher", FAIL, witness.kind)
    return CheckResult("order-4 distinguisher", PASS,
                       "order-4 element separates the two centralizers")


def check_generator_zclasses() -> CheckResult:
    shears = [f"A{i}{j}" for i in range(1, 4) for j in range(1, 4) if i != j]
    for g1, g2 in itertools.combinations(shears, 2):
        w = zclass.generator_zclass_witness(g1, g2)
        if w.kind != "ConjugatorFound":
            return CheckResult("generator z-classes", FAIL, f"no conjugator {g1},{g2}")
    for g1, g2 in itertools.combinations(["sigma1", "sigma2", "sigma3"], 2):
        w = zclass.generator_zclass_witness(g1, g2)
        if w.kind != "ConjugatorFound":
            return CheckResult("generator z-classes", FAIL, f"no conjugator {g1},{g2}")
    w = zclass.generator_zclass_witness("tau12", "tau123")
    dist = dict((name, (x, y)) for name, x, y in w.distinguishers)
    if w.kind != "Distinguisher" or "order" not in dist:
        return CheckResult("generator z-classes", FAIL, "swap/cycle orders not separated")
    census = dist.get("order-2 census of centralizer")
    if census is None or census[0] < 3 or census[1] != 1:
        return CheckResult("generator z-classes", FAIL, f"census {census}")
    swap = zclass.generator_matrix("tau12")
    cycle = zclass.generator_matrix("tau123")
    c_swap = centralizer.order_census(cycle, 2)
    if c_swap.counts.get(2, 0) != 1 or c_swap.order2_witnesses[0] != matrices.scale(
        -1, matrices.identity(3)
    ):
        return CheckResult("generator z-classes", FAIL, "cycle census witness")
    ranks = (centralizer.commutant(swap).rank, centralizer.commutant(cycle).rank)
    if ranks != (5, 3):
        return CheckResult("generator z-classes", FAIL, f"commutant ranks {ranks}")
    return CheckResult("generator z-classes", PASS,
                       "18 conjugator pairs, swap/cycle separated (orders 2/3, "
                       "census >=3 vs 1, ranks 5 vs 3)")


def check_family_audit() -> list[CheckResult]:
    for n, l, m in itertools.product((1, 2, 3), repeat=3):
        audit = zclass.p3_audit(n, l, m, bound=2)
        if (audit.rank_a, audit.rank_b) != (3, 5):
            return [CheckResult("parametric family audit", FAIL,
                                f"ranks {(audit.rank_a, audit.rank_b)} at {(n, l, m)}")]
        if not audit.eigen_all_unit:
            return [CheckResult("parametric family audit", FAIL,
                                f"non-unit eigenvalue at {(n, l, m)}")]
        if not audit.erratum_nonzero or audit.displayed_instance_failures == 0:
            return [CheckResult("parametric family audit", FAIL,
                                f"expected commutation discrepancy at {(n, l, m)}")]
    return [
        CheckResult("parametric family audit", PASS,
                    "27 parameter triples: ranks (3, 5), all eigenvalues unit"),
        CheckResult(
            "displayed second-family centralizer", ERRATUM,
            "the displayed member fails direct commutation for every m != 0; "
            "the corrected commutant (rank 5 vs 3) still separates the families"),
    ]


def check_block_embedding() -> CheckResult:
    samples = [
        zclass.family_A(1, 1),
        zclass.generator_matrix("tau123"),
        WORKED_EXAMPLE,
    ]
    from . import linalg

    for m in samples:
        base_hnf = linalg.hnf_rows(
            [reducible.matrix_to_vec(x) for x in centralizer.commutant(m).basis]
        )
        for dim in (4, 5, 6):
            big = zclass.block_embed(m, dim)
            if matrices.is_in_hatGL(big) != matrices.is_in_hatGL(m):
                return CheckResult("block embedding", FAIL, f"parity lost at dim {dim}")
            projected = []
            for x in centralizer.commutant(big).basis:
                projected.append([x[i, j] for i in range(3) for j in range(3)])
            if linalg.hnf_rows(projected) != base_hnf:
                return CheckResult("block embedding", FAIL,
                                   f"commutant projection differs at dim {dim}")
    return CheckResult("block embedding", PASS,
                       "parity and commutant projection stable for dims 4..6")


def run_all(seed: int | None = None) -> list[CheckResult]:
    """Run every check; `seed` reseeds the randomized ones."""
    checks: list[Callable] = [
        check_generator_images,
        (lambda: check_membership_roundtrip(seed)) if seed is not None
        else check_membership_roundtrip,
        check_reducibility_biconditional,
        (lambda: check_unit_eigenvalue(seed + 1)) if seed is not None
        else check_unit_eigenvalue,
        check_worked_example,
        (lambda: check_conjugacy_criterion(seed + 2)) if seed is not None
        else check_conjugacy_criterion,
        check_shear_centralizer_orders,
        check_order4_distinguisher,
        check_generator_zclasses,
        check_family_audit,
        check_block_embedding,
    ]
    results: list[CheckResult] = []
    for check in checks:
        outcome = check()
        if isinstance(outcome, CheckResult):
            results.append(outcome)
        else:
            results.extend(outcome)
    return results
