"""Exact integer matrix arithmetic: determinants, characteristic polynomials,
element orders, eigenvalue classification, and the one-odd-entry-per-row
parity subgroup of GL_n(Z)."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class MatrixError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    """An exact n x n integer matrix, row-major, immutable."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise MatrixError("empty matrix")
        for row in self.entries:
            if len(row) != n:
                raise MatrixError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def __str__(self) -> str:
        return format_matrix(self)


def matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return IntMatrix(tuple(tuple(int(x) for x in row) for row in rows))


def identity(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def zero(n: int) -> IntMatrix:
    return IntMatrix(tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def parse_matrix(text: str) -> IntMatrix:
    """Parse `1 2 0; 0 1 0; 0 0 1` (commas also allowed) or a JSON array of arrays."""
    text = text.strip()
    if text.startswith("["):
        try:
            rows = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixError(f"bad JSON matrix: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise MatrixError("JSON matrix must be an array of arrays")
        try:
            return matrix(rows)
        except (TypeError, ValueError) as exc:
            raise MatrixError(f"bad JSON matrix: {exc}") from None
    rows = []
    for part in text.split(";"):
        tokens = part.replace(",", " ").split()
        if not tokens:
            raise MatrixError("empty matrix row")
        try:
            rows.append([int(t) for t in tokens])
        except ValueError:
            bad = next(t for t in tokens if not _is_int(t))
            raise MatrixError(f"bad matrix entry {bad!r}") from None
    return matrix(rows)


def _is_int(token: str) -> bool:
    try:
        int(token)
        return True
    except ValueError:
        return False


def format_matrix(m: IntMatrix) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in m.entries)


def add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    _same_dim(a, b)
    return IntMatrix(tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    ))


def sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    _same_dim(a, b)
    return IntMatrix(tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    ))


def scale(k: int, a: IntMatrix) -> IntMatrix:
    return IntMatrix(tuple(tuple(k * x for x in row) for row in a.entries))


def neg(a: IntMatrix) -> IntMatrix:
    return scale(-1, a)


def mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    _same_dim(a, b)
    n = a.n
    bt = tuple(zip(*b.entries))
    return IntMatrix(tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries
    ))


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(tuple(zip(*a.entries)))


def _same_dim(a: IntMatrix, b: IntMatrix):
    if a.n != b.n:
        raise MatrixError(f"dimension mismatch: {a.n} vs {b.n}")


def det(a: IntMatrix) -> int:
    """Exact determinant by cofactor expansion (dimensions here are tiny)."""
    return _det_rows([list(r) for r in a.entries])


def _det_rows(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * x * _det_rows(minor)
    return total


def adjugate(a: IntMatrix) -> IntMatrix:
    n = a.n
    if n == 1:
        return identity(1)
    cof = [[0] * n for _ in range(n)]
    rows = [list(r) for r in a.entries]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            cof[i][j] = (-1) ** (i + j) * _det_rows(minor)
    # adjugate = transpose of cofactor matrix
    return IntMatrix(tuple(tuple(cof[j][i] for j in range(n)) for i in range(n)))


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    d = det(a)
    if d not in (1, -1):
        raise MatrixError(f"matrix is not unimodular (det = {d})")
    return scale(d, adjugate(a))


def power(a: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        return power(inverse_unimodular(a), -k)
    result = identity(a.n)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(tI - A); coeffs[k] multiplies t^k.

    For 2x2 input, tau and delta hold the trace and determinant, so the
    polynomial reads t^2 - tau*t + delta.
    """

    coeffs: tuple[int, ...]
    tau: Optional[int] = None
    delta: Optional[int] = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            term = "t" if k == 1 else f"t^{k}" if k > 1 else ""
            mag = abs(c)
            body = term if (mag == 1 and k > 0) else (f"{mag}*{term}" if term else str(mag))
            parts.append(("- " if c < 0 else "+ " if parts else "") + body)
        return " ".join(parts) if parts else "0"


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _poly_det(rows: list[list[list[int]]]) -> list[int]:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = [0]
    for j in range(n):
        entry = rows[0][j]
        if all(c == 0 for c in entry):
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = _poly_mul(entry, _poly_det(minor))
        if j % 2:
            term = [-c for c in term]
        if len(total) < len(term):
            total += [0] * (len(term) - len(total))
        for i, c in enumerate(term):
            total[i] += c
    return total


def char_poly(a: IntMatrix) -> CharPoly:
    """det(tI - A) by exact expansion; practical for the small n used here."""
    n = a.n
    if n > 6:
        raise MatrixError("char_poly supports n <= 6")
    rows = [
        [[-a[i, j], 1] if i == j else [-a[i, j]] for j in range(n)]
        for i in range(n)
    ]
    coeffs = _poly_det(rows)
    coeffs += [0] * (n + 1 - len(coeffs))
    if n == 2:
        tau = a[0, 0] + a[1, 1]
        return CharPoly(tuple(coeffs), tau=tau, delta=det(a))
    return CharPoly(tuple(coeffs))


def trace(a: IntMatrix) -> int:
    return sum(a[i, i] for i in range(a.n))


def unit_eigenvalue(a: IntMatrix) -> set[int]:
    """The subset of {+1, -1} that are eigenvalues of a unimodular matrix.

    May be empty: the characteristic polynomial of a unimodular 3x3 matrix
    can be irreducible over Q (e.g. the companion matrix of t^3 - t - 1).
    It is always non-empty for reducible block forms, whose 1x1 block is
    forced to +-1.
    """
    if det(a) not in (1, -1):
        raise MatrixError("unit_eigenvalue requires a unimodular matrix")
    chi = char_poly(a)
    return {s for s in (1, -1) if chi(s) == 0}


@dataclass(frozen=True)
class OrderResult:
    """Finite(k) carries the minimal k with M^k = I; otherwise infinite."""

    finite: bool
    value: Optional[int] = None

    def __str__(self) -> str:
        return f"Finite({self.value})" if self.finite else "Infinite"


FINITE_ORDER_BOUND_3 = 6  # finite orders in GL_3(Z) lie in {1, 2, 3, 4, 6}


def order(a: IntMatrix, power_bound: Optional[int] = None) -> OrderResult:
    """Minimal k with a^k = I, or Infinite.

    For n <= 3 the bound 6 is exact: a finite-order element has minimal
    polynomial a product of cyclotomics of degree <= 3, so its order divides
    4 or 6. For larger n a caller-supplied power_bound is required.
    """
    if det(a) not in (1, -1):
        raise MatrixError("order requires a unimodular matrix")
    if power_bound is None:
        if a.n > 3:
            raise MatrixError("order for n > 3 needs an explicit power_bound")
        power_bound = FINITE_ORDER_BOUND_3
    ident = identity(a.n)
    acc = a
    for k in range(1, power_bound + 1):
        if acc == ident:
            return OrderResult(True, k)
        acc = mul(acc, a)
    return OrderResult(False)


@dataclass(frozen=True)
class Eigenvalue:
    """One eigenvalue class of a 3x3 integer matrix.

    kind is 'rational' (value set), 'quadratic' (real irrational conjugate
    pair, discriminant > 0), 'complex' (complex conjugate pair,
    discriminant < 0), or 'cubic' (a full conjugate triple when the
    characteristic polynomial is irreducible over Q). Discriminants are
    reported unreduced.
    """

    kind: str
    value: Optional[int] = None
    discriminant: Optional[int] = None
    multiplicity: int = 1


@dataclass(frozen=True)
class EigenClassification:
    char: CharPoly
    eigenvalues: tuple[Eigenvalue, ...]
    all_unit: bool  # every eigenvalue is +1 or -1


def _integer_roots(coeffs: list[int]) -> list[int]:
    """Integer roots with multiplicity, repeatedly dividing out (t - r)."""
    roots = []
    while len(coeffs) > 1:
        const = coeffs[0]
        candidates: Iterable[int]
        if const == 0:
            candidates = [0]
        else:
            divs = [d for d in range(1, abs(const) + 1) if const % d == 0]
            candidates = [s * d for d in divs for s in (1, -1)]
        for r in candidates:
            value = 0
            for c in reversed(coeffs):
                value = value * r + c
            if value == 0:
                # synthetic division by (t - r)
                out = []
                carry = 0
                for c in reversed(coeffs):
                    carry = carry * r + c
                    out.append(carry)
                coeffs = list(reversed(out[:-1]))
                roots.append(r)
                break
        else:
            break
    return roots


def eigen_classify(a: IntMatrix) -> EigenClassification:
    """Factor the characteristic polynomial of a 3x3 matrix over Q and
    classify each eigenvalue as rational, a real quadratic pair, or a
    complex pair."""
    if a.n != 3:
        raise MatrixError("eigen_classify requires a 3x3 matrix")
    chi = char_poly(a)
    coeffs = list(chi.coeffs)
    roots = _integer_roots(coeffs[:])
    eigs: list[Eigenvalue] = []
    for r in sorted(set(roots)):
        eigs.append(Eigenvalue("rational", value=r, multiplicity=roots.count(r)))
    # divide out the found roots to expose the residual quadratic, if any
    rem = coeffs[:]
    for r in roots:
        out = []
        carry = 0
        for c in reversed(rem):
            carry = carry * r + c
            out.append(carry)
        rem = list(reversed(out[:-1]))
    if len(rem) == 3:
        b, c = rem[1], rem[0]  # monic t^2 + b t + c
        disc = b * b - 4 * c
        kind = "quadratic" if disc > 0 else "complex"
        eigs.append(Eigenvalue(kind, discriminant=disc))
    elif len(rem) == 4:
        # no rational root at all: an irreducible cubic conjugate triple
        eigs.append(Eigenvalue("cubic", multiplicity=3))
    all_unit = all(e.kind == "rational" and e.value in (1, -1) for e in eigs)
    return EigenClassification(chi, tuple(eigs), all_unit)


def is_in_hatGL(a: IntMatrix) -> bool:
    """Unimodular with exactly one odd entry in every row."""
    if det(a) not in (1, -1):
        return False
    return all(sum(x % 2 != 0 for x in row) == 1 for row in a.entries)


def generator_matrices(n: int) -> list[IntMatrix]:
    """Abelianized images of the standard palindromic generators of rank n."""
    from . import abelianize, words  # local import: abelianize depends on us

    gens: list[IntMatrix] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                gens.append(abelianize.psi(words.gen_Aij(n, i, j)))
    for i in range(1, n + 1):
        gens.append(abelianize.psi(words.gen_sigma(n, i)))
    perms = _all_permutations(n)
    for p in perms:
        if p != tuple(range(1, n + 1)):
            gens.append(abelianize.psi(words.gen_tau(n, p)))
    return gens


def _all_permutations(n: int) -> list[tuple[int, ...]]:
    import itertools

    return list(itertools.permutations(range(1, n + 1)))


def random_hat_element(seed: int, length: int, n: int = 3) -> IntMatrix:
    """Deterministic pseudo-random product of `length` generator matrices."""
    if length < 0:
        raise MatrixError("length must be >= 0")
    rng = random.Random(seed)
    gens = generator_matrices(n)
    result = identity(n)
    for _ in range(length):
        result = mul(result, rng.choice(gens))
    return result
