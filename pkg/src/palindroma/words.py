"""Freely reduced words in a free group and endomorphisms given by generator images."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

# Composed automorphism images grow exponentially; refuse to build words past
# this many letters instead of exhausting memory.
MAX_WORD_LETTERS = 10**6


class WordError(ValueError):
    pass


class WordTooLongError(WordError):
    pass


@dataclass(frozen=True)
class Letter:
    """A signed generator letter a_index^sign."""

    index: int
    sign: int

    def __post_init__(self):
        if self.index < 1:
            raise WordError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise WordError(f"letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Letter":
        return Letter(self.index, -self.sign)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for lt in letters:
        if stack and stack[-1].index == lt.index and stack[-1].sign == -lt.sign:
            stack.pop()
        else:
            stack.append(lt)
        if len(stack) > MAX_WORD_LETTERS:
            raise WordTooLongError(f"word exceeds {MAX_WORD_LETTERS} letters")
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word in F_rank. The constructor reduces its input."""

    letters: tuple[Letter, ...]
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be >= 1, got {self.rank}")
        for lt in self.letters:
            if lt.index > self.rank:
                raise WordError(f"letter index {lt.index} exceeds rank {self.rank}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


def word(rank: int, *pairs: tuple[int, int]) -> Word:
    """Build a Word from (index, exponent) pairs, e.g. word(3, (1, 2), (2, -1))."""
    letters: list[Letter] = []
    for index, exp in pairs:
        if exp == 0:
            continue
        sign = 1 if exp > 0 else -1
        letters.extend(Letter(index, sign) for _ in range(abs(exp)))
    return Word(tuple(letters), rank)


def empty_word(rank: int) -> Word:
    return Word((), rank)


def parse_word(text: str, rank: int) -> Word:
    """Parse whitespace-separated tokens `a<k>` or `a<k>^<e>` into a reduced Word."""
    letters: list[Letter] = []
    for token in text.split():
        if not token.startswith("a"):
            raise WordError(f"malformed token {token!r}: expected a<k> or a<k>^<e>")
        body = token[1:]
        if "^" in body:
            idx_part, _, exp_part = body.partition("^")
        else:
            idx_part, exp_part = body, "1"
        try:
            index = int(idx_part)
            exp = int(exp_part)
        except ValueError:
            raise WordError(f"malformed token {token!r}") from None
        if exp == 0:
            raise WordError(f"token {token!r} has zero exponent")
        if not 1 <= index <= rank:
            raise WordError(f"token {token!r}: index out of range 1..{rank}")
        sign = 1 if exp > 0 else -1
        letters.extend(Letter(index, sign) for _ in range(abs(exp)))
    return Word(tuple(letters), rank)


def format_word(w: Word) -> str:
    """Exponent-compressed display form; the empty word prints as '1'."""
    if not w.letters:
        return "1"
    runs: list[tuple[int, int]] = []
    for lt in w.letters:
        if runs and runs[-1][0] == lt.index and (runs[-1][1] > 0) == (lt.sign > 0):
            runs[-1] = (lt.index, runs[-1][1] + lt.sign)
        else:
            runs.append((lt.index, lt.sign))
    parts = []
    for index, exp in runs:
        parts.append(f"a{index}" if exp == 1 else f"a{index}^{exp}")
    return " ".join(parts)


def reduce(w: Word) -> Word:
    """Freely reduced form (a no-op for Word values, which reduce on construction)."""
    return Word(w.letters, w.rank)


def invert(w: Word) -> Word:
    return Word(tuple(lt.inverse() for lt in reversed(w.letters)), w.rank)


def concat(u: Word, v: Word) -> Word:
    if u.rank != v.rank:
        raise WordError(f"rank mismatch: {u.rank} vs {v.rank}")
    return Word(u.letters + v.letters, u.rank)


def reversal(w: Word) -> Word:
    """Letter-by-letter reversal, signs kept (not the group inverse)."""
    return Word(tuple(reversed(w.letters)), w.rank)


def is_palindrome(w: Word) -> bool:
    """True iff the reduced letter sequence equals its reversal, signs included."""
    return w.letters == tuple(reversed(w.letters))


@dataclass(frozen=True)
class EndoMap:
    """An endomorphism of F_rank given by the images of the generators."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise WordError(
                f"expected {self.rank} generator images, got {len(self.images)}"
            )
        for w in self.images:
            if w.rank != self.rank:
                raise WordError("image rank differs from endomorphism rank")

    def image(self, index: int) -> Word:
        return self.images[index - 1]


def identity_endo(rank: int) -> EndoMap:
    return EndoMap(rank, tuple(word(rank, (i, 1)) for i in range(1, rank + 1)))


def gen_Aij(n: int, i: int, j: int) -> EndoMap:
    """a_i -> a_j a_i a_j, all other generators fixed."""
    if i == j:
        raise WordError("gen_Aij requires i != j")
    if not (1 <= i <= n and 1 <= j <= n):
        raise WordError(f"indices must lie in 1..{n}")
    images = []
    for k in range(1, n + 1):
        if k == i:
            images.append(word(n, (j, 1), (i, 1), (j, 1)))
        else:
            images.append(word(n, (k, 1)))
    return EndoMap(n, tuple(images))


def gen_sigma(n: int, i: int) -> EndoMap:
    """a_i -> a_i^{-1}, all other generators fixed."""
    if not 1 <= i <= n:
        raise WordError(f"index must lie in 1..{n}")
    images = tuple(
        word(n, (k, -1 if k == i else 1)) for k in range(1, n + 1)
    )
    return EndoMap(n, images)


def gen_tau(n: int, perm: Sequence[int]) -> EndoMap:
    """Generator permutation a_i -> a_{perm[i-1]}; perm is a bijection of 1..n."""
    if sorted(perm) != list(range(1, n + 1)):
        raise WordError(f"{perm!r} is not a permutation of 1..{n}")
    return EndoMap(n, tuple(word(n, (perm[i], 1)) for i in range(n)))


def apply(f: EndoMap, w: Word) -> Word:
    if f.rank != w.rank:
        raise WordError(f"rank mismatch: {f.rank} vs {w.rank}")
    letters: list[Letter] = []
    for lt in w.letters:
        img = f.image(lt.index)
        if lt.sign == 1:
            letters.extend(img.letters)
        else:
            letters.extend(invert(img).letters)
        if len(letters) > 4 * MAX_WORD_LETTERS:
            raise WordTooLongError(f"image exceeds {MAX_WORD_LETTERS} letters")
    return Word(tuple(letters), w.rank)


def compose(f: EndoMap, g: EndoMap) -> EndoMap:
    """Left-action composition: (f o g)(a_i) = f(g(a_i))."""
    if f.rank != g.rank:
        raise WordError(f"rank mismatch: {f.rank} vs {g.rank}")
    return EndoMap(f.rank, tuple(apply(f, img) for img in g.images))


def is_palindromic(f: EndoMap) -> bool:
    """True iff every generator image is a palindrome."""
    return all(is_palindrome(w) for w in f.images)


def parse_endomap(text: str, rank: int) -> EndoMap:
    """Parse an endomorphism file: one image per line, `#` comments allowed."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if len(lines) != rank:
        raise WordError(f"expected {rank} image lines, got {len(lines)}")
    return EndoMap(rank, tuple(parse_word(line, rank) for line in lines))


def format_endomap(f: EndoMap) -> str:
    return "\n".join(format_word(w) for w in f.images)
