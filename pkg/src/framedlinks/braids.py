"""Framed braid words, the split form t_1^a_1 ... t_n^a_n * sigma, and the
group law of Z^n x| B_n together with its quotient by t_j^d = 1.

Strand indices are 1-based throughout the public API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import MismatchedStrands, ParseError


@dataclass(frozen=True)
class Sigma:
    i: int
    sign: int = 1

    def __str__(self) -> str:
        return f"s{self.i}" if self.sign > 0 else f"s{self.i}^-1"


@dataclass(frozen=True)
class Frame:
    j: int
    exp: int = 1

    def __str__(self) -> str:
        return f"t{self.j}" if self.exp == 1 else f"t{self.j}^{self.exp}"


BraidLetter = Union[Sigma, Frame]


def _check_letter(letter: BraidLetter, n: int) -> None:
    if isinstance(letter, Sigma):
        if not 1 <= letter.i < n:
            raise IndexError(f"sigma index {letter.i} out of range for {n} strands")
        if letter.sign not in (1, -1):
            raise ValueError("sigma sign must be +1 or -1")
    elif not 1 <= letter.j <= n:
        raise IndexError(f"framing index {letter.j} out of range for {n} strands")


@dataclass(frozen=True)
class FramedBraidWord:
    n: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("strand count must be at least 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_letter(letter, self.n)

    def __mul__(self, other: "FramedBraidWord") -> "FramedBraidWord":
        if self.n != other.n:
            raise MismatchedStrands(f"{self.n} vs {other.n} strands")
        return FramedBraidWord(self.n, self.letters + other.letters)

    def with_strands(self, n: int) -> "FramedBraidWord":
        """The same word read on ``n >= self.n`` strands."""
        if n < self.n:
            raise MismatchedStrands("cannot shrink strand count")
        return FramedBraidWord(n, self.letters)

    def __str__(self) -> str:
        return " ".join(str(a) for a in self.letters)


_TOKEN = re.compile(r"(?P<kind>[st])(?P<idx>\d+)(?:\^(?P<exp>[+-]?\d+))?$")


def parse_braid(text: str, n: int) -> FramedBraidWord:
    """Parse whitespace separated tokens ``s<i>``, ``s<i>^-1``, ``t<j>``, ``t<j>^<m>``."""
    letters: list[BraidLetter] = []
    for match in re.finditer(r"\S+", text):
        tok, offset = match.group(), match.start()
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"expected s<i>, s<i>^-1, t<j> or t<j>^<m>, got {tok!r}", offset)
        idx = int(m["idx"])
        exp = m["exp"]
        if m["kind"] == "s":
            if exp is None or int(exp) == 1:
                letter: BraidLetter = Sigma(idx, 1)
            elif int(exp) == -1:
                letter = Sigma(idx, -1)
            else:
                raise ParseError(f"sigma exponent must be 1 or -1, got {exp}", offset + m.start("exp"))
        else:
            letter = Frame(idx, 1 if exp is None else int(exp))
        _check_letter(letter, n)
        letters.append(letter)
    return FramedBraidWord(n, tuple(letters))


def crossing_permutation(crossings: Iterable[tuple[int, int]], n: int) -> tuple[int, ...]:
    """Bottom position of the strand entering at each top position (1-based)."""
    strand_at = list(range(n))  # strand_at[p] = top index of the strand now at position p
    for i, _sign in crossings:
        strand_at[i - 1], strand_at[i] = strand_at[i], strand_at[i - 1]
    bottom = [0] * n
    for position, strand in enumerate(strand_at):
        bottom[strand] = position + 1
    return tuple(bottom)


@dataclass(frozen=True)
class SplitFramedBraid:
    """t_1^{framings[0]} ... t_n^{framings[n-1]} followed by the crossing word."""

    n: int
    framings: tuple[int, ...]
    braid_word: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "framings", tuple(self.framings))
        object.__setattr__(self, "braid_word", tuple(tuple(c) for c in self.braid_word))
        if len(self.framings) != self.n:
            raise ValueError("need one framing per strand")
        for i, sign in self.braid_word:
            if not 1 <= i < self.n or sign not in (1, -1):
                raise IndexError(f"bad crossing ({i}, {sign}) on {self.n} strands")

    @classmethod
    def identity(cls, n: int) -> "SplitFramedBraid":
        return cls(n, (0,) * n, ())

    def permutation(self) -> tuple[int, ...]:
        """perm[i-1] = bottom position of the strand starting at top position i."""
        return crossing_permutation(self.braid_word, self.n)

    def exponent(self) -> int:
        return sum(s for _, s in self.braid_word)

    def components(self) -> int:
        """Number of components of the closure (cycles of the permutation)."""
        perm = self.permutation()
        seen = [False] * self.n
        count = 0
        for start in range(self.n):
            if not seen[start]:
                count += 1
                k = start
                while not seen[k]:
                    seen[k] = True
                    k = perm[k] - 1
        return count

    def to_word(self) -> FramedBraidWord:
        letters: list[BraidLetter] = [Frame(j + 1, a) for j, a in enumerate(self.framings) if a]
        letters += [Sigma(i, s) for i, s in self.braid_word]
        return FramedBraidWord(self.n, tuple(letters))

    def __mul__(self, other: "SplitFramedBraid") -> "SplitFramedBraid":
        return braid_mul(self, other)


def split_form(w: FramedBraidWord) -> SplitFramedBraid:
    """Push every framing letter to the top through the crossings above it."""
    n = w.n
    framings = [0] * n
    crossings: list[tuple[int, int]] = []
    # strand_at[p] = top position of the strand occupying position p+1 at the current depth
    strand_at = list(range(n))
    for letter in w.letters:
        if isinstance(letter, Sigma):
            crossings.append((letter.i, letter.sign))
            a, b = letter.i - 1, letter.i
            strand_at[a], strand_at[b] = strand_at[b], strand_at[a]
        else:
            framings[strand_at[letter.j - 1]] += letter.exp
    return SplitFramedBraid(n, tuple(framings), tuple(crossings))


def braid_mul(a: SplitFramedBraid, b: SplitFramedBraid) -> SplitFramedBraid:
    if a.n != b.n:
        raise MismatchedStrands(f"{a.n} vs {b.n} strands")
    perm = a.permutation()
    framings = tuple(a.framings[i] + b.framings[perm[i] - 1] for i in range(a.n))
    return SplitFramedBraid(a.n, framings, a.braid_word + b.braid_word)


def exponent(w: FramedBraidWord | SplitFramedBraid) -> int:
    """Algebraic sum of the crossing signs; framing letters contribute nothing."""
    if isinstance(w, SplitFramedBraid):
        return w.exponent()
    return sum(letter.sign for letter in w.letters if isinstance(letter, Sigma))


def mod_reduce(w: SplitFramedBraid, d: int) -> SplitFramedBraid:
    if d < 1:
        raise ValueError("modulus must be positive")
    return SplitFramedBraid(w.n, tuple(a % d for a in w.framings), w.braid_word)
