"""A small skein-recursion evaluator for unframed braid closures (d = 1).

It never touches the algebra: links are simplified by free reduction,
splitting, conjugation and destabilization, and crossings are resolved with
the three-term skein relation

    A P(L+) - B P(L-) - C P(L0) = 0,
    A = 1/(u r),  B = r,  C = 1/u - 1,

where r is the chosen square root of w.  Meant for up to three crossings.
"""
from __future__ import annotations

from typing import Sequence

from .errors import OracleBoundExceeded

MAX_CROSSINGS = 3

Word = tuple[tuple[int, int], ...]


def _free_reduce(word: Word) -> Word:
    out: list[tuple[int, int]] = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    # cyclic reduction
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return tuple(out)


class _Evaluator:
    def __init__(self, u: complex, z: complex, r: complex):
        self.A = 1 / (u * r)
        self.B = r
        self.C = 1 / u - 1
        self.mu = (self.A - self.B) / self.C  # value of the two-component unlink

    def value(self, word: Word, n: int) -> complex:
        word = _free_reduce(word)
        if not word:
            return self.mu ** (n - 1)
        used = {i for i, _ in word}
        for j in range(1, n):
            if j not in used:
                left = tuple(c for c in word if c[0] < j)
                right = tuple((i - j, s) for i, s in word if i > j)
                return self.mu * self.value(left, j) * self.value(right, n - j)
        top = [p for p, (i, _) in enumerate(word) if i == n - 1]
        if len(top) == 1:
            p = top[0]
            rotated = word[p + 1:] + word[:p]
            return self.value(rotated, n - 1)
        if sum(1 for i, _ in word if i == 1) == 1:
            # conjugating by the half twist sends sigma_i to sigma_{n-i}
            return self.value(tuple((n - i, s) for i, s in word), n)
        L = len(word)
        for p in range(L):
            if word[p] == word[(p + 1) % L]:
                i, s = word[p]
                flipped = word[:p] + ((i, -s),) + word[p + 1:]
                removed = word[:p] + word[p + 1:]
                if s > 0:
                    return (self.B * self.value(flipped, n) + self.C * self.value(removed, n)) / self.A
                return (self.A * self.value(flipped, n) - self.C * self.value(removed, n)) / self.B
        raise OracleBoundExceeded(f"no simplification found for {word} on {n} strands")


def homflypt_value(word: Sequence[tuple[int, int]], n: int, u: complex, z: complex, r: complex) -> complex:
    """Normalized skein value (unknot = 1) of the closure of ``word`` on ``n`` strands."""
    word = tuple((int(i), int(s)) for i, s in word)
    if len(word) > MAX_CROSSINGS:
        raise OracleBoundExceeded(f"{len(word)} crossings exceed the oracle bound {MAX_CROSSINGS}")
    return _Evaluator(complex(u), complex(z), complex(r)).value(word, n)
