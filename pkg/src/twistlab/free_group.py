"""Words in a finitely generated free group, with commutator calculus.

A word is a tuple of nonzero signed integers read left to right: ``+i`` is
the generator ``x_i``, ``-i`` its inverse.  Words reduce eagerly, so two
words are equal in the group exactly when their tuples coincide.  The text
format is ``"x1 x3^-1 x2^2"`` (exponents expand), the JSON format a list of
signed indices.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    """A reduced word; ``rank`` bounds the usable generator indices."""

    rank: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        reduced = _reduce(self.letters)
        for x in reduced:
            if abs(x) > self.rank:
                raise ValueError(f"generator x{abs(x)} exceeds rank {self.rank}")
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank, ())

    @classmethod
    def gen(cls, rank: int, i: int, power: int = 1) -> "FreeWord":
        if not 1 <= i <= rank:
            raise ValueError(f"generator index {i} out of range 1..{rank}")
        sign = 1 if power >= 0 else -1
        return cls(rank, (sign * i,) * abs(power))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return inverse(self)

    def __pow__(self, k: int) -> "FreeWord":
        return power(self, k)

    def __len__(self) -> int:
        return len(self.letters)


# -- parsing and serialization --------------------------------------------

_TOKEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_free_word(text: str, rank: int) -> FreeWord:
    """Parse ``"x1 x3^-1 x2^2"``-style text."""
    letters: list[int] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if not m:
            raise ValueError(f"bad free-group token: {token!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if i == 0:
            raise ValueError("generator indices start at 1")
        sign = 1 if e >= 0 else -1
        letters.extend([sign * i] * abs(e))
    return FreeWord(rank, tuple(letters))


def format_free_word(word: FreeWord) -> str:
    """Compact text with collapsed exponent runs; empty word is ``"1"``."""
    if not word.letters:
        return "1"
    parts: list[str] = []
    run_gen, run_exp = abs(word.letters[0]), 0
    for x in word.letters:
        g, s = abs(x), (1 if x > 0 else -1)
        if g == run_gen and (run_exp == 0 or (run_exp > 0) == (s > 0)):
            run_exp += s
        else:
            parts.append(f"x{run_gen}" + (f"^{run_exp}" if run_exp != 1 else ""))
            run_gen, run_exp = g, s
    parts.append(f"x{run_gen}" + (f"^{run_exp}" if run_exp != 1 else ""))
    return " ".join(parts)


def to_json(word: FreeWord) -> dict:
    return {"rank": word.rank, "word": list(word.letters)}


def from_json(data: dict | str) -> FreeWord:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "rank" not in data or "word" not in data:
        raise ValueError("free word JSON must carry 'rank' and 'word'")
    return FreeWord(int(data["rank"]), tuple(int(x) for x in data["word"]))


# -- group operations ------------------------------------------------------


def _same_rank(u: FreeWord, v: FreeWord) -> None:
    if u.rank != v.rank:
        raise ValueError(f"ranks differ: {u.rank} vs {v.rank}")


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    """Concatenation ``u v``, read left to right."""
    _same_rank(u, v)
    return FreeWord(u.rank, u.letters + v.letters)


def inverse(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-x for x in reversed(u.letters)))


def power(u: FreeWord, k: int) -> FreeWord:
    if k < 0:
        return power(inverse(u), -k)
    return FreeWord(u.rank, u.letters * k)


def conjugate(u: FreeWord, g: FreeWord) -> FreeWord:
    """``g u g^-1``."""
    _same_rank(u, g)
    return FreeWord(u.rank, g.letters + u.letters + inverse(g).letters)


def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    """``u v u^-1 v^-1``."""
    _same_rank(u, v)
    return FreeWord(
        u.rank, u.letters + v.letters + inverse(u).letters + inverse(v).letters
    )


def is_identity(u: FreeWord) -> bool:
    return not u.letters


def equal(u: FreeWord, v: FreeWord) -> bool:
    _same_rank(u, v)
    return u.letters == v.letters


def exponent_sum(u: FreeWord, i: int) -> int:
    """Signed count of occurrences of generator ``x_i``."""
    return sum(1 if x == i else -1 if x == -i else 0 for x in u.letters)


def substitute(u: FreeWord, images: Mapping[int, FreeWord], rank: int) -> FreeWord:
    """Apply the homomorphism ``x_i -> images[i]``."""
    letters: list[int] = []
    for x in u.letters:
        img = images[abs(x)]
        if img.rank != rank:
            raise ValueError("image rank mismatch")
        chunk = img.letters if x > 0 else inverse(img).letters
        letters.extend(chunk)
    return FreeWord(rank, tuple(letters))


# -- commutator identities -------------------------------------------------


def witt_hall_left(x: FreeWord, y: FreeWord, z: FreeWord) -> FreeWord:
    """The expansion ``x [y,z] x^-1 [x,z]`` of ``[x y, z]``."""
    return multiply(conjugate(commutator(y, z), x), commutator(x, z))


def witt_hall_right(x: FreeWord, y: FreeWord, z: FreeWord) -> FreeWord:
    """The expansion ``[x,y] y [x,z] y^-1`` of ``[x, y z]``."""
    return multiply(commutator(x, y), conjugate(commutator(x, z), y))
