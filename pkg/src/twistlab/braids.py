"""Words in the Artin braid group B_n with exact integer bookkeeping.

A braid on ``n`` strands is stored as a word in the generators
``sigma_1 .. sigma_{n-1}``, encoded as a tuple of nonzero integers whose
letters are listed in *chronological* order: the first letter is the first
crossing applied.  The integer ``+i`` denotes ``sigma_i`` and ``-i`` its
inverse.  Composition follows the functional convention, so
``compose(a, b)`` means "apply ``b`` first, then ``a``"; chronologically its
letter sequence is the letters of ``b`` followed by the letters of ``a``.

Words are freely reduced eagerly: adjacent cancelling pairs ``+i, -i`` are
removed at construction time.  No Garside or handle-reduction machinery is
used anywhere; semantic equality beyond free reduction is decided by
:func:`equals`, which combines the exponent sum, the underlying permutation,
and the faithful action on integral laminations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from typing import Iterable, Sequence


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Cancel adjacent inverse pairs until no more remain."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in B_n, letters in chronological order."""

    strands: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        reduced = _free_reduce(self.letters)
        for x in reduced:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(
                    f"letter {x} out of range for {self.strands} strands "
                    f"(expected 1 <= |letter| <= {self.strands - 1})"
                )
        object.__setattr__(self, "letters", reduced)

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    # -- convenience operators (functional convention) ---------------------

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return compose(self, other)

    def __invert__(self) -> "BraidWord":
        return inverse(self)

    def __pow__(self, k: int) -> "BraidWord":
        return power(self, k)

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity_word(self) -> bool:
        """True when the freely reduced word is empty (sufficient, not necessary)."""
        return not self.letters


# -- parsing and serialization --------------------------------------------


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    ``"1 -2 1"`` with ``strands=3`` is ``sigma_1 sigma_2^-1 sigma_1``
    chronologically.  Raises ``ValueError`` for zero or out-of-range indices
    and for tokens that are not integers.
    """
    letters: list[int] = []
    for token in text.split():
        try:
            x = int(token)
        except ValueError as exc:
            raise ValueError(f"not an integer letter: {token!r}") from exc
        letters.append(x)
    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Inverse of :func:`parse_word`: space-separated signed indices."""
    return " ".join(str(x) for x in word.letters)


def to_json(word: BraidWord) -> dict:
    return {"strands": word.strands, "word": list(word.letters)}


def from_json(data: dict | str) -> BraidWord:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "strands" not in data or "word" not in data:
        raise ValueError("braid JSON must be an object with 'strands' and 'word'")
    return BraidWord(int(data["strands"]), tuple(int(x) for x in data["word"]))


# -- group operations ------------------------------------------------------


def _require_same_group(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} vs {b.strands}")


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Functional product: apply ``b`` first, then ``a``."""
    _require_same_group(a, b)
    return BraidWord(a.strands, b.letters + a.letters)


def inverse(word: BraidWord) -> BraidWord:
    return BraidWord(word.strands, tuple(-x for x in reversed(word.letters)))


def power(word: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(inverse(word), -k)
    return BraidWord(word.strands, word.letters * k)


def conjugate(a: BraidWord, g: BraidWord) -> BraidWord:
    """``g a g^-1`` in the functional convention (apply ``g^-1`` first)."""
    _require_same_group(a, g)
    return BraidWord(a.strands, inverse(g).letters + a.letters + g.letters)


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """``a b a^-1 b^-1`` in the functional convention."""
    _require_same_group(a, b)
    return BraidWord(
        a.strands,
        inverse(b).letters + inverse(a).letters + b.letters + a.letters,
    )


def concat_chronological(strands: int, *parts: Sequence[int]) -> BraidWord:
    """Build a word from letter runs listed first-applied-first."""
    letters: list[int] = []
    for part in parts:
        letters.extend(part)
    return BraidWord(strands, tuple(letters))


# -- invariants ------------------------------------------------------------


def exponent_sum(word: BraidWord) -> int:
    """Image under the abelianization B_n -> Z, sigma_i -> 1."""
    return sum(1 if x > 0 else -1 for x in word.letters)


def underlying_permutation(word: BraidWord) -> tuple[int, ...]:
    """Start position -> end position map on 1..n, as a tuple.

    Entry ``p[i-1]`` is the final position of the strand that starts at
    position ``i``.  ``sigma_i`` (either sign) swaps positions i, i+1.
    """
    n = word.strands
    # pos_of[s] = current 1-based position of the strand starting at position s+1
    pos_of = list(range(1, n + 1))
    # strand_at[p] = index (0-based start position) of the strand now at p+1
    strand_at = list(range(n))
    for x in word.letters:
        i = abs(x) - 1
        s, t = strand_at[i], strand_at[i + 1]
        strand_at[i], strand_at[i + 1] = t, s
        pos_of[s], pos_of[t] = i + 2, i + 1
    return tuple(pos_of)


def is_pure(word: BraidWord) -> bool:
    return underlying_permutation(word) == tuple(range(1, word.strands + 1))


def linking_matrix(word: BraidWord) -> tuple[tuple[int, ...], ...]:
    """Pairwise linking numbers of a pure braid, normalized so a single
    full twist of two strands has linking +1.

    Entry ``[i-1][j-1]`` counts half the signed crossings between the strands
    starting (equivalently ending) at positions i and j.  Raises
    ``ValueError`` for non-pure input.
    """
    n = word.strands
    if not is_pure(word):
        raise ValueError("linking_matrix requires a pure braid")
    crossings = [[0] * n for _ in range(n)]
    strand_at = list(range(n))
    for x in word.letters:
        i = abs(x) - 1
        s, t = strand_at[i], strand_at[i + 1]
        sign = 1 if x > 0 else -1
        crossings[s][t] += sign
        crossings[t][s] += sign
        strand_at[i], strand_at[i + 1] = t, s
    result = []
    for row in crossings:
        for v in row:
            assert v % 2 == 0, "pure braid must have even pairwise crossing sums"
        result.append(tuple(v // 2 for v in row))
    return tuple(result)


def forget_strands(word: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Delete all strands outside ``keep`` from a pure braid.

    ``keep`` lists start positions (1-based).  The result lives in
    B_{len(keep)} with the kept strands renumbered by their original order.
    Crossings involving a deleted strand are dropped; crossings between two
    kept strands are re-indexed by position among the kept strands.  This is
    the geometric strand-deletion homomorphism on pure braids, so the input
    must be pure.
    """
    n = word.strands
    keep_set = set(keep)
    if not keep_set:
        raise ValueError("keep set must be nonempty")
    for s in keep_set:
        if not 1 <= s <= n:
            raise ValueError(f"kept strand {s} out of range 1..{n}")
    if not is_pure(word):
        raise ValueError("forget_strands requires a pure braid")
    strand_at = list(range(n))  # strand_at[p] = start index of strand at p+1
    out: list[int] = []
    for x in word.letters:
        i = abs(x) - 1
        s, t = strand_at[i], strand_at[i + 1]
        if (s + 1) in keep_set and (t + 1) in keep_set:
            # position among kept strands = kept strands at positions < i+1
            rank = sum(
                1 for p in range(i) if (strand_at[p] + 1) in keep_set
            )
            out.append((rank + 1) if x > 0 else -(rank + 1))
        strand_at[i], strand_at[i + 1] = t, s
    return BraidWord(len(keep_set), tuple(out))


# -- semantic equality -----------------------------------------------------


def fundamental_word(n: int) -> BraidWord:
    """The positive half twist of the whole disk,
    ``(s1)(s2 s1)(s3 s2 s1)...(s_{n-1} .. s1)`` chronologically."""
    letters: list[int] = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


@cache
def _equality_test_family(n: int, conj_letters: tuple[tuple[int, ...], ...]):
    """Coordinate vectors of all round curves and their conjugate images."""
    from . import lamination  # local import: lamination depends on this module

    curves = [
        lamination.round_curve(n, i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    family = list(curves)
    for letters in conj_letters:
        g = BraidWord(n, letters)
        family.extend(lamination.apply_braid(c, g) for c in curves)
    return tuple(family)


def equals(
    a: BraidWord,
    b: BraidWord,
    conjugators: Sequence[BraidWord] | None = None,
) -> bool:
    """Decide whether two words represent the same element of B_n.

    The difference ``d = a * b^-1`` is accepted as trivial when its exponent
    sum is zero, its underlying permutation is the identity, and it fixes the
    loop coordinates of every round curve together with the images of those
    curves under a configurable conjugating set (default: the positive half
    twist of the disk and ``sigma_1``).  Equal words always pass all checks,
    so a ``False`` answer is definitive; the curve family is rich enough that
    ``True`` answers are reliable for the word sizes handled here and are
    cross-checked elsewhere against homology shadows.
    """
    from . import lamination

    _require_same_group(a, b)
    n = a.strands
    d = compose(a, inverse(b))
    if not d.letters:
        return True
    if exponent_sum(d) != 0:
        return False
    if not is_pure(d):
        return False
    if n < 2:
        return True
    if conjugators is None:
        conj: tuple[BraidWord, ...] = (fundamental_word(n), BraidWord(n, (1,)))
    else:
        conj = tuple(conjugators)
        for g in conj:
            _require_same_group(a, g)
    family = _equality_test_family(n, tuple(g.letters for g in conj))
    return all(lamination.apply_braid(c, d) == c for c in family)
