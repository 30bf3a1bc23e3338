"""Compile curves, arcs, Dehn twists, half-twists, and point-push maps to braid words.

Curves and arcs are described by small declarative specs: a round base object
(a circle around a block of adjacent punctures, or a straight arc joining two
adjacent punctures) together with a preparation braid that drags the base into
its final position.  Every compiled mapping class is an explicit
:class:`~twistlab.braids.BraidWord`, so equality questions reduce to the word
problem, answered exactly by the lamination action.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braids import BraidWord, compose, conjugate, inverse, power
from .free_group import FreeWord
from .lamination import LoopCoordinates, apply_braid, round_curve

__all__ = [
    "CurveSpec",
    "ArcSpec",
    "spec_from_json",
    "full_twist_word",
    "dehn_twist",
    "half_twist",
    "bh_twist_image",
    "push_loop",
    "realize",
]


def _check_prep(punctures: int, prep: tuple[int, ...]) -> None:
    for letter in prep:
        if letter == 0 or abs(letter) > punctures - 1:
            raise ValueError(f"prep letter {letter} invalid on {punctures} strands")


@dataclass(frozen=True)
class CurveSpec:
    """A simple closed curve: a round circle around punctures ``i..j`` moved by ``prep``.

    The curve is the image of the round circle under the braid ``prep``
    (letters in application order).  The number of enclosed punctures is
    invariant under ``prep``, hence always ``j - i + 1``.
    """

    punctures: int
    base: tuple[int, int]
    prep: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "prep", tuple(self.prep))
        i, j = self.base
        if not (1 <= i < j <= self.punctures):
            raise ValueError(f"base ({i},{j}) out of range for {self.punctures} punctures")
        _check_prep(self.punctures, self.prep)

    @property
    def enclosed(self) -> int:
        return self.base[1] - self.base[0] + 1

    def prep_word(self) -> BraidWord:
        return BraidWord(self.punctures, self.prep)

    def to_json(self) -> dict:
        return {
            "kind": "curve",
            "punctures": self.punctures,
            "base": list(self.base),
            "prep": list(self.prep),
        }


@dataclass(frozen=True)
class ArcSpec:
    """An embedded arc joining two punctures: a straight adjacent arc moved by ``prep``."""

    punctures: int
    base: tuple[int, int]
    prep: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "prep", tuple(self.prep))
        i, j = self.base
        if j != i + 1 or not (1 <= i < j <= self.punctures):
            raise ValueError("arc base must join adjacent punctures (i, i+1)")
        _check_prep(self.punctures, self.prep)

    def prep_word(self) -> BraidWord:
        return BraidWord(self.punctures, self.prep)

    def to_json(self) -> dict:
        return {
            "kind": "arc",
            "punctures": self.punctures,
            "base": list(self.base),
            "prep": list(self.prep),
        }


def spec_from_json(data: dict) -> CurveSpec | ArcSpec:
    kind = data.get("kind")
    if kind == "curve":
        return CurveSpec(data["punctures"], tuple(data["base"]), tuple(data["prep"]))
    if kind == "arc":
        return ArcSpec(data["punctures"], tuple(data["base"]), tuple(data["prep"]))
    raise ValueError(f"unknown spec kind: {kind!r}")


def realize(spec: CurveSpec | ArcSpec) -> LoopCoordinates:
    """Coordinates of the curve (for arcs: of the boundary of a small neighbourhood)."""
    i, j = spec.base
    base = round_curve(spec.punctures, i, j)
    return apply_braid(base, spec.prep_word())


def full_twist_word(n: int, i: int, j: int) -> BraidWord:
    """The Dehn twist about the round circle enclosing punctures ``i..j``.

    A full twist of ``k = j - i + 1`` adjacent strands is the ``k``-th power of
    the block rotation (sigma_i ... sigma_{j-1}); for ``k = 1`` it is empty.
    """
    if not (1 <= i <= j <= n):
        raise ValueError(f"block ({i},{j}) out of range for {n} strands")
    block = list(range(i, j))
    k = j - i + 1
    return BraidWord(n, tuple(block * k))


def dehn_twist(c: CurveSpec) -> BraidWord:
    """The (left) Dehn twist about ``c`` as a braid: prep . full_twist . prep^-1."""
    core = full_twist_word(c.punctures, c.base[0], c.base[1])
    return conjugate(core, c.prep_word())


def half_twist(a: ArcSpec) -> BraidWord:
    """The (left) half-twist about the arc ``a``: conjugate of a single generator."""
    core = BraidWord(a.punctures, (a.base[0],))
    return conjugate(core, a.prep_word())


def bh_twist_image(c: CurveSpec) -> BraidWord:
    """The braid representing a twist about the symmetric curve lying above ``c``.

    Under the double cover of the marked disk branched over the punctures, a
    circle around an odd number (at least 3) of punctures lifts to a single
    symmetric curve, and the twist about that lifted curve corresponds to the
    *square* of the disk twist.  Curves with even or single-puncture enclosure
    have no such lifted twist, and are rejected.
    """
    if c.enclosed % 2 == 0 or c.enclosed < 3:
        raise ValueError(
            f"twist lifts only for odd enclosure >= 3 punctures, got {c.enclosed}"
        )
    return power(dehn_twist(c), 2)


# Point-push calibration.  With the movable point on the rightmost strand,
# generator x_i of the free group runs around the (n+1-i)-th puncture; its
# push is a full twist of that puncture with the movable strand, transported
# by dragging the movable strand leftwards past the intervening punctures.
# The transport sign and the twist sign below are pinned by the requirement
# that push of x2*x1 equal T_u^-1 T_o for the catalogued curves u and o (see
# the verification suite); the leftmost layout is the mirror image.
_PUSH_TRANSPORT_SIGN = -1
_PUSH_TWIST_SIGN = -1


def _push_generator(n: int, index: int, base_position: str) -> BraidWord:
    """Braid (on n+1 strands) pushing the movable point around puncture ``index``."""
    if base_position == "rightmost":
        target = n + 1 - index
        eps = _PUSH_TRANSPORT_SIGN
        tw = _PUSH_TWIST_SIGN
        approach = [eps * k for k in range(n, target, -1)]
        core = [tw * target, tw * target]
    elif base_position == "leftmost":
        target = 1 + index
        eps = -_PUSH_TRANSPORT_SIGN
        tw = -_PUSH_TWIST_SIGN
        approach = [eps * k for k in range(1, target - 1)]
        core = [tw * (target - 1), tw * (target - 1)]
    else:
        raise ValueError(f"base_position must be 'leftmost' or 'rightmost', got {base_position!r}")
    retreat = [-letter for letter in reversed(approach)]
    return BraidWord(n + 1, tuple(approach + core + retreat))


def push_loop(n: int, w: FreeWord, base_position: str = "rightmost") -> BraidWord:
    """Push the movable point of the (n+1)-strand disk along a loop in the n-punctured disk.

    ``w`` is a word in the free group on x_1..x_n; the result is a braid on
    ``n + 1`` strands.  The map is an anti-homomorphism: the push of ``u v``
    is ``push(v) . push(u)`` (loops are traversed left to right, but the
    induced homeomorphisms compose in the opposite order).
    """
    if w.rank != n:
        raise ValueError(f"free word has rank {w.rank}, expected {n}")
    result = BraidWord.identity(n + 1)
    for letter in w.letters:
        gen = _push_generator(n, abs(letter), base_position)
        if letter < 0:
            gen = inverse(gen)
        # Chronological concatenation: earlier letters of w act first, which
        # is exactly the anti-homomorphism property for functional composition.
        result = compose(gen, result)
    return result
