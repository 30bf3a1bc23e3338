"""Integral laminations on the punctured disk in Dynnikov coordinates.

A disjoint union of essential simple closed curves in the disk with ``n``
marked points (punctures) on a horizontal axis is encoded by the integer
vector ``(a_1..a_{n-2}, b_1..b_{n-2})`` plus a boundary multiplicity:

* place a vertical *fence* between punctures ``k`` and ``k+1``; the region
  around puncture ``k+1`` between fences ``k`` and ``k+1`` is a *box*;
* in taut position, each strand of the multicurve passing through a box
  either runs above the puncture (``u``), runs below it crossing its
  downward ray (``d``), or wraps the puncture as a loop anchored on the
  left fence (``l``) or the right fence (``r``);
* ``a_k = (u - d) / 2`` and ``b_k = l - r`` for the box around puncture
  ``k+1`` (minimality forces ``l * r = 0``, so ``b_k`` records the wrap
  count with an anchor sign).

Components parallel to the disk boundary have all ``a, b`` zero; they are
counted separately by the ``boundary`` field so every nonempty multicurve
has a nonzero encoding.  The encoding is a complete isotopy invariant, so
``curves_equal`` is plain equality of vectors.

Braid generators act by a constant-size piecewise-linear update on the four
coordinates nearest the swapped punctures.  Only the generic interior update
is implemented; boundary generators are reduced to it by embedding the disk
in a disk with one extra phantom puncture on each side (the cap counts that
the plain vector leaves implicit become honest coordinates there).  The
update rules are locked by hand-derived fixtures and exhaustively
cross-validated in the test suite against an independent curve-tracing
engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .braids import BraidWord


def _pos(x: int) -> int:
    return x if x > 0 else 0


def _neg(x: int) -> int:
    return x if x < 0 else 0


@dataclass(frozen=True)
class LoopCoordinates:
    """Coordinates of a nonempty integral lamination on ``punctures`` points."""

    punctures: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    boundary: int = 0

    def __post_init__(self) -> None:
        n = self.punctures
        if n < 2:
            raise ValueError(f"need at least 2 punctures, got {n}")
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != n - 2 or len(self.b) != n - 2:
            raise ValueError(
                f"expected {n - 2} a- and b-entries for {n} punctures, "
                f"got {len(self.a)} and {len(self.b)}"
            )
        if self.boundary < 0:
            raise ValueError("boundary multiplicity must be >= 0")
        if not any(self.a) and not any(self.b) and self.boundary == 0:
            raise ValueError("the zero vector does not encode a multicurve")


def round_curve(n: int, i: int, j: int) -> LoopCoordinates:
    """The convex curve enclosing exactly punctures ``i..j`` (1-based)."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= {n}, got ({i}, {j})")
    if i == 1 and j == n:
        return LoopCoordinates(n, (0,) * (n - 2), (0,) * (n - 2), boundary=1)
    b = [0] * (n - 2)
    if i >= 2:
        b[i - 2] -= 1
    if j <= n - 1:
        b[j - 2] += 1
    return LoopCoordinates(n, (0,) * (n - 2), tuple(b))


def norm(coords: LoopCoordinates) -> int:
    """Coordinate 1-norm; positive for every valid value and unbounded along
    pseudo-Anosov orbits."""
    return (
        sum(abs(x) for x in coords.a)
        + sum(abs(x) for x in coords.b)
        + coords.boundary
    )


def curves_equal(x: LoopCoordinates, y: LoopCoordinates) -> bool:
    """Isotopy of multicurves is coordinate equality."""
    return x == y


# -- serialization ---------------------------------------------------------


def to_json(coords: LoopCoordinates) -> dict:
    data: dict = {
        "punctures": coords.punctures,
        "a": list(coords.a),
        "b": list(coords.b),
    }
    if coords.boundary:
        data["boundary"] = coords.boundary
    return data


def from_json(data: dict | str) -> LoopCoordinates:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or not {"punctures", "a", "b"} <= set(data):
        raise ValueError("loop JSON must carry 'punctures', 'a' and 'b'")
    return LoopCoordinates(
        int(data["punctures"]),
        tuple(int(x) for x in data["a"]),
        tuple(int(x) for x in data["b"]),
        int(data.get("boundary", 0)),
    )


# -- cap counts (reconstruction of the implicit edge data) -----------------


def cap_counts(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int]:
    """Left and right cap counts of the taut representative.

    The vector leaves implicit how many strands turn around before the first
    puncture (``r1`` caps) and after the last (``ln`` caps).  Tautness takes
    the minimal ``r1`` compatible with the through-strand traffic; ``ln`` is
    then forced.  Boundary-parallel components are not included here.
    """
    n = len(a) + 2
    if n == 2:
        return 0, 0
    # wrap counts per interior box k = 2..n-1 (index k-2 below)
    ell = [_pos(x) for x in b]
    arr = [-_neg(x) for x in b]
    # partial sums P_j with s_j = u_j + d_j = 2*r1 + 2*P_j for box j
    p = 0
    r1 = 0
    pees = []
    for j in range(2, n):
        if j == 2:
            p = -ell[0]
        else:
            p += arr[j - 3] - ell[j - 2]
        pees.append(p)
        r1 = max(r1, abs(a[j - 2]) - p)
    ln = r1 + pees[-1] + arr[n - 3]
    assert ln >= 0, "cap reconstruction must be nonnegative"
    return r1, ln


# -- the braid action ------------------------------------------------------


def _update_window(av: list[int], bv: list[int], i: int, positive: bool) -> None:
    """Apply one generator to the window ``(av[i-1], bv[i-1], av[i], bv[i])``.

    Valid only when the window is interior, i.e. both coordinate pairs
    exist; callers guarantee this by padding.  The two branches are exact
    inverses of one another (verified in the tests along with the braid
    relations and the agreement with the tracing engine).
    """
    a1, b1, a2, b2 = av[i - 1], bv[i - 1], av[i], bv[i]
    if positive:
        c = a1 - a2 - _pos(b2) + _neg(b1)
        av[i - 1] = a1 - _pos(b1) - _pos(_pos(b2) + c)
        bv[i - 1] = b2 + _neg(c)
        av[i] = a2 - _neg(b2) - _neg(_neg(b1) - c)
        bv[i] = b1 - _neg(c)
    else:
        d = a1 - a2 + _pos(b2) - _neg(b1)
        av[i - 1] = a1 + _pos(b1) + _pos(_pos(b2) - d)
        bv[i - 1] = b2 - _pos(d)
        av[i] = a2 + _neg(b2) + _neg(_neg(b1) + d)
        bv[i] = b1 + _pos(d)


def apply_braid(coords: LoopCoordinates, word: BraidWord) -> LoopCoordinates:
    """Image of a multicurve under a braid, letters applied chronologically."""
    n = coords.punctures
    if word.strands != n:
        raise ValueError(
            f"braid on {word.strands} strands cannot act on {n} punctures"
        )
    if not word.letters:
        return coords
    # Embed into the disk with phantom punctures 0 and n+1.  Old caps and
    # boundary-parallel components become wrap coordinates of the edge
    # boxes, making every generator's window interior.
    r1, ln = cap_counts(coords.a, coords.b)
    av = [0, *coords.a, 0]
    bv = [-(r1 + coords.boundary), *coords.b, ln + coords.boundary]
    for x in word.letters:
        _update_window(av, bv, abs(x), positive=x > 0)
    assert av[0] == 0 and av[-1] == 0, "image escaped the embedded disk"
    a_new = tuple(av[1:-1])
    b_new = tuple(bv[1:-1])
    r1_new, ln_new = cap_counts(a_new, b_new)
    assert bv[0] == -(r1_new + coords.boundary), "left cap bookkeeping broke"
    assert bv[-1] == ln_new + coords.boundary, "right cap bookkeeping broke"
    return LoopCoordinates(n, a_new, b_new, coords.boundary)


def apply_generator(coords: LoopCoordinates, letter: int) -> LoopCoordinates:
    """Image under a single signed generator (``+i`` is sigma_i)."""
    return apply_braid(coords, BraidWord(coords.punctures, (letter,)))
