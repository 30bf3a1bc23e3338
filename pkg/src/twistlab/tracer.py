"""Slow reference engine for curves on the punctured disk.

Components of a multicurve are stored as cyclically reduced words whose
letters record crossings with the downward rays hanging from the punctures:
letter ``+j`` crosses the ray below puncture ``j`` moving left to right,
``-j`` right to left.  The rays cut the disk into one simply connected
piece, so cyclically reduced crossing words are canonical for free homotopy
and realize the minimal crossing counts (a crossing word and its reversal
with flipped signs describe the same unoriented curve).

Braid generators act by the Artin substitution

    sigma_k:  x_k -> x_k x_{k+1} x_k^{-1},   x_{k+1} -> x_k

followed by cyclic reduction.  This grows words exponentially and is
therefore only suitable for small examples, but it is correct from first
principles; the fast coordinate engine in :mod:`twistlab.lamination` is
validated against it.

The module also converts between crossing words and Dynnikov coordinates in
both directions by building the taut diagram explicitly (counting strand
passages through the boxes between adjacent punctures, and matching strand
ends along the fences).  Conversions check the embeddedness constraints and
raise ``ValueError`` when fed a word that is not a simple multicurve.
"""

from __future__ import annotations

from dataclasses import dataclass

Word = tuple[int, ...]


# -- cyclic words ----------------------------------------------------------


def cyclic_reduce(word: Word) -> Word:
    """Freely reduce, then cancel across the wrap-around point."""
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo += 1
        hi -= 1
    return tuple(stack[lo:hi])


def cyclic_variants(word: Word) -> set[Word]:
    """All rotations of the word and of its orientation reversal."""
    out: set[Word] = set()
    rev = tuple(-x for x in reversed(word))
    for w in (word, rev):
        if not w:
            out.add(w)
            continue
        for s in range(len(w)):
            out.add(w[s:] + w[:s])
    return out


def words_equal(u: Word, v: Word) -> bool:
    """Equality of unoriented free homotopy classes."""
    return cyclic_reduce(v) in cyclic_variants(cyclic_reduce(u))


# -- the Artin action ------------------------------------------------------


def _substitute_letter(x: int, k: int, positive: bool) -> tuple[int, ...]:
    j = abs(x)
    if positive:
        if j == k:
            image = (k, k + 1, -k)
        elif j == k + 1:
            image = (k,)
        else:
            image = (j,)
    else:
        if j == k:
            image = (k + 1,)
        elif j == k + 1:
            image = (-(k + 1), k, k + 1)
        else:
            image = (j,)
    if x < 0:
        image = tuple(-y for y in reversed(image))
    return image


def apply_letter(words: list[Word], letter: int) -> list[Word]:
    """One braid generator acting on every component word."""
    k = abs(letter)
    out: list[Word] = []
    for w in words:
        expanded: list[int] = []
        for x in w:
            expanded.extend(_substitute_letter(x, k, letter > 0))
        out.append(cyclic_reduce(tuple(expanded)))
    return out


def apply_letters(words: list[Word], letters: tuple[int, ...]) -> list[Word]:
    """A braid word acting chronologically."""
    for letter in letters:
        words = apply_letter(words, letter)
    return words


# -- words -> box counts -> coordinates ------------------------------------


@dataclass
class BoxCounts:
    """Per-box strand counts of a taut multicurve on n punctures.

    Lists are indexed by box number 1..n (entry 0 unused).  ``u``/``d``
    count through-strands above/below the puncture, ``l``/``r`` loops
    anchored on the left/right fence.  ``boundary`` counts components
    parallel to the disk boundary (their traffic is kept out of u/d/l/r and
    added back explicitly when a diagram is drawn).
    """

    n: int
    u: list[int]
    d: list[int]
    l: list[int]
    r: list[int]
    boundary: int = 0

    @classmethod
    def zero(cls, n: int) -> "BoxCounts":
        return cls(n, [0] * (n + 1), [0] * (n + 1), [0] * (n + 1), [0] * (n + 1))


def _is_boundary_word(word: Word, n: int) -> bool:
    if len(word) != n:
        return False
    if n == 1:
        return word in {(1,), (-1,)}
    for w in (word, tuple(-x for x in reversed(word))):
        if sorted(w) == list(range(1, n + 1)):
            start = w.index(1)
            if all(w[(start + t) % n] == t + 1 for t in range(n)):
                return True
    return False


def _component_events(word: Word, n: int) -> list[tuple[str, int, int]]:
    """Ordered crossing events: ('ray', j, dir) and ('fence', f, dir).

    Positions are scaled by 4 so puncture j sits at 4j, its dip entry/exit
    at 4j -/+ 1, and fence f at 4f + 2; dir is +1 moving right, -1 left.
    """
    events: list[tuple[str, int, int]] = []
    m = len(word)
    for t, x in enumerate(word):
        j = abs(x)
        if not 1 <= j <= n:
            raise ValueError(f"letter {x} out of range for {n} punctures")
        direction = 1 if x > 0 else -1
        events.append(("ray", j, direction))
        exit_pos = 4 * j + direction
        nxt = word[(t + 1) % m]
        entry_pos = 4 * abs(nxt) - (1 if nxt > 0 else -1)
        if exit_pos < entry_pos:
            for f in range(1, n):
                if exit_pos < 4 * f + 2 < entry_pos:
                    events.append(("fence", f, 1))
        else:
            for f in range(n - 1, 0, -1):
                if entry_pos < 4 * f + 2 < exit_pos:
                    events.append(("fence", f, -1))
    return events


def _count_component(word: Word, n: int, counts: BoxCounts) -> None:
    """Accumulate the box counts of one embedded component."""
    word = cyclic_reduce(word)
    if not word:
        raise ValueError("empty word is not a curve component")
    if _is_boundary_word(word, n):
        counts.boundary += 1
        return
    if len({abs(x) for x in word}) == 1:
        if len(word) != 1:
            raise ValueError(f"word {word} is not a simple curve")
        # a circle around one puncture: contributes nothing to any count
        return
    events = _component_events(word, n)
    fence_positions = [t for t, e in enumerate(events) if e[0] == "fence"]
    assert fence_positions, "multi-puncture component must cross a fence"
    m = len(events)
    for idx, start in enumerate(fence_positions):
        end = fence_positions[(idx + 1) % len(fence_positions)]
        f_in, d_in = events[start][1], events[start][2]
        f_out, d_out = events[end][1], events[end][2]
        rays: list[tuple[int, int]] = []
        t = (start + 1) % m
        while t != end:
            if events[t][0] == "ray":
                rays.append((events[t][1], events[t][2]))
            t = (t + 1) % m
        box = f_in + 1 if d_in > 0 else f_in
        box_from_exit = f_out if d_out > 0 else f_out + 1
        if box != box_from_exit:
            raise ValueError(f"word {word} is not a simple curve (box mismatch)")
        if len(rays) > 1:
            raise ValueError(f"word {word} is not a simple curve (double dip)")
        if rays and rays[0][0] != box:
            raise ValueError(f"word {word} dips outside its box")
        entered_left = d_in > 0
        exited_right = d_out > 0
        if entered_left == exited_right:
            # through-passage (left-to-right or right-to-left)
            if rays:
                counts.d[box] += 1
            else:
                counts.u[box] += 1
        elif entered_left:
            if not rays:
                raise ValueError(f"word {word} has a removable fence bigon")
            counts.l[box] += 1
        else:
            if not rays:
                raise ValueError(f"word {word} has a removable fence bigon")
            counts.r[box] += 1


def words_to_counts(words: list[Word], n: int) -> BoxCounts:
    counts = BoxCounts.zero(n)
    for w in words:
        _count_component(w, n, counts)
    for k in range(1, n + 1):
        if counts.l[k] and counts.r[k]:
            raise ValueError(f"box {k} wraps from both sides: not a multicurve")
        if (counts.u[k] - counts.d[k]) % 2:
            raise ValueError(f"box {k} has odd through-strand imbalance")
    if counts.l[1] or counts.u[1] or counts.d[1]:
        raise ValueError("box 1 admits only right-anchored caps")
    if counts.r[n] or counts.u[n] or counts.d[n]:
        raise ValueError(f"box {n} admits only left-anchored caps")
    for k in range(1, n):
        left = counts.u[k] + counts.d[k] + 2 * counts.r[k]
        right = counts.u[k + 1] + counts.d[k + 1] + 2 * counts.l[k + 1]
        if left != right:
            raise ValueError(f"fence {k} crossing counts disagree: not taut")
    return counts


def counts_to_coords(
    counts: BoxCounts,
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    n = counts.n
    a = tuple((counts.u[k] - counts.d[k]) // 2 for k in range(2, n))
    b = tuple(counts.l[k] - counts.r[k] for k in range(2, n))
    return a, b, counts.boundary


def words_to_coords(
    words: list[Word], n: int
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    return counts_to_coords(words_to_counts(words, n))


# -- coordinates -> box counts -> words ------------------------------------


def coords_to_counts(
    a: tuple[int, ...], b: tuple[int, ...], boundary: int, n: int
) -> BoxCounts:
    """Taut box counts realizing the coordinates (minimal caps)."""
    assert len(a) == len(b) == n - 2
    counts = BoxCounts.zero(n)
    counts.boundary = boundary
    if n == 2:
        return counts
    ell = [0, 0] + [max(x, 0) for x in b] + [0]  # ell[k] for k = 2..n-1
    arr = [0, 0] + [max(-x, 0) for x in b] + [0]  # r[k] for k = 2..n-1
    # minimal left caps r1 subject to u_j + d_j = 2*r1 + 2*p_j >= 2|a_{j-1}|
    p = 0
    r1 = 0
    pees = [0, 0]
    for j in range(2, n):
        if j == 2:
            p = -ell[2]
        else:
            p += arr[j - 1] - ell[j]
        pees.append(p)
        r1 = max(r1, abs(a[j - 2]) - p)
    counts.r[1] = r1
    for j in range(2, n):
        s = 2 * r1 + 2 * pees[j]
        assert s >= 2 * abs(a[j - 2]) >= 0
        counts.u[j] = s // 2 + a[j - 2]
        counts.d[j] = s // 2 - a[j - 2]
        counts.l[j] = ell[j]
        counts.r[j] = arr[j]
    counts.l[n] = r1 + pees[n - 1] + arr[n - 1]
    assert counts.l[n] >= 0
    return counts


def counts_to_words(counts: BoxCounts) -> list[Word]:
    """Trace the canonical taut diagram back into crossing words.

    Fence points are numbered top to bottom; each has a left slot (its
    strand end in the box on the left of the fence) and a right slot.  On
    the right fence of box k the block order is [u_k, 2 r_k, d_k]; on the
    left fence of box k+1 it is [u_{k+1}, 2 l_{k+1}, d_{k+1}].  Through
    strands match in order, loops nest (foot t joins foot 2w+1-t) and cross
    the ray below their puncture once.  Walking alternates box edges with
    fence pass-throughs; boundary components are emitted directly.
    """
    n = counts.n
    u, d, l, r = counts.u, counts.d, counts.l, counts.r
    # slot = (fence, point, side); side "L" attaches in box `fence`,
    # side "R" in box `fence + 1`.
    Slot = tuple[int, int, str]
    edges: dict[Slot, tuple[Slot, int | None]] = {}

    def add_edge(p: Slot, q: Slot, letter_pq: int | None, letter_qp: int | None) -> None:
        assert p not in edges and q not in edges, f"slot reused: {p} / {q}"
        edges[p] = (q, letter_pq)
        edges[q] = (p, letter_qp)

    for k in range(1, n + 1):
        if k == 1:
            for t in range(r[1]):
                upper = (1, t + 1, "L")
                lower = (1, 2 * r[1] - t, "L")
                add_edge(upper, lower, +1, -1)
            continue
        if k == n:
            for t in range(l[n]):
                upper = (n - 1, t + 1, "R")
                lower = (n - 1, 2 * l[n] - t, "R")
                add_edge(upper, lower, -n, +n)
            continue
        lf, rf = k - 1, k
        for t in range(u[k]):
            add_edge((lf, t + 1, "R"), (rf, t + 1, "L"), None, None)
        for t in range(l[k]):
            upper = (lf, u[k] + t + 1, "R")
            lower = (lf, u[k] + 2 * l[k] - t, "R")
            add_edge(upper, lower, -k, +k)
        for t in range(r[k]):
            upper = (rf, u[k] + t + 1, "L")
            lower = (rf, u[k] + 2 * r[k] - t, "L")
            add_edge(upper, lower, +k, -k)
        for t in range(d[k]):
            p = (lf, u[k] + 2 * l[k] + t + 1, "R")
            q = (rf, u[k] + 2 * r[k] + t + 1, "L")
            add_edge(p, q, +k, -k)

    for f in range(1, n):
        size = u[f] + d[f] + 2 * r[f]
        for t in range(1, size + 1):
            assert (f, t, "L") in edges and (f, t, "R") in edges, (
                f"fence point ({f},{t}) is not doubly attached"
            )

    words: list[Word] = []
    visited: set[Slot] = set()
    for start in sorted(edges):
        if start in visited:
            continue
        letters: list[int] = []
        slot = start
        while True:
            visited.add(slot)
            other, letter = edges[slot]
            if letter is not None:
                letters.append(letter)
            visited.add(other)
            # pass through the fence: same point, opposite side
            slot = (other[0], other[1], "R" if other[2] == "L" else "L")
            if slot == start:
                break
        word = cyclic_reduce(tuple(letters))
        assert word, "diagram component with no ray crossings"
        words.append(word)
    words.extend([tuple(range(1, n + 1))] * counts.boundary)
    return words


def coords_to_words(
    a: tuple[int, ...], b: tuple[int, ...], boundary: int, n: int
) -> list[Word]:
    return counts_to_words(coords_to_counts(a, b, boundary, n))


# -- reference action on coordinates ---------------------------------------


def oracle_apply(
    a: tuple[int, ...],
    b: tuple[int, ...],
    boundary: int,
    n: int,
    letters: tuple[int, ...],
) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Reference braid action: reconstruct, substitute, recount."""
    words = coords_to_words(a, b, boundary, n)
    words = apply_letters(words, letters)
    return words_to_coords(words, n)


def round_word(n: int, i: int, j: int) -> Word:
    """Crossing word of the convex curve around punctures i..j."""
    assert 1 <= i < j <= n
    return tuple(range(i, j + 1))
