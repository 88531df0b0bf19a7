"""XY diagrams for two-column Yamanouchi labeled paths.

A two-column stack path (single diagonal offset above row 1) whose reading
word is Yamanouchi is recorded by a two-column array of X's and Y's: X for
the first occurrence of a value, Y for the second, scanning heights bottom
to top, left column before right.  Every such diagram is Type I or Type II,
and the classification drives the hook-shape coefficient count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .genfunc import is_yamanouchi
from .paths import StackPath


@dataclass(frozen=True)
class TwoColPath:
    """Rows 1..p in the left column, rows p+1..n in the right; diag = (1, s)."""

    n: int
    s: int
    p: int
    left: tuple   # labels bottom to top, strictly increasing
    right: tuple  # labels bottom to top, strictly increasing

    def stack_path(self) -> StackPath:
        a = tuple(
            (1 if self.s <= i + 1 <= self.p else 0) for i in range(self.n)
        )
        return StackPath((1, self.s), a, self.left + self.right)

    def heights(self) -> tuple:
        lefts = {h: self.left[h] for h in range(self.p)}
        base = self.p + 1 - self.s
        rights = {base + i: self.right[i] for i in range(len(self.right))}
        return lefts, rights

    def area(self) -> int:
        return self.p - self.s + 1

    def reading_word(self) -> tuple:
        lefts, rights = self.heights()
        word = []
        for h in range(max(list(lefts) + list(rights)), -1, -1):
            if h in rights:
                word.append(rights[h])
            if h in lefts:
                word.append(lefts[h])
        return tuple(word)

    def hdinv(self) -> int:
        return self.stack_path().hdinv()


def two_col_paths(n: int, content: tuple):
    """All two-column paths of order n with the given label content."""
    doubles = [v + 1 for v, m in enumerate(content) if m == 2]
    singles = [v + 1 for v, m in enumerate(content) if m == 1]
    if any(m > 2 for m in content):
        return
    m = len(doubles)
    for s in range(2, n + 1):
        for p in range(max(s - 1, m), n + 1):
            if n - p < m:
                continue
            for chosen in itertools.combinations(singles, p - m):
                left = tuple(sorted(doubles + list(chosen)))
                right = tuple(sorted(doubles + [v for v in singles if v not in chosen]))
                if len(right) != n - p:
                    continue
                yield TwoColPath(n, s, p, left, right)


def yamanouchi_two_col(n: int, content: tuple):
    for tc in two_col_paths(n, content):
        if is_yamanouchi(tc.reading_word()):
            yield tc


# ---------------------------------------------------------------------------
# diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class XYDiagram:
    """Rows bottom to top, each (left letter, right letter) with None gaps.

    The area rides along explicitly: an all-left column of X's arises from
    every single-column path regardless of its stack offset, so the picture
    alone does not determine the path there.
    """

    rows: tuple
    area: int


def xy_diagram(tc: TwoColPath) -> XYDiagram:
    lefts, rights = tc.heights()
    seen: set = set()
    rows = []
    for h in range(max(list(lefts) + list(rights)) + 1):
        lv = rv = None
        if h in lefts:
            v = lefts[h]
            lv = "Y" if v in seen else "X"
            seen.add(v)
        if h in rights:
            v = rights[h]
            rv = "Y" if v in seen else "X"
            seen.add(v)
        rows.append((lv, rv))
    return XYDiagram(tuple(rows), tc.area())


def xy_inverse(diagram: XYDiagram, n: int | None = None) -> TwoColPath:
    """Rebuild the path: the k-th X (or Y) seen gets value k."""
    xs = ys = 0
    lefts: dict = {}
    rights: dict = {}
    for h, (lv, rv) in enumerate(diagram.rows):
        if lv is not None:
            if lv == "X":
                xs += 1
                lefts[h] = xs
            else:
                ys += 1
                lefts[h] = ys
        if rv is not None:
            if rv == "X":
                xs += 1
                rights[h] = xs
            else:
                ys += 1
                rights[h] = ys
    total = xs + ys
    if n is not None and n != total:
        raise ValueError("label count mismatch")
    p = len(lefts)
    if sorted(lefts) != list(range(p)):
        raise ValueError("left column must occupy heights 0..p-1")
    if rights:
        base = min(rights)
        if sorted(rights) != list(range(base, base + len(rights))):
            raise ValueError("right column must be contiguous")
        if base != diagram.area:
            raise ValueError("stored area disagrees with the right column base")
        s = p + 1 - base
    else:
        s = p + 1 - diagram.area
    if not 2 <= s <= total:
        raise ValueError("no valid stack offset for this diagram")
    return TwoColPath(
        total, s, p,
        tuple(lefts[h] for h in range(p)),
        tuple(rights[h] for h in sorted(rights)),
    )


def diagram_hdinv(diagram: XYDiagram) -> int:
    """Pairs = left square immediately northwest of a right square, or an
    all-X row."""
    rows = diagram.rows
    count = 0
    for h, (lv, rv) in enumerate(rows):
        if lv == "X" and rv == "X":
            count += 1
        if lv is not None and h >= 1 and rows[h - 1][1] is not None:
            count += 1
    return count


@dataclass(frozen=True)
class XYClass:
    kind: str  # "I" or "II"
    a: int
    b: int
    c: int
    d: int


def classify(diagram: XYDiagram) -> XYClass:
    """Parse bottom-up as Type I or Type II; raises when neither fits."""
    rows = list(diagram.rows)
    i = 0
    a = 0
    while i < len(rows) and rows[i] == ("X", None):
        a += 1
        i += 1
    b = 0
    while i < len(rows) and rows[i] == ("X", "Y"):
        b += 1
        i += 1
    # Type I: c rows of XX then d uniform single-X rows.
    j = i
    c = 0
    while j < len(rows) and rows[j] == ("X", "X"):
        c += 1
        j += 1
    rest = rows[j:]
    if b == 0 and c == 0 and not rest:
        # The whole picture is one left column of X's; the stored area is
        # the only thing separating the bottom run from the d-run.
        if 0 <= diagram.area <= a:
            return XYClass("I", diagram.area, 0, 0, a - diagram.area)
    elif all(r == ("X", None) for r in rest) or all(r == (None, "X") for r in rest):
        if a == diagram.area:
            return XYClass("I", a, b, c, len(rest))
    # Type II: c' rows of right-only Y then d' rows of right-only X.
    j = i
    cp = 0
    while j < len(rows) and rows[j] == (None, "Y"):
        cp += 1
        j += 1
    dp = 0
    while j < len(rows) and rows[j] == (None, "X"):
        dp += 1
        j += 1
    if j == len(rows) and b >= 1 and 1 <= cp <= a and a == diagram.area:
        return XYClass("II", a, b, cp, dp)
    raise ValueError(f"diagram is neither Type I nor Type II: {diagram}")
