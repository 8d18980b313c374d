"""
Filled labeled brick tabloids and the split/merge involution on them.

A brick tabloid of shape (n) is a composition (b_1, ..., b_k) of n read as a
row of bricks.  A filled tabloid pairs a composition with a permutation
sigma of length n subject to one condition: no pattern match of sigma lies
entirely inside a single brick.  Labels are derived, never stored:

- every within-brick descent cell carries a y,
- the last cell of every brick carries a -y.

So an object with k bricks and d within-brick descents has sign (-1)^k and
weight y^(d + k).  The involution scans cells left to right and acts at the
first cell where either case applies:

- Case I (split): the cell carries a y in brick b_j, and either j = 1, or
  the previous brick ends below first(b_j), or it ends above first(b_j) and
  some pattern match inside the two bricks ends weakly left of the cell.
  The brick is cut right after the cell.
- Case II (merge): the cell ends brick b_i, descends into brick b_{i+1},
  and no pattern match of sigma lies inside the union of the two bricks.
  The bricks are joined.

Objects where neither case applies anywhere are the fixed points; summing
sign * weight over them gives the same polynomial as summing over all
objects, which is what the rest of the package cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Sequence

from .permutations import (
    PatternSet,
    descent_count,
    descent_set,
    is_permutation,
    match_starts_by_length,
)
from .polynomials import YPoly


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of n in lexicographic order; 2^(n-1) of them for n >= 1.

    >>> list(compositions(3))
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part, *rest)

    yield from gen(n, n)


def count_brick_tabloids(lam: Iterable[int], n: int) -> int:
    """Number of brick tabloids of shape (n) whose brick lengths form the multiset lam.

    This is the number of distinct orderings of lam.

    >>> count_brick_tabloids((1, 1, 2, 2), 6)
    6
    """
    parts = sorted(lam)
    if not parts or any(p < 1 for p in parts) or sum(parts) != n:
        raise ValueError(f"{tuple(parts)} is not a partition of {n}")
    count = factorial(len(parts))
    mult = 1
    for i, p in enumerate(parts):
        mult = mult + 1 if i and p == parts[i - 1] else 1
        count //= mult
    return count


@dataclass(frozen=True)
class FilledTabloid:
    """A brick composition together with a permutation filling its cells."""

    bricks: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        if any(b < 1 for b in self.bricks):
            raise ValueError(f"brick lengths must be >= 1, got {self.bricks}")
        if sum(self.bricks) != len(self.sigma):
            raise ValueError(f"bricks {self.bricks} do not tile a row of {len(self.sigma)} cells")
        if not is_permutation(self.sigma):
            raise ValueError(f"filling is not a permutation: {self.sigma}")

    @property
    def size(self) -> int:
        return len(self.sigma)

    def brick_bounds(self) -> tuple[tuple[int, int], ...]:
        """1-based inclusive (first cell, last cell) of each brick."""
        bounds = []
        start = 1
        for b in self.bricks:
            bounds.append((start, start + b - 1))
            start += b
        return tuple(bounds)

    def y_cells(self) -> tuple[int, ...]:
        """Cells carrying a y label: within-brick descents."""
        cells = []
        for s, e in self.brick_bounds():
            for c in range(s, e):
                if self.sigma[c - 1] > self.sigma[c]:
                    cells.append(c)
        return tuple(cells)

    def sign(self) -> int:
        return -1 if len(self.bricks) % 2 else 1

    def weight_exponent(self) -> int:
        return len(self.y_cells()) + len(self.bricks)

    def signed_weight(self) -> YPoly:
        """sign * y^weight as a one-term polynomial."""
        return YPoly.term(self.sign(), self.weight_exponent())

    def render(self) -> str:
        """Bracketed bricks with labels, e.g. '[1 2 4|-y][3 5|-y]'.

        A cell carrying a y label is marked with a ':y' suffix on its value.
        """
        ys = set(self.y_cells())
        parts = []
        for s, e in self.brick_bounds():
            cells = [str(self.sigma[c - 1]) + (":y" if c in ys else "") for c in range(s, e + 1)]
            parts.append("[" + " ".join(cells) + "|-y]")
        return "".join(parts)


def _has_match_within(starts_by_len: dict[int, tuple[int, ...]],
                      lo: int, hi: int, end_at_most: int | None = None) -> bool:
    # Is there a match contained in cells [lo, hi], optionally ending <= end_at_most?
    limit = hi if end_at_most is None else min(hi, end_at_most)
    for m, starts in starts_by_len.items():
        last_ok = limit - m + 1
        for p in starts:
            if lo <= p <= last_ok:
                return True
    return False


def is_member(g: PatternSet, o: FilledTabloid,
              starts_by_len: dict[int, tuple[int, ...]] | None = None) -> bool:
    """Membership: no match of sigma lies entirely inside a single brick."""
    if starts_by_len is None:
        starts_by_len = match_starts_by_length(o.sigma, g)
    return not any(_has_match_within(starts_by_len, s, e) for s, e in o.brick_bounds())


def enumerate_O(g: PatternSet, n: int) -> Iterator[FilledTabloid]:
    """All filled tabloids of size n, ordered by sigma (lex) then bricks (lex).

    There are 2^(n-1) n! candidate pairs; keep n small (<= 8 or so).
    """
    from itertools import permutations as iter_perms

    comps = list(compositions(n))
    for sigma in iter_perms(range(1, n + 1)):
        starts = match_starts_by_length(sigma, g)
        if not any(starts.values()):
            for bricks in comps:
                yield FilledTabloid(bricks, sigma)
            continue
        for bricks in comps:
            o = FilledTabloid(bricks, sigma)
            if is_member(g, o, starts):
                yield o


def _apply(bricks: tuple[int, ...], sigma: tuple[int, ...],
           starts_by_len: dict[int, tuple[int, ...]]) -> tuple[int, ...] | None:
    """One involution step on the brick structure; None marks a fixed point."""
    bounds = []
    start = 1
    for b in bricks:
        bounds.append((start, start + b - 1))
        start += b
    n = len(sigma)
    brick_of = [0] * (n + 1)
    for j, (s, e) in enumerate(bounds):
        for c in range(s, e + 1):
            brick_of[c] = j

    for c in range(1, n + 1):
        j = brick_of[c]
        s_j, e_j = bounds[j]
        if c < e_j:
            if sigma[c - 1] > sigma[c]:
                # Case I candidate: cell c carries a y inside brick j.
                if j == 0:
                    split = True
                else:
                    s_prev, e_prev = bounds[j - 1]
                    if sigma[e_prev - 1] < sigma[s_j - 1]:
                        split = True
                    else:
                        split = _has_match_within(starts_by_len, s_prev, e_j, end_at_most=c)
                if split:
                    left = c - s_j + 1
                    return bricks[:j] + (left, bounds[j][1] - c) + bricks[j + 1:]
        elif j + 1 < len(bricks):
            if sigma[c - 1] > sigma[c]:
                # Case II candidate: brick-final descent into the next brick.
                if not _has_match_within(starts_by_len, s_j, bounds[j + 1][1]):
                    return bricks[:j] + (bricks[j] + bricks[j + 1],) + bricks[j + 2:]
    return None


def involution_J(g: PatternSet, o: FilledTabloid) -> FilledTabloid:
    """Apply the split/merge involution once; fixed points return unchanged.

    Raises ValueError when o violates the no-match-inside-a-brick condition.
    """
    starts = match_starts_by_length(o.sigma, g)
    if not is_member(g, o, starts):
        raise ValueError(f"object is not admissible for these patterns: {o.render()}")
    new_bricks = _apply(o.bricks, o.sigma, starts)
    if new_bricks is None:
        return o
    return FilledTabloid(new_bricks, o.sigma)


def is_fixed_point(g: PatternSet, o: FilledTabloid,
                   starts_by_len: dict[int, tuple[int, ...]] | None = None) -> bool:
    if starts_by_len is None:
        starts_by_len = match_starts_by_length(o.sigma, g)
    return _apply(o.bricks, o.sigma, starts_by_len) is None


def fixed_points(g: PatternSet, n: int) -> Iterator[FilledTabloid]:
    """Fixed points of the involution, filtered from the full enumeration.

    Deliberately brute force: the enumeration exercises the involution
    itself rather than assuming the structure theorem for its fixed points.
    """
    for o in enumerate_O(g, n):
        if is_fixed_point(g, o):
            yield o


def signed_weight_sum(g: PatternSet, n: int, fixed_only: bool = False) -> YPoly:
    """Sum of sign * weight over all objects, or over fixed points only."""
    total = YPoly.zero()
    source = fixed_points(g, n) if fixed_only else enumerate_O(g, n)
    for o in source:
        total = total + o.signed_weight()
    return total


def descent_bottoms_ascending(g: PatternSet) -> bool:
    """Hypothesis for the increasing-first-elements conclusion: every pattern
    with j >= 1 descents has descent bottoms exactly 2, 3, ..., j+1 in
    position order."""
    for pat in g:
        positions = sorted(descent_set(pat))
        bottoms = [pat[i] for i in positions]
        if bottoms != list(range(2, len(bottoms) + 2)):
            return False
    return True


@dataclass(frozen=True)
class LemmaReport:
    """Fixed-point structure report.

    a_holds: bricks entered from below (or the first brick) are increasing.
    b_holds: bricks entered by a descent are covered by a spanning match
             through the boundary pair and carry at most max_descents-1 ys.
    c_applies / c_holds: the descent-bottom hypothesis and, when it applies,
             whether the brick-first values strictly increase.
    """

    a_holds: bool
    a_witnesses: tuple[tuple[int, int], ...]
    b_holds: bool
    b_witnesses: tuple[tuple[int, str], ...]
    c_applies: bool
    c_holds: bool
    c_witnesses: tuple[tuple[int, int], ...]

    def passed(self) -> bool:
        return self.a_holds and self.b_holds and (self.c_holds or not self.c_applies)


def check_lemma_conditions(g: PatternSet, o: FilledTabloid) -> LemmaReport:
    """Check the fixed-point structure conditions on o (assumed a fixed point)."""
    starts = match_starts_by_length(o.sigma, g)
    bounds = o.brick_bounds()
    sigma = o.sigma
    k_gamma = g.max_descents()
    y_by_brick: dict[int, list[int]] = {}
    for c in o.y_cells():
        for j, (s, e) in enumerate(bounds):
            if s <= c <= e:
                y_by_brick.setdefault(j, []).append(c)
                break

    a_witnesses = []
    b_witnesses = []
    for j, (s, e) in enumerate(bounds):
        entered_by_descent = j > 0 and sigma[bounds[j - 1][1] - 1] > sigma[s - 1]
        if not entered_by_descent:
            for c in y_by_brick.get(j, ()):
                a_witnesses.append((j + 1, c))
        else:
            s_prev = bounds[j - 1][0]
            boundary = bounds[j - 1][1]
            covering = False
            for m, pos in starts.items():
                for p in pos:
                    if s_prev <= p <= boundary and boundary + 1 <= p + m - 1 <= e:
                        covering = True
                        break
                if covering:
                    break
            if not covering:
                b_witnesses.append((j + 1, "no spanning match through the boundary pair"))
            if len(y_by_brick.get(j, ())) > max(k_gamma - 1, 0):
                b_witnesses.append((j + 1, f"{len(y_by_brick[j])} y labels exceeds {k_gamma - 1}"))

    c_applies = descent_bottoms_ascending(g)
    firsts = [sigma[s - 1] for s, _ in bounds]
    c_witnesses = tuple((i + 1, i + 2) for i in range(len(firsts) - 1) if firsts[i] >= firsts[i + 1])
    return LemmaReport(
        a_holds=not a_witnesses,
        a_witnesses=tuple(a_witnesses),
        b_holds=not b_witnesses,
        b_witnesses=tuple(b_witnesses),
        c_applies=c_applies,
        c_holds=not c_witnesses,
        c_witnesses=c_witnesses,
    )
