"""
Permutations of {1, ..., n}, their statistics, and consecutive-pattern matching.

A permutation is a tuple of the values 1..n in one-line notation; the empty
tuple is the (unique) permutation of length 0.  The statistics used
throughout the package:

- a descent of p is a position i (1-based) with p_i > p_{i+1};
- a left-to-right minimum is an entry strictly smaller than everything
  before it;
- given a finite set of forbidden patterns, p has a match starting at
  position i when some pattern tau of length m satisfies
  reduce_word(p_i ... p_{i+m-1}) == tau, i.e. a window of length exactly
  len(tau) is order-isomorphic to tau.  Matches are counted by distinct
  starting positions.

``enumerate_avoiders`` streams the match-free permutations in lexicographic
order.  ``nm_polynomial`` aggregates the avoiders of length n into the
weight polynomial sum(x^(#LR minima) * y^(1 + #descents)); its default
engine vectorises the whole-S_n sweep with numpy, partitioned into blocks
by first element, and is cross-checked against the streaming enumerator in
the test suite.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

import numpy as np

from .polynomials import XYPoly


def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic permutation: the i-th smallest entry becomes i.

    >>> reduce_word((5, 3, 9, 6, 2))
    (3, 2, 5, 4, 1)
    >>> reduce_word((10, 20))
    (1, 2)
    """
    if len(set(word)) != len(word):
        raise ValueError(f"entries must be distinct, got {tuple(word)}")
    if any(v <= 0 for v in word):
        raise ValueError(f"entries must be positive, got {tuple(word)}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def descent_set(p: Sequence[int]) -> set[int]:
    """1-based positions i with p_i > p_{i+1}.

    >>> sorted(descent_set((1, 4, 2, 5, 3, 6)))
    [2, 4]
    """
    return {i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]}


def descent_count(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def lr_minima(p: Sequence[int]) -> list[int]:
    """Values that are strictly below every earlier entry, in position order.

    >>> lr_minima((9, 3, 8, 4, 7, 1, 6, 2, 5))
    [9, 3, 1]
    """
    if not p:
        raise ValueError("left-to-right minima are undefined for the empty permutation")
    mins = [p[0]]
    for v in p[1:]:
        if v < mins[-1]:
            mins.append(v)
    return mins


def lr_minima_count(p: Sequence[int]) -> int:
    return len(lr_minima(p))


def _value_order(pattern: Sequence[int]) -> tuple[int, ...]:
    # 0-based offsets of the values 1, 2, ..., m within the pattern; a window
    # w matches iff w is increasing along this chain of offsets.
    return tuple(sorted(range(len(pattern)), key=pattern.__getitem__))


def _window_matches(window: Sequence[int], chain: Sequence[int]) -> bool:
    prev = window[chain[0]]
    for off in chain[1:]:
        cur = window[off]
        if prev >= cur:
            return False
        prev = cur
    return True


@dataclass(frozen=True)
class PatternSet:
    """A nonempty set of forbidden consecutive patterns (lengths >= 2, possibly mixed).

    >>> g = PatternSet.of((1, 4, 2, 5, 3), (1, 5, 2, 4, 3))
    >>> g.starts_with_one
    True
    """

    patterns: tuple[tuple[int, ...], ...]
    _chains: dict[int, tuple[tuple[int, ...], ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.patterns:
            raise ValueError("pattern set must be nonempty")
        for pat in self.patterns:
            if len(pat) < 2:
                raise ValueError(f"patterns must have length >= 2, got {pat}")
            if not is_permutation(pat):
                raise ValueError(f"pattern is not a permutation of 1..{len(pat)}: {pat}")
        if self.patterns != tuple(sorted(set(self.patterns))):
            raise ValueError("patterns must be given via PatternSet.of (sorted, deduplicated)")
        chains: dict[int, list[tuple[int, ...]]] = {}
        for pat in self.patterns:
            chains.setdefault(len(pat), []).append(_value_order(pat))
        object.__setattr__(self, "_chains", {m: tuple(cs) for m, cs in chains.items()})

    @classmethod
    def of(cls, *patterns: Sequence[int]) -> PatternSet:
        return cls(tuple(sorted({tuple(p) for p in patterns})))

    @classmethod
    def from_text(cls, text: str) -> PatternSet:
        """Parse ' 14253,15243 ' or bracketed words '[1,10,2,...],[...]' (mixable)."""
        words: list[tuple[int, ...]] = []
        rest = text.strip()
        while rest:
            if rest.startswith("["):
                end = rest.find("]")
                if end < 0:
                    raise ValueError(f"unterminated '[' in pattern set {text!r}")
                words.append(tuple(int(v) for v in rest[1:end].split(",")))
                rest = rest[end + 1:].lstrip().lstrip(",").lstrip()
            else:
                head, _, rest = rest.partition(",")
                head = head.strip()
                if not head.isdigit():
                    raise ValueError(f"bad pattern word {head!r} in {text!r}")
                words.append(tuple(int(ch) for ch in head))
                rest = rest.strip()
        return cls.of(*words)

    @property
    def starts_with_one(self) -> bool:
        return all(p[0] == 1 for p in self.patterns)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted(self._chains))

    @property
    def min_length(self) -> int:
        return min(self._chains)

    @property
    def max_length(self) -> int:
        return max(self._chains)

    def max_descents(self) -> int:
        return max(descent_count(p) for p in self.patterns)

    def chains_for_length(self, m: int) -> tuple[tuple[int, ...], ...]:
        return self._chains.get(m, ())

    def to_text(self) -> str:
        words = []
        for p in self.patterns:
            words.append("".join(map(str, p)) if max(p) <= 9 else "[" + ",".join(map(str, p)) + "]")
        return ",".join(words)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)


def gamma_match_starts(p: Sequence[int], g: PatternSet) -> set[int]:
    """1-based starting positions of pattern matches in p.

    A position counts once even if several patterns match there.

    >>> gamma_match_starts((1, 4, 2, 5, 3), PatternSet.of((1, 4, 2, 5, 3)))
    {1}
    """
    starts: set[int] = set()
    n = len(p)
    for m, chains in g._chains.items():
        for s in range(n - m + 1):
            window = p[s:s + m]
            if any(_window_matches(window, ch) for ch in chains):
                starts.add(s + 1)
    return starts


def gamma_match_count(p: Sequence[int], g: PatternSet) -> int:
    return len(gamma_match_starts(p, g))


def match_starts_by_length(p: Sequence[int], g: PatternSet) -> dict[int, tuple[int, ...]]:
    """For each pattern length m, the sorted 1-based starts of length-m matches."""
    out: dict[int, tuple[int, ...]] = {}
    n = len(p)
    for m, chains in g._chains.items():
        starts = [s + 1 for s in range(n - m + 1)
                  if any(_window_matches(p[s:s + m], ch) for ch in chains)]
        out[m] = tuple(starts)
    return out


def enumerate_avoiders(n: int, g: PatternSet) -> Iterator[tuple[int, ...]]:
    """Stream the match-free permutations of length n in lexicographic order.

    Prunes a prefix as soon as its newest complete window matches, so only
    the final window needs checking at each extension step.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    lengths = [m for m in g.lengths if m <= n]
    chains = {m: g.chains_for_length(m) for m in lengths}
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend() -> Iterator[tuple[int, ...]]:
        d = len(prefix)
        if d == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            used[v] = True
            ok = True
            for m in lengths:
                if d + 1 >= m:
                    window = prefix[d + 1 - m:]
                    if any(_window_matches(window, ch) for ch in chains[m]):
                        ok = False
                        break
            if ok:
                yield from extend()
            prefix.pop()
            used[v] = False

    yield from extend()


DEFAULT_MAX_ENUM = 11


def max_enum_bound() -> int:
    """Brute-force size guard; override with the PATLAB_MAX_ENUM environment variable."""
    raw = os.environ.get("PATLAB_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


@lru_cache(maxsize=None)
def _rank_perms(m: int) -> np.ndarray:
    # All permutations of {0..m-1} as an (m!, m) int8 array, built level by
    # level by inserting the value m-1 at each position.  Order is not
    # lexicographic; callers aggregate, so order is irrelevant.
    if m == 0:
        a = np.zeros((1, 0), dtype=np.int8)
    else:
        prev = _rank_perms(m - 1)
        f = prev.shape[0]
        a = np.empty((f * m, m), dtype=np.int8)
        for j in range(m):
            block = a[j * f:(j + 1) * f]
            block[:, :j] = prev[:, :j]
            block[:, j] = m - 1
            block[:, j + 1:] = prev[:, j:]
    a.setflags(write=False)
    return a


def _weight_counts_vector(n: int, g: PatternSet) -> dict[tuple[int, int], int]:
    # Sweep S_n in (n-1)! blocks fixed by first element; within each block
    # every statistic is a handful of vectorised column comparisons.
    counts: dict[tuple[int, int], int] = {}
    base = _rank_perms(n - 1)
    rows = base.shape[0]
    window_specs = []
    for m in g.lengths:
        if m > n:
            continue
        for chain in g.chains_for_length(m):
            for s in range(n - m + 1):
                window_specs.append(tuple(s + off for off in chain))
    block = np.empty((rows, n), dtype=np.int8)
    for first in range(1, n + 1):
        rest = np.array([v for v in range(1, n + 1) if v != first], dtype=np.int8)
        block[:, 0] = first
        block[:, 1:] = rest[base]
        matched = np.zeros(rows, dtype=bool)
        for spec in window_specs:
            mask = ~matched
            for a, b in zip(spec, spec[1:]):
                mask &= block[:, a] < block[:, b]
                if not mask.any():
                    break
            matched |= mask
        avoid = ~matched
        if not avoid.any():
            continue
        des = np.zeros(rows, dtype=np.int16)
        for i in range(n - 1):
            des += block[:, i] > block[:, i + 1]
        run_min = np.minimum.accumulate(block, axis=1)
        lrm = np.ones(rows, dtype=np.int16)
        for i in range(1, n):
            lrm += block[:, i] < run_min[:, i - 1]
        keys = lrm[avoid].astype(np.int64) * (n + 1) + des[avoid]
        binned = np.bincount(keys, minlength=(n + 1) * (n + 1) + 1)
        for key in np.nonzero(binned)[0]:
            lr, d = divmod(int(key), n + 1)
            counts[(lr, d)] = counts.get((lr, d), 0) + int(binned[key])
    return counts


def _weight_counts_scan(n: int, g: PatternSet) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for p in enumerate_avoiders(n, g):
        key = (lr_minima_count(p), descent_count(p))
        counts[key] = counts.get(key, 0) + 1
    return counts


def weight_counts(n: int, g: PatternSet, method: str = "auto") -> dict[tuple[int, int], int]:
    """Avoider counts keyed by (#LR minima, #descents)."""
    if method == "auto":
        method = "vector" if n >= 2 else "scan"
    if method == "vector":
        return _weight_counts_vector(n, g)
    if method == "scan":
        return _weight_counts_scan(n, g)
    raise ValueError(f"unknown method {method!r}")


def nm_polynomial(n: int, g: PatternSet, method: str = "auto") -> XYPoly:
    """Weight polynomial of the length-n avoiders:
    sum over match-free p of x^(#LR minima of p) * y^(1 + #descents of p).

    Setting x = y = 1 recovers the number of avoiders.
    """
    if n < 1:
        raise ValueError("nm_polynomial requires n >= 1")
    counts = weight_counts(n, g, method=method)
    return XYPoly((((lr, d + 1), c) for (lr, d), c in counts.items()))
