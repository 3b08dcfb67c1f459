"""Unpaired-step statistics on circular windows of a path.

``unpaired_count(P, a, k)`` counts the steps in the circular window
``a, a + 1, ..., a + k - 1`` whose tunnel partner lies outside the window.
Reading ``P`` in the rotated order ``a, a + 1, ...`` turns this count into
the height after ``k`` steps, so it has the same distribution as ``h_k``.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .dyck import DyckPath, check_cap, heights, iter_words, wrap
from .errors import IndexOutOfRange
from .perm import Perm
from .sigma import sigma_word

log = logging.getLogger(__name__)


@dataclass
class StatHistogram:
    level_counts: Counter = field(default_factory=Counter)

    def add(self, level: int) -> None:
        self.level_counts[level] += 1

    @property
    def total(self) -> int:
        return sum(self.level_counts.values())

    def as_dict(self) -> dict[int, int]:
        return {k: v for k, v in sorted(self.level_counts.items()) if v}

    def __eq__(self, other):
        if not isinstance(other, StatHistogram):
            return NotImplemented
        return self.as_dict() == other.as_dict()


def _check_window(m: int, a: int, k: int) -> None:
    if not 1 <= a <= m:
        raise IndexOutOfRange(f"window start {a} outside [1, {m}]")
    if not 1 <= k <= m:
        raise IndexOutOfRange(f"window length {k} outside [1, {m}]")


def unpaired_count(path: DyckPath, a: int, k: int) -> int:
    """
    >>> unpaired_count(DyckPath("uuuduudddudd"), 2, 5)
    3
    """
    m = len(path.word)
    _check_window(m, a, k)
    tau = path.partners
    unpaired = sum(1 for i in range(a, a + k) if (tau[wrap(i, m) - 1] - a) % m >= k)
    log.debug("window (%d, %d) of %s: %d internal tunnels", a, k, path, (k - unpaired) // 2)
    return unpaired


def stat_sigma(a: int, k: int, n: int) -> Perm:
    """The rotation ``j -> a + j - 1`` whose first ``k`` entries are the window."""
    m = 2 * n
    _check_window(m, a, k)
    return Perm(tuple(wrap(a + j - 1, m) for j in range(1, m + 1)))


def height_histogram(n: int, k: int, cap: int | None = None) -> StatHistogram:
    check_cap(n, cap)
    hist = StatHistogram()
    for w in iter_words(n):
        hist.add(heights(DyckPath(w))[k])
    return hist


def unpaired_histogram(n: int, a: int, k: int, cap: int | None = None) -> StatHistogram:
    check_cap(n, cap)
    hist = StatHistogram()
    for w in iter_words(n):
        hist.add(unpaired_count(DyckPath(w), a, k))
    return hist


def equidistribution_check(n: int, a: int, k: int, cap: int | None = None) -> bool:
    """Same histogram for ``u_{a,k}`` and ``h_k``, plus the pointwise transport."""
    check_cap(n, cap)
    rot = stat_sigma(a, k, n).images
    for w in iter_words(n):
        path = DyckPath(w)
        moved = DyckPath(sigma_word(rot, path.partners))
        if unpaired_count(path, a, k) != heights(moved)[k]:
            return False
    return unpaired_histogram(n, a, k) == height_histogram(n, k)


def height_level_count(n: int, k: int, level: int) -> int:
    """Closed-form number of paths of size ``n`` at height ``level`` after ``k`` steps."""
    m = 2 * n
    if not 1 <= k <= m:
        raise IndexOutOfRange(f"step {k} outside [1, {m}]")
    if level < 0 or (k + level) % 2:
        return 0
    half = (k + level) // 2
    val = (
        Fraction((level + 1) ** 2, (k + 1) * (m - k + 1))
        * _binom(k + 1, half + 1)
        * _binom(m - k + 1, n - half)
    )
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral count {val} at n={n}, k={k}, level={level}")
    return int(val)


def _binom(top: int, bottom: int) -> int:
    return comb(top, bottom) if 0 <= bottom <= top else 0


def u_max(path: DyckPath, a: int) -> int:
    m = len(path.word)
    return max(unpaired_count(path, a, k) for k in range(1, m + 1))


def peak_height(path: DyckPath) -> int:
    return max(heights(path))


def umax_equidistribution_check(n: int, a: int, cap: int | None = None) -> bool:
    check_cap(n, cap)
    left, right = StatHistogram(), StatHistogram()
    for w in iter_words(n):
        path = DyckPath(w)
        left.add(u_max(path, a))
        right.add(peak_height(path))
    return left == right


def umax_table(n: int, cap: int | None = None) -> list[tuple[str, int, tuple[int, ...]]]:
    """Rows ``(word, peak height, (u_max for a = 1..2n))`` over ``D_n``."""
    check_cap(n, cap)
    rows = []
    for w in iter_words(n):
        path = DyckPath(w)
        rows.append((w, peak_height(path), tuple(u_max(path, a) for a in range(1, 2 * n + 1))))
    return rows
