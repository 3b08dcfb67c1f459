"""Partitions of ``S_2n`` induced by the path map.

Two relations are handled here.  For a fixed base path ``Q`` permutations
are grouped by the image of ``Q``; the class of ``P`` has ``2^n n! L_P``
members where ``L_P`` is the product of the heights after each up step.
The stronger relation groups permutations that induce the same map on all
of ``D_n``; for ``n >= 3`` the classes are described exactly by the parity
pair and a canonical :class:`ClassKey`.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .dyck import (
    DyckPath,
    check_cap,
    down_positions,
    heights,
    iter_words,
    up_positions,
    wrap,
)
from .errors import SizeMismatch, SizeTooSmall
from .perm import Perm, all_perms
from .sigma import sigma_word


# -- first partition: fixed base path ---------------------------------------


def l_weight(path: DyckPath) -> int:
    """Product of the heights just before each down step.

    >>> l_weight(DyckPath("uuuddd")), l_weight(DyckPath("uududd"))
    (6, 4)
    """
    h = heights(path)
    return prod(h[d - 1] for d in down_positions(path))


def double_factorial(m: int) -> int:
    """``m!! = m (m - 2) (m - 4) ...``; equals 1 for ``m <= 0``."""
    return prod(range(m, 0, -2))


class IdentityCheck(NamedTuple):
    lhs: int
    rhs: int
    ok: bool


def double_factorial_identity_check(n: int, cap: int | None = None) -> IdentityCheck:
    check_cap(n, cap)
    lhs = sum(l_weight(DyckPath(w)) for w in iter_words(n))
    rhs = double_factorial(2 * n - 1)
    return IdentityCheck(lhs, rhs, lhs == rhs)


def _check_same_size(p: DyckPath, q: DyckPath) -> None:
    if p.n != q.n:
        raise SizeMismatch(f"paths of sizes {p.n} and {q.n}")


def count_generators(target: DyckPath, base: DyckPath) -> int:
    """Number of permutations mapping ``base`` to ``target``: ``2^n n! L_target``."""
    _check_same_size(target, base)
    n = target.n
    return 2**n * factorial(n) * l_weight(target)


def generators(target: DyckPath, base: DyckPath, cap: int | None = None) -> Iterator[Perm]:
    """Every ``sigma`` with ``sigma_path(sigma, base) == target``.

    Up positions of ``target`` receive one label from each tunnel of
    ``base`` in some order (``2^n n!`` ways).  Down positions are then
    filled left to right with the partner of any still-open up position
    before them; the number of open positions is the current height.
    """
    for images in generator_images(target, base, cap):
        yield Perm(images)


def generator_images(target: DyckPath, base: DyckPath, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Raw image tuples of :func:`generators`."""
    _check_same_size(target, base)
    n = target.n
    check_cap(n, cap)
    tau = base.partners
    ups = up_positions(target)
    downs = down_positions(target)
    tunnels = [(i, j) for i, j in enumerate(tau, 1) if i < j]
    images = [0] * (2 * n)

    def fill_downs(idx, open_ups):
        if idx == n:
            yield tuple(images)
            return
        d = downs[idx]
        for pos in open_ups:
            if pos > d:
                break
            images[d - 1] = tau[images[pos - 1] - 1]
            yield from fill_downs(idx + 1, [p for p in open_ups if p != pos])

    for order in itertools.permutations(range(n)):
        for sides in itertools.product((0, 1), repeat=n):
            for u, t, side in zip(ups, order, sides):
                images[u - 1] = tunnels[t][side]
            yield from fill_downs(0, list(ups))


# -- second partition: identical maps ----------------------------------------


@dataclass(frozen=True, order=True)
class ParityPair:
    a: int
    b: int


def _parity(images: Sequence[int]) -> ParityPair:
    m = len(images)
    a = next(i for i in range(1, m) if (images[i - 1] - images[i]) % 2)
    b = next(j for j in range(1, m) if (images[m - j] - images[m - j - 1]) % 2)
    return ParityPair(a, b)


def parity(sigma: Perm) -> ParityPair:
    """Positions of the first parity change from the left and from the right.

    >>> parity(Perm((1, 3, 2, 7, 5, 4, 6, 8)))
    ParityPair(a=2, b=3)
    """
    return _parity(sigma.images)


def _require_n3(sigma: Perm) -> None:
    if len(sigma.images) < 6:
        raise SizeTooSmall(f"needs n >= 3, got n = {len(sigma.images) // 2}")


def family(sigma: Perm) -> frozenset[Perm]:
    """The four permutations obtained by optionally swapping the first two and the last two entries."""
    _require_n3(sigma)
    x = sigma.images
    heads = (x[:2], x[1::-1])
    tails = (x[-2:], x[:-3:-1])
    return frozenset(Perm(h + x[2:-2] + t) for h in heads for t in tails)


def are_friends(lam: Perm, mu: Perm) -> bool:
    if len(lam.images) != len(mu.images):
        return False
    par = parity(lam)
    if parity(mu) != par:
        return False
    a, b = par.a, par.b
    m = len(lam.images)
    x, y = lam.images, mu.images
    return set(x[:a]) == set(y[:a]) and x[a : m - b] == y[a : m - b]


@dataclass(frozen=True)
class DestroyingTriple:
    """Indices ``i < j < k`` and labels ``p, p + 1, q, r`` separating two maps.

    With ``swapped`` false, ``{lam_i, lam_j} = {p, p + 1}`` and
    ``{mu_j, mu_k} = {q, r}``; with ``swapped`` true the label pairs trade
    places: ``{lam_i, lam_j} = {q, r}`` and ``{mu_j, mu_k} = {p, p + 1}``.
    """

    i: int
    j: int
    k: int
    p: int
    q: int
    r: int
    swapped: bool
    degree: int

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    @property
    def witness(self) -> tuple[int, int, int, int]:
        """The four labels ``(p, p + 1, q, r)``, with ``p + 1`` taken on the circle."""
        return (self.p, wrap(self.p + 1, self.degree), self.q, self.r)


def _adjacent_low(x: int, y: int, m: int) -> int | None:
    """``p`` with ``{x, y} == {p, p + 1}`` on the circle ``[m]``, else None."""
    if y == wrap(x + 1, m):
        return x
    if x == wrap(y + 1, m):
        return y
    return None


def _triple_witness(pair_a, pair_b, m):
    p = _adjacent_low(*pair_a, m)
    if p is None:
        return None
    q, r = sorted(pair_b)
    if (q - r) % 2 == 0:
        return None
    if len({pair_a[0], pair_a[1], q, r}) != 4:
        return None
    return (p, q, r)


def find_destroying_triple(lam: Perm, mu: Perm) -> DestroyingTriple | None:
    """First destroying triple in lexicographic order of ``(i, j, k, p, q, r)``.

    >>> t = find_destroying_triple(Perm((1, 3, 2, 7, 5, 4, 6, 8)), Perm((5, 3, 2, 7, 1, 4, 6, 8)))
    >>> t.triple, (t.p, t.q, t.r)
    ((3, 5, 8), (8, 2, 5))
    """
    m = len(lam.images)
    if m != len(mu.images):
        raise SizeMismatch("permutations of different degree")
    x, y = lam.images, mu.images
    for i, j, k in itertools.combinations(range(1, m + 1), 3):
        lp = (x[i - 1], x[j - 1])
        mp = (y[j - 1], y[k - 1])
        found = []
        w = _triple_witness(lp, mp, m)
        if w is not None:
            found.append((w, False))
        w = _triple_witness(mp, lp, m)
        if w is not None:
            found.append((w, True))
        if found:
            (p, q, r), swapped = min(found)
            return DestroyingTriple(i, j, k, p, q, r, swapped, m)
    return None


@dataclass(frozen=True)
class ClassKey:
    """Canonical fingerprint of a class of permutations inducing the same map.

    ``prefix_class`` and ``suffix_class`` are the label sets of the two
    boundary segments (of sizes ``max(a, 2)`` and ``max(b, 2)``), and
    ``middle`` the entries between them.  For parity ``(n, n)`` everything
    but the parity is empty; for ``(n - 1, n - 1)`` only ``middle`` is kept,
    holding the two central labels in increasing order.
    """

    parity: ParityPair
    prefix_class: frozenset[int]
    middle: tuple[int, ...]
    suffix_class: frozenset[int]


def class_key(sigma: Perm) -> ClassKey:
    _require_n3(sigma)
    x = sigma.images
    m = len(x)
    n = m // 2
    par = _parity(x)
    a, b = par.a, par.b
    if a == b == n:
        return ClassKey(par, frozenset(), (), frozenset())
    if a == b == n - 1:
        return ClassKey(par, frozenset(), tuple(sorted(x[n - 1 : n + 1])), frozenset())
    # Taking the boundary segments at length >= 2 absorbs the family moves
    # needed when a or b equals 1.
    lo, hi = max(a, 2), max(b, 2)
    return ClassKey(par, frozenset(x[:lo]), tuple(x[lo : m - hi]), frozenset(x[m - hi :]))


def class_size(sigma: Perm) -> int:
    _require_n3(sigma)
    par = parity(sigma)
    return cell_class_size(sigma.n, par.a, par.b)


def cell_class_size(n: int, a: int, b: int) -> int:
    """Size of every class whose members have parity pair ``(a, b)`` (``n >= 3``)."""
    if a == b == n:
        return 2 * factorial(n) ** 2
    if a == b == n - 1:
        return 2 * factorial(n - 1) ** 2
    return factorial(max(a, 2)) * factorial(max(b, 2))


def parity_census(n: int, a: int, b: int) -> int:
    """Number of permutations of ``[2n]`` with parity pair ``(a, b)``."""
    base = 2 * factorial(n) ** 2
    if a == b == n:
        return base
    if 1 <= a < n and 1 <= b < n:
        top = 2 * n - 2 - a - b
        return base * (comb(top, n - 2) + comb(top, n - 1 - a))
    return 0


def num_classes(n: int) -> int:
    """Number of distinct maps ``D_n -> D_n`` generated by ``S_2n``.

    >>> [num_classes(n) for n in range(1, 7)]
    [1, 3, 154, 8369, 711226, 90349957]
    """
    if n <= 2:
        return count_classes_bruteforce(n)
    total = 0
    for a in range(1, n):
        for b in range(1, n):
            top = 2 * n - 2 - a - b
            total += (
                factorial(n) ** 2
                // (factorial(max(a, 2)) * factorial(max(b, 2)))
                * (comb(top, n - 2) + comb(top, n - 1 - a))
            )
    return 1 - n * n + 2 * total


# -- brute-force oracles ------------------------------------------------------


def path_partners(n: int) -> list[tuple[int, ...]]:
    return [DyckPath(w).partners for w in iter_words(n)]


def fingerprint(images: Sequence[int], partners: Iterable[Sequence[int]]) -> tuple[str, ...]:
    """Images of every path, in enumeration order."""
    return tuple(sigma_word(images, t) for t in partners)


def same_class_bruteforce(lam: Perm, mu: Perm, n: int | None = None, cap: int | None = None) -> bool:
    n = lam.n if n is None else n
    if not len(lam.images) == len(mu.images) == 2 * n:
        raise SizeMismatch(f"permutations of degree {len(lam.images)}, {len(mu.images)} for n = {n}")
    check_cap(n, cap)
    return all(
        sigma_word(lam.images, t) == sigma_word(mu.images, t) for t in path_partners(n)
    )


def separating_path(lam: Perm, mu: Perm) -> DyckPath | None:
    """First path (in enumeration order) on which the two maps differ."""
    for w in iter_words(lam.n):
        t = DyckPath(w).partners
        if sigma_word(lam.images, t) != sigma_word(mu.images, t):
            return DyckPath(w)
    return None


def bruteforce_classes(n: int, cap: int | None = None) -> dict[tuple[str, ...], list[tuple[int, ...]]]:
    """Group all of ``S_2n`` by fingerprint; values are raw image tuples in lexicographic order."""
    check_cap(n, cap)
    partners = path_partners(n)
    classes: dict[tuple[str, ...], list[tuple[int, ...]]] = {}
    for images in all_perms(2 * n):
        classes.setdefault(fingerprint(images, partners), []).append(images)
    return classes


def count_classes_bruteforce(n: int) -> int:
    return len(bruteforce_classes(n))


def parity_histogram(n: int) -> Counter:
    return Counter(_parity(images) for images in all_perms(2 * n))

