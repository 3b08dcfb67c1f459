"""Circularly-connected permutations (CCPs).

A permutation of ``[2n]`` is circularly connected when each prefix set
``{sigma_1, ..., sigma_k}`` is a run of ``k`` consecutive labels on the
circle.  These are exactly the permutations whose path map is a bijection,
and :func:`invert` constructs the preimage.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .dyck import DOWN, Block, DyckPath, Pairing, check_cap, iter_words, path_from_tunneling, wrap
from .errors import IndexOutOfRange, NotCcp, SizeMismatch
from .perm import Perm
from .sigma import sigma_word


@dataclass(frozen=True)
class CcpCertificate:
    perm: Perm
    blocks: tuple[Block, ...]


def _prefix_blocks(images: Sequence[int]) -> list[tuple[int, int]] | None:
    """``(start, size)`` of every prefix block, or None if some prefix is not a block."""
    m = len(images)
    lo = hi = images[0]
    blocks = [(lo, 1)]
    for size, s in enumerate(images[1:], 2):
        if s == wrap(hi + 1, m):
            hi = s
        elif s == wrap(lo - 1, m):
            lo = s
        else:
            return None
        blocks.append((lo, size))
    return blocks


def is_ccp(sigma: Perm | Sequence[int]) -> bool:
    """
    >>> is_ccp(Perm((2, 1, 3, 6, 4, 5))), is_ccp(Perm((2, 3, 6, 1, 4, 5)))
    (True, False)
    """
    images = sigma.images if isinstance(sigma, Perm) else sigma
    return _prefix_blocks(images) is not None


def ccp_certificate(sigma: Perm) -> CcpCertificate | None:
    blocks = _prefix_blocks(sigma.images)
    if blocks is None:
        return None
    m = len(sigma.images)
    return CcpCertificate(sigma, tuple(Block(s, k, m) for s, k in blocks))


def count_ccps(n: int) -> int:
    return n * 2 ** (2 * n - 1)


def iter_ccp_images(n: int) -> Iterator[tuple[int, ...]]:
    m = 2 * n
    for first in range(1, m + 1):
        # bit 0 extends clockwise (past the high end), bit 1 counterclockwise
        for bits in itertools.product((0, 1), repeat=m - 2):
            lo = hi = first
            out = [first]
            for b in bits:
                if b:
                    lo = wrap(lo - 1, m)
                    out.append(lo)
                else:
                    hi = wrap(hi + 1, m)
                    out.append(hi)
            if m > 1:
                out.append(wrap(hi + 1, m))
            yield tuple(out)


def enumerate_ccps(n: int, cap: int | None = None) -> Iterator[Perm]:
    """All CCPs of ``[2n]``, by first entry then extension string.

    >>> [str(p) for p in enumerate_ccps(1)]
    ['1,2', '2,1']
    """
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    check_cap(n, cap)
    for images in iter_ccp_images(n):
        yield Perm(images)


@dataclass(frozen=True)
class InvertStep:
    """One down-step iteration of the inverse construction."""

    k: int
    block: frozenset[int]
    entry: int
    endpoints: tuple[int, ...]
    partner: int


class _NextUnpaired:
    """Skip pointers to the nearest unpaired label in one circular direction."""

    def __init__(self, m: int, step: int):
        self.link = list(range(m + 1))
        self.m = m
        self.step = step

    def remove(self, x: int) -> None:
        self.link[x] = wrap(x + self.step, self.m)

    def find(self, x: int) -> int:
        root = x
        while self.link[root] != root:
            root = self.link[root]
        while self.link[x] != root:
            self.link[x], x = root, self.link[x]
        return root


def invert_steps(sigma: Perm, path: DyckPath) -> Iterator[InvertStep]:
    """Run the inverse construction, yielding each pairing decision.

    For every down step ``k`` of ``path``, the entry ``sigma_k`` sits next to
    an endpoint ``w`` of the block read so far; walking into the block from
    ``w``, it is paired with the first label not yet paired.  Only on the
    final step can both endpoints qualify; both walks then reach the same
    label (the block has exactly one unpaired label left) and this is
    asserted.
    """
    m = len(sigma.images)
    if m != len(path.word):
        raise SizeMismatch(f"permutation of degree {m} applied to a path of length {len(path.word)}")
    if not is_ccp(sigma):
        raise NotCcp(f"{sigma} is not circularly connected")
    images = sigma.images
    inward_cw = _NextUnpaired(m, +1)
    inward_ccw = _NextUnpaired(m, -1)
    lo = hi = images[0]
    for k in range(2, m + 1):
        s = images[k - 1]
        at_lo = s == wrap(lo - 1, m)
        at_hi = s == wrap(hi + 1, m)
        if path.word[k - 1] == DOWN:
            endpoints = []
            found = []
            if at_lo:
                endpoints.append(lo)
                found.append(inward_cw.find(lo))
            if at_hi:
                endpoints.append(hi)
                found.append(inward_ccw.find(hi))
            assert endpoints, "CCP entry not adjacent to its prefix block"
            assert len(endpoints) == 1 or k == m, "ambiguous endpoint before the last step"
            assert len(set(found)) == 1, f"endpoint walks disagree at step {k}: {found}"
            v = found[0]
            block = frozenset(images[: k - 1])
            assert v in block
            for x in (s, v):
                inward_cw.remove(x)
                inward_ccw.remove(x)
            yield InvertStep(k, block, s, tuple(endpoints), v)
        if at_lo:
            lo = s
        else:
            hi = s


def invert(sigma: Perm, path: DyckPath) -> DyckPath:
    """The unique path ``Q`` with ``sigma_path(sigma, Q) == path`` for a CCP ``sigma``.

    >>> invert(Perm((1, 6, 2, 3, 5, 4)), DyckPath("uududd")).word
    'ududud'
    """
    partner = [0] * len(sigma.images)
    for st in invert_steps(sigma, path):
        partner[st.entry - 1] = st.partner
        partner[st.partner - 1] = st.entry
    return path_from_tunneling(Pairing(tuple(partner)))


def is_injective_on_paths(sigma: Perm, n: int | None = None, cap: int | None = None) -> bool:
    """Brute force: are the images of all paths of size ``n`` pairwise distinct?"""
    n = sigma.n if n is None else n
    if 2 * n != len(sigma.images):
        raise SizeMismatch(f"permutation of degree {len(sigma.images)} for paths of size {n}")
    check_cap(n, cap)
    seen = set()
    for w in iter_words(n):
        img = sigma_word(sigma.images, DyckPath(w).partners)
        if img in seen:
            return False
        seen.add(img)
    return True
