"""Rotations and reflections of the chord diagram of a path.

The group generated by ``rho: k -> k + 1`` and ``omega: k -> 2n - k``
(labels taken mod ``2n`` in ``[1, 2n]``) is the largest set of relabellings
that sends every path to a path.  Elements are kept in the normal form
``rho^rotation`` or ``rho^rotation ∘ omega``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .dyck import DyckPath, _noncrossing, check_cap, iter_words, wrap
from .perm import Perm
from .sigma import conjugate_partners, rep_as_path


@dataclass(frozen=True, order=True)
class DihedralElement:
    n: int
    rotation: int
    reflected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % (2 * self.n))

    def __call__(self, k: int) -> int:
        m = 2 * self.n
        return wrap((m - k if self.reflected else k) + self.rotation, m)

    def to_perm(self) -> Perm:
        return Perm(tuple(self(k) for k in range(1, 2 * self.n + 1)))

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        # omega rho^r omega = rho^-r
        r = self.rotation - other.rotation if self.reflected else self.rotation + other.rotation
        return DihedralElement(self.n, r, self.reflected != other.reflected)

    def inverse(self) -> DihedralElement:
        if self.reflected:
            return self
        return DihedralElement(self.n, -self.rotation)


def rho(n: int) -> Perm:
    """
    >>> str(rho(4))
    '2,3,4,5,6,7,8,1'
    """
    return DihedralElement(n, 1).to_perm()


def omega(n: int) -> Perm:
    """
    >>> str(omega(4))
    '7,6,5,4,3,2,1,8'
    """
    return DihedralElement(n, 0, True).to_perm()


def dihedral_elements(n: int) -> list[DihedralElement]:
    return [DihedralElement(n, r, f) for f in (False, True) for r in range(2 * n)]


def dihedral_group(n: int) -> frozenset[Perm]:
    """The distinct permutations of the group (``4n`` of them once ``n >= 2``)."""
    return frozenset(g.to_perm() for g in dihedral_elements(n))


def crossing_witness(g: Perm, n: int | None = None, cap: int | None = None) -> DyckPath | None:
    """First path whose relabelling by ``g`` has crossing chords, or None."""
    n = g.n if n is None else n
    check_cap(n, cap)
    for w in iter_words(n):
        path = DyckPath(w)
        if not _noncrossing(conjugate_partners(g.images, path.partners)):
            return path
    return None


def preserves_paths(g: Perm, n: int | None = None, cap: int | None = None) -> bool:
    return crossing_witness(g, n, cap) is None


def action_orbit(path: DyckPath) -> frozenset[DyckPath]:
    """
    >>> sorted(p.word for p in action_orbit(DyckPath("ududud")))
    ['ududud', 'uududd']
    """
    out = set()
    for g in dihedral_group(path.n):
        img = rep_as_path(path, g)
        assert img is not None
        out.add(img)
    return frozenset(out)


def orbits(n: int, cap: int | None = None) -> list[frozenset[DyckPath]]:
    """The orbits partitioning ``D_n``, ordered by their first member."""
    check_cap(n, cap)
    seen = set()
    out = []
    for w in iter_words(n):
        p = DyckPath(w)
        if p not in seen:
            orb = action_orbit(p)
            seen |= orb
            out.append(orb)
    return out
