"""The permutation-generated map on Dyck paths and permuted chord diagrams.

For ``sigma`` in ``S_2n`` and a path ``D``, step ``k`` of ``sigma(D)`` is an
up step exactly when the tunnel partner of step ``sigma_k`` of ``D`` has not
been read among ``sigma_1, ..., sigma_k``.
"""
from __future__ import annotations

from typing import Sequence

from .dyck import DOWN, UP, DyckPath, Pairing, _noncrossing
from .errors import HypothesisViolated, IndexOutOfRange, SizeMismatch
from .perm import Perm, inverse_images


def _check_sizes(sigma: Perm, path: DyckPath) -> None:
    if len(sigma.images) != len(path.word):
        raise SizeMismatch(
            f"permutation of degree {len(sigma.images)} applied to a path of length {len(path.word)}"
        )


def sigma_word(images: Sequence[int], partners: Sequence[int]) -> str:
    """Kernel of :func:`sigma_path` on raw tuples (no validation).

    Uses a membership bitmap of the prefix read so far, O(n) per call.
    """
    seen = [False] * (len(images) + 1)
    out = []
    for s in images:
        seen[s] = True
        out.append(DOWN if seen[partners[s - 1]] else UP)
    return "".join(out)


def sigma_path(sigma: Perm, path: DyckPath) -> DyckPath:
    """The path generated from ``path`` by reading its steps in ``sigma`` order.

    >>> sigma_path(Perm((1, 4, 2, 8, 5, 7, 6, 3)), DyckPath("uuddudud")).word
    'uduuuddd'
    """
    _check_sizes(sigma, path)
    return DyckPath(sigma_word(sigma.images, path.partners))


def prefix_set(sigma: Perm, k: int) -> frozenset[int]:
    if not 1 <= k <= len(sigma.images):
        raise IndexOutOfRange(f"prefix length {k} outside [1, {len(sigma.images)}]")
    return frozenset(sigma.images[:k])


def conjugate_partners(images: Sequence[int], partners: Sequence[int]) -> tuple[int, ...]:
    """Raw ``sigma ∘ tau ∘ sigma^-1``."""
    out = [0] * len(images)
    for k, s in enumerate(images):
        out[s - 1] = images[partners[k] - 1]
    return tuple(out)


def permuted_rep(path: DyckPath, sigma: Perm) -> Pairing:
    """Relabel the chord diagram of ``path`` by ``sigma``.

    The result pairs ``sigma(k)`` with ``sigma(l)`` whenever ``k`` and ``l``
    are tunnel partners in ``path``.  It need not be non-crossing.
    """
    _check_sizes(sigma, path)
    return Pairing(conjugate_partners(sigma.images, path.partners))


def rep_as_path(path: DyckPath, sigma: Perm) -> DyckPath | None:
    """The path whose chord diagram is ``permuted_rep(path, sigma)``, or None.

    When present it coincides with ``sigma_path(sigma.inverse(), path)``.
    """
    _check_sizes(sigma, path)
    t = conjugate_partners(sigma.images, path.partners)
    if not _noncrossing(t):
        return None
    return DyckPath("".join(UP if i < j else DOWN for i, j in enumerate(t, 1)))


def compose_action_check(path: DyckPath, lam: Perm, mu: Perm) -> bool:
    """Check ``D^(lam ∘ mu) == (D^mu)^lam`` for a path ``D`` with ``D^mu`` a path."""
    inner = rep_as_path(path, mu)
    if inner is None:
        raise HypothesisViolated(f"relabelling {path} by {mu} does not give a path")
    return permuted_rep(path, lam @ mu) == permuted_rep(inner, lam)


def sigma_inverse_path(sigma: Perm, path: DyckPath) -> DyckPath:
    """``sigma^-1(path)``, used to cross-check :func:`rep_as_path`."""
    _check_sizes(sigma, path)
    return DyckPath(sigma_word(inverse_images(sigma.images), path.partners))

