"""Permutations of ``[m]`` in one-line notation (1-based)."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidPerm


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidPerm(f"{imgs} is not a permutation of [1, {len(imgs)}]")

    @classmethod
    def identity(cls, m: int) -> Perm:
        return cls(tuple(range(1, m + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self):
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __str__(self):
        return format_ints(self.images)

    @property
    def n(self) -> int:
        """Half the degree (the Dyck size this permutation acts on)."""
        return len(self.images) // 2

    def inverse(self) -> Perm:
        return Perm(inverse_images(self.images))

    def compose(self, other: Perm) -> Perm:
        """``self ∘ other``, i.e. ``k -> self(other(k))``."""
        a = self.images
        return Perm(tuple(a[x - 1] for x in other.images))

    def __matmul__(self, other: Perm) -> Perm:
        return self.compose(other)


def inverse_images(images: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(images)
    for k, x in enumerate(images, 1):
        inv[x - 1] = k
    return tuple(inv)


def format_ints(xs: Iterable[int]) -> str:
    return ",".join(map(str, xs))


def parse_ints(text: str) -> tuple[int, ...]:
    """Parse ``"1,4,2,8"`` or, when every entry is a single digit, ``"1428"``."""
    text = text.strip()
    if not text:
        raise InvalidPerm("empty permutation")
    try:
        if "," in text:
            return tuple(int(tok) for tok in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidPerm(f"cannot parse integer list {text!r}") from None


def parse_perm(text: str) -> Perm:
    return Perm(parse_ints(text))


def all_perms(m: int) -> Iterator[tuple[int, ...]]:
    """Raw image tuples of every element of ``S_m`` in lexicographic order."""
    return itertools.permutations(range(1, m + 1))
