"""Dyck paths, tunnelings and circular blocks.

Positions are 1-based throughout.  A path of size ``n`` is stored as its
Dyck word, a string over ``u``/``d`` of length ``2n``.  A tunneling is a
fixed-point-free involution on ``[2n]`` stored as a tuple whose entry
``i - 1`` is the partner of ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

from .errors import (
    CapExceeded,
    CrossingPairing,
    IndexOutOfRange,
    InvalidPairing,
    NonAlphabet,
    OddLength,
    PrefixViolation,
    Unbalanced,
)

UP = "u"
DOWN = "d"

# Largest n enumerated by default; Cat_12 = 208012.
DEFAULT_CAP = 12

_ALPHABET = {"u": UP, "U": UP, "(": UP, "d": DOWN, "D": DOWN, ")": DOWN}


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self):
        _check_word(self.word)

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)

    def step(self, k: int) -> str:
        if not 1 <= k <= len(self.word):
            raise IndexOutOfRange(f"step {k} outside [1, {len(self.word)}]")
        return self.word[k - 1]

    @cached_property
    def partners(self) -> tuple[int, ...]:
        """Tunnel partners as a raw tuple (entry ``i - 1`` is the partner of ``i``)."""
        return _match(self.word)


@dataclass(frozen=True)
class Pairing:
    """A fixed-point-free involution on ``[2n]``."""

    partner: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.partner)
        object.__setattr__(self, "partner", p)
        m = len(p)
        if m == 0 or m % 2:
            raise InvalidPairing(f"a pairing needs an even, positive number of points, got {m}")
        for i, j in enumerate(p, 1):
            if not 1 <= j <= m:
                raise InvalidPairing(f"partner {j} of {i} outside [1, {m}]")
            if j == i:
                raise InvalidPairing(f"{i} is a fixed point")
            if p[j - 1] != i:
                raise InvalidPairing(f"not an involution at {i}")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    def __call__(self, i: int) -> int:
        return self.partner[i - 1]

    def __len__(self):
        return len(self.partner)

    def __str__(self):
        return ",".join(map(str, self.partner))

    def chords(self) -> list[tuple[int, int]]:
        """Chords ``(i, j)`` with ``i < j``, ordered by ``i``."""
        return [(i, j) for i, j in enumerate(self.partner, 1) if i < j]


@dataclass(frozen=True)
class Block:
    """Circularly consecutive labels ``start, start + 1, ...`` on ``[modulus]``."""

    start: int
    size: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.start <= self.modulus or not 0 <= self.size <= self.modulus:
            raise IndexOutOfRange(f"bad block {self.start}+{self.size} on [{self.modulus}]")

    def members(self) -> tuple[int, ...]:
        return tuple(wrap(self.start + i, self.modulus) for i in range(self.size))

    def __contains__(self, x):
        return (x - self.start) % self.modulus < self.size


def wrap(x: int, m: int) -> int:
    """Reduce ``x`` modulo ``m`` into ``[1, m]``."""
    return (x - 1) % m + 1


def _check_word(word: str) -> None:
    if not isinstance(word, str):
        raise NonAlphabet(f"expected a string, got {type(word).__name__}")
    for ch in word:
        if ch not in (UP, DOWN):
            raise NonAlphabet(f"invalid step symbol {ch!r}")
    if len(word) == 0 or len(word) % 2:
        raise OddLength(f"a Dyck word has positive even length, got {len(word)}")
    ups = word.count(UP)
    if 2 * ups != len(word):
        raise Unbalanced(f"{ups} up steps and {len(word) - ups} down steps")
    h = 0
    for k, ch in enumerate(word, 1):
        h += 1 if ch == UP else -1
        if h < 0:
            raise PrefixViolation(f"path drops below the axis at step {k}")


def _match(word: str) -> tuple[int, ...]:
    partner = [0] * len(word)
    stack = []
    for k, ch in enumerate(word, 1):
        if ch == UP:
            stack.append(k)
        else:
            j = stack.pop()
            partner[j - 1] = k
            partner[k - 1] = j
    return tuple(partner)


def parse_word(text: str) -> DyckPath:
    """Parse a Dyck word.

    Accepts ``u``/``U``/``(`` for up steps and ``d``/``D``/``)`` for down
    steps; surrounding whitespace is ignored.

    >>> parse_word("(()())").word
    'uududd'
    """
    out = []
    for ch in text.strip():
        try:
            out.append(_ALPHABET[ch])
        except KeyError:
            raise NonAlphabet(f"invalid step symbol {ch!r}") from None
    return DyckPath("".join(out))


def tunneling(path: DyckPath) -> Pairing:
    """The tunnel pairing of ``path``.

    >>> str(tunneling(DyckPath("uuduuddd")))
    '8,3,2,7,6,5,4,1'
    """
    return Pairing(path.partners)


def _noncrossing(partner: Sequence[int]) -> bool:
    stack = []
    for i, j in enumerate(partner, 1):
        if j > i:
            stack.append(i)
        elif not stack or stack.pop() != j:
            return False
    return True


def is_noncrossing(t: Pairing) -> bool:
    """True iff no two chords of ``t`` cross when drawn on a circle."""
    return _noncrossing(t.partner)


def path_from_tunneling(t: Pairing) -> DyckPath:
    if not _noncrossing(t.partner):
        raise CrossingPairing(f"pairing {t} has crossing chords")
    return DyckPath("".join(UP if i < j else DOWN for i, j in enumerate(t.partner, 1)))


def height(path: DyckPath, k: int) -> int:
    """Height of ``path`` after ``k`` steps (``k = 0`` gives 0)."""
    if not 0 <= k <= len(path.word):
        raise IndexOutOfRange(f"height index {k} outside [0, {len(path.word)}]")
    return k - 2 * path.word.count(DOWN, 0, k)


def heights(path: DyckPath) -> list[int]:
    """``[h_0, h_1, ..., h_2n]``."""
    out = [0]
    for ch in path.word:
        out.append(out[-1] + (1 if ch == UP else -1))
    return out


def up_positions(path: DyckPath) -> tuple[int, ...]:
    return tuple(k for k, ch in enumerate(path.word, 1) if ch == UP)


def down_positions(path: DyckPath) -> tuple[int, ...]:
    return tuple(k for k, ch in enumerate(path.word, 1) if ch == DOWN)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")


def iter_words(n: int) -> Iterator[str]:
    """Dyck words of size ``n`` in lexicographic order with ``u < d``."""
    buf = [""] * (2 * n)

    def rec(pos, ups, h):
        if pos == 2 * n:
            yield "".join(buf)
            return
        if ups < n:
            buf[pos] = UP
            yield from rec(pos + 1, ups + 1, h + 1)
        if h > 0:
            buf[pos] = DOWN
            yield from rec(pos + 1, ups, h - 1)

    yield from rec(0, 0, 0)


def enumerate_paths(n: int, cap: int | None = None) -> Iterator[DyckPath]:
    """Stream every path of size ``n`` in lexicographic order (``u < d``).

    >>> [p.word for p in enumerate_paths(3)]
    ['uuuddd', 'uududd', 'uuddud', 'uduudd', 'ududud']
    """
    if n < 1:
        raise IndexOutOfRange(f"n must be positive, got {n}")
    check_cap(n, cap)
    for w in iter_words(n):
        yield DyckPath(w)
