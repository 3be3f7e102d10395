"""Linear and circular strings over a base alphabet and its barred mirror.

Strings are plain Python ``str`` values.  Base symbols are lowercase ASCII
letters and barred symbols are the matching uppercase letters, so
``bar("ab") == "AB"``.  The alphabet order puts every base symbol before
every barred symbol; comparing ``s.swapcase()`` under ASCII order realises
exactly that order, which is what :func:`sort_key` does.
"""
from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from superstrings.errors import EmptyInstance, InvalidInstance, InvalidString

__all__ = [
    "Alphabet",
    "DEFAULT_ALPHABET",
    "CircularString",
    "InstanceSet",
    "check_string",
    "circularize",
    "contains_circular",
    "is_circular_superstring",
    "is_linear_superstring",
    "is_substring",
    "merge",
    "minimal_rotation",
    "normalize",
    "overlap",
    "restrict",
    "sort_key",
]

BASE = "base"
BARRED = "barred"


def sort_key(w: str) -> str:
    """Key that orders strings lexicographically under the alphabet order."""
    return w.swapcase()


@dataclass(frozen=True)
class Alphabet:
    """The first ``size`` lowercase letters and their uppercase mirrors."""

    size: int = 26
    base_letters: str = field(init=False)
    barred_letters: str = field(init=False)

    def __post_init__(self) -> None:
        if not 1 <= self.size <= 26:
            raise ValueError(f"alphabet size must be in 1..26, got {self.size}")
        base = string.ascii_lowercase[: self.size]
        object.__setattr__(self, "base_letters", base)
        object.__setattr__(self, "barred_letters", base.upper())

    @property
    def letters(self) -> str:
        return self.base_letters + self.barred_letters

    def bar(self, symbol: str) -> str:
        if symbol not in self.base_letters:
            raise InvalidString(f"{symbol!r} is not a base symbol")
        return symbol.upper()

    def unbar(self, symbol: str) -> str:
        if symbol not in self.barred_letters:
            raise InvalidString(f"{symbol!r} is not a barred symbol")
        return symbol.lower()

    def side(self, symbol: str) -> str:
        if symbol in self.base_letters:
            return BASE
        if symbol in self.barred_letters:
            return BARRED
        raise InvalidString(f"{symbol!r} is not in the alphabet")

    def precedes(self, a: str, b: str) -> bool:
        return sort_key(a) < sort_key(b)


DEFAULT_ALPHABET = Alphabet()


def check_string(w: str, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    """Return ``w`` unchanged after checking it is a nonempty string over ``alphabet``."""
    if not isinstance(w, str):
        raise InvalidString(f"expected str, got {type(w).__name__}")
    if not w:
        raise InvalidString("empty strings are not allowed")
    letters = alphabet.letters
    bad = sorted({ch for ch in w if ch not in letters})
    if bad:
        raise InvalidString(f"{w!r} contains symbols outside the alphabet: {''.join(bad)!r}")
    return w


def _prefix_function(t: str) -> list[int]:
    pi = [0] * len(t)
    for i in range(1, len(t)):
        k = pi[i - 1]
        while k and t[i] != t[k]:
            k = pi[k - 1]
        if t[i] == t[k]:
            k += 1
        pi[i] = k
    return pi


@lru_cache(maxsize=1 << 16)
def overlap(x: str, y: str) -> int:
    """Length of the longest proper suffix of ``x`` that is a proper prefix of ``y``.

    Computed from the failure function of ``y + sentinel + x``; borders longer
    than ``min(|x|, |y|) - 1`` are skipped by walking down the border chain.
    """
    cap = min(len(x), len(y)) - 1
    if cap <= 0:
        return 0
    pi = _prefix_function(y + "\0" + x)
    b = pi[-1]
    while b > cap:
        b = pi[b - 1]
    return b


def merge(x: str, y: str) -> str:
    return x + y[overlap(x, y):]


def is_substring(s: str, w: str) -> bool:
    return s in w


def contains_circular(c: CircularString | str, s: str) -> bool:
    """True iff ``s`` occurs in the infinite unrolling of ``c``."""
    base = c.canonical if isinstance(c, CircularString) else c
    reps = -(-len(s) // len(base)) + 1
    return s in base * reps


def is_linear_superstring(w: str, P: Iterable[str]) -> bool:
    return all(s in w for s in P)


def is_circular_superstring(c: CircularString, P: Iterable[str]) -> bool:
    return all(contains_circular(c, s) for s in P)


def minimal_rotation(w: str) -> str:
    """Least rotation of ``w`` under the alphabet order (Booth's algorithm)."""
    if not w:
        return w
    key = sort_key(w)
    s = key + key
    n = len(w)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            # here i == -1
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return w[k:] + w[:k]


@dataclass(frozen=True)
class CircularString:
    """A rotation class of a nonempty string, stored as its least rotation.

    Any rotation may be passed to the constructor:

    >>> CircularString("bab") == CircularString("abb")
    True
    >>> CircularString("bAaB").canonical
    'aBbA'
    """

    canonical: str

    def __post_init__(self) -> None:
        check_string(self.canonical)
        object.__setattr__(self, "canonical", minimal_rotation(self.canonical))

    def __len__(self) -> int:
        return len(self.canonical)

    def __str__(self) -> str:
        return f"<{self.canonical}>"

    def rotations(self) -> Iterator[str]:
        w = self.canonical
        for i in range(len(w)):
            yield w[i:] + w[:i]


def circularize(w: str) -> CircularString:
    """Close ``w`` onto itself, dropping its self-overlap."""
    return CircularString(w[: len(w) - overlap(w, w)])


def restrict(w: str, side: str) -> str:
    """Subsequence of ``w`` over the base (``"base"``) or barred (``"barred"``) symbols.

    The result may be the empty string.
    """
    if side == BASE:
        return "".join(ch for ch in w if ch.islower())
    if side == BARRED:
        return "".join(ch for ch in w if ch.isupper())
    raise ValueError(f"side must be {BASE!r} or {BARRED!r}, got {side!r}")


@dataclass(frozen=True)
class InstanceSet:
    """A nonempty, duplicate-free, factor-free set of strings.

    Members are kept as a tuple sorted under the alphabet order, so the
    member indices used by the subset-system formulation are stable.
    Build one from arbitrary input with :func:`normalize`.
    """

    strings: tuple[str, ...]

    def __post_init__(self) -> None:
        members = tuple(self.strings)
        if not members:
            raise EmptyInstance("an instance needs at least one string")
        for w in members:
            check_string(w)
        if len(set(members)) != len(members):
            raise InvalidInstance("instance contains duplicate strings")
        for a in members:
            for b in members:
                if a != b and a in b:
                    raise InvalidInstance(f"{a!r} is a substring of {b!r}")
        object.__setattr__(self, "strings", tuple(sorted(members, key=sort_key)))

    @property
    def total_length(self) -> int:
        return sum(len(w) for w in self.strings)

    def __iter__(self) -> Iterator[str]:
        return iter(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __contains__(self, w: object) -> bool:
        return w in self.strings

    def __getitem__(self, i: int) -> str:
        return self.strings[i]


def normalize(raw: Iterable[str]) -> InstanceSet:
    """Drop duplicates and members that occur inside another member."""
    distinct = set(raw)
    if not distinct:
        raise EmptyInstance("cannot normalize an empty collection")
    for w in distinct:
        check_string(w)
    kept = [a for a in distinct if not any(a != b and a in b for b in distinct)]
    return InstanceSet(tuple(kept))
