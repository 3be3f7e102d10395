"""Greedy merge algorithms for the linear and circular superstring problems."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable

from superstrings.errors import InstanceTooLarge
from superstrings.strings import CircularString, InstanceSet, circularize, overlap, sort_key

log = logging.getLogger(__name__)

__all__ = [
    "MergeStep",
    "MergeTrace",
    "TiePolicy",
    "enumerate_greedy_circular",
    "enumerate_greedy_linear",
    "greedy_circular",
    "greedy_linear",
    "replay",
]


@dataclass(frozen=True)
class MergeStep:
    left: str
    right: str
    overlap: int
    # members of the working set swallowed by the merged string
    absorbed: tuple[str, ...] = ()

    @property
    def merged(self) -> str:
        return self.left + self.right[self.overlap:]

    def to_json(self) -> dict:
        d = {"left": self.left, "right": self.right, "overlap": self.overlap}
        if self.absorbed:
            d["absorbed"] = list(self.absorbed)
        return d


@dataclass(frozen=True)
class MergeTrace:
    steps: tuple[MergeStep, ...]
    result: str

    @property
    def overlaps(self) -> list[int]:
        return [s.overlap for s in self.steps]

    @property
    def absorbed(self) -> bool:
        """True when some merge swallowed a third member of the working set."""
        return any(s.absorbed for s in self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


@dataclass(frozen=True)
class TiePolicy:
    """How the greedy choice is made among pairs of equal maximal overlap.

    ``lex`` takes the pair with the smallest left string, then the smallest
    right string.  ``random`` draws uniformly from a ``random.Random(seed)``
    stream.  Exploring every tie is done by :func:`enumerate_greedy_linear`.
    """

    rule: str = "lex"
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.rule not in ("lex", "random"):
            raise ValueError(f"unknown tie rule {self.rule!r}")
        if self.rule == "random" and self.seed is None:
            raise ValueError("random tie policy needs a seed")

    @classmethod
    def lex(cls) -> TiePolicy:
        return cls("lex")

    @classmethod
    def random(cls, seed: int) -> TiePolicy:
        return cls("random", seed)

    def __str__(self) -> str:
        return "lex" if self.rule == "lex" else f"rand:{self.seed}"


def _max_pairs(working: Iterable[str]) -> tuple[int, list[tuple[str, str]]]:
    members = sorted(working, key=sort_key)
    best = -1
    pairs: list[tuple[str, str]] = []
    for i, u in enumerate(members):
        for j, v in enumerate(members):
            if i == j:
                continue
            k = overlap(u, v)
            if k > best:
                best, pairs = k, [(u, v)]
            elif k == best:
                pairs.append((u, v))
    return best, pairs


def _apply(working: frozenset[str], u: str, v: str, k: int) -> tuple[frozenset[str], tuple[str, ...]]:
    merged = u + v[k:]
    rest = working - {u, v}
    absorbed = tuple(sorted((z for z in rest if z in merged), key=sort_key))
    if absorbed:
        log.info("merge %r+%r absorbed %s", u, v, absorbed)
    return (rest - set(absorbed)) | {merged}, absorbed


def greedy_linear(P: InstanceSet, tie: TiePolicy | None = None) -> tuple[str, MergeTrace]:
    """Repeatedly merge the pair of distinct members with the largest overlap.

    Returns the final string and the merge trace.  A singleton instance
    returns its only member with an empty trace.
    """
    tie = tie or TiePolicy.lex()
    rng = random.Random(tie.seed) if tie.rule == "random" else None
    working = frozenset(P)
    steps = []
    while len(working) > 1:
        k, pairs = _max_pairs(working)
        u, v = rng.choice(pairs) if rng else pairs[0]
        working, absorbed = _apply(working, u, v, k)
        steps.append(MergeStep(u, v, k, absorbed))
    (result,) = working
    return result, MergeTrace(tuple(steps), result)


def greedy_circular(P: InstanceSet, tie: TiePolicy | None = None) -> tuple[CircularString, MergeTrace]:
    w, trace = greedy_linear(P, tie)
    return circularize(w), trace


def replay(P: Iterable[str], steps: Iterable[MergeStep]) -> str:
    """Re-run a trace from the initial set and return the final string."""
    working = frozenset(P)
    for s in steps:
        if s.left not in working or s.right not in working or s.left == s.right:
            raise ValueError(f"step {s} does not apply to working set {sorted(working)}")
        if overlap(s.left, s.right) != s.overlap:
            raise ValueError(f"step {s} records a wrong overlap")
        working, _ = _apply(working, s.left, s.right, s.overlap)
    if len(working) != 1:
        raise ValueError("trace does not reduce the set to a single string")
    (result,) = working
    return result


def enumerate_greedy_linear(P: InstanceSet, max_set_size: int = 8, *, zero_shortcut: bool = True) -> frozenset[str]:
    """Every result the greedy algorithm can reach under some tie-breaking.

    Branches on each maximal-overlap pair, memoised on the working set.
    Once the maximal overlap is 0 on a factor-free working set, every later
    merge is a plain concatenation and no containment can appear, so the
    reachable results are exactly the concatenations of all orderings; with
    ``zero_shortcut`` those are produced directly instead of by branching.
    """
    if len(P) > max_set_size:
        raise InstanceTooLarge(f"{len(P)} strings exceeds enumeration bound {max_set_size}")
    memo: dict[frozenset[str], frozenset[str]] = {}

    def explore(working: frozenset[str]) -> frozenset[str]:
        if len(working) == 1:
            return working
        hit = memo.get(working)
        if hit is not None:
            return hit
        k, pairs = _max_pairs(working)
        if k == 0 and zero_shortcut:
            out = frozenset("".join(p) for p in permutations(working))
        else:
            out = frozenset().union(*(explore(_apply(working, u, v, k)[0]) for u, v in pairs))
        memo[working] = out
        return out

    return explore(frozenset(P))


def enumerate_greedy_circular(P: InstanceSet, max_set_size: int = 8) -> frozenset[CircularString]:
    return frozenset(circularize(w) for w in enumerate_greedy_linear(P, max_set_size))
