"""Superstring greedy as a greedy over a subset system of string pairs.

The ground set is every ordered pair ``(i, j)`` of member indices, weighted
by ``overlap(P[i], P[j])``.  A selection is independent when no two pairs
share a right end, no two share a left end, and the pairs contain no cycle.
The circular variant additionally admits one cycle through all members.
Maximal linear selections are Hamiltonian paths; maximal circular ones are
Hamiltonian cycles.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from superstrings.errors import NotIndependent, NotMaximal, ValidationFailed
from superstrings.exact import chain, close_cycle
from superstrings.strings import CircularString, InstanceSet, is_circular_superstring, is_linear_superstring, overlap

log = logging.getLogger(__name__)

LINEAR = "linear"
CIRCULAR = "circular"


@dataclass(frozen=True, order=True)
class PairElement:
    left: int
    right: int
    weight: int

    def to_json(self) -> dict:
        return {"left": self.left, "right": self.right, "weight": self.weight}


@dataclass(frozen=True)
class PairSelection:
    """A set of pairs over an instance of ``size`` members."""

    pairs: frozenset[PairElement]
    variant: str
    size: int

    def __post_init__(self) -> None:
        if self.variant not in (LINEAR, CIRCULAR):
            raise ValueError(f"variant must be {LINEAR!r} or {CIRCULAR!r}")
        object.__setattr__(self, "pairs", frozenset(self.pairs))

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self.pairs)

    def with_pair(self, e: PairElement) -> PairSelection:
        return PairSelection(self.pairs | {e}, self.variant, self.size)

    def to_json(self) -> dict:
        return {"variant": self.variant, "pairs": [p.to_json() for p in sorted(self.pairs)]}


def build_universe(P: InstanceSet) -> list[PairElement]:
    n = len(P)
    return [PairElement(i, j, overlap(P[i], P[j])) for i in range(n) for j in range(n)]


def _cycle_lengths(succ: dict[int, int]) -> list[int]:
    """Lengths of the cycles of a graph with out-degree at most one."""
    state: dict[int, int] = {}  # 1 = on the current walk, 2 = finished
    lengths = []
    for start in succ:
        if start in state:
            continue
        walk = []
        v = start
        while v is not None and v not in state:
            state[v] = 1
            walk.append(v)
            v = succ.get(v)
        if v is not None and state[v] == 1:
            lengths.append(len(walk) - walk.index(v))
        for u in walk:
            state[u] = 2
    return lengths


def is_independent(F: PairSelection) -> bool:
    lefts = [p.left for p in F.pairs]
    rights = [p.right for p in F.pairs]
    if len(set(rights)) != len(rights) or len(set(lefts)) != len(lefts):
        return False
    cycles = _cycle_lengths({p.left: p.right for p in F.pairs})
    if F.variant == LINEAR:
        return not cycles
    return all(r == F.size for r in cycles)


def is_maximal(F: PairSelection, universe: Iterable[PairElement]) -> bool:
    return all(e in F.pairs or not is_independent(F.with_pair(e)) for e in universe)


def generic_greedy(P: InstanceSet, variant: str) -> PairSelection:
    """Scan pairs by decreasing weight, then index, keeping each that preserves independence."""
    ordered = sorted(build_universe(P), key=lambda e: (-e.weight, e.left, e.right))
    F = PairSelection(frozenset(), variant, len(P))
    for e in ordered:
        cand = F.with_pair(e)
        if is_independent(cand):
            F = cand
    return F


def selection_to_superstring(F: PairSelection, P: InstanceSet) -> str | CircularString:
    """Decode a maximal independent selection into a superstring of ``P``.

    Linear selections give the chained merge along each path, paths taken in
    order of their smallest member index.  A circular selection (one full
    cycle) gives the cyclic chained merge started at member 0.
    """
    if F.size != len(P):
        raise ValueError(f"selection is over {F.size} members, instance has {len(P)}")
    if not is_independent(F):
        raise NotIndependent("selection violates the independence conditions")
    if not is_maximal(F, build_universe(P)):
        raise NotMaximal("selection can still be extended")
    succ = {p.left: p.right for p in F.pairs}
    expected = P.total_length - F.weight

    if F.variant == LINEAR:
        heads = set(range(len(P))) - set(succ.values())
        paths = []
        for h in heads:
            path = [h]
            while path[-1] in succ:
                path.append(succ[path[-1]])
            paths.append(path)
        paths.sort(key=min)
        out = "".join(chain([P[i] for i in path]) for path in paths)
        if len(out) != expected or not is_linear_superstring(out, P):
            log.warning("linear decoding of %s failed validation", F.to_json())
            raise ValidationFailed(f"decoded {out!r} is not a superstring of length {expected}")
        return out

    order = [0]
    while succ[order[-1]] != 0:
        order.append(succ[order[-1]])
    c = close_cycle([P[i] for i in order])
    if len(c) != expected or not is_circular_superstring(c, P):
        log.warning("circular decoding of %s failed validation", F.to_json())
        raise ValidationFailed(f"decoded {c} is not a circular superstring of length {expected}")
    return c
