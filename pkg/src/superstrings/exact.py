"""Exact shortest linear and circular superstrings for small instances.

``exact_linear`` is a bitmask DP over (visited subset, last string).
``exact_circular`` minimises over cyclic orders of the members and checks each
candidate by unrolling before accepting it.  The ``oracle_*`` functions are
independent brute-force searches over all strings by increasing length and
exist to cross-check the solvers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence, Union

from superstrings.errors import InstanceTooLarge, NoSolutionWithinBound, NoValidCandidate
from superstrings.strings import (
    CircularString,
    InstanceSet,
    circularize,
    is_circular_superstring,
    is_linear_superstring,
    overlap,
    sort_key,
)

DEFAULT_BOUND = 12
# cyclic orders are enumerated directly up to this size, DP above it
ENUMERATION_LIMIT = 9


@dataclass(frozen=True)
class ExactResult:
    optimum: Union[str, CircularString]
    opt_length: int
    order_witness: tuple[str, ...]
    validated: bool

    def to_json(self) -> dict:
        text = self.optimum.canonical if isinstance(self.optimum, CircularString) else self.optimum
        return {
            "length": self.opt_length,
            "string_or_rotation": text,
            "order_witness": list(self.order_witness),
            "validated": self.validated,
        }


def chain(order: Sequence[str]) -> str:
    """Concatenate ``order`` collapsing the overlap of each consecutive pair."""
    out = order[0]
    for a, b in zip(order, order[1:]):
        out += b[overlap(a, b):]
    return out


def close_cycle(order: Sequence[str]) -> CircularString:
    """Circular string of the chained order with the closing overlap removed."""
    if len(order) == 1:
        return circularize(order[0])
    w = chain(order)
    return CircularString(w[: len(w) - overlap(order[-1], order[0])])


def _check_size(P: InstanceSet, bound: int) -> None:
    if len(P) > bound:
        raise InstanceTooLarge(f"{len(P)} strings exceeds exact bound {bound}")


def exact_linear(P: InstanceSet, bound: int = DEFAULT_BOUND) -> ExactResult:
    _check_size(P, bound)
    s = P.strings
    n = len(s)
    ov = [[overlap(a, b) for b in s] for a in s]
    full = (1 << n) - 1
    # best[mask][last] = length of the shortest chained merge of mask ending in last
    INF = float("inf")
    best = [[INF] * n for _ in range(1 << n)]
    parent = [[-1] * n for _ in range(1 << n)]
    for i in range(n):
        best[1 << i][i] = len(s[i])
    for mask in range(1, full + 1):
        row = best[mask]
        for last in range(n):
            cur = row[last]
            if cur == INF:
                continue
            for nxt in range(n):
                bit = 1 << nxt
                if mask & bit:
                    continue
                cand = cur + len(s[nxt]) - ov[last][nxt]
                if cand < best[mask | bit][nxt]:
                    best[mask | bit][nxt] = cand
                    parent[mask | bit][nxt] = last
    last = min(range(n), key=lambda i: best[full][i])
    opt = best[full][last]
    order = []
    mask = full
    while last != -1:
        order.append(last)
        prev = parent[mask][last]
        mask ^= 1 << last
        last = prev
    witness = tuple(s[i] for i in reversed(order))
    w = chain(witness)
    if len(w) != opt or not is_linear_superstring(w, P):
        raise NoValidCandidate(f"linear witness {w!r} failed validation")
    return ExactResult(w, len(w), witness, True)


def _cyclic_cost(order: Sequence[int], lens: Sequence[int], ov) -> int:
    total = sum(lens[i] for i in order)
    for a, b in zip(order, order[1:] + order[:1]):
        total -= ov[a][b]
    return total


def _circular_by_enumeration(P: InstanceSet) -> ExactResult:
    s = P.strings
    n = len(s)
    ov = [[overlap(a, b) for b in s] for a in s]
    lens = [len(w) for w in s]
    costed = sorted(
        (_cyclic_cost((0,) + rest, lens, ov), (0,) + rest)
        for rest in itertools.permutations(range(1, n))
    )
    for cost, group in itertools.groupby(costed, key=lambda t: t[0]):
        valid = []
        for _, order in group:
            words = tuple(s[i] for i in order)
            c = close_cycle(words)
            if len(c) == cost and is_circular_superstring(c, P):
                valid.append((sort_key(c.canonical), c, words))
        if valid:
            _, c, words = min(valid)
            return ExactResult(c, len(c), words, True)
    raise NoValidCandidate(f"no cyclic order of {list(s)} gives a valid circular superstring")


def _circular_by_dp(P: InstanceSet) -> ExactResult:
    s = P.strings
    n = len(s)
    ov = [[overlap(a, b) for b in s] for a in s]
    full = (1 << n) - 1
    INF = float("inf")
    # paths start at member 0; best[mask][last] excludes the closing edge
    best = [[INF] * n for _ in range(1 << n)]
    parent = [[-1] * n for _ in range(1 << n)]
    best[1][0] = len(s[0])
    for mask in range(1, full + 1, 2):
        for last in range(n):
            cur = best[mask][last]
            if cur == INF:
                continue
            for nxt in range(1, n):
                bit = 1 << nxt
                if mask & bit:
                    continue
                cand = cur + len(s[nxt]) - ov[last][nxt]
                if cand < best[mask | bit][nxt]:
                    best[mask | bit][nxt] = cand
                    parent[mask | bit][nxt] = last
    last = min(range(1, n), key=lambda i: best[full][i] - ov[i][0])
    cost = best[full][last] - ov[last][0]
    order = []
    mask = full
    while last != -1:
        order.append(last)
        prev = parent[mask][last]
        mask ^= 1 << last
        last = prev
    words = tuple(s[i] for i in reversed(order))
    c = close_cycle(words)
    if len(c) != cost or not is_circular_superstring(c, P):
        raise NoValidCandidate(f"optimal cyclic order {list(words)} failed validation")
    return ExactResult(c, len(c), words, True)


def exact_circular(P: InstanceSet, bound: int = DEFAULT_BOUND) -> ExactResult:
    _check_size(P, bound)
    if len(P) == 1:
        (w,) = P.strings
        c = circularize(w)
        return ExactResult(c, len(c), (w,), is_circular_superstring(c, P))
    if len(P) <= ENUMERATION_LIMIT:
        return _circular_by_enumeration(P)
    return _circular_by_dp(P)


def _symbols(P: InstanceSet) -> list[str]:
    return sorted({ch for w in P for ch in w}, key=sort_key)


def oracle_linear(P: InstanceSet, max_len: int) -> str:
    """Least shortest linear superstring found by exhaustive enumeration."""
    symbols = _symbols(P)
    for length in range(max(len(w) for w in P), max_len + 1):
        for letters in itertools.product(symbols, repeat=length):
            w = "".join(letters)
            if all(p in w for p in P):
                return w
    raise NoSolutionWithinBound(f"no linear superstring of length <= {max_len}")


def oracle_circular(P: InstanceSet, max_len: int) -> CircularString:
    """Least shortest circular superstring found by exhaustive enumeration.

    The valid strings of a given length are closed under rotation, so the
    first one met in lexicographic order is already a least rotation.
    """
    symbols = _symbols(P)
    longest = max(len(w) for w in P)
    for length in range(1, max_len + 1):
        reps = -(-longest // length) + 1
        for letters in itertools.product(symbols, repeat=length):
            w = "".join(letters)
            unrolled = w * reps
            if all(p in unrolled for p in P):
                return CircularString(w)
    raise NoSolutionWithinBound(f"no circular superstring of length <= {max_len}")
