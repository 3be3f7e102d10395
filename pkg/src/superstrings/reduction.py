"""Reduction from linear to circular superstrings through a barred copy.

An instance ``P`` over the base letters maps to ``P | bar(P)``.  Any circular
superstring ``c`` of the doubled set maps back to a linear superstring of
``P`` via :func:`g_extract`: take the least rotation of ``c`` that starts with
a base symbol and ends with a barred one, split it into its base and barred
subsequences, keep the shorter (base side on ties) and un-bar it.

The ``check_lemma_*`` functions evaluate the properties that make
this map approximation- and greedy-preserving on concrete instances.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from superstrings.errors import MixedAlphabet, MonochromaticCircular, PreconditionViolated
from superstrings.exact import DEFAULT_BOUND, exact_circular, exact_linear
from superstrings.greedy import enumerate_greedy_circular, enumerate_greedy_linear
from superstrings.strings import (
    BARRED,
    BASE,
    CircularString,
    InstanceSet,
    is_circular_superstring,
    is_linear_superstring,
    restrict,
    sort_key,
)

DEGENERATE_COMPRESSION = "DegenerateCompression"


def bar(w: str) -> str:
    if not (w.isascii() and w.isalpha() and w.islower()):
        raise MixedAlphabet(f"{w!r} is not over the base letters")
    return w.upper()


def unbar(w: str) -> str:
    if not (w.isascii() and w.isalpha() and w.isupper()):
        raise MixedAlphabet(f"{w!r} is not over the barred letters")
    return w.lower()


@dataclass(frozen=True)
class ReducedInstance:
    original: InstanceSet
    doubled: InstanceSet
    barred_part: InstanceSet


def f_reduce(P: InstanceSet) -> ReducedInstance:
    barred = InstanceSet(tuple(bar(w) for w in P))
    doubled = InstanceSet(P.strings + barred.strings)
    return ReducedInstance(P, doubled, barred)


def canonical_linearization(c: CircularString) -> str:
    """Least rotation of ``c`` that starts with a base and ends with a barred symbol."""
    candidates = [r for r in c.rotations() if r[0].islower() and r[-1].isupper()]
    if not candidates:
        raise MonochromaticCircular(f"{c} needs both base and barred symbols")
    return min(candidates, key=sort_key)


def g_extract(c: CircularString) -> str:
    lc = canonical_linearization(c)
    base, barred = restrict(lc, BASE), restrict(lc, BARRED)
    if len(base) <= len(barred):
        return base
    return unbar(barred)


def check_lemma_g(P: InstanceSet, c: CircularString) -> bool:
    """g(c) is a linear superstring of P no longer than half of c."""
    doubled = f_reduce(P).doubled
    if not is_circular_superstring(c, doubled):
        raise PreconditionViolated(f"{c} is not a circular superstring of the doubled instance")
    g = g_extract(c)
    return is_linear_superstring(g, P) and 2 * len(g) <= len(c)


def check_lemma_equal(P: InstanceSet, bound: int = DEFAULT_BOUND) -> bool:
    """Twice the shortest linear superstring of P equals the shortest circular one of P | bar(P)."""
    doubled = f_reduce(P).doubled
    return 2 * exact_linear(P, bound).opt_length == exact_circular(doubled, bound).opt_length


def _r_measure(opt: int, val: int) -> Fraction:
    return max(Fraction(opt, val), Fraction(val, opt))


def _json_fraction(q: Optional[Fraction]) -> Optional[dict]:
    return None if q is None else {"num": q.numerator, "den": q.denominator}


@dataclass(frozen=True)
class ReductionReport:
    instance: tuple[str, ...]
    c: CircularString
    g_of_c: str
    w_opt_len: int
    c_opt_len: int
    length_ratio_left: Fraction
    length_ratio_right: Fraction
    compression_ratio_left: Optional[Fraction]
    compression_ratio_right: Optional[Fraction]
    r_measure_A: Fraction
    r_measure_B: Fraction
    strict_ok: bool
    flags: tuple[str, ...] = field(default=())

    @property
    def degenerate(self) -> bool:
        return DEGENERATE_COMPRESSION in self.flags

    def to_json(self) -> dict:
        return {
            "instance": list(self.instance),
            "c": self.c.canonical,
            "g_of_c": self.g_of_c,
            "w_opt_len": self.w_opt_len,
            "c_opt_len": self.c_opt_len,
            "ratios": {
                "length_left": _json_fraction(self.length_ratio_left),
                "length_right": _json_fraction(self.length_ratio_right),
                "compression_left": _json_fraction(self.compression_ratio_left),
                "compression_right": _json_fraction(self.compression_ratio_right),
                "r_measure_A": _json_fraction(self.r_measure_A),
                "r_measure_B": _json_fraction(self.r_measure_B),
            },
            "strict_ok": self.strict_ok,
            "flags": list(self.flags),
        }


def check_lemma_ineq(
    P: InstanceSet,
    c: CircularString,
    *,
    w_opt_len: Optional[int] = None,
    c_opt_len: Optional[int] = None,
    bound: int = DEFAULT_BOUND,
) -> ReductionReport:
    """Length and compression ratios of ``g(c)`` against those of ``c``, as exact fractions.

    Optimal lengths are computed unless supplied.  When a compression ratio
    has a non-positive denominator the compression inequality is skipped and
    the report carries the ``DegenerateCompression`` flag.
    """
    reduced = f_reduce(P)
    if not is_circular_superstring(c, reduced.doubled):
        raise PreconditionViolated(f"{c} is not a circular superstring of the doubled instance")
    if w_opt_len is None:
        w_opt_len = exact_linear(P, bound).opt_length
    if c_opt_len is None:
        c_opt_len = exact_circular(reduced.doubled, bound).opt_length
    g = g_extract(c)
    norm = P.total_length
    norm2 = reduced.doubled.total_length

    length_left = Fraction(len(g), w_opt_len)
    length_right = Fraction(len(c), c_opt_len)
    ok = length_left <= length_right

    flags = []
    comp_left = comp_right = None
    if norm - len(g) <= 0 or norm2 - len(c) <= 0:
        flags.append(DEGENERATE_COMPRESSION)
    else:
        comp_left = Fraction(norm - w_opt_len, norm - len(g))
        comp_right = Fraction(norm2 - c_opt_len, norm2 - len(c))
        ok = ok and comp_left <= comp_right

    return ReductionReport(
        instance=P.strings,
        c=c,
        g_of_c=g,
        w_opt_len=w_opt_len,
        c_opt_len=c_opt_len,
        length_ratio_left=length_left,
        length_ratio_right=length_right,
        compression_ratio_left=comp_left,
        compression_ratio_right=comp_right,
        r_measure_A=_r_measure(w_opt_len, len(g)),
        r_measure_B=_r_measure(c_opt_len, len(c)),
        strict_ok=ok,
        flags=tuple(flags),
    )


def lemma_greedy_violations(
    P: InstanceSet,
    max_set_size: int = 8,
    *,
    circular: Optional[Iterable[CircularString]] = None,
    linear: Optional[frozenset[str]] = None,
) -> list[tuple[CircularString, str]]:
    """Greedy circular superstrings of the doubled set whose image under g is not greedy for P.

    Precomputed enumerations may be passed in to avoid recomputing them.
    """
    doubled = f_reduce(P).doubled
    if circular is None:
        circular = enumerate_greedy_circular(doubled, max_set_size)
    if linear is None:
        linear = enumerate_greedy_linear(P, max_set_size)
    bad = []
    for c in sorted(circular, key=lambda c: sort_key(c.canonical)):
        g = g_extract(c)
        if g not in linear:
            bad.append((c, g))
    return bad


def check_lemma_greedy(P: InstanceSet, max_set_size: int = 8) -> bool:
    """Every greedy circular superstring of P | bar(P) maps under g to a greedy linear superstring of P."""
    return not lemma_greedy_violations(P, max_set_size)
