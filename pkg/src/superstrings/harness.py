"""Instance generation, greedy/optimal ratio hunts and composite verification."""
from __future__ import annotations

import itertools
import json
import logging
import random
import string
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from superstrings.errors import InstanceTooLarge
from superstrings.exact import DEFAULT_BOUND, exact_circular, exact_linear
from superstrings.greedy import TiePolicy, enumerate_greedy_circular, greedy_circular, greedy_linear
from superstrings.reduction import check_lemma_g, check_lemma_ineq, f_reduce, lemma_greedy_violations
from superstrings.strings import InstanceSet, normalize, sort_key

log = logging.getLogger(__name__)

SLS = "SLS"
SCS = "SCS"
MASK64 = (1 << 64) - 1
CONJECTURED_RATIO = Fraction(2)
ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class GenConfig:
    alphabet_size: int
    num_strings: int
    min_len: int
    max_len: int
    seed: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.alphabet_size <= 26:
            raise ValueError("alphabet_size must be in 1..26")
        if self.num_strings < 1:
            raise ValueError("num_strings must be at least 1")
        if not 1 <= self.min_len <= self.max_len:
            raise ValueError("need 1 <= min_len <= max_len")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def gen_instance(cfg: GenConfig) -> InstanceSet:
    rng = random.Random(cfg.seed)
    letters = string.ascii_lowercase[: cfg.alphabet_size]
    raw = []
    for _ in range(cfg.num_strings):
        length = rng.randint(cfg.min_len, cfg.max_len)
        raw.append("".join(rng.choice(letters) for _ in range(length)))
    return normalize(raw)


def all_strings(alphabet_size: int, min_len: int, max_len: int) -> list[str]:
    letters = string.ascii_lowercase[:alphabet_size]
    return ["".join(t) for n in range(min_len, max_len + 1) for t in itertools.product(letters, repeat=n)]


def enumerate_instances(alphabet_size: int, max_strings: int, max_len: int, min_len: int = 1) -> list[InstanceSet]:
    """Every distinct normalized instance built from at most ``max_strings`` strings."""
    pool = all_strings(alphabet_size, min_len, max_len)
    seen: dict[InstanceSet, None] = {}
    for k in range(1, max_strings + 1):
        for combo in itertools.combinations(pool, k):
            seen.setdefault(normalize(combo), None)
    return list(seen)


def _fraction_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


@dataclass(frozen=True)
class RatioRecord:
    instance: tuple[str, ...]
    problem: str
    greedy_len: int
    opt_len: int
    ratio: Fraction
    tie_policy: str
    seed: int

    def to_json(self) -> dict:
        return {
            "instance": list(self.instance),
            "problem": self.problem,
            "greedy_len": self.greedy_len,
            "opt_len": self.opt_len,
            "ratio": _fraction_json(self.ratio),
            "tie_policy": self.tie_policy,
            "seed": self.seed,
        }


def tie_policies(sample_seed: int, random_ties: int) -> list[TiePolicy]:
    rng = random.Random(sample_seed)
    return [TiePolicy.lex()] + [TiePolicy.random(rng.getrandbits(64)) for _ in range(random_ties)]


def ratio_records(
    P: InstanceSet, problem: str, sample_seed: int, random_ties: int = 3, bound: int = DEFAULT_BOUND
) -> list[RatioRecord]:
    """Greedy against optimal length for one instance under several tie policies."""
    if problem == SLS:
        opt = exact_linear(P, bound).opt_length
        solve = lambda tie: len(greedy_linear(P, tie)[0])  # noqa: E731
    elif problem == SCS:
        opt = exact_circular(P, bound).opt_length
        solve = lambda tie: len(greedy_circular(P, tie)[0])  # noqa: E731
    else:
        raise ValueError(f"unknown problem {problem!r}")
    out = []
    for tie in tie_policies(sample_seed, random_ties):
        g = solve(tie)
        out.append(RatioRecord(P.strings, problem, g, opt, Fraction(g, opt), str(tie), sample_seed))
    return out


@dataclass
class HuntReport:
    header: dict
    records: list[RatioRecord] = field(default_factory=list)
    skipped: int = 0

    @property
    def max_ratio(self) -> Optional[Fraction]:
        return self.records[0].ratio if self.records else None

    @property
    def bound_ok(self) -> bool:
        return self.max_ratio is None or self.max_ratio <= CONJECTURED_RATIO

    def summary(self) -> dict:
        top = self.records[0] if self.records else None
        return {
            "header": self.header,
            "records": len(self.records),
            "distinct_instances": len({r.instance for r in self.records}),
            "skipped": self.skipped,
            "max_ratio": _fraction_json(top.ratio) if top else None,
            "argmax": top.to_json() if top else None,
            "bound": _fraction_json(CONJECTURED_RATIO),
            "bound_ok": self.bound_ok,
        }

    def write_jsonl(self, path) -> None:
        with open(path, "a", encoding="utf-8") as fh:
            for r in self.records:
                fh.write(json.dumps(r.to_json(), sort_keys=True) + "\n")


def _collect(
    header: dict, instances: Iterable[tuple[int, InstanceSet]], problem: str, random_ties: int, bound: int
) -> HuntReport:
    report = HuntReport(header)
    for sample_seed, P in instances:
        try:
            report.records.extend(ratio_records(P, problem, sample_seed, random_ties, bound))
        except InstanceTooLarge:
            report.skipped += 1
    if report.skipped:
        log.warning("skipped %d instances above the exact bound %d", report.skipped, bound)
    # stable: ties keep generation order
    report.records.sort(key=lambda r: -r.ratio)
    return report


def hunt(
    cfg: GenConfig, samples: int, problem: str, random_ties: int = 3, bound: int = DEFAULT_BOUND
) -> HuntReport:
    """Random search: sample ``i`` uses seed ``cfg.seed + i`` (mod 2**64)."""
    header = {"mode": "random", "samples": samples, "problem": problem, "random_ties": random_ties, **asdict(cfg)}

    def stream() -> Iterator[tuple[int, InstanceSet]]:
        for i in range(samples):
            s = (cfg.seed + i) & MASK64
            cfg_i = GenConfig(cfg.alphabet_size, cfg.num_strings, cfg.min_len, cfg.max_len, s)
            yield s, gen_instance(cfg_i)

    return _collect(header, stream(), problem, random_ties, bound)


def hunt_exhaustive(
    alphabet_size: int,
    max_strings: int,
    min_len: int,
    max_len: int,
    problem: str,
    seed: int = 0,
    random_ties: int = 3,
    bound: int = DEFAULT_BOUND,
) -> HuntReport:
    """Ratio search over every normalized instance of a small family."""
    header = {
        "mode": "exhaustive",
        "problem": problem,
        "alphabet_size": alphabet_size,
        "max_strings": max_strings,
        "min_len": min_len,
        "max_len": max_len,
        "seed": seed,
        "random_ties": random_ties,
    }
    family = enumerate_instances(alphabet_size, max_strings, max_len, min_len)
    stream = (((seed + i) & MASK64, P) for i, P in enumerate(family))
    return _collect(header, stream, problem, random_ties, bound)


def verify(P: InstanceSet, bound: int = DEFAULT_BOUND, enum_bound: int = ENUMERATION_BOUND) -> dict:
    """Run every reduction property on ``P`` and report pass/fail per property.

    Properties that cannot be evaluated within the size bounds are reported
    as skipped; ``complete`` is false in that case.
    """
    doubled = f_reduce(P).doubled
    lemmas: dict[str, dict] = {}
    skipped: list[str] = []

    try:
        greedy_cs = sorted(enumerate_greedy_circular(doubled, enum_bound), key=lambda c: sort_key(c.canonical))
        greedy_source = "all tie-breakings"
    except InstanceTooLarge:
        greedy_cs = [greedy_circular(doubled)[0]]
        greedy_source = "lex tie policy"
        skipped.append("greedy enumeration")

    try:
        w_opt = exact_linear(P, bound)
        c_opt = exact_circular(doubled, bound)
    except InstanceTooLarge:
        w_opt = c_opt = None
        skipped.append("exact")

    circulars = list(greedy_cs)
    if c_opt is not None and c_opt.optimum not in circulars:
        circulars.append(c_opt.optimum)

    g_fail = [str(c) for c in circulars if not check_lemma_g(P, c)]
    lemmas["g"] = {"passed": not g_fail, "checked": len(circulars), "failures": g_fail, "greedy_source": greedy_source}

    if w_opt is not None:
        lemmas["equal"] = {
            "passed": 2 * w_opt.opt_length == c_opt.opt_length,
            "w_opt_len": w_opt.opt_length,
            "c_opt_len": c_opt.opt_length,
        }
        reports = [check_lemma_ineq(P, c, w_opt_len=w_opt.opt_length, c_opt_len=c_opt.opt_length) for c in circulars]
        lemmas["ineq"] = {
            "passed": all(r.strict_ok for r in reports),
            "checked": len(reports),
            "degenerate": sum(r.degenerate for r in reports),
            "failures": [r.to_json() for r in reports if not r.strict_ok],
        }
    else:
        lemmas["equal"] = {"skipped": "instance exceeds the exact bound"}
        lemmas["ineq"] = {"skipped": "instance exceeds the exact bound"}

    if "greedy enumeration" in skipped:
        lemmas["greedy"] = {"skipped": "instance exceeds the enumeration bound"}
    else:
        bad = lemma_greedy_violations(P, enum_bound, circular=greedy_cs)
        lemmas["greedy"] = {
            "passed": not bad,
            "checked": len(greedy_cs),
            "failures": [{"c": c.canonical, "g_of_c": g} for c, g in bad],
        }

    passed = all(v.get("passed", True) for v in lemmas.values())
    return {
        "instance": list(P.strings),
        "lemmas": lemmas,
        "passed": passed,
        "complete": not skipped,
        "skipped": skipped,
    }


__all__ = [
    "GenConfig",
    "HuntReport",
    "RatioRecord",
    "SCS",
    "SLS",
    "all_strings",
    "enumerate_instances",
    "gen_instance",
    "hunt",
    "hunt_exhaustive",
    "ratio_records",
    "tie_policies",
    "verify",
]
