"""Exit criteria for the package, one test per criterion.

Every check is exact (zero tolerance).  Run with ``pytest tests/test_acceptance.py``;
the terminal summary lists one PASS/FAIL line per criterion.
"""
import itertools
import json
import random
import subprocess
import sys
import time
from dataclasses import dataclass

import pytest

from superstrings import cli
from superstrings.exact import exact_circular, exact_linear, oracle_circular, oracle_linear
from superstrings.greedy import TiePolicy, enumerate_greedy_circular, enumerate_greedy_linear, greedy_linear
from superstrings.reduction import bar, check_lemma_g, check_lemma_ineq, f_reduce, lemma_greedy_violations
from superstrings.harness import GenConfig, enumerate_instances, gen_instance
from superstrings.strings import CircularString, circularize, contains_circular, merge, normalize, overlap
from superstrings.subset_system import (
    CIRCULAR,
    LINEAR,
    PairSelection,
    build_universe,
    generic_greedy,
    is_independent,
)

RANDOM_INSTANCES = 200
STRUCTURAL_CASES = 1000


def suite_instances():
    """Binary instances of <= 3 strings of length <= 4, then 200 seeded random ones."""
    family = enumerate_instances(alphabet_size=2, max_strings=3, max_len=4)
    rand = [gen_instance(GenConfig(2 + i % 2, 4, 1, 5, seed=i)) for i in range(RANDOM_INSTANCES)]
    return family + rand


@dataclass
class Case:
    P: object
    w_opt: int
    c_opt: CircularString
    c_opt_len: int
    greedy_circular: frozenset


@pytest.fixture(scope="module")
def suite():
    start = time.perf_counter()
    cases = []
    for P in suite_instances():
        doubled = f_reduce(P).doubled
        c = exact_circular(doubled)
        cases.append(Case(P, exact_linear(P).opt_length, c.optimum, c.opt_length, None))
    return cases, time.perf_counter() - start


def test_criterion_1_optimal_lengths_double(suite, acceptance_log):
    cases, elapsed = suite
    bad = [c.P.strings for c in cases if 2 * c.w_opt != c.c_opt_len]
    ok = not bad and elapsed < 120
    acceptance_log(
        "1 2|w_o| = |c_o|", ok, f"{len(cases)} instances, {len(bad)} violations, {elapsed:.1f}s (< 120s)"
    )
    assert not bad, bad[:5]
    assert elapsed < 120


@pytest.fixture(scope="module")
def greedy_suite(suite):
    cases, _ = suite
    start = time.perf_counter()
    for case in cases:
        case.greedy_circular = enumerate_greedy_circular(f_reduce(case.P).doubled)
    return cases, time.perf_counter() - start


def circular_pairs(cases):
    for case in cases:
        for c in sorted(case.greedy_circular | {case.c_opt}, key=lambda c: c.canonical.swapcase()):
            yield case, c


def test_criterion_2_extracted_string_is_short_superstring(greedy_suite, acceptance_log):
    cases, _ = greedy_suite
    checked = 0
    bad = []
    for case, c in circular_pairs(cases):
        checked += 1
        if not check_lemma_g(case.P, c):
            bad.append((case.P.strings, str(c)))
    acceptance_log("2 g(c) superstring, 2|g(c)| <= |c|", not bad, f"{checked} (P, c) pairs, {len(bad)} violations")
    assert not bad, bad[:5]


def test_criterion_3_ratio_inequalities(greedy_suite, acceptance_log):
    cases, _ = greedy_suite
    checked = degenerate = 0
    bad = []
    for case, c in circular_pairs(cases):
        r = check_lemma_ineq(case.P, c, w_opt_len=case.w_opt, c_opt_len=case.c_opt_len)
        checked += 1
        degenerate += r.degenerate
        if not r.strict_ok:
            bad.append(r.to_json())
    acceptance_log(
        "3 length and compression ratio inequalities",
        not bad,
        f"{checked} pairs, {checked - degenerate} non-degenerate, {degenerate} DegenerateCompression, {len(bad)} violations",
    )
    assert not bad, bad[:3]


def test_criterion_4_greedy_maps_to_greedy(greedy_suite, acceptance_log):
    cases, enum_elapsed = greedy_suite
    start = time.perf_counter()
    checked = 0
    bad = []
    for case in cases:
        if len(case.P) > 4:
            continue
        checked += 1
        v = lemma_greedy_violations(case.P, circular=case.greedy_circular, linear=enumerate_greedy_linear(case.P))
        if v:
            bad.append((case.P.strings, [(str(c), g) for c, g in v[:3]]))
    elapsed = enum_elapsed + time.perf_counter() - start
    outcomes = sum(len(c.greedy_circular) for c in cases)
    ok = not bad and elapsed < 300
    acceptance_log(
        "4 g maps greedy circular to greedy linear",
        ok,
        f"{checked} instances, {outcomes} greedy circular outcomes, {len(bad)} violations, {elapsed:.1f}s (< 300s)",
    )
    assert not bad, bad[:3]
    assert elapsed < 300


def oracle_instances():
    family = enumerate_instances(alphabet_size=2, max_strings=3, max_len=4)
    pairs = enumerate_instances(alphabet_size=2, max_strings=2, max_len=6)
    seen = dict.fromkeys(family + pairs)
    return list(seen)


def test_criterion_5_exact_solvers_match_oracles(acceptance_log):
    checked = 0
    bad = []
    for P in oracle_instances():
        lin = exact_linear(P)
        if lin.opt_length > 8:
            continue
        checked += 1
        circ = exact_circular(P)
        o_lin = oracle_linear(P, 8)
        o_circ = oracle_circular(P, 8)
        if lin.opt_length != len(o_lin) or circ.opt_length != len(o_circ):
            bad.append((P.strings, lin.opt_length, len(o_lin), circ.opt_length, len(o_circ)))
    acceptance_log("5 exact == brute-force oracle", not bad, f"{checked} instances with optimum <= 8, {len(bad)} mismatches")
    assert not bad, bad[:5]


def test_criterion_6_ratio_witness(acceptance_log):
    P = normalize(["abb", "bbb", "bba"])
    g = greedy_linear(P, TiePolicy.lex())[0]
    lin = exact_linear(P)
    circ = exact_circular(P)
    # values frozen from the brute-force oracles
    assert oracle_linear(P, 8) == "abbba"
    assert oracle_circular(P, 6) == CircularString("abbb")
    ok = (len(g), lin.opt_length, lin.optimum, circ.opt_length, circ.optimum) == (
        7, 5, "abbba", 4, CircularString("abbb"),
    )
    acceptance_log(
        "6 ratio witness {abb,bbb,bba}", ok,
        f"greedy SLS {len(g)}, exact SLS {lin.opt_length} ({lin.optimum}), exact SCS {circ.opt_length} ({circ.optimum})",
    )
    assert ok


def brute_overlap(x, y):
    for k in range(min(len(x), len(y)) - 1, 0, -1):
        if x[-k:] == y[:k]:
            return k
    return 0


def random_word(rng, letters, lo=1, hi=8):
    return "".join(rng.choice(letters) for _ in range(rng.randint(lo, hi)))


def random_instance(rng, max_strings=4):
    return normalize(random_word(rng, "abc", 1, 5) for _ in range(rng.randint(1, max_strings)))


def random_independent_selection(rng, P, variant):
    F = PairSelection(frozenset(), variant, len(P))
    universe = build_universe(P)
    rng.shuffle(universe)
    for e in universe:
        cand = F.with_pair(e)
        if rng.random() < 0.7 and is_independent(cand):
            F = cand
    return F


def test_criterion_7_structural_invariants(acceptance_log):
    rng = random.Random(20240607)
    failures = {}

    def check(name, cond):
        failures.setdefault(name, 0)
        failures[name] += 0 if cond else 1

    for _ in range(STRUCTURAL_CASES):
        x, y = random_word(rng, "abAB"), random_word(rng, "abAB")
        k = overlap(x, y)
        check("merge length", len(merge(x, y)) == len(x) + len(y) - k)
        check("overlap proper", k == brute_overlap(x, y) and (k == 0 or k <= min(len(x), len(y)) - 1))
        check("circularize contains", contains_circular(circularize(x), x))
        u, v = random_word(rng, "abc"), random_word(rng, "abc")
        check("overlap(w, bar v) = 0", overlap(u, bar(v)) == 0 and overlap(bar(v), u) == 0)

        variant = rng.choice([LINEAR, CIRCULAR])
        P = random_instance(rng)
        F = random_independent_selection(rng, P, variant)
        pairs = sorted(F.pairs)
        closed = all(
            is_independent(PairSelection(frozenset(sub), variant, len(P)))
            for r in range(len(pairs) + 1)
            for sub in itertools.combinations(pairs, r)
        )
        check("downward closure", closed)
        G = generic_greedy(P, variant)
        check(
            "generic greedy maximal",
            is_independent(G) and all(e in G.pairs or not is_independent(G.with_pair(e)) for e in build_universe(P)),
        )

    ok = not any(failures.values())
    detail = ", ".join(f"{name} {STRUCTURAL_CASES}/{failures[name]}" for name in failures)
    acceptance_log("7 structural invariants (cases/failures)", ok, detail)
    assert ok, failures


@pytest.mark.parametrize("problem", ["scs", "sls"])
def test_criterion_8_conjecture_probe(problem, tmp_path, capsys, acceptance_log):
    out = tmp_path / f"hunt_{problem}.jsonl"
    report = tmp_path / f"hunt_{problem}.json"
    code = cli.main(
        ["hunt", "--exhaustive", "--alphabet", "2", "--strings", "3", "--min-len", "1", "--max-len", "4",
         "--problem", problem, "--out", str(out), "--report", str(report)]
    )
    capsys.readouterr()
    summary = json.loads(report.read_text())
    ratio = summary["max_ratio"]
    argmax = summary["argmax"]
    ok = code == 0 and summary["bound_ok"] and ratio["num"] <= 2 * ratio["den"]
    acceptance_log(
        f"8 hunt {problem.upper()} max ratio <= 2",
        ok,
        f"{summary['distinct_instances']} instances, max {ratio['num']}/{ratio['den']} on {argmax['instance']} ({argmax['tie_policy']})",
    )
    assert argmax["instance"] and len(out.read_text().splitlines()) == summary["records"]
    assert ok


def _cli(args, cwd):
    return subprocess.run([sys.executable, "-m", "superstrings", *args], cwd=cwd, capture_output=True, check=False)


def test_criterion_9_determinism(tmp_path, acceptance_log):
    inst = tmp_path / "inst.txt"
    inst.write_text("abb\nbbb\nbba\nbab\n")
    commands = [
        ["solve", "--problem", "sls", "--algo", "greedy", str(inst)],
        ["solve", "--problem", "scs", "--algo", "greedy", "--tie", "rand", "--seed", "12", str(inst)],
        ["solve", "--problem", "sls", "--algo", "exact", str(inst)],
        ["solve", "--problem", "scs", "--algo", "exact", str(inst)],
        ["reduce", str(inst)],
        ["extract", "--circular", "bAaBabAB"],
        ["verify", str(inst)],
        ["gen", "--alphabet", "3", "--strings", "4", "--min-len", "2", "--max-len", "5", "--seed", "99"],
        ["hunt", "--samples", "25", "--alphabet", "3", "--strings", "4", "--max-len", "5", "--seed", "5",
         "--problem", "scs", "--out", "{out}"],
        ["hunt", "--exhaustive", "--alphabet", "2", "--strings", "2", "--max-len", "3", "--problem", "sls",
         "--out", "{out}"],
    ]
    differing = []
    for i, cmd in enumerate(commands):
        outputs = []
        for rep in range(2):
            out = tmp_path / f"cmd{i}_{rep}.jsonl"
            args = [a.replace("{out}", str(out)) for a in cmd]
            p = _cli(args, tmp_path)
            assert p.returncode == 0, (cmd, p.stderr)
            outputs.append((p.stdout, out.read_bytes() if out.exists() else b""))
        if outputs[0] != outputs[1]:
            differing.append(cmd[0])
    acceptance_log("9 byte-identical CLI reruns", not differing, f"{len(commands)} invocations, {len(differing)} differ")
    assert not differing
