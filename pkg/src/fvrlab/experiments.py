"""Sweep engine: enumerate or sample inputs, run checks, summarize.

An experiment is a pure function of its config.  Determinism rules:

* random trials draw their own seed as mix64(master_seed, trial_index) and
  every slot inside a trial mixes again, so any trial can be reproduced in
  isolation and concurrency cannot reorder draws,
* exhaustive mode walks subsets in (size, lexicographic) order, flattened
  across slots with the first slot varying slowest; positions decode by
  combinatorial unranking, so any range of the walk can run anywhere,
* reports are emitted in input order regardless of the worker count
  (workers only split contiguous ranges, set via the FVRLAB_WORKERS
  environment variable).

Exhaustive sweeps are capped by a documented budget: the total number of
check evaluations, (sum of C(n, k) for k = 1..max_size) ** slots, must not
exceed 10**7.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .checks import (
    check_cube_sum,
    check_expander,
    check_f_of_A_plus_A,
    check_plunnecke_corollary,
    check_power_energy,
    check_prod_diff,
    check_sum_square,
)
from .geometry import geometry_bound_report, line_count_report
from .incidence import WeightedFamily, incidence_bound_report, weighted_bound_report
from .report import THEOREMS, CheckReport
from .ring import Ring, parse_ring_spec
from .sampling import (
    mix64,
    sample_planes,
    sample_points,
    sample_subset,
    sample_unit_subset,
    sample_weights,
    shuffled,
)
from .setalg import RSet, parse_quadpoly, parse_set_literal

EXHAUSTIVE_BUDGET = 10**7

# set slots enumerated or sampled per theorem; families are handled apart
SET_SLOTS = {
    "T1_3": 3,
    "T1_5": 1,
    "T1_6": 1,
    "T1_7": 1,
    "T1_8": 1,
    "T1_9": 1,
    "T7_1": 1,
    "PLUN13": 1,
}
FAMILY_THEOREMS = ("T2_2", "T2_4")


@dataclass(frozen=True)
class Mode:
    kind: str  # "exhaustive" | "random"
    max_size: int = 0
    sizes: tuple[int, ...] = ()
    trials: int = 0

    @property
    def literal(self) -> str:
        if self.kind == "exhaustive":
            return f"exhaustive:{self.max_size}"
        return f"random:{','.join(str(s) for s in self.sizes)}:{self.trials}"


def parse_mode(text: str) -> Mode:
    """exhaustive:MAX_SIZE or random:SIZE[,SIZE...]:TRIALS."""
    parts = text.split(":")
    try:
        if parts[0] == "exhaustive" and len(parts) == 2:
            k = int(parts[1])
            if k < 1:
                raise ValueError
            return Mode("exhaustive", max_size=k)
        if parts[0] == "random" and len(parts) == 3:
            sizes = tuple(int(s) for s in parts[1].split(","))
            trials = int(parts[2])
            if trials < 1 or not sizes or any(s < 1 for s in sizes):
                raise ValueError
            return Mode("random", sizes=sizes, trials=trials)
    except ValueError:
        pass
    raise ValueError(f"bad mode {text!r}: expected exhaustive:K or random:SIZES:TRIALS")


@dataclass(frozen=True)
class ExperimentConfig:
    theorem: str
    ring_spec: str
    mode: Mode | None = None  # None runs one check on explicit inputs
    seed: int = 0
    f: str | None = None  # a=..;R=..;S=..;T=.. for T1_3
    poly1: str | None = None  # c2,c1,c0 for T1_7
    d: int = 1  # power for T1_9
    literals: dict = field(default_factory=dict)  # explicit A/B/C literals
    points: str | None = None  # "all" or a count, for T2_2/T2_4
    planes: str | None = None
    max_weight: int = 4  # sampled weight cap for T2_4
    out: str | None = None
    fmt: str = "jsonl"

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}")
        if self.fmt not in ("jsonl", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        if self.max_weight < 1:
            raise ValueError("max_weight must be a positive integer")


@lru_cache(maxsize=64)
def _ring_of(spec: str) -> Ring:
    return parse_ring_spec(spec)


@lru_cache(maxsize=64)
def _quadspec_of(ring_spec: str, literal: str):
    return parse_quadpoly(_ring_of(ring_spec), literal)


def _poly1_of(ring: Ring, literal: str) -> tuple[int, int, int]:
    toks = literal.split(",")
    if len(toks) != 3:
        raise ValueError("poly1 must be 'c2,c1,c0'")
    return tuple(int(t) for t in toks)


# ---------------------------------------------------------------------------
# exhaustive enumeration by rank


@lru_cache(maxsize=64)
def _size_offsets(n: int, max_size: int) -> tuple[int, ...]:
    """Cumulative subset counts by size: offsets[k] = #subsets of size < k+1."""
    if max_size > n:
        raise ValueError(f"max subset size {max_size} exceeds ring order {n}")
    acc, out = 0, []
    for k in range(1, max_size + 1):
        acc += math.comb(n, k)
        out.append(acc)
    return tuple(out)


def subsets_up_to(n: int, max_size: int) -> int:
    return _size_offsets(n, max_size)[-1]


def unrank_combination(n: int, k: int, rank: int) -> tuple[int, ...]:
    """rank-th k-subset of range(n) in lexicographic order of sorted tuples."""
    combo = []
    c = 0
    for remaining in range(k, 0, -1):
        while math.comb(n - c - 1, remaining - 1) <= rank:
            rank -= math.comb(n - c - 1, remaining - 1)
            c += 1
        combo.append(c)
        c += 1
    return tuple(combo)


def subset_by_rank(ring: Ring, max_size: int, rank: int) -> RSet:
    offsets = _size_offsets(ring.order, max_size)
    k = next(i + 1 for i, off in enumerate(offsets) if rank < off)
    base = offsets[k - 2] if k >= 2 else 0
    return RSet.from_indices(ring, unrank_combination(ring.order, k, rank - base))


def exhaustive_budget(n: int, max_size: int, slots: int) -> int:
    return subsets_up_to(n, max_size) ** slots


# ---------------------------------------------------------------------------
# input construction


def _families_for_trial(config: ExperimentConfig, ring: Ring, trial_seed: int):
    def build(text, salt):
        if text == "all":
            n = ring.order
            codes = np.arange(n**3, dtype=np.int64)
            return np.stack([codes // n**2, (codes // n) % n, codes % n], axis=1)
        return (sample_points if salt == 1 else sample_planes)(
            ring, int(text), mix64(trial_seed, salt)
        )

    if config.points is None or config.planes is None:
        raise ValueError(f"{config.theorem} needs --points and --planes")
    return build(config.points, 1), build(config.planes, 2)


def _weighted_families_for_trial(config: ExperimentConfig, ring: Ring, trial_seed: int):
    pts, pls = _families_for_trial(config, ring, trial_seed)
    if config.points == "all" and config.planes == "all":
        return WeightedFamily.uniform(ring, pts), WeightedFamily.uniform(ring, pls)
    if len(pts) != len(pls):
        raise ValueError("weighted sweeps need equally many points and planes")
    # one weight multiset, dealt to both sides, keeps the totals equal
    wp = sample_weights(len(pts), config.max_weight, mix64(trial_seed, 3))
    wq = shuffled(wp, mix64(trial_seed, 4))
    return (
        WeightedFamily(ring, pts, np.array(wp, dtype=np.int64)),
        WeightedFamily(ring, pls, np.array(wq, dtype=np.int64)),
    )


def _check_on_sets(config: ExperimentConfig, ring: Ring, sets, seed):
    theorem = config.theorem
    if theorem == "T1_3":
        if config.f is None:
            raise ValueError("T1_3 needs a polynomial (f)")
        spec = _quadspec_of(config.ring_spec, config.f)
        return [check_expander(spec, sets[0], sets[1], sets[2], seed=seed)]
    A = sets[0]
    if theorem == "T1_5":
        return [check_sum_square(A, seed=seed)]
    if theorem == "T1_6":
        return [check_cube_sum(A, seed=seed)]
    if theorem == "T1_7":
        if config.poly1 is None:
            raise ValueError("T1_7 needs a quadratic (poly1)")
        return [check_f_of_A_plus_A(_poly1_of(ring, config.poly1), A, seed=seed)]
    if theorem == "T1_8":
        return [check_prod_diff(A, seed=seed)]
    if theorem == "T1_9":
        return [check_power_energy(A, config.d, seed=seed)]
    if theorem == "T7_1":
        return [geometry_bound_report(A, seed=seed), line_count_report(A, seed=seed)]
    if theorem == "PLUN13":
        return [check_plunnecke_corollary(A, seed=seed)]
    raise ValueError(f"no set-slot dispatch for {theorem}")


def _run_input(config: ExperimentConfig, ring: Ring, index: int) -> list[CheckReport]:
    theorem = config.theorem
    if theorem in FAMILY_THEOREMS:
        if config.mode is None:
            trial_seed = None if config.points == "all" and config.planes == "all" else config.seed
        else:
            trial_seed = mix64(config.seed, index)
        eff = config.seed if trial_seed is None else trial_seed
        if theorem == "T2_2":
            pts, pls = _families_for_trial(config, ring, eff)
            return [incidence_bound_report(ring, pts, pls, seed=trial_seed)]
        pfam, qfam = _weighted_families_for_trial(config, ring, eff)
        return [weighted_bound_report(pfam, qfam, seed=trial_seed)]

    slots = SET_SLOTS[theorem]
    if config.mode is None:
        names = ("A", "B", "C")[:slots]
        sets = []
        for name in names:
            lit = config.literals.get(name)
            if lit is None:
                raise ValueError(f"{theorem} needs an explicit set {name} (or a mode)")
            sets.append(parse_set_literal(ring, lit))
        return _check_on_sets(config, ring, sets, None)
    if config.mode.kind == "exhaustive":
        span = subsets_up_to(ring.order, config.mode.max_size)
        ranks = []
        rest = index
        for _ in range(slots):
            rest, rank = divmod(rest, span)
            ranks.append(rank)
        ranks.reverse()  # first slot varies slowest
        sets = [subset_by_rank(ring, config.mode.max_size, rk) for rk in ranks]
        return _check_on_sets(config, ring, sets, None)
    trial_seed = mix64(config.seed, index)
    if len(config.mode.sizes) != slots:
        raise ValueError(f"{theorem} needs {slots} size(s) in random mode")
    # T1_9 hypothesizes a set of units, so its slot samples from the units
    draw = sample_unit_subset if theorem == "T1_9" else sample_subset
    sets = [
        draw(ring, size, mix64(trial_seed, slot))
        for slot, size in enumerate(config.mode.sizes)
    ]
    return _check_on_sets(config, ring, sets, trial_seed)


def input_count(config: ExperimentConfig, ring: Ring) -> int:
    if config.mode is None:
        return 1
    if config.theorem in FAMILY_THEOREMS:
        if config.mode.kind == "exhaustive":
            raise ValueError(f"{config.theorem} sweeps are random-mode only")
        if len(config.mode.sizes) != 2:
            raise ValueError(f"{config.theorem} needs two sizes (points, planes)")
        return config.mode.trials
    slots = SET_SLOTS[config.theorem]
    if config.mode.kind == "exhaustive":
        budget = exhaustive_budget(ring.order, config.mode.max_size, slots)
        if budget > EXHAUSTIVE_BUDGET:
            raise ValueError(
                f"exhaustive sweep would take {budget} evaluations"
                f" (budget {EXHAUSTIVE_BUDGET})"
            )
        return budget
    return config.mode.trials


def _run_range(config: ExperimentConfig, lo: int, hi: int) -> list[CheckReport]:
    ring = _ring_of(config.ring_spec)
    out = []
    for index in range(lo, hi):
        out.extend(_run_input(config, ring, index))
    return out


def _run_range_star(args):
    return _run_range(*args)


def _worker_count() -> int:
    raw = os.environ.get("FVRLAB_WORKERS", "")
    if not raw:
        return 1
    count = int(raw)
    if count < 1:
        raise ValueError("FVRLAB_WORKERS must be a positive integer")
    return count


def run_experiment(config: ExperimentConfig) -> tuple[list[CheckReport], dict]:
    """Run the sweep and return (reports, summary); see the module notes."""
    ring = _ring_of(config.ring_spec)
    # family sweeps carry their sizes as per-trial point/plane counts
    if (
        config.theorem in FAMILY_THEOREMS
        and config.mode is not None
        and config.mode.kind == "random"
        and config.points is None
        and config.planes is None
    ):
        sizes = config.mode.sizes
        config = replace(
            config, points=str(sizes[0]), planes=str(sizes[1] if len(sizes) > 1 else sizes[0])
        )
    total = input_count(config, ring)
    workers = _worker_count()
    if workers > 1 and total > 1:
        chunks = max(workers * 4, 1)
        step = max(1, -(-total // chunks))
        ranges = [(config, lo, min(total, lo + step)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_run_range_star, ranges))
        reports = [rep for part in parts for rep in part]
    else:
        reports = _run_range(config, 0, total)
    return reports, summarize(config, reports, total)


def summarize(config: ExperimentConfig, reports: list[CheckReport], inputs: int) -> dict:
    verdicts = {"pass": 0, "fail": 0, "hypothesis_not_met": 0, "ratio_recorded": 0}
    for rep in reports:
        verdicts[rep.verdict] += 1
    ratios = [(rep.ratio, i) for i, rep in enumerate(reports) if rep.ratio is not None]
    summary = {
        "theorem": config.theorem,
        "ring": config.ring_spec,
        "mode": config.mode.literal if config.mode else "single",
        "seed": config.seed,
        "inputs": inputs,
        "reports": len(reports),
        "verdicts": verdicts,
        "ratio_min": None,
        "ratio_min_float": None,
        "ratio_max": None,
        "ratio_max_float": None,
        "ratio_mean": None,
        "argmin_sets": None,
    }
    if ratios:
        lo = min(ratios, key=lambda pair: (pair[0], pair[1]))
        hi = max(ratios, key=lambda pair: (pair[0], -pair[1]))
        mean = sum(fr for fr, _ in ratios) / len(ratios)
        summary["ratio_min"] = f"{lo[0].numerator}/{lo[0].denominator}"
        summary["ratio_min_float"] = float(lo[0])
        summary["ratio_max"] = f"{hi[0].numerator}/{hi[0].denominator}"
        summary["ratio_max_float"] = float(hi[0])
        summary["ratio_mean"] = float(mean)
        summary["argmin_sets"] = dict(reports[lo[1]].sets)
    return summary


# ---------------------------------------------------------------------------
# config files


_CONFIG_KEYS = {
    "theorem",
    "ring",
    "mode",
    "seed",
    "f",
    "poly1",
    "d",
    "A",
    "B",
    "C",
    "points",
    "planes",
    "max_weight",
    "out",
    "format",
}


def parse_config_lines(lines) -> ExperimentConfig:
    """Flat key=value format; one pair per line, # comments allowed."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(lines, start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        key, eq, value = body.partition("=")
        key, value = key.strip(), value.strip()
        if not eq or not value:
            raise ValueError(f"line {lineno}: expected key = value")
        if key not in _CONFIG_KEYS:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    for needed in ("theorem", "ring"):
        if needed not in raw:
            raise ValueError(f"config needs a {needed!r} line")
    literals = {name: raw[name] for name in ("A", "B", "C") if name in raw}
    return ExperimentConfig(
        theorem=raw["theorem"],
        ring_spec=raw["ring"],
        mode=parse_mode(raw["mode"]) if "mode" in raw else None,
        seed=int(raw.get("seed", "0")),
        f=raw.get("f"),
        poly1=raw.get("poly1"),
        d=int(raw.get("d", "1")),
        literals=literals,
        points=raw.get("points"),
        planes=raw.get("planes"),
        max_weight=int(raw.get("max_weight", "4")),
        out=raw.get("out"),
        fmt=raw.get("format", "jsonl"),
    )


def load_config(path: str) -> ExperimentConfig:
    with open(path) as fh:
        return parse_config_lines(fh)
