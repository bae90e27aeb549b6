#!/usr/bin/env python3
"""Sweep a bound over many seeded random sets and read off the worst ratio."""

import json

from fvrlab import ExperimentConfig, parse_mode, run_experiment

# 200 random 14-element unit subsets of Z_25, energy bound with d=2.
config = ExperimentConfig(
    theorem="T1_9",
    ring_spec="zpr:p=5,r=2",
    mode=parse_mode("random:14:200"),
    seed=31337,
    d=2,
)
reports, summary = run_experiment(config)

print(f"{summary['inputs']} inputs, verdicts {summary['verdicts']}")
print(f"worst ratio {summary['ratio_min']} at A = {summary['argmin_sets']['A']}")
print(f"mean ratio  {summary['ratio_mean']}")

# Every report serializes to one JSON line; the first, pretty-printed:
print(json.dumps(json.loads(reports[0].to_json_line()), indent=2)[:400], "...")
