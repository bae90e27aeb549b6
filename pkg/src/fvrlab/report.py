"""Check reports: one record per verified inequality instance.

Every bound checker returns a :class:`CheckReport`.  The conclusion is kept
as a denominator-cleared exact integer comparison (lhs vs rhs); the ratio is
the exact rational lhs/rhs and is only rendered to a float on serialization.
Whether "good" means lhs >= rhs or lhs <= rhs depends on the inequality; the
verdict already accounts for the direction.

Rows in ``hypotheses`` follow a naming convention: ``gate_*`` rows are the
theorem's hypotheses and decide hypothesis_not_met; ``form_*`` rows are
companion comparisons recorded for information (secondary bound shapes,
energies, one-sided variants) and never drive the verdict.

Verdicts:
* pass / fail       -- inequalities with explicit constants, checked exactly;
* ratio_recorded    -- inequalities stated only up to an implicit constant;
* hypothesis_not_met -- some gate_* row failed; the conclusion is not claimed.

The JSONL wire format per line (integers as decimal strings):
{"theorem": str, "ring": str, "hypotheses": [{"name", "ok", "lhs", "rhs"}],
 "lhs": str, "rhs": str, "ratio": float|null, "verdict": str,
 "seed": int|null, "sets": {str: str}}
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"
RATIO_RECORDED = "ratio_recorded"

VERDICTS = (PASS, FAIL, HYPOTHESIS_NOT_MET, RATIO_RECORDED)

THEOREMS = (
    "T1_3",
    "T1_5",
    "T1_6",
    "T1_7",
    "T1_8",
    "T1_9",
    "T2_2",
    "T2_4",
    "T7_1",
    "PLUN13",
)

# how many members a set literal may list before being digested
LITERAL_CAP = 4096


@dataclass(frozen=True)
class BoundRow:
    name: str
    ok: bool
    lhs: int
    rhs: int


@dataclass
class CheckReport:
    theorem: str
    ring: str
    hypotheses: list[BoundRow]
    lhs: int
    rhs: int
    ratio: Fraction | None
    verdict: str
    seed: int | None = None
    sets: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem id {self.theorem!r}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def gates_ok(self) -> bool:
        return all(h.ok for h in self.hypotheses if h.name.startswith("gate_"))

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "hypotheses": [
                {"name": h.name, "ok": h.ok, "lhs": str(h.lhs), "rhs": str(h.rhs)}
                for h in self.hypotheses
            ],
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "ratio": None if self.ratio is None else float(self.ratio),
            "verdict": self.verdict,
            "seed": self.seed,
            "sets": dict(self.sets),
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), ensure_ascii=True)

    @classmethod
    def from_json_dict(cls, obj: dict) -> "CheckReport":
        rows = [
            BoundRow(h["name"], bool(h["ok"]), int(h["lhs"]), int(h["rhs"]))
            for h in obj["hypotheses"]
        ]
        ratio = obj["ratio"]
        return cls(
            theorem=obj["theorem"],
            ring=obj["ring"],
            hypotheses=rows,
            lhs=int(obj["lhs"]),
            rhs=int(obj["rhs"]),
            ratio=None if ratio is None else Fraction(ratio).limit_denominator(10**15),
            verdict=obj["verdict"],
            seed=obj["seed"],
            sets=dict(obj["sets"]),
        )


def set_literal_or_digest(rset) -> str:
    """Member literal, or size plus a content hash for very large sets."""
    if len(rset) <= LITERAL_CAP:
        return rset.literal
    import hashlib

    h = hashlib.sha256(rset.mask.tobytes()).hexdigest()[:16]
    return f"size={len(rset)};sha256={h}"


def write_jsonl(reports, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        for rep in reports:
            fh.write(rep.to_json_line())
            fh.write("\n")


def read_jsonl(path: str) -> list[CheckReport]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(CheckReport.from_json_dict(json.loads(line)))
    return out


def write_csv(reports, path: str) -> None:
    """Flat CSV: base columns, then one ok/lhs/rhs triple per hypothesis name."""
    reports = list(reports)
    hyp_names: list[str] = []
    for rep in reports:
        for h in rep.hypotheses:
            if h.name not in hyp_names:
                hyp_names.append(h.name)
    cols = ["theorem", "ring", "verdict", "lhs", "rhs", "ratio", "seed"]
    for name in hyp_names:
        cols += [f"{name}_ok", f"{name}_lhs", f"{name}_rhs"]
    cols.append("sets")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(cols)
        for rep in reports:
            row = [
                rep.theorem,
                rep.ring,
                rep.verdict,
                str(rep.lhs),
                str(rep.rhs),
                "" if rep.ratio is None else repr(float(rep.ratio)),
                "" if rep.seed is None else str(rep.seed),
            ]
            by_name = {h.name: h for h in rep.hypotheses}
            for name in hyp_names:
                h = by_name.get(name)
                if h is None:
                    row += ["", "", ""]
                else:
                    row += [str(h.ok).lower(), str(h.lhs), str(h.rhs)]
            row.append(json.dumps(rep.sets, separators=(",", ":"), ensure_ascii=True))
            writer.writerow(row)
