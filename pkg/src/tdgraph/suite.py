"""Claim registry runner.

Each claim is a checker evaluated on concrete instances.  A checker
compares a closed-form statement with an exhaustive computation and
returns an :class:`Outcome`; refutations are ordinary results.  Instances
whose discrepancy is already understood carry an ``erratum-candidate`` or
``informational`` expectation so they stay visible without failing a run.
"""

from __future__ import annotations

import fnmatch
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import CapExceeded, PreconditionError

EXPECTATIONS = ("holds", "erratum-candidate", "informational")
BUDGETS = ("default", "extended")


class Skip(Exception):
    """Raised by a checker when an instance is outside the claim's hypotheses."""


@dataclass(frozen=True)
class Outcome:
    holds: bool
    observed: object
    expected: object
    witness: object = None


@dataclass(frozen=True)
class Instance:
    params: dict
    expect: str = "holds"
    budget: str = "default"

    def __post_init__(self):
        assert self.expect in EXPECTATIONS and self.budget in BUDGETS


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    semantics: str
    check: Callable[[dict], Outcome] | None
    instances: tuple[Instance, ...] = ()
    skip_reason: str | None = None
    defaults: dict = field(default_factory=dict)   # filled into params a caller omits


@dataclass
class CheckReport:
    claim: str
    params: dict
    status: str                 # confirmed | refuted | skipped
    expectation: str
    observed: object = None
    expected: object = None
    witness: object = None
    reason: str | None = None
    runtime_ms: float = 0.0

    @property
    def outcome(self) -> str:
        if self.status == "refuted":
            return "refuted-unexpected" if self.expectation == "holds" else "refuted-expected"
        return self.status

    def to_json_dict(self, runtime: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "params": jsonable(self.params),
            "status": self.status,
            "expectation": self.expectation,
            "outcome": self.outcome,
            "observed": jsonable(self.observed),
            "expected": jsonable(self.expected),
            "witness": jsonable(self.witness),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if runtime:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out

    def to_json(self, runtime: bool = True) -> str:
        return json.dumps(self.to_json_dict(runtime), ensure_ascii=True)


def jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return "infinite" if math.isinf(x) else x
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


class Registry:
    def __init__(self, claims: Iterable[Claim]):
        self.claims: dict[str, Claim] = {}
        for c in claims:
            if c.id in self.claims:
                raise ValueError(f"duplicate claim id {c.id}")
            self.claims[c.id] = c

    def ids(self) -> list[str]:
        return list(self.claims)

    def matching(self, pattern: str) -> list[Claim]:
        return [c for c in self.claims.values() if fnmatch.fnmatchcase(c.id, pattern)]

    def verify(self, claim_id: str, params: dict | None = None, expect: str | None = None) -> CheckReport:
        if claim_id not in self.claims:
            raise KeyError(f"unknown claim {claim_id!r}")
        claim = self.claims[claim_id]
        params = {**claim.defaults, **(params or {})}
        if expect is None:
            expect = next((i.expect for i in claim.instances if i.params == params), "holds")
        if claim.check is None:
            return CheckReport(claim.id, params, "skipped", expect, reason=claim.skip_reason)
        t0 = time.perf_counter()
        try:
            res = claim.check(params)
        except Skip as exc:
            return CheckReport(claim.id, params, "skipped", expect, reason=str(exc),
                               runtime_ms=(time.perf_counter() - t0) * 1000)
        except CapExceeded as exc:
            return CheckReport(claim.id, params, "skipped", expect, reason=f"cap: {exc}",
                               runtime_ms=(time.perf_counter() - t0) * 1000)
        except KeyError as exc:
            raise PreconditionError(f"{claim.id}: missing parameter {exc}") from exc
        status = "confirmed" if res.holds else "refuted"
        return CheckReport(claim.id, params, status, expect, res.observed, res.expected, res.witness,
                           runtime_ms=(time.perf_counter() - t0) * 1000)

    def run_all(self, budget: str = "default", pattern: str = "*") -> list[CheckReport]:
        """Reports in registry order, then instance order."""
        if budget not in BUDGETS:
            raise ValueError(f"unknown budget {budget!r}")
        reports = []
        for claim in self.matching(pattern):
            if claim.check is None:
                reports.append(self.verify(claim.id, {}))
                continue
            for inst in claim.instances:
                if inst.budget == "default" or budget == "extended":
                    reports.append(self.verify(claim.id, inst.params, inst.expect))
        return reports


def summarize(reports: Iterable[CheckReport]) -> dict[str, int]:
    counts = {"confirmed": 0, "refuted-expected": 0, "refuted-unexpected": 0, "skipped": 0}
    for r in reports:
        counts[r.outcome] += 1
    return counts


def _short(x, width: int = 38) -> str:
    text = json.dumps(jsonable(x), separators=(",", ":"))
    return text if len(text) <= width else text[:width - 3] + "..."


def render_table(reports: list[CheckReport]) -> str:
    rows = [("claim", "params", "outcome", "observed", "expected")]
    for r in reports:
        rows.append((r.claim, _short(r.params, 44), r.outcome, _short(r.observed), _short(r.expected)))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    counts = summarize(reports)
    lines.append("")
    lines.append(" ".join(f"{k}={v}" for k, v in counts.items()))
    return "\n".join(lines) + "\n"
