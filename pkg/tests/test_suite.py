from __future__ import annotations

import pytest

from tdgraph import claims
from tdgraph.errors import PreconditionError
from tdgraph.suite import Claim, Instance, Outcome, Registry, Skip, jsonable, render_table, summarize

REGISTRY = claims.REGISTRY


@pytest.fixture(scope="module")
def default_reports():
    return REGISTRY.run_all("default")


def _masked(reports):
    return [r.to_json(runtime=False) for r in reports]


def test_default_budget_has_no_unexpected_refutation(default_reports):
    counts = summarize(default_reports)
    bad = [r.to_json(runtime=False) for r in default_reports if r.outcome == "refuted-unexpected"]
    assert counts["refuted-unexpected"] == 0, bad
    assert counts["confirmed"] > 300


@pytest.mark.slow
def test_extended_budget_has_no_unexpected_refutation():
    reports = REGISTRY.run_all("extended")
    assert summarize(reports)["refuted-unexpected"] == 0


def test_every_erratum_candidate_is_still_refuted(default_reports):
    # an erratum expectation that starts passing is stale and must be revisited
    stale = [r.to_json(runtime=False) for r in default_reports
             if r.expectation == "erratum-candidate" and r.status != "refuted"]
    assert stale == []


def test_run_is_deterministic_with_runtime_masked(default_reports):
    again = REGISTRY.run_all("default", "domination-*")
    first = [r for r in default_reports if r.claim.startswith("domination-")]
    assert _masked(again) == _masked(first)


def test_report_order_follows_registry(default_reports):
    order = {cid: i for i, cid in enumerate(REGISTRY.ids())}
    positions = [order[r.claim] for r in default_reports]
    assert positions == sorted(positions)


def test_out_of_scope_claims_skip_with_reason(default_reports):
    skipped = {r.claim: r.reason for r in default_reports if r.outcome == "skipped"}
    for cid in ("alpha-infinite", "domination-infinite", "clique-better-bound"):
        assert skipped.get(cid)


def test_verify_examples():
    r = REGISTRY.verify("tensor-decomposition", {"R": "Z2", "S": "Z3", "n": 2})
    assert r.outcome == "confirmed" and r.observed["engine"] and r.observed["projection"]
    r = REGISTRY.verify("domination-field", {"F": "Z3", "n": 2})
    assert r.outcome == "confirmed" and r.observed["gamma"] == 4
    r = REGISTRY.verify("clique-n2-split", {"F": "Z5"})
    assert r.outcome == "refuted-expected" and (r.observed, r.expected) == (4, 2)
    r = REGISTRY.verify("clique-n2-split", {"F": "Z5", "orientation": "transposed"})
    assert r.outcome == "confirmed"


def test_verify_errors():
    with pytest.raises(KeyError):
        REGISTRY.verify("no-such-claim", {})
    with pytest.raises(PreconditionError):
        REGISTRY.verify("domination-field", {"F": "Z3"})


def test_cap_exceeded_becomes_skip():
    claims.set_vertex_cap(20)
    try:
        r = REGISTRY.verify("domination-field", {"F": "Z5", "n": 2})
    finally:
        claims.set_vertex_cap(claims.GRAPH_CAP)
    assert r.outcome == "skipped" and r.reason.startswith("cap:")


def test_registry_rejects_duplicates():
    c = Claim("x", "s", "equality", None)
    with pytest.raises(ValueError):
        Registry([c, c])


def test_toy_registry_outcomes():
    def check(p):
        if p["k"] < 0:
            raise Skip("negative")
        return Outcome(p["k"] % 2 == 0, p["k"], "even")

    reg = Registry([Claim("even", "k is even", "predicate", check,
                          (Instance({"k": 2}), Instance({"k": 3}, "erratum-candidate"), Instance({"k": 5}),
                           Instance({"k": -1}), Instance({"k": 4}, budget="extended")))])
    outcomes = [r.outcome for r in reg.run_all("default")]
    assert outcomes == ["confirmed", "refuted-expected", "refuted-unexpected", "skipped"]
    assert len(reg.run_all("extended")) == 5
    table = render_table(reg.run_all("default"))
    assert table.endswith("confirmed=1 refuted-expected=1 refuted-unexpected=1 skipped=1\n")
    with pytest.raises(ValueError):
        reg.run_all("huge")


def test_jsonable():
    assert jsonable({1: float("inf"), "s": {3, 1}, "t": (1, (2,))}) == {"1": "infinite", "s": [1, 3], "t": [1, [2]]}
