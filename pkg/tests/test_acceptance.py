"""Acceptance suite: one test per criterion, one printed line per verdict.

Run with ``pytest -v -s tests/test_acceptance.py`` to see the lines.
"""

import json
import time
from contextlib import contextmanager

from topolab import gensets, operators, separation
from topolab.cli import main
from topolab.enumeration import all_spaces_up_to, labeled_topologies
from topolab.fixtures import FIXTURES, closure_monitor_violations, paper_report
from topolab.registry import replay_witness, run_suite, verify_theorem

from _naive import from_space


@contextmanager
def criterion(num: int, title: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num} FAIL: {title}")
        raise
    print(f"ACCEPTANCE {num} PASS: {title}")


def _assert_replayable(report):
    if report.verdict == "counterexample":
        replayed = replay_witness(report.id, report.witness)
        assert replayed is not None
        assert replayed["clause"] == report.witness["clause"]


# Frozen from the recorded fixture listings (ascending bitmask order over
# the point order k, l, m, n).
_CLOSED_7 = [
    [],
    ["n"],
    ["l", "n"],
    ["m", "n"],
    ["k", "m", "n"],
    ["l", "m", "n"],
    ["k", "l", "m", "n"],
]
_G_CLOSED_9 = [
    [],
    ["n"],
    ["k", "n"],
    ["l", "n"],
    ["k", "l", "n"],
    ["m", "n"],
    ["k", "m", "n"],
    ["l", "m", "n"],
    ["k", "l", "m", "n"],
]
_POWERSET_16 = [
    [],
    ["k"],
    ["l"],
    ["k", "l"],
    ["m"],
    ["k", "m"],
    ["l", "m"],
    ["k", "l", "m"],
    ["n"],
    ["k", "n"],
    ["l", "n"],
    ["k", "l", "n"],
    ["m", "n"],
    ["k", "m", "n"],
    ["l", "m", "n"],
    ["k", "l", "m", "n"],
]


def test_criterion_1_klmn_golden_lists():
    with criterion(1, "fixture example-1.8 set-family listings reproduce exactly"):
        start = time.perf_counter()
        space = FIXTURES["example-1.8"]

        def family(pred):
            return [list(space.labels_of(a)) for a in space.subsets() if pred(a)]

        assert family(space.is_closed) == _CLOSED_7
        assert family(lambda a: gensets.g_closed(space, a)) == _G_CLOSED_9
        assert family(lambda a: gensets.is_scstar_closed(space, a)) == _POWERSET_16
        assert family(lambda a: gensets.gscstar_closed(space, a)) == _POWERSET_16
        assert family(lambda a: gensets.scstarg_closed(space, a)) == _POWERSET_16
        assert time.perf_counter() - start < 1.0


def test_criterion_2_disjoint_pair_golden():
    with criterion(2, "fixture example-2.9 verdicts reproduce exactly"):
        start = time.perf_counter()
        space = FIXTURES["example-2.9"]
        assert separation.axiom(space, "regular") is True
        assert separation.axiom(space, "strongly-rg-regular") is False
        assert gensets.generalized_class(space, space.subset_of(["l"]), "rg-closed") is True
        assert time.perf_counter() - start < 1.0


def test_criterion_3_enumeration_counts():
    with criterion(3, "1, 4, 29, 355 labeled topologies by both routes"):
        start = time.perf_counter()
        expected = {1: 1, 2: 4, 3: 29, 4: 355}
        for n, count in expected.items():
            naive = labeled_topologies(n, "naive")
            preorder = labeled_topologies(n, "preorder")
            assert len(naive) == count and len(preorder) == count
            assert [s.opens for s in naive] == [s.opens for s in preorder]
        assert time.perf_counter() - start < 10.0


def test_criterion_4_five_characterizations_sweep():
    with criterion(4, "T2.10 five characterizations over all 389 spaces"):
        start = time.perf_counter()
        report = verify_theorem("T2.10", bound=4)
        assert report.instances == 389
        assert report.verdict in ("verified", "counterexample")
        _assert_replayable(report)
        assert time.perf_counter() - start < 120.0


def test_criterion_5_space_theorem_sweeps():
    with criterion(5, "T2.11 / T2.13 / T2.14 sweeps over all 389 spaces"):
        start = time.perf_counter()
        for tid in ("T2.11", "T2.13", "T2.14"):
            report = verify_theorem(tid, bound=4)
            assert report.instances == 389
            assert report.verdict in ("verified", "counterexample")
            _assert_replayable(report)
        assert time.perf_counter() - start < 300.0


def test_criterion_6_map_theorem_sweeps():
    with criterion(6, "map-theorem sweeps over all maps between spaces with <= 3 points"):
        start = time.perf_counter()
        for tid in (
            "T3.3",
            "T3.5",
            "T3.7",
            "T4.5",
            "P4.8",
            "P4.10",
            "T4.14",
            "T4.16",
            "T5.1",
            "T5.3",
            "T5.7",
        ):
            report = verify_theorem(tid, bound=3)
            assert report.instances == 24872
            assert report.verdict in ("verified", "counterexample")
            _assert_replayable(report)
        assert time.perf_counter() - start < 600.0


def test_criterion_7_operator_property_suite():
    with criterion(7, "closure-operator laws over every subset of every n <= 3 space"):
        pairs = (
            (lambda s, a: s.closure(a), lambda s, a: s.interior(a)),
            (operators.semi_closure, operators.semi_interior),
            (operators.cstar_closure, operators.cstar_interior),
            (gensets.scstar_closure, gensets.scstar_interior),
        )
        for space in all_spaces_up_to(3):
            for close, interior in pairs:
                for a in space.subsets():
                    c = close(space, a)
                    assert a & c == a  # extensive
                    assert close(space, c) == c  # idempotent
                    assert interior(space, a) == space.complement(
                        close(space, space.complement(a))
                    )  # dual
                for a in space.subsets():
                    for b in space.subsets():
                        if a & b == a:
                            assert close(space, a) & close(space, b) == close(space, a)
        # the only monitored law: closures landing back in their class; any
        # violation must be routed into the discrepancy report
        monitors = closure_monitor_violations(3)
        report = paper_report(monitor_bound=3)
        rows = {r.claim: r for r in report.rows}
        for name, witness in monitors.items():
            row = rows[f"monitor:{name}(n<=3)"]
            if witness is None:
                assert row.status == "AGREE"
            else:
                assert row.status == "DISAGREE" and row.witness is not None


def test_criterion_8_discrepancy_detection(capsys):
    with criterion(8, "paper-report flags exactly the engine/claim disagreements"):
        report = paper_report(monitor_bound=4)
        fixture_rows = [r for r in report.rows if r.row == "fixture"]
        covered = {r.fixture for r in fixture_rows}
        assert {"example-2.5", "example-2.6", "example-2.7", "example-2.8", "example-2.9"} <= covered

        regular_row = next(
            r for r in fixture_rows if r.fixture == "example-2.8" and r.claim == "axiom:regular"
        )
        oracle = from_space(FIXTURES["example-2.8"]).regular()
        assert regular_row.engine == oracle

        exit_code = main(["paper-report", "--format", "json"])
        capsys.readouterr()
        assert exit_code == (1 if report.has_disagreement else 0)
        assert report.has_disagreement == any(r.status == "DISAGREE" for r in report.rows)


def test_criterion_9_byte_identical_reports():
    with criterion(9, "suite reports byte-identical across runs and worker counts"):
        kwargs = dict(space_bound=3, map_bound=2, pair_bound=2)
        first = run_suite(workers=1, **kwargs)
        second = run_suite(workers=1, **kwargs)
        parallel = run_suite(workers=2, **kwargs)
        assert first == second == parallel
        for line in first.splitlines():
            json.loads(line)

        report_a = paper_report(monitor_bound=3).to_json_lines()
        report_b = paper_report(monitor_bound=3).to_json_lines()
        assert report_a == report_b
