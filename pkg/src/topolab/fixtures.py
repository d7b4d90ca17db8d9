"""Bundled example spaces, their recorded claims, and the discrepancy report.

The catalog pairs each fixture space with the verdicts recorded for it
(set-family listings, axiom verdicts, single-set class calls).  The
report replays every claim through the engine and emits AGREE / DISAGREE
rows; it also runs the monitored properties that have no single assumed
reading (closure operators landing back in their class, the regularity
hierarchy arrows, the candidate downward arrows onto g-closed, and the
paired formulations of SC*-T1 / SC*-normal) and routes any violation into
the same report.  The exit status of the CLI command reflects DISAGREE
rows only; INFO rows record outcomes that have no recorded claim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import gensets, operators, separation
from .enumeration import all_spaces_up_to
from .registry import REGULARITY_ARROWS
from .spaces import Space, space_doc, validate_topology


def _space(name: str, points: str, opens: tuple[str, ...]) -> Space:
    labels = tuple(points)
    masks = []
    for member in opens:
        mask = 0
        for ch in member:
            mask |= 1 << labels.index(ch)
        masks.append(mask)
    return validate_topology(len(labels), masks, labels=labels, name=name)


FIXTURES: dict[str, Space] = {
    "example-1.8": _space(
        "example-1.8", "klmn", ("", "k", "l", "kl", "km", "klm", "klmn")
    ),
    "example-2.5": _space(
        "example-2.5", "klmn", ("", "k", "l", "kl", "mn", "kmn", "lmn", "klmn")
    ),
    "example-2.6": _space("example-2.6", "klm", ("", "k", "l", "kl", "klm")),
    "example-2.7": _space(
        "example-2.7", "klmn", ("", "k", "l", "kl", "klm", "kln", "klmn")
    ),
    "example-2.8": _space("example-2.8", "klm", ("", "k", "l", "kl", "km", "klm")),
    "example-2.9": _space("example-2.9", "klm", ("", "k", "lm", "klm")),
}

FIXTURE_NOTES = (
    "example-2.7: the recorded carrier listing is inconsistent with its topology's labels; the fixture reads the points as k,l,m,n",
)


def _powerset_labels(points: tuple[str, ...]) -> list[list[str]]:
    out = []
    for mask in range(1 << len(points)):
        out.append([points[i] for i in range(len(points)) if mask >> i & 1])
    return out


_KLMN = ("k", "l", "m", "n")

# Recorded claims: (fixture, claim id, payload).  Family payloads list the
# member sets in ascending bitmask order over the fixture's point order.
FAMILY_CLAIMS = (
    (
        "example-1.8",
        "closed-sets",
        [[], ["n"], ["l", "n"], ["m", "n"], ["k", "m", "n"], ["l", "m", "n"], ["k", "l", "m", "n"]],
    ),
    (
        "example-1.8",
        "g-closed-sets",
        [
            [],
            ["n"],
            ["k", "n"],
            ["l", "n"],
            ["k", "l", "n"],
            ["m", "n"],
            ["k", "m", "n"],
            ["l", "m", "n"],
            ["k", "l", "m", "n"],
        ],
    ),
    ("example-1.8", "scstar-closed-sets", _powerset_labels(_KLMN)),
    ("example-1.8", "gscstar-closed-sets", _powerset_labels(_KLMN)),
    ("example-1.8", "scstarg-closed-sets", _powerset_labels(_KLMN)),
)

AXIOM_CLAIMS = (
    ("example-2.5", "regular", True),
    ("example-2.5", "g-regular", True),
    ("example-2.5", "scstar-regular", True),
    ("example-2.6", "weakly-regular", True),
    ("example-2.6", "almost-regular", False),
    ("example-2.6", "softly-regular", False),
    ("example-2.7", "almost-regular", True),
    ("example-2.7", "strongly-rg-regular", False),
    ("example-2.8", "regular", True),
    ("example-2.9", "regular", True),
    ("example-2.9", "strongly-rg-regular", False),
)

SET_CLASS_CLAIMS = (("example-2.9", "rg-closed", ["l"], True),)

_FAMILY_ENGINES = {
    "closed-sets": lambda s: s.closed_sets,
    "g-closed-sets": lambda s: tuple(a for a in s.subsets() if gensets.g_closed(s, a)),
    "scstar-closed-sets": gensets.scstar_closed_family,
    "gscstar-closed-sets": lambda s: tuple(
        a for a in s.subsets() if gensets.gscstar_closed(s, a)
    ),
    "scstarg-closed-sets": lambda s: tuple(
        a for a in s.subsets() if gensets.scstarg_closed(s, a)
    ),
}


@dataclass(frozen=True)
class ReportRow:
    row: str  # "fixture" | "monitor" | "info"
    fixture: str | None
    claim: str
    expected: object
    engine: object
    status: str  # "AGREE" | "DISAGREE" | "INFO"
    witness: dict | None = None

    def to_record(self) -> dict:
        rec = {
            "row": self.row,
            "fixture": self.fixture,
            "claim": self.claim,
            "expected": self.expected,
            "engine": self.engine,
            "status": self.status,
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        return rec


@dataclass(frozen=True)
class DiscrepancyReport:
    notes: tuple[str, ...]
    rows: tuple[ReportRow, ...]

    @property
    def has_disagreement(self) -> bool:
        return any(r.status == "DISAGREE" for r in self.rows)

    def to_json_lines(self) -> str:
        lines = [json.dumps({"row": "note", "text": t}, separators=(",", ":")) for t in self.notes]
        lines.extend(
            json.dumps(r.to_record(), separators=(",", ":")) for r in self.rows
        )
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        lines = []
        for note in self.notes:
            lines.append(f"note: {note}")
        for r in self.rows:
            fixture = r.fixture or "-"
            lines.append(f"{r.status:9s} {fixture:14s} {r.claim}")
            if r.status == "DISAGREE":
                lines.append(
                    f"          expected={json.dumps(r.expected)} engine={json.dumps(r.engine)}"
                )
            if r.witness is not None and r.status != "AGREE":
                lines.append(f"          witness: {json.dumps(r.witness, separators=(',', ':'))}")
        agree = sum(r.status == "AGREE" for r in self.rows)
        disagree = sum(r.status == "DISAGREE" for r in self.rows)
        info = len(self.rows) - agree - disagree
        lines.append(f"rows: {agree} agree, {disagree} disagree, {info} info")
        return "\n".join(lines)


def _fixture_rows() -> list[ReportRow]:
    rows = []
    for fixture, claim, expected in FAMILY_CLAIMS:
        space = FIXTURES[fixture]
        engine = [list(space.labels_of(m)) for m in _FAMILY_ENGINES[claim](space)]
        rows.append(
            ReportRow(
                "fixture",
                fixture,
                claim,
                expected,
                engine,
                "AGREE" if engine == expected else "DISAGREE",
            )
        )
    for fixture, tag, expected in AXIOM_CLAIMS:
        space = FIXTURES[fixture]
        engine = separation.axiom(space, tag)
        rows.append(
            ReportRow(
                "fixture",
                fixture,
                f"axiom:{tag}",
                expected,
                engine,
                "AGREE" if engine == expected else "DISAGREE",
            )
        )
    for fixture, tag, labels, expected in SET_CLASS_CLAIMS:
        space = FIXTURES[fixture]
        engine = gensets.set_class(space, space.subset_of(labels), tag)
        rows.append(
            ReportRow(
                "fixture",
                fixture,
                f"class:{tag}:{','.join(labels)}",
                expected,
                engine,
                "AGREE" if engine == expected else "DISAGREE",
            )
        )
    return rows


# -- monitored properties -----------------------------------------------------

_CLOSURE_MONITORS = (
    ("semi-closure", operators.semi_closure, "semi-closed"),
    ("cstar-closure", operators.cstar_closure, "cstar-closed"),
    ("scstar-closure", gensets.scstar_closure, "scstar-closed"),
)


def _in_class(space: Space, mask: int, class_tag: str) -> bool:
    if class_tag == "scstar-closed":
        return gensets.is_scstar_closed(space, mask)
    return operators.kernel_class(space, mask, class_tag)


def closure_monitor_violations(bound: int) -> dict[str, dict | None]:
    """First subset (if any) whose closure leaves its class or fails
    idempotence, per closure operator, over every space within bound."""
    out: dict[str, dict | None] = {}
    for name, op, class_tag in _CLOSURE_MONITORS:
        in_class = None
        idem = None
        for space in all_spaces_up_to(bound):
            for a in space.subsets():
                value = op(space, a)
                if in_class is None and not _in_class(space, value, class_tag):
                    in_class = {
                        "space": space_doc(space),
                        "set": list(space.labels_of(a)),
                        "closure": list(space.labels_of(value)),
                    }
                if idem is None and op(space, value) != value:
                    idem = {
                        "space": space_doc(space),
                        "set": list(space.labels_of(a)),
                    }
            if in_class is not None and idem is not None:
                break
        out[f"{name}-lands-in-class"] = in_class
        out[f"{name}-idempotent"] = idem
    return out


def _first_axiom_gap(bound: int, hyp: str, concl: str) -> dict | None:
    for space in all_spaces_up_to(bound):
        if separation.axiom(space, hyp) and not separation.axiom(space, concl):
            return {"space": space_doc(space)}
    return None


def _first_form_disagreement(bound: int, tag_a: str, tag_b: str) -> dict | None:
    for space in all_spaces_up_to(bound):
        if separation.axiom(space, tag_a) != separation.axiom(space, tag_b):
            return {"space": space_doc(space)}
    return None


def _first_class_gap(bound: int, hyp_tag: str, concl_tag: str) -> dict | None:
    for space in all_spaces_up_to(bound):
        for a in space.subsets():
            if gensets.set_class(space, a, hyp_tag) and not gensets.set_class(
                space, a, concl_tag
            ):
                return {"space": space_doc(space), "set": list(space.labels_of(a))}
    return None


def _monitor_rows(bound: int) -> list[ReportRow]:
    rows = []
    for claim, witness in closure_monitor_violations(bound).items():
        rows.append(
            ReportRow(
                "monitor",
                None,
                f"monitor:{claim}(n<={bound})",
                True,
                witness is None,
                "AGREE" if witness is None else "DISAGREE",
                witness,
            )
        )
    for hyp, concl in (
        ("closed", "scstar-closed"),
        ("scstar-closed", "scstarg-closed"),
        ("scstarg-closed", "scstar-closed"),
        ("scstar-closed", "gscstar-closed"),
        ("gscstar-closed", "scstar-closed"),
    ):
        witness = _first_class_gap(bound, hyp, concl)
        rows.append(
            ReportRow(
                "monitor",
                None,
                f"monitor:{hyp}-implies-{concl}(n<={bound})",
                True,
                witness is None,
                "AGREE" if witness is None else "DISAGREE",
                witness,
            )
        )
    for hyp, concl in (
        ("closed", "g-closed"),
        ("scstar-closed", "g-closed"),
        ("gscstar-closed", "g-closed"),
    ):
        witness = _first_class_gap(bound, hyp, concl)
        rows.append(
            ReportRow(
                "info",
                None,
                f"candidate:{hyp}-implies-{concl}(n<={bound})",
                None,
                witness is None,
                "INFO",
                witness,
            )
        )
    for hyp, concl in REGULARITY_ARROWS:
        witness = _first_axiom_gap(bound, hyp, concl)
        rows.append(
            ReportRow(
                "monitor",
                None,
                f"monitor:{hyp}-implies-{concl}(n<={bound})",
                True,
                witness is None,
                "AGREE" if witness is None else "DISAGREE",
                witness,
            )
        )
    for claim, tag_a, tag_b in (
        ("scstar-t1-forms-agree", "scstar-t1", "scstar-t1-pairwise"),
        ("scstar-normal-forms-agree", "scstar-normal", "scstar-normal-shrinking"),
    ):
        witness = _first_form_disagreement(bound, tag_a, tag_b)
        rows.append(
            ReportRow(
                "monitor",
                None,
                f"monitor:{claim}(n<={bound})",
                True,
                witness is None,
                "AGREE" if witness is None else "DISAGREE",
                witness,
            )
        )
    return rows


def paper_report(monitor_bound: int = 4) -> DiscrepancyReport:
    """Replay every recorded claim and monitored property through the engine."""
    rows = _fixture_rows() + _monitor_rows(monitor_bound)
    return DiscrepancyReport(notes=FIXTURE_NOTES, rows=tuple(rows))
