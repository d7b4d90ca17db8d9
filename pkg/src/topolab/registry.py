"""Registered claim checks, exhaustive sweeps, and implication search.

Each registered check quantifies one claim over every structure within a
size bound (labeled topologies, maps between them, or composable map
pairs) and yields either ``verified`` with the instance count or the
first counterexample in canonical enumeration order.  Counterexample
witnesses are serialized as space/map documents so they replay through
the predicate modules in a fresh process.

Sweeps distribute work across processes by striding over top-level units;
results merge by canonical index, so the worker count never changes the
output.  Reports carry no wall-clock data unless timing is requested,
keeping the JSON byte-identical across runs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import gensets, separation
from .enumeration import all_spaces_up_to
from .maps import (
    MAP_PROPERTY_TAGS,
    FiniteMap,
    all_assignments,
    compose,
    covering_condition,
    image,
    lemma_3_4_check,
    lemma_5_5_check,
    lemma_5_6_check,
    map_doc,
    map_property,
    parse_map_doc,
    preimage,
)
from .spaces import Space, parse_space_doc, space_doc

MAX_SPACE_BOUND = 5
MAX_MAP_BOUND = 4

DEFAULT_CONFIG = {"hausdorff": "scstar-t2"}


class UnknownTheorem(ValueError):
    def __init__(self, theorem_id: str) -> None:
        super().__init__(f"unknown theorem id {theorem_id!r}")


def _labels(space: Space, mask: int) -> list[str]:
    return list(space.labels_of(mask))


# ---------------------------------------------------------------------------
# space-level checks
# ---------------------------------------------------------------------------


def _check_r1_4(space: Space, cfg) -> tuple[bool, dict | None]:
    """Set-class chain: closed => SC*-closed, SC*-closed <=> SC*g <=> gSC*."""
    for a in space.subsets():
        sc = gensets.is_scstar_closed(space, a)
        if space.is_closed(a) and not sc:
            return True, {"clause": "closed-implies-scstar-closed", "set": _labels(space, a)}
        if sc != gensets.scstarg_closed(space, a):
            return True, {"clause": "scstar-closed-iff-scstarg-closed", "set": _labels(space, a)}
        if sc != gensets.gscstar_closed(space, a):
            return True, {"clause": "scstar-closed-iff-gscstar-closed", "set": _labels(space, a)}
    return True, None


def candidate_g_closed_arrows(space: Space) -> dict[str, dict | None]:
    """The three readings of the downward arrow onto g-closed, each tested.

    No single reading is assumed; callers report which ones hold.
    """
    out: dict[str, dict | None] = {}
    for name, hyp in (
        ("closed-implies-g-closed", space.is_closed),
        ("scstar-closed-implies-g-closed", lambda a: gensets.is_scstar_closed(space, a)),
        ("gscstar-closed-implies-g-closed", lambda a: gensets.gscstar_closed(space, a)),
    ):
        witness = None
        for a in space.subsets():
            if hyp(a) and not gensets.g_closed(space, a):
                witness = {"set": _labels(space, a)}
                break
        out[name] = witness
    return out


def _check_l1_6(space: Space, cfg) -> tuple[bool, dict | None]:
    violations = gensets.lemma_1_6_check(space)
    if not violations:
        return True, None
    v = violations[0]
    out = {"clause": v["clause"], "set": _labels(space, v["set"])}
    if "point" in v:
        out["point"] = space.labels[v["point"]]
    if "superset" in v:
        out["superset"] = _labels(space, v["superset"])
    return True, out


def _check_l1_7(space: Space, cfg) -> tuple[bool, dict | None]:
    violations = gensets.lemma_1_7_check(space)
    if not violations:
        return True, None
    v = violations[0]
    return True, {"clause": "gscstar-open-characterization", "set": _labels(space, v["set"])}


REGULARITY_ARROWS = (
    ("strongly-rg-regular", "regular"),
    ("regular", "alpha-regular"),
    ("alpha-regular", "scstar-regular"),
    ("regular", "softly-regular"),
    ("softly-regular", "almost-regular"),
    ("almost-regular", "weakly-regular"),
)


def _check_r2_4(space: Space, cfg) -> tuple[bool, dict | None]:
    engaged = False
    for hyp, concl in REGULARITY_ARROWS:
        if separation.axiom(space, hyp):
            engaged = True
            if not separation.axiom(space, concl):
                return True, {"clause": f"{hyp}-implies-{concl}"}
    return engaged, None


_T2_10_VARIANTS = ("def-2.1", "t2.10-ii", "t2.10-iii", "t2.10-iv", "t2.10-v")


def _check_t2_10(space: Space, cfg) -> tuple[bool, dict | None]:
    values = {v: separation.scstar_regular_variant(space, v) for v in _T2_10_VARIANTS}
    if len(set(values.values())) > 1:
        return True, {"clause": "five-characterizations-agree", "values": values}
    return True, None


def _check_t2_11(space: Space, cfg) -> tuple[bool, dict | None]:
    base = separation.scstar_regular_variant(space, "def-2.1")
    alt = separation.scstar_regular_variant(space, "t2.11")
    if base != alt:
        return True, {
            "clause": "disjoint-scstar-closures-characterization",
            "values": {"def-2.1": base, "t2.11": alt},
        }
    return True, None


def _check_t2_13(space: Space, cfg) -> tuple[bool, dict | None]:
    if not separation.axiom(space, "scstar-t3"):
        return False, None
    if not separation.axiom(space, "scstar-t2"):
        return True, {"clause": "scstar-t3-implies-scstar-t2"}
    return True, None


def _check_t2_14(space: Space, cfg) -> tuple[bool, dict | None]:
    if not separation.axiom(space, "scstar-regular"):
        return False, None
    for carrier in range(1, space.full + 1):
        sub = space.subspace(carrier)
        if not separation.axiom(sub, "scstar-regular"):
            return True, {
                "clause": "subspace-stays-scstar-regular",
                "carrier": _labels(space, carrier),
            }
    return True, None


def _check_t2_15(space: Space, cfg) -> tuple[bool, dict | None]:
    hausdorff_tag = "scstar-t2" if cfg["hausdorff"] == "scstar-t2" else "t2"
    if not (separation.axiom(space, "scstar-compact") and separation.axiom(space, hausdorff_tag)):
        return False, None
    if not separation.axiom(space, "scstar-t3"):
        return True, {"clause": "scstar-compact-hausdorff-implies-scstar-t3"}
    return True, None


_T4_12_VARIANTS = ("def-2.1", "t4.12-ii", "t4.12-iii", "t4.12-iv")


def _check_t4_12(space: Space, cfg) -> tuple[bool, dict | None]:
    values = {v: separation.scstar_regular_variant(space, v) for v in _T4_12_VARIANTS}
    if len(set(values.values())) > 1:
        return True, {"clause": "mixed-family-characterizations-agree", "values": values}
    return True, None


# ---------------------------------------------------------------------------
# map-level checks
# ---------------------------------------------------------------------------


def _strongly_scstar_closed_envelope(f: FiniteMap) -> tuple[int, int] | None:
    return covering_condition(
        f,
        f.codomain.subsets(),
        gensets.scstar_open_family(f.domain),
        gensets.scstar_open_family(f.codomain),
    )


def _check_t3_3(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    direct = map_property(f, "strongly-scstar-closed")
    fail = _strongly_scstar_closed_envelope(f)
    if direct != (fail is None):
        out = {
            "clause": "strongly-scstar-closed-envelope",
            "values": {"direct": direct, "envelope": fail is None},
        }
        if fail is not None:
            out["failing-set"] = _labels(f.codomain, fail[0])
        return True, out
    return True, None


def _check_l3_4(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    left, right = lemma_3_4_check(f)
    if left != right:
        return True, {
            "clause": "almost-scstar-irresolute-interior-hull",
            "values": {"direct": left, "hull": right},
        }
    return True, None


def _check_t3_5(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    left = map_property(f, "almost-scstar-irresolute")
    right = True
    for m in gensets.scstar_open_family(f.domain):
        fwd = image(f, gensets.scstar_closure(f.domain, m))
        hull = gensets.scstar_closure(f.codomain, image(f, m))
        if fwd & hull != fwd:
            right = False
            break
    if left != right:
        return True, {
            "clause": "image-of-closure-inclusion",
            "values": {"direct": left, "inclusion": right},
        }
    return True, None


def _implication_check(map_hyps, concl_tag, space_axiom_hyps=(), concl_on="codomain"):
    """Build a map check: all hypotheses => conclusion axiom on one side."""

    def check(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
        for side, tag in space_axiom_hyps:
            space = f.domain if side == "domain" else f.codomain
            if not separation.axiom(space, tag):
                return False, None
        for tag in map_hyps:
            if not map_property(f, tag):
                return False, None
        target = f.codomain if concl_on == "codomain" else f.domain
        if not separation.axiom(target, concl_tag):
            return True, {"clause": f"{concl_on}-is-{concl_tag}"}
        return True, None

    return check


def _space_hyp_filter(space_axiom_hyps):
    def pair_filter(x: Space, y: Space, cfg) -> bool:
        for side, tag in space_axiom_hyps:
            space = x if side == "domain" else y
            if not separation.axiom(space, tag):
                return False
        return True

    return pair_filter


def _check_r4_4(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    arrows = (
        ("closed-map", "scstar-closed-map"),
        ("scstar-closed-map", "gscstar-closed-map"),
        ("scstar-gscstar-closed", "gscstar-closed-map"),
    )
    engaged = False
    for hyp, concl in arrows:
        if map_property(f, hyp):
            engaged = True
            if not map_property(f, concl):
                return True, {"clause": f"{hyp}-implies-{concl}"}
    return engaged, None


def _check_t4_5(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    if not map_property(f, "surjective"):
        return False, None
    gsc_open_y = gensets.gscstar_open_family(f.codomain)
    for clause, tag, fam_x in (
        ("gscstar-closed-open-envelope", "gscstar-closed-map", f.domain.opens),
        (
            "scstar-gscstar-closed-scstar-envelope",
            "scstar-gscstar-closed",
            gensets.scstar_open_family(f.domain),
        ),
    ):
        direct = map_property(f, tag)
        fail = covering_condition(f, f.codomain.subsets(), fam_x, gsc_open_y)
        if direct != (fail is None):
            out = {"clause": clause, "values": {"direct": direct, "envelope": fail is None}}
            if fail is not None:
                out["failing-set"] = _labels(f.codomain, fail[0])
            return True, out
    return True, None


def _check_p4_7(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    if not map_property(f, "surjective"):
        return False, None
    sc_open_y = gensets.scstar_open_family(f.codomain)
    engaged = False
    if map_property(f, "gscstar-closed-map"):
        engaged = True
        fail = covering_condition(f, f.codomain.closed_sets, f.domain.opens, sc_open_y)
        if fail is not None:
            return True, {
                "clause": "closed-set-open-envelope",
                "failing-set": _labels(f.codomain, fail[0]),
            }
    if map_property(f, "scstar-gscstar-closed"):
        engaged = True
        fail = covering_condition(
            f,
            f.codomain.closed_sets,
            gensets.scstar_open_family(f.domain),
            sc_open_y,
        )
        if fail is not None:
            return True, {
                "clause": "closed-set-scstar-envelope",
                "failing-set": _labels(f.codomain, fail[0]),
            }
    return engaged, None


def _check_p4_8(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    if not (map_property(f, "continuous") and map_property(f, "scstar-gscstar-closed")):
        return False, None
    for j in f.domain.subsets():
        if gensets.gscstar_closed(f.domain, j) and not gensets.gscstar_closed(
            f.codomain, image(f, j)
        ):
            return True, {"clause": "image-stays-gscstar-closed", "set": _labels(f.domain, j)}
    return True, None


def _check_p4_10(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    if not (
        map_property(f, "open-map")
        and map_property(f, "scstar-irresolute")
        and map_property(f, "injective")
        and map_property(f, "surjective")
    ):
        return False, None
    for i in f.codomain.subsets():
        if gensets.gscstar_closed(f.codomain, i) and not gensets.gscstar_closed(
            f.domain, preimage(f, i)
        ):
            return True, {
                "clause": "preimage-stays-gscstar-closed",
                "set": _labels(f.codomain, i),
            }
    return True, None


def _check_c5_4(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    engaged = map_property(f, "scstar-irresolute")
    if engaged and not map_property(f, "scstar-gscstar-continuous"):
        return True, {"clause": "scstar-irresolute-implies-scstar-gscstar-continuous"}
    if (
        engaged
        and map_property(f, "injective")
        and map_property(f, "closed-map")
        and separation.axiom(f.codomain, "scstar-regular")
    ):
        if not separation.axiom(f.domain, "scstar-regular"):
            return True, {"clause": "domain-is-scstar-regular"}
    return engaged, None


def _check_l5_5(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    left, right = lemma_5_5_check(f)
    if left != right:
        return True, {
            "clause": "almost-gscstar-closed-regular-open-envelope",
            "values": {"direct": left, "envelope": right},
        }
    return True, None


def _check_l5_6(f: FiniteMap, cfg) -> tuple[bool, dict | None]:
    left, right = lemma_5_6_check(f)
    if left and not right:
        return True, {"clause": "almost-gscstar-closed-closed-set-envelope"}
    return left, None


_T3_6 = _implication_check(
    ("surjective", "continuous", "strongly-scstar-open", "almost-scstar-irresolute"),
    "scstar-regular",
    space_axiom_hyps=(("domain", "scstar-normal"),),
)
_T3_7 = _implication_check(
    ("strongly-scstar-closed", "continuous"),
    "scstar-regular",
    space_axiom_hyps=(("domain", "scstar-regular"),),
)
_T4_14 = _implication_check(
    ("surjective", "continuous", "scstar-open-map", "gscstar-closed-map"),
    "scstar-regular",
    space_axiom_hyps=(("domain", "regular"),),
)
_T4_16 = _implication_check(
    ("surjective", "continuous", "pre-scstar-open", "scstar-gscstar-closed"),
    "scstar-regular",
    space_axiom_hyps=(("domain", "scstar-regular"),),
)
_T5_1 = _implication_check(
    ("surjective", "continuous", "quasi-scstar-closed", "gscstar-closed-map"),
    "regular",
    space_axiom_hyps=(("domain", "scstar-regular"),),
)
_T5_3 = _implication_check(
    ("injective", "closed-map", "scstar-gscstar-continuous"),
    "scstar-regular",
    space_axiom_hyps=(("codomain", "scstar-regular"),),
    concl_on="domain",
)
_T5_7 = _implication_check(
    ("surjective", "continuous", "almost-gscstar-closed"),
    "scstar-regular",
    space_axiom_hyps=(("domain", "regular"),),
)


# ---------------------------------------------------------------------------
# composition checks
# ---------------------------------------------------------------------------


def _check_t4_11(f: FiniteMap, g: FiniteMap, cfg) -> tuple[bool, dict | None]:
    gof = compose(g, f)
    engaged = False
    if (
        map_property(f, "continuous")
        and map_property(f, "surjective")
        and map_property(gof, "gscstar-closed-map")
    ):
        engaged = True
        if not map_property(g, "gscstar-closed-map"):
            return True, {"clause": "outer-map-gscstar-closed"}
    if (
        map_property(f, "gscstar-closed-map")
        and map_property(g, "continuous")
        and map_property(g, "scstar-gscstar-closed")
    ):
        engaged = True
        if not map_property(gof, "gscstar-closed-map"):
            return True, {"clause": "composite-gscstar-closed-via-inner-gscstar"}
    if map_property(f, "closed-map") and map_property(g, "gscstar-closed-map"):
        engaged = True
        if not map_property(gof, "gscstar-closed-map"):
            return True, {"clause": "composite-gscstar-closed-via-inner-closed"}
    return engaged, None


# ---------------------------------------------------------------------------
# the registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    kind: str  # "spaces" | "maps" | "pairs"
    default_bound: int
    description: str
    check: object
    pair_filter: object = None
    notes: tuple[str, ...] = ()


_CHECKS = (
    TheoremCheck("R1.4", "spaces", 4, "set-class chain: closed => SC*-closed <=> SC*g-closed <=> gSC*-closed", _check_r1_4),
    TheoremCheck("L1.6", "spaces", 4, "five SC*-closure laws hold on every subset", _check_l1_6),
    TheoremCheck("L1.7", "spaces", 4, "gSC*-open iff every closed subset sits inside the SC*-interior", _check_l1_7),
    TheoremCheck("R2.4", "spaces", 4, "regularity hierarchy arrows", _check_r2_4),
    TheoremCheck("T2.10", "spaces", 4, "five SC*-regularity characterizations agree", _check_t2_10),
    TheoremCheck("T2.11", "spaces", 4, "SC*-regular iff points and closed sets split by disjoint SC*-closures", _check_t2_11),
    TheoremCheck("T2.13", "spaces", 4, "SC*-T3 implies SC*-T2", _check_t2_13),
    TheoremCheck("T2.14", "spaces", 4, "every subspace of an SC*-regular space is SC*-regular", _check_t2_14),
    TheoremCheck(
        "T2.15", "spaces", 4, "SC*-compact Hausdorff implies SC*-T3", _check_t2_15,
        notes=("hausdorff is evaluated as the configured tag (default scstar-t2, switchable to classical t2)",),
    ),
    TheoremCheck("T3.3", "maps", 3, "strongly-SC*-closed iff the SC*-open envelope condition", _check_t3_3),
    TheoremCheck("L3.4", "maps", 3, "almost-SC*-irresolute iff preimages sit inside the SC*-interior hull", _check_l3_4),
    TheoremCheck(
        "T3.5", "maps", 3, "almost-SC*-irresolute iff images of SC*-closures stay inside SC*-closures", _check_t3_5,
        notes=("right side evaluated as image-of-closure inclusion; the literal inclusion mixes domain and codomain subsets and is not evaluable",),
    ),
    TheoremCheck(
        "T3.6", "maps", 3, "strongly-SC*-open continuous almost-SC*-irresolute surjection carries SC*-normal to SC*-regular", _T3_6,
        pair_filter=_space_hyp_filter((("domain", "scstar-normal"),)),
        notes=("scstar-normal means disjoint closed sets split by disjoint SC*-open sets",),
    ),
    TheoremCheck(
        "T3.7", "maps", 3, "strongly-SC*-closed continuous map carries SC*-regular to SC*-regular", _T3_7,
        pair_filter=_space_hyp_filter((("domain", "scstar-regular"),)),
    ),
    TheoremCheck("R4.4", "maps", 3, "closed maps are SC*-closed; SC*-closed and SC*-gSC*-closed maps are gSC*-closed", _check_r4_4),
    TheoremCheck("T4.5", "maps", 3, "surjections: gSC*-closed (resp. SC*-gSC*-closed) iff the gSC*-open envelope condition", _check_t4_5),
    TheoremCheck("P4.7", "maps", 3, "closed-set envelopes shrink to SC*-open sets for (SC*-)gSC*-closed surjections", _check_p4_7),
    TheoremCheck("P4.8", "maps", 3, "continuous SC*-gSC*-closed maps push gSC*-closed sets forward", _check_p4_8),
    TheoremCheck("P4.10", "maps", 3, "open SC*-irresolute bijections pull gSC*-closed sets back", _check_p4_10),
    TheoremCheck(
        "T4.11", "pairs", 2, "composition laws for gSC*-closed maps", _check_t4_11,
        notes=(
            "second clause read as: inner map gSC*-closed and outer map continuous SC*-gSC*-closed give a gSC*-closed composite",
            "third clause read as: inner map closed and outer map gSC*-closed give a gSC*-closed composite",
        ),
    ),
    TheoremCheck(
        "T4.12", "spaces", 4, "SC*-regularity characterizations with mixed SC*/gSC* families agree", _check_t4_12,
        notes=("the nonempty-subset clause quantifies nonempty sets only",),
    ),
    TheoremCheck(
        "T4.14", "maps", 3, "continuous SC*-open gSC*-closed surjection carries regular to SC*-regular", _T4_14,
        pair_filter=_space_hyp_filter((("domain", "regular"),)),
    ),
    TheoremCheck(
        "T4.16", "maps", 3, "continuous pre-SC*-open SC*-gSC*-closed surjection preserves SC*-regularity", _T4_16,
        pair_filter=_space_hyp_filter((("domain", "scstar-regular"),)),
    ),
    TheoremCheck(
        "T5.1", "maps", 3, "continuous quasi-SC*-closed gSC*-closed surjection carries SC*-regular to regular", _T5_1,
        pair_filter=_space_hyp_filter((("domain", "scstar-regular"),)),
    ),
    TheoremCheck("L5.2", "spaces", 4, "gSC*-open iff every closed subset sits inside the SC*-interior", _check_l1_7),
    TheoremCheck(
        "T5.3", "maps", 3, "closed SC*-gSC*-continuous injection pulls SC*-regularity back", _T5_3,
        pair_filter=_space_hyp_filter((("codomain", "scstar-regular"),)),
    ),
    TheoremCheck("C5.4", "maps", 3, "closed SC*-irresolute injections pull SC*-regularity back", _check_c5_4),
    TheoremCheck("L5.5", "maps", 3, "almost-gSC*-closed iff the regular-open envelope condition", _check_l5_5),
    TheoremCheck("L5.6", "maps", 3, "almost-gSC*-closed maps admit SC*-open envelopes around closed sets", _check_l5_6),
    TheoremCheck(
        "T5.7", "maps", 3, "continuous almost-gSC*-closed surjection carries regular to SC*-regular", _T5_7,
        pair_filter=_space_hyp_filter((("domain", "regular"),)),
    ),
)

REGISTRY = {c.id: c for c in _CHECKS}
THEOREM_IDS = tuple(c.id for c in _CHECKS)


# ---------------------------------------------------------------------------
# sweep execution
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepReport:
    id: str
    bound: int
    verdict: str
    instances: int
    satisfied: int
    witness: dict | None = None
    notes: tuple[str, ...] = ()
    query: dict | None = None
    seconds: float = 0.0

    def to_record(self, timing: bool = False) -> dict:
        rec: dict = {"id": self.id}
        if self.query is not None:
            rec.update(self.query)
        rec["bound"] = self.bound
        rec["verdict"] = self.verdict
        rec["instances"] = self.instances
        rec["satisfied"] = self.satisfied
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.notes:
            rec["notes"] = list(self.notes)
        if timing:
            rec["seconds"] = round(self.seconds, 3)
        return rec

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_record(timing), separators=(",", ":"))

    def to_table(self) -> str:
        head = f"{self.id:22s} bound={self.bound} {self.verdict}"
        body = f" instances={self.instances} satisfied={self.satisfied}"
        lines = [head + body]
        if self.witness is not None:
            lines.append(f"  witness: {json.dumps(self.witness, separators=(', ', ': '))}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _resolve_job(spec):
    """Turn a picklable job spec into (kind, check, pair_filter)."""
    tag = spec[0]
    if tag == "theorem":
        check = REGISTRY[spec[1]]
        return check.kind, check.check, check.pair_filter
    if tag == "impl-axiom":
        hyps, concl = spec[1], spec[2]

        def check_space(space: Space, cfg):
            if not all(_axiom_or_pseudo(space, t) for t in hyps):
                return False, None
            if not _axiom_or_pseudo(space, concl):
                return True, {"clause": f"implies-{concl}"}
            return True, None

        return "spaces", check_space, None
    if tag == "impl-class":
        hyps, concl = spec[1], spec[2]

        def check_sets(space: Space, cfg):
            engaged = False
            for a in space.subsets():
                if all(gensets.set_class(space, a, t) for t in hyps):
                    engaged = True
                    if not gensets.set_class(space, a, concl):
                        return True, {"clause": f"implies-{concl}", "set": _labels(space, a)}
            return engaged, None

        return "spaces", check_sets, None
    if tag == "impl-map":
        hyps, concl = spec[1], spec[2]

        def check_map(f: FiniteMap, cfg):
            if not all(map_property(f, t) for t in hyps):
                return False, None
            if not map_property(f, concl):
                return True, {"clause": f"implies-{concl}"}
            return True, None

        return "maps", check_map, None
    raise ValueError(f"unknown job spec {spec!r}")


def _axiom_or_pseudo(space: Space, tag: str) -> bool:
    if tag == "discrete":
        return len(space.opens) == 1 << space.n
    return separation.axiom(space, tag)


def _chunk_worker(args):
    spec, bound, chunk, nchunks, cfg = args
    kind, check, pair_filter = _resolve_job(spec)
    satisfied = 0
    best = None
    spaces = all_spaces_up_to(bound)
    if kind == "spaces":
        for idx in range(chunk, len(spaces), nchunks):
            sat, violation = check(spaces[idx], cfg)
            satisfied += bool(sat)
            if violation is not None and best is None:
                best = ((idx,), {"space": space_doc(spaces[idx]), **violation})
    elif kind == "maps":
        total_pairs = len(spaces) * len(spaces)
        for p in range(chunk, total_pairs, nchunks):
            x = spaces[p // len(spaces)]
            y = spaces[p % len(spaces)]
            if pair_filter is not None and not pair_filter(x, y, cfg):
                continue
            for midx, assign in enumerate(all_assignments(x, y)):
                f = FiniteMap(x, y, assign)
                sat, violation = check(f, cfg)
                satisfied += bool(sat)
                if violation is not None and best is None:
                    best = ((p, midx), {**map_doc(f), **violation})
    elif kind == "pairs":
        total = len(spaces) ** 3
        nsq = len(spaces) * len(spaces)
        for t in range(chunk, total, nchunks):
            x = spaces[t // nsq]
            y = spaces[t % nsq // len(spaces)]
            z = spaces[t % len(spaces)]
            fs = [FiniteMap(x, y, fa) for fa in all_assignments(x, y)]
            gs = [FiniteMap(y, z, ga) for ga in all_assignments(y, z)]
            combo = 0
            for f in fs:
                for g in gs:
                    sat, violation = check(f, g, cfg)
                    satisfied += bool(sat)
                    if violation is not None and best is None:
                        best = ((t, combo), {"f": map_doc(f), "g": map_doc(g), **violation})
                    combo += 1
    else:
        raise ValueError(kind)
    return satisfied, best


def _count_instances(kind: str, bound: int) -> int:
    spaces = all_spaces_up_to(bound)
    if kind == "spaces":
        return len(spaces)
    if kind == "maps":
        return sum(y.n ** x.n for x in spaces for y in spaces)
    if kind == "pairs":
        return sum(
            (y.n ** x.n) * (z.n ** y.n)
            for x in spaces
            for y in spaces
            for z in spaces
        )
    raise ValueError(kind)


def _run_sweep(spec, kind: str, bound: int, workers: int, cfg) -> tuple[int, int, dict | None]:
    nchunks = max(1, workers)
    args = [(spec, bound, c, nchunks, cfg) for c in range(nchunks)]
    if nchunks == 1:
        results = [_chunk_worker(args[0])]
    else:
        with ProcessPoolExecutor(max_workers=nchunks) as pool:
            results = list(pool.map(_chunk_worker, args))
    satisfied = sum(r[0] for r in results)
    best = None
    for _, candidate in results:
        if candidate is not None and (best is None or candidate[0] < best[0]):
            best = candidate
    witness = best[1] if best is not None else None
    return _count_instances(kind, bound), satisfied, witness


def verify_theorem(
    theorem_id: str,
    bound: int | None = None,
    workers: int = 1,
    hausdorff: str = "scstar-t2",
) -> SweepReport:
    """Sweep one registered claim and report verified / counterexample."""
    try:
        check = REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None
    if bound is None:
        bound = check.default_bound
    limit = MAX_SPACE_BOUND if check.kind == "spaces" else MAX_MAP_BOUND
    if not 1 <= bound <= limit:
        raise ValueError(f"bound for {theorem_id} must be between 1 and {limit}")
    cfg = {"hausdorff": hausdorff}
    start = time.perf_counter()
    instances, satisfied, witness = _run_sweep(
        ("theorem", theorem_id), check.kind, bound, workers, cfg
    )
    notes = check.notes
    if theorem_id == "T2.15":
        notes = notes + (f"hausdorff-form:{hausdorff}",)
    return SweepReport(
        id=theorem_id,
        bound=bound,
        verdict="verified" if witness is None else "counterexample",
        instances=instances,
        satisfied=satisfied,
        witness=witness,
        notes=notes,
        seconds=time.perf_counter() - start,
    )


def check_implication(
    hypothesis: tuple[str, ...],
    conclusion: str,
    bound: int,
    workers: int = 1,
) -> SweepReport:
    """Exhaustively test 'every structure with all hypothesis tags has the
    conclusion tag' over spaces, subsets, or maps, by tag namespace."""
    hypothesis = tuple(hypothesis)
    axiomish = (
        set(separation.AXIOM_TAGS) | set(separation.SECONDARY_TAGS) | {"discrete", "t2"}
    )
    tags = set(hypothesis) | {conclusion}
    if tags <= axiomish:
        spec, kind, limit = ("impl-axiom", hypothesis, conclusion), "spaces", MAX_SPACE_BOUND
    elif tags <= set(gensets.SET_CLASS_TAGS):
        spec, kind, limit = ("impl-class", hypothesis, conclusion), "spaces", MAX_SPACE_BOUND
    elif tags <= set(MAP_PROPERTY_TAGS):
        spec, kind, limit = ("impl-map", hypothesis, conclusion), "maps", MAX_MAP_BOUND
    else:
        raise ValueError(
            "hypothesis and conclusion tags must live in one namespace "
            "(axioms, set classes, or map properties)"
        )
    if not 1 <= bound <= limit:
        raise ValueError(f"bound must be between 1 and {limit}")
    start = time.perf_counter()
    instances, satisfied, witness = _run_sweep(spec, kind, bound, workers, dict(DEFAULT_CONFIG))
    return SweepReport(
        id="implication",
        bound=bound,
        verdict="verified" if witness is None else "counterexample",
        instances=instances,
        satisfied=satisfied,
        witness=witness,
        query={"from": list(hypothesis), "to": conclusion},
        seconds=time.perf_counter() - start,
    )


def replay_witness(
    theorem_id: str, witness: dict, hausdorff: str = "scstar-t2"
) -> dict | None:
    """Re-run a counterexample witness through the predicate modules."""
    try:
        check = REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None
    cfg = {"hausdorff": hausdorff}
    if check.kind == "spaces":
        space = parse_space_doc(witness["space"])
        _, violation = check.check(space, cfg)
        return violation
    if check.kind == "maps":
        f = parse_map_doc(
            {"domain": witness["domain"], "codomain": witness["codomain"], "map": witness["map"]}
        )
        _, violation = check.check(f, cfg)
        return violation
    f = parse_map_doc(witness["f"])
    g = parse_map_doc(witness["g"])
    _, violation = check.check(f, g, cfg)
    return violation


def run_suite(
    space_bound: int = 4,
    map_bound: int = 3,
    pair_bound: int = 2,
    workers: int = 1,
    hausdorff: str = "scstar-t2",
    timing: bool = False,
) -> str:
    """JSON lines for every registered claim at the given bounds."""
    lines = []
    for check in _CHECKS:
        bound = {"spaces": space_bound, "maps": map_bound, "pairs": pair_bound}[check.kind]
        report = verify_theorem(check.id, bound=bound, workers=workers, hausdorff=hausdorff)
        lines.append(report.to_json(timing=timing))
    return "\n".join(lines) + "\n"
