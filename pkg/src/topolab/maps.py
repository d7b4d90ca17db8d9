"""Total functions between finite spaces and their preservation properties.

A FiniteMap carries its domain and codomain spaces plus the assignment
table (domain point index -> codomain point index).  Images and preimages
work on bitmasks.  Each property tag is the literal quantified test over
the family its definition names, computed by the operator modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from . import gensets, operators
from .spaces import Space, bit_indices, parse_space_doc, space_doc


class MapValidationError(ValueError):
    """An assignment table violated the map contract."""


class MissingAssignment(MapValidationError):
    def __init__(self, label: str) -> None:
        self.point = label
        super().__init__(f"no assignment for domain point {label!r}")


class UnknownDomainPoint(MapValidationError):
    def __init__(self, label: str) -> None:
        self.point = label
        super().__init__(f"assignment key {label!r} is not a domain point")


class UnknownCodomainPoint(MapValidationError):
    def __init__(self, label: str) -> None:
        self.point = label
        super().__init__(f"assignment value {label!r} is not a codomain point")


MAP_PROPERTY_TAGS = (
    "continuous",
    "open-map",
    "closed-map",
    "surjective",
    "injective",
    "r-map",
    "completely-continuous",
    "rc-continuous",
    "strongly-scstar-open",
    "strongly-scstar-closed",
    "almost-scstar-irresolute",
    "scstar-closed-map",
    "scstarg-closed-map",
    "gscstar-closed-map",
    "quasi-scstar-closed",
    "scstar-scstarg-closed",
    "scstar-gscstar-closed",
    "almost-gscstar-closed",
    "scstar-gscstar-continuous",
    "scstar-irresolute",
    "scstar-open-map",
    "pre-scstar-open",
)


@dataclass(frozen=True)
class FiniteMap:
    domain: Space
    codomain: Space
    assign: tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, point: int) -> int:
        return self.assign[point]


def validate_map(domain: Space, codomain: Space, table: Mapping[str, str]) -> FiniteMap:
    """Enforce totality over domain points and membership of every value."""
    for key in table:
        if key not in domain.labels:
            raise UnknownDomainPoint(key)
    assign = []
    for lab in domain.labels:
        if lab not in table:
            raise MissingAssignment(lab)
        target = table[lab]
        if target not in codomain.labels:
            raise UnknownCodomainPoint(target)
        assign.append(codomain.labels.index(target))
    return FiniteMap(domain, codomain, tuple(assign))


def image(f: FiniteMap, a: int) -> int:
    """Pointwise image of a domain subset."""
    table = f._cache.get("img")
    if table is None:
        bits = [1 << p for p in f.assign]
        table = f._cache["img"] = [
            _or_all(bits, m) for m in range(1 << f.domain.n)
        ]
    return table[a]


def _or_all(bits: list[int], mask: int) -> int:
    acc = 0
    for i in bit_indices(mask):
        acc |= bits[i]
    return acc


def preimage(f: FiniteMap, b: int) -> int:
    """Pointwise preimage of a codomain subset."""
    table = f._cache.get("pre")
    if table is None:
        table = f._cache["pre"] = [
            _pre_of(f.assign, m) for m in range(1 << f.codomain.n)
        ]
    return table[b]


def _pre_of(assign: tuple[int, ...], mask: int) -> int:
    acc = 0
    for i, p in enumerate(assign):
        if mask >> p & 1:
            acc |= 1 << i
    return acc


def compose(g: FiniteMap, f: FiniteMap) -> FiniteMap:
    """g after f; requires f's codomain to be g's domain."""
    if f.codomain != g.domain:
        raise MapValidationError("composition needs matching middle space")
    return FiniteMap(f.domain, g.codomain, tuple(g.assign[p] for p in f.assign))


# -- property predicates ------------------------------------------------------


def _forward(f: FiniteMap, source_family, target_membership) -> bool:
    return all(image(f, a) in target_membership for a in source_family)


def _forward_pred(f: FiniteMap, source_family, target_pred) -> bool:
    return all(target_pred(f.codomain, image(f, a)) for a in source_family)


def _backward(f: FiniteMap, source_family, domain_membership) -> bool:
    return all(preimage(f, b) in domain_membership for b in source_family)


def _scstar_open_set(space: Space) -> frozenset[int]:
    return space._memo(
        "set:scstar-open", lambda: frozenset(gensets.scstar_open_family(space))
    )


def _scstar_closed_set(space: Space) -> frozenset[int]:
    return space._memo(
        "set:scstar-closed", lambda: frozenset(gensets.scstar_closed_family(space))
    )


def _ro_set(space: Space) -> frozenset[int]:
    return space._memo(
        "set:regular-open", lambda: frozenset(operators.regular_open_family(space))
    )


def _rc_set(space: Space) -> frozenset[int]:
    return space._memo(
        "set:regular-closed", lambda: frozenset(operators.regular_closed_family(space))
    )


def _scstar_neighborhood_points(space: Space, p: int) -> int:
    """Points x with some SC*-open O, x in O <= p (cached per superset p)."""

    def compute(mask: int) -> int:
        acc = 0
        for o in gensets.scstar_open_family(space):
            if o & mask == o:
                acc |= o
        return acc

    return space._memo_table("scstar-nbhd", p, compute)


def _almost_scstar_irresolute(f: FiniteMap) -> bool:
    dom, cod = f.domain, f.codomain
    for x in range(dom.n):
        fx_bit = 1 << f.assign[x]
        x_bit = 1 << x
        for nbh in cod.subsets():
            if not _scstar_neighborhood_points(cod, nbh) & fx_bit:
                continue
            back = gensets.scstar_closure(dom, preimage(f, nbh))
            if not _scstar_neighborhood_points(dom, back) & x_bit:
                return False
    return True


def _property(f: FiniteMap, tag: str) -> bool:
    dom, cod = f.domain, f.codomain
    if tag == "continuous":
        return _backward(f, cod.opens, dom.opens_set)
    if tag == "open-map":
        return _forward(f, dom.opens, cod.opens_set)
    if tag == "closed-map":
        return _forward(f, dom.closed_sets, cod.closed_set_set)
    if tag == "surjective":
        return image(f, dom.full) == cod.full
    if tag == "injective":
        return len(set(f.assign)) == dom.n
    if tag == "r-map":
        return _backward(f, operators.regular_open_family(cod), _ro_set(dom))
    if tag == "completely-continuous":
        return _backward(f, cod.opens, _ro_set(dom))
    if tag == "rc-continuous":
        return _backward(f, operators.regular_closed_family(cod), _rc_set(dom))
    if tag in ("strongly-scstar-open", "pre-scstar-open"):
        return _forward(f, gensets.scstar_open_family(dom), _scstar_open_set(cod))
    if tag == "strongly-scstar-closed":
        return _forward(f, gensets.scstar_closed_family(dom), _scstar_closed_set(cod))
    if tag == "almost-scstar-irresolute":
        return _almost_scstar_irresolute(f)
    if tag == "scstar-closed-map":
        return _forward(f, dom.closed_sets, _scstar_closed_set(cod))
    if tag == "scstarg-closed-map":
        return _forward_pred(f, dom.closed_sets, gensets.scstarg_closed)
    if tag == "gscstar-closed-map":
        return _forward_pred(f, dom.closed_sets, gensets.gscstar_closed)
    if tag == "quasi-scstar-closed":
        return _forward(f, gensets.scstar_closed_family(dom), cod.closed_set_set)
    if tag == "scstar-scstarg-closed":
        return _forward_pred(
            f, gensets.scstar_closed_family(dom), gensets.scstarg_closed
        )
    if tag == "scstar-gscstar-closed":
        return _forward_pred(
            f, gensets.scstar_closed_family(dom), gensets.gscstar_closed
        )
    if tag == "almost-gscstar-closed":
        return _forward_pred(
            f, operators.regular_closed_family(dom), gensets.gscstar_closed
        )
    if tag == "scstar-gscstar-continuous":
        return all(
            gensets.gscstar_closed(dom, preimage(f, b))
            for b in gensets.scstar_closed_family(cod)
        )
    if tag == "scstar-irresolute":
        return _backward(f, gensets.scstar_open_family(cod), _scstar_open_set(dom))
    if tag == "scstar-open-map":
        return _forward(f, dom.opens, _scstar_open_set(cod))
    raise ValueError(f"unknown map property tag {tag!r}")


def map_property(f: FiniteMap, tag: str) -> bool:
    """Truth of one property tag for ``f`` (memoized per map)."""
    cache = f._cache.setdefault("prop", {})
    try:
        return cache[tag]
    except KeyError:
        value = cache[tag] = _property(f, tag)
        return value


def classify_map(f: FiniteMap) -> dict[str, bool]:
    """Property vector over every tag, in canonical tag order."""
    return {tag: map_property(f, tag) for tag in MAP_PROPERTY_TAGS}


# -- covering conditions shared by several equivalence checks ----------------


def covering_condition(f: FiniteMap, js, fam_x, fam_y) -> tuple[int, int] | None:
    """First (J, M) with preimage(J) <= M in fam_x but no N in fam_y
    satisfying J <= N and preimage(N) <= M; None when the condition holds."""
    for j in js:
        pj = preimage(f, j)
        for m in fam_x:
            if pj & m != pj:
                continue
            if not any(
                j & nn == j and preimage(f, nn) & m == preimage(f, nn)
                for nn in fam_y
            ):
                return (j, m)
    return None


# -- lemma instances, evaluated as (left, right) pairs ------------------------


def lemma_3_4_check(f: FiniteMap) -> tuple[bool, bool]:
    """(almost-SC*-irresolute, the preimage-interior inclusion for all N)."""
    left = map_property(f, "almost-scstar-irresolute")
    dom = f.domain
    right = True
    for nn in gensets.scstar_open_family(f.codomain):
        pn = preimage(f, nn)
        hull = gensets.scstar_interior(dom, gensets.scstar_closure(dom, pn))
        if pn & hull != pn:
            right = False
            break
    return (left, right)


def lemma_5_5_check(f: FiniteMap) -> tuple[bool, bool]:
    """(almost-gSC*-closed, regular-open covering condition with gSC*-open N)."""
    left = map_property(f, "almost-gscstar-closed")
    right = (
        covering_condition(
            f,
            f.codomain.subsets(),
            operators.regular_open_family(f.domain),
            gensets.gscstar_open_family(f.codomain),
        )
        is None
    )
    return (left, right)


def lemma_5_6_check(f: FiniteMap) -> tuple[bool, bool]:
    """(almost-gSC*-closed, closed-set covering condition with SC*-open N)."""
    left = map_property(f, "almost-gscstar-closed")
    right = (
        covering_condition(
            f,
            f.codomain.closed_sets,
            operators.regular_open_family(f.domain),
            gensets.scstar_open_family(f.codomain),
        )
        is None
    )
    return (left, right)


# -- JSON map documents -------------------------------------------------------
#
# Wire contract:
#   {"domain": <space doc or file reference>,
#    "codomain": <space doc or file reference>,
#    "map": {"k": "a", "l": "a", "m": "b"}}


def parse_map_doc(doc: dict, base_dir=None) -> FiniteMap:
    import json
    import os

    if not isinstance(doc, dict):
        raise MapValidationError("map document must be a JSON object")

    def load_side(key: str) -> Space:
        try:
            side = doc[key]
        except KeyError:
            raise MapValidationError(f"map document needs {key!r}") from None
        if isinstance(side, str):
            path = side if base_dir is None else os.path.join(base_dir, side)
            with open(path, "r", encoding="utf-8") as fh:
                return parse_space_doc(json.load(fh))
        return parse_space_doc(side)

    domain = load_side("domain")
    codomain = load_side("codomain")
    table = doc.get("map")
    if not isinstance(table, dict):
        raise MapValidationError("map document needs a 'map' object")
    return validate_map(domain, codomain, table)


def map_doc(f: FiniteMap) -> dict:
    return {
        "domain": space_doc(f.domain),
        "codomain": space_doc(f.codomain),
        "map": {
            f.domain.labels[i]: f.codomain.labels[p] for i, p in enumerate(f.assign)
        },
    }


def all_assignments(domain: Space, codomain: Space):
    """Every total assignment, lexicographic by the assignment tuple."""
    return itertools.product(range(codomain.n), repeat=domain.n)
