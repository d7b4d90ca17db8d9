"""Finite topological spaces over bitmask-encoded point sets.

A subset of an n-point ground set (n <= 16) is a plain int whose bit i
says whether point i belongs to the set.  A Space is an immutable,
validated topology: the point count, the point labels, and the family of
open subsets in canonical (ascending bitmask) order.  Everything derived
from a space is a pure function of it; per-space results are memoized on
the instance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

MAX_POINTS = 16

_DEFAULT_LABELS = "abcdefghijklmnop"


class TopologyError(ValueError):
    """A family of subsets failed the topology axioms."""


class MissingEmptyOrFull(TopologyError):
    def __init__(self) -> None:
        super().__init__("family must contain the empty set and the full set")


class NotUnionClosed(TopologyError):
    def __init__(self, u: int, v: int) -> None:
        self.witness = (u, v)
        super().__init__(f"union of members {u:#x} and {v:#x} is not in the family")


class NotIntersectionClosed(TopologyError):
    def __init__(self, u: int, v: int) -> None:
        self.witness = (u, v)
        super().__init__(f"intersection of members {u:#x} and {v:#x} is not in the family")


class EmptyCarrier(TopologyError):
    def __init__(self) -> None:
        super().__init__("subspace carrier must be nonempty")


class SpaceDocError(ValueError):
    """A space document (JSON) violated the wire contract."""


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Space:
    """A validated finite topology.  Construct via :func:`validate_topology`."""

    n: int
    labels: tuple[str, ...]
    opens: tuple[int, ...]
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- basic subset arithmetic ------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def complement(self, a: int) -> int:
        return self.full ^ a

    def subsets(self) -> range:
        """All subsets of the ground set, ascending."""
        return range(1 << self.n)

    def check_subset(self, a: int) -> int:
        if not 0 <= a <= self.full:
            raise ValueError(f"subset {a:#x} has bits outside the {self.n}-point ground set")
        return a

    def subset_of(self, labels: Iterable[str]) -> int:
        """Bitmask for a collection of point labels."""
        mask = 0
        for lab in labels:
            try:
                mask |= 1 << self.labels.index(lab)
            except ValueError:
                raise SpaceDocError(f"unknown point label {lab!r}") from None
        return mask

    def labels_of(self, a: int) -> tuple[str, ...]:
        self.check_subset(a)
        return tuple(self.labels[i] for i in bit_indices(a))

    # -- memoization ------------------------------------------------------

    def _memo(self, key: str, build: Callable):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = build()
            return value

    def _memo_table(self, key: str, a: int, compute: Callable[[int], int]) -> int:
        table = self._cache.setdefault(key, {})
        try:
            return table[a]
        except KeyError:
            value = table[a] = compute(a)
            return value

    # -- the topology itself ----------------------------------------------

    @property
    def opens_set(self) -> frozenset[int]:
        return self._memo("opens_set", lambda: frozenset(self.opens))

    @property
    def closed_sets(self) -> tuple[int, ...]:
        return self._memo(
            "closed_sets", lambda: tuple(sorted(self.full ^ u for u in self.opens))
        )

    @property
    def closed_set_set(self) -> frozenset[int]:
        return self._memo("closed_set_set", lambda: frozenset(self.closed_sets))

    def is_open(self, a: int) -> bool:
        return a in self.opens_set

    def is_closed(self, a: int) -> bool:
        return a in self.closed_set_set

    # -- core operators -----------------------------------------------------

    def closure(self, a: int) -> int:
        """Smallest closed superset: intersection of all closed supersets."""

        def compute(m: int) -> int:
            acc = self.full
            for c in self.closed_sets:
                if m & c == m:
                    acc &= c
            return acc

        return self._memo_table("cl", a, compute)

    def interior(self, a: int) -> int:
        """Largest open subset: union of all open subsets."""

        def compute(m: int) -> int:
            acc = 0
            for u in self.opens:
                if u & m == u:
                    acc |= u
            return acc

        return self._memo_table("int", a, compute)

    def min_open(self, a: int) -> int:
        """Smallest open superset (finite spaces always have one)."""

        def compute(m: int) -> int:
            acc = self.full
            for u in self.opens:
                if m & u == m:
                    acc &= u
            return acc

        return self._memo_table("minopen", a, compute)

    # -- subspaces ----------------------------------------------------------

    def subspace(self, carrier: int) -> "Space":
        """Subspace on ``carrier``: opens are the traces U & carrier, reindexed."""
        self.check_subset(carrier)
        if carrier == 0:
            raise EmptyCarrier()
        points = list(bit_indices(carrier))
        position = {p: i for i, p in enumerate(points)}

        def squeeze(mask: int) -> int:
            out = 0
            for p in bit_indices(mask):
                out |= 1 << position[p]
            return out

        traces = sorted({squeeze(u & carrier) for u in self.opens})
        return Space(
            n=len(points),
            labels=tuple(self.labels[p] for p in points),
            opens=tuple(traces),
            name=self.name,
        )


def validate_topology(
    n: int,
    family: Iterable[int],
    labels: tuple[str, ...] | None = None,
    name: str = "",
) -> Space:
    """Check the topology axioms and return the canonical Space.

    The family must contain the empty and full sets and be closed under
    pairwise union and intersection (finite families, so pairwise closure
    gives arbitrary closure).  Raises a :class:`TopologyError` carrying the
    violating witness pair otherwise.
    """
    if not 1 <= n <= MAX_POINTS:
        raise TopologyError(f"point count must be between 1 and {MAX_POINTS}, got {n}")
    if labels is None:
        labels = tuple(_DEFAULT_LABELS[:n])
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise SpaceDocError("labels must be n distinct point names")
    full = (1 << n) - 1
    members = sorted(set(family))
    for m in members:
        if not 0 <= m <= full:
            raise TopologyError(f"family member {m:#x} has bits outside the ground set")
    member_set = set(members)
    if 0 not in member_set or full not in member_set:
        raise MissingEmptyOrFull()
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if (u | v) not in member_set:
                raise NotUnionClosed(u, v)
            if (u & v) not in member_set:
                raise NotIntersectionClosed(u, v)
    return Space(n=n, labels=labels, opens=tuple(members), name=name)


# -- JSON space documents ---------------------------------------------------
#
# Wire contract:
#   {"name": "...", "points": ["k", "l"], "opens": [[], ["k"], ["k", "l"]]}
# The order of "points" defines the bit order; members of "opens" are
# arrays of labels.  Unknown labels and duplicate points are errors.


def parse_space_doc(doc: dict) -> Space:
    if not isinstance(doc, dict):
        raise SpaceDocError("space document must be a JSON object")
    try:
        points = doc["points"]
        opens = doc["opens"]
    except (KeyError, TypeError):
        raise SpaceDocError("space document needs 'points' and 'opens'") from None
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise SpaceDocError("'points' must be a list of strings")
    if len(set(points)) != len(points):
        raise SpaceDocError("duplicate point label in 'points'")
    n = len(points)
    if not 1 <= n <= MAX_POINTS:
        raise SpaceDocError(f"point count must be between 1 and {MAX_POINTS}, got {n}")
    index = {p: i for i, p in enumerate(points)}
    if not isinstance(opens, list):
        raise SpaceDocError("'opens' must be a list of label arrays")
    family = []
    for member in opens:
        if not isinstance(member, list):
            raise SpaceDocError("each member of 'opens' must be an array of labels")
        mask = 0
        for lab in member:
            if lab not in index:
                raise SpaceDocError(f"unknown point label {lab!r} in 'opens'")
            mask |= 1 << index[lab]
        family.append(mask)
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise SpaceDocError("'name' must be a string")
    return validate_topology(n, family, labels=tuple(points), name=name)


def space_doc(space: Space) -> dict:
    """Canonical JSON form: opens ascending by bitmask, labels in point order."""
    return {
        "name": space.name,
        "points": list(space.labels),
        "opens": [list(space.labels_of(u)) for u in space.opens],
    }


def load_space(path) -> Space:
    import json

    with open(path, "r", encoding="utf-8") as fh:
        return parse_space_doc(json.load(fh))
