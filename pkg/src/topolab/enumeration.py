"""Exhaustive enumeration of finite topologies and maps at desk scale.

Two independent routes produce the labeled topologies on n points:

  naive     filter every family over the powerset (n <= 4 only)
  preorder  enumerate reflexive-transitive relations and take their
            up-sets as the open sets (n <= 5; the only route for n = 5)

Both return the same spaces in ascending order of the opens encoding,
which is the canonical sweep order everywhere else.  Homeomorphism
classes come from the permutation-minimal canonical encoding.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .maps import FiniteMap, all_assignments, map_property
from .spaces import Space, bit_indices

MAX_ENUM_POINTS = 5
MAX_NAIVE_POINTS = 4
MAX_MAP_POINTS = 4

_LABELS = "abcde"


class BoundExceeded(ValueError):
    """Requested enumeration is outside the supported desk-scale bounds."""


def _naive_families(n: int) -> list[tuple[int, ...]]:
    size = 1 << n
    must = 1 | (1 << (size - 1))  # family must contain the empty and full subsets
    found = []
    for fam in range(1 << size):
        if fam & must != must:
            continue
        members = [m for m in range(size) if fam >> m & 1]
        ok = True
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not fam >> (u | v) & 1 or not fam >> (u & v) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(members))
    return found


def _preorders(n: int) -> list[tuple[int, ...]]:
    """All reflexive-transitive relations as per-point successor masks."""
    out: list[tuple[int, ...]] = []
    rows: list[int] = []

    def place(k: int) -> None:
        if k == n:
            out.append(tuple(rows))
            return
        for row in range(1 << n):
            if not row >> k & 1:
                continue
            ok = True
            for i in range(k):
                if rows[i] >> k & 1 and row & rows[i] != row:
                    ok = False
                    break
                if row >> i & 1 and rows[i] & row != rows[i]:
                    ok = False
                    break
            if ok:
                rows.append(row)
                place(k + 1)
                rows.pop()

    place(0)
    return out


def _upsets(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    opens = []
    for u in range(1 << n):
        if all(rows[i] & u == rows[i] for i in bit_indices(u)):
            opens.append(u)
    return tuple(opens)


@lru_cache(maxsize=None)
def _labeled(n: int, route: str) -> tuple[Space, ...]:
    if route == "naive":
        families = _naive_families(n)
    elif route == "preorder":
        families = sorted({_upsets(n, rows) for rows in _preorders(n)})
    else:
        raise ValueError(f"unknown enumeration route {route!r}")
    families.sort()
    labels = tuple(_LABELS[:n])
    return tuple(
        Space(n=n, labels=labels, opens=fam, name=f"n{n}-{i:04d}")
        for i, fam in enumerate(families)
    )


def labeled_topologies(n: int, route: str = "preorder") -> tuple[Space, ...]:
    """All labeled topologies on n points, ascending by opens encoding."""
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise BoundExceeded(f"topology enumeration supports 1..{MAX_ENUM_POINTS} points")
    if route == "naive" and n > MAX_NAIVE_POINTS:
        raise BoundExceeded(
            f"the naive route stops at {MAX_NAIVE_POINTS} points; use the preorder route"
        )
    return _labeled(n, route)


def canonical_form(space: Space) -> tuple[int, ...]:
    """Lexicographically minimal opens encoding over all point relabelings."""
    if space.n > MAX_ENUM_POINTS:
        raise BoundExceeded(f"canonical form supports up to {MAX_ENUM_POINTS} points")
    best = None
    for perm in itertools.permutations(range(space.n)):
        relabeled = tuple(
            sorted(_apply_perm(u, perm) for u in space.opens)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def _apply_perm(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for i in bit_indices(mask):
        out |= 1 << perm[i]
    return out


@lru_cache(maxsize=None)
def homeomorphism_classes(n: int, route: str = "preorder") -> tuple[Space, ...]:
    """One representative per class: the space built from the minimal encoding."""
    forms = sorted({canonical_form(s) for s in labeled_topologies(n, route)})
    labels = tuple(_LABELS[:n])
    return tuple(
        Space(n=n, labels=labels, opens=fam, name=f"n{n}-homeo-{i:04d}")
        for i, fam in enumerate(forms)
    )


def enumerate_topologies(n: int, up_to_homeo: bool = False, route: str = "preorder"):
    """Stream spaces in canonical order; representatives only with up_to_homeo."""
    spaces = homeomorphism_classes(n, route) if up_to_homeo else labeled_topologies(n, route)
    yield from spaces


def all_spaces_up_to(nmax: int) -> tuple[Space, ...]:
    """The canonical quantifier domain: every labeled topology on 1..nmax points."""
    out: list[Space] = []
    for n in range(1, nmax + 1):
        out.extend(labeled_topologies(n))
    return tuple(out)


def enumerate_maps(domain: Space, codomain: Space, filters: tuple[str, ...] = ()):
    """All total maps domain -> codomain passing every filter, canonical order."""
    if domain.n > MAX_MAP_POINTS or codomain.n > MAX_MAP_POINTS:
        raise BoundExceeded(f"map enumeration supports up to {MAX_MAP_POINTS} points")
    for assign in all_assignments(domain, codomain):
        f = FiniteMap(domain, codomain, assign)
        if all(map_property(f, tag) for tag in filters):
            yield f
