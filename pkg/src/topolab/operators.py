"""Derived set classes and their closure/interior operators.

Membership tests are evaluated literally from the defining inclusions:

  regular-open   A = int(cl(A))
  semi-open      A <= cl(int(A))
  alpha-open     A <= int(cl(int(A)))
  cstar-open     int(cl(A)) <= A <= cl(int(A))
  pi-open        A is a union of regular-open sets

Each closed variant is the test applied to the complement.  The derived
closures (semi-closure, c*-closure) are literal intersections of all
class-closed supersets; whether that intersection lands back in the class
is *not* assumed here -- it is monitored by the report machinery.
"""

from __future__ import annotations

from .spaces import Space

KERNEL_CLASS_TAGS = (
    "regular-open",
    "regular-closed",
    "semi-open",
    "semi-closed",
    "alpha-open",
    "alpha-closed",
    "cstar-open",
    "cstar-closed",
    "pi-open",
    "pi-closed",
)


def regular_open(space: Space, a: int) -> bool:
    return a == space.interior(space.closure(a))


def semi_open(space: Space, a: int) -> bool:
    c = space.closure(space.interior(a))
    return a & c == a


def alpha_open(space: Space, a: int) -> bool:
    c = space.interior(space.closure(space.interior(a)))
    return a & c == a


def cstar_open(space: Space, a: int) -> bool:
    lo = space.interior(space.closure(a))
    hi = space.closure(space.interior(a))
    return lo & a == lo and a & hi == a


def pi_open(space: Space, a: int) -> bool:
    acc = 0
    for r in regular_open_family(space):
        if r & a == r:
            acc |= r
    return acc == a


_OPEN_PREDICATES = {
    "regular-open": regular_open,
    "semi-open": semi_open,
    "alpha-open": alpha_open,
    "cstar-open": cstar_open,
    "pi-open": pi_open,
}


def kernel_class(space: Space, a: int, tag: str) -> bool:
    """Membership in one of the classical derived classes."""
    if tag in _OPEN_PREDICATES:
        return _OPEN_PREDICATES[tag](space, a)
    base = tag.replace("-closed", "-open")
    if base in _OPEN_PREDICATES:
        return _OPEN_PREDICATES[base](space, space.complement(a))
    raise ValueError(f"unknown set-class tag {tag!r}")


def _family(space: Space, key: str, predicate) -> tuple[int, ...]:
    return space._memo(
        key, lambda: tuple(a for a in space.subsets() if predicate(space, a))
    )


def regular_open_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:regular-open", regular_open)


def regular_closed_family(space: Space) -> tuple[int, ...]:
    return _family(
        space, "fam:regular-closed", lambda s, a: regular_open(s, s.complement(a))
    )


def semi_open_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:semi-open", semi_open)


def semi_closed_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:semi-closed", lambda s, a: semi_open(s, s.complement(a)))


def alpha_open_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:alpha-open", alpha_open)


def cstar_open_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:cstar-open", cstar_open)


def cstar_closed_family(space: Space) -> tuple[int, ...]:
    return _family(
        space, "fam:cstar-closed", lambda s, a: cstar_open(s, s.complement(a))
    )


def pi_open_family(space: Space) -> tuple[int, ...]:
    return _family(space, "fam:pi-open", pi_open)


def _smallest_superset(space: Space, a: int, family: tuple[int, ...]) -> int:
    acc = space.full
    for b in family:
        if a & b == a:
            acc &= b
    return acc


def _largest_subset(space: Space, a: int, family: tuple[int, ...]) -> int:
    acc = 0
    for b in family:
        if b & a == b:
            acc |= b
    return acc


def semi_closure(space: Space, a: int) -> int:
    """Intersection of all semi-closed supersets of ``a``."""
    return space._memo_table(
        "scl", a, lambda m: _smallest_superset(space, m, semi_closed_family(space))
    )


def semi_interior(space: Space, a: int) -> int:
    """Union of all semi-open subsets of ``a``."""
    return space._memo_table(
        "sint", a, lambda m: _largest_subset(space, m, semi_open_family(space))
    )


def cstar_closure(space: Space, a: int) -> int:
    """Intersection of all c*-closed supersets of ``a``."""
    return space._memo_table(
        "cstarcl", a, lambda m: _smallest_superset(space, m, cstar_closed_family(space))
    )


def cstar_interior(space: Space, a: int) -> int:
    """Union of all c*-open subsets of ``a``."""
    return space._memo_table(
        "cstarint", a, lambda m: _largest_subset(space, m, cstar_open_family(space))
    )
