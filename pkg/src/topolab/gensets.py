"""SC*-closed sets, their closure operator, and the generalized classes.

A set A is SC*-closed when the semi-closure of A is contained in every
c*-open superset of A.  SC*-open is the complement notion; SC*-closure /
SC*-interior are the literal intersection / union over the respective
family, again without assuming the result lands back in the family.

The generalized classes quantify a closure-containment condition over a
family of supersets:

  g-closed        cl(A) <= U        for every open U >= A
  rg-closed       cl(A) <= U        for every regular-open U >= A
  gscstar-closed  SC*-cl(A) <= U    for every open U >= A
  scstarg-closed  SC*-cl(A) <= U    for every SC*-open U >= A

Open variants are the complement duals.
"""

from __future__ import annotations

from . import operators
from .spaces import Space

GEN_CLASS_TAGS = (
    "scstar-closed",
    "scstar-open",
    "g-closed",
    "g-open",
    "rg-closed",
    "rg-open",
    "gscstar-closed",
    "gscstar-open",
    "scstarg-closed",
    "scstarg-open",
)

# Unified tag namespace for classifying a single subset.
SET_CLASS_TAGS = ("open", "closed") + operators.KERNEL_CLASS_TAGS + GEN_CLASS_TAGS


def is_scstar_closed(space: Space, a: int) -> bool:
    """semi-closure(a) <= U for every c*-open U containing a."""
    scl = operators.semi_closure(space, a)
    for u in operators.cstar_open_family(space):
        if a & u == a and scl & u != scl:
            return False
    return True


def is_scstar_open(space: Space, a: int) -> bool:
    return is_scstar_closed(space, space.complement(a))


def scstar_closed_family(space: Space) -> tuple[int, ...]:
    return space._memo(
        "fam:scstar-closed",
        lambda: tuple(a for a in space.subsets() if is_scstar_closed(space, a)),
    )


def scstar_open_family(space: Space) -> tuple[int, ...]:
    """All SC*-open subsets in canonical order."""
    return space._memo(
        "fam:scstar-open",
        lambda: tuple(
            sorted(space.complement(a) for a in scstar_closed_family(space))
        ),
    )


def _scstar_closed_set(space: Space) -> frozenset[int]:
    return space._memo(
        "set:scstar-closed", lambda: frozenset(scstar_closed_family(space))
    )


def _scstar_open_set(space: Space) -> frozenset[int]:
    return space._memo("set:scstar-open", lambda: frozenset(scstar_open_family(space)))


def scstar_closure(space: Space, a: int) -> int:
    """Intersection of all SC*-closed supersets of ``a``."""

    def compute(m: int) -> int:
        acc = space.full
        for b in scstar_closed_family(space):
            if m & b == m:
                acc &= b
        return acc

    return space._memo_table("scstarcl", a, compute)


def scstar_interior(space: Space, a: int) -> int:
    """Union of all SC*-open subsets of ``a``."""

    def compute(m: int) -> int:
        acc = 0
        for b in scstar_open_family(space):
            if b & m == b:
                acc |= b
        return acc

    return space._memo_table("scstarint", a, compute)


def _closure_contained(space: Space, a: int, closure_of_a: int, family) -> bool:
    for u in family:
        if a & u == a and closure_of_a & u != closure_of_a:
            return False
    return True


def g_closed(space: Space, a: int) -> bool:
    return _closure_contained(space, a, space.closure(a), space.opens)


def rg_closed(space: Space, a: int) -> bool:
    return _closure_contained(
        space, a, space.closure(a), operators.regular_open_family(space)
    )


def gscstar_closed(space: Space, a: int) -> bool:
    return _closure_contained(space, a, scstar_closure(space, a), space.opens)


def scstarg_closed(space: Space, a: int) -> bool:
    return _closure_contained(
        space, a, scstar_closure(space, a), scstar_open_family(space)
    )


_GEN_CLOSED = {
    "scstar-closed": is_scstar_closed,
    "g-closed": g_closed,
    "rg-closed": rg_closed,
    "gscstar-closed": gscstar_closed,
    "scstarg-closed": scstarg_closed,
}


def generalized_class(space: Space, a: int, tag: str) -> bool:
    """Membership in one of the generalized closed/open classes."""
    if tag in _GEN_CLOSED:
        return _GEN_CLOSED[tag](space, a)
    base = tag.replace("-open", "-closed")
    if base in _GEN_CLOSED:
        return _GEN_CLOSED[base](space, space.complement(a))
    raise ValueError(f"unknown generalized-class tag {tag!r}")


def gscstar_open(space: Space, a: int) -> bool:
    return gscstar_closed(space, space.complement(a))


def gscstar_open_family(space: Space) -> tuple[int, ...]:
    return space._memo(
        "fam:gscstar-open",
        lambda: tuple(a for a in space.subsets() if gscstar_open(space, a)),
    )


def set_class(space: Space, a: int, tag: str) -> bool:
    """Unified dispatch over every set-class tag (open/closed included)."""
    if tag == "open":
        return space.is_open(a)
    if tag == "closed":
        return space.is_closed(a)
    if tag in operators.KERNEL_CLASS_TAGS:
        return operators.kernel_class(space, a, tag)
    if tag in GEN_CLASS_TAGS:
        return generalized_class(space, a, tag)
    raise ValueError(f"unknown set-class tag {tag!r}")


def classify_set(space: Space, a: int) -> dict[str, bool]:
    """Class vector: one boolean per set-class tag, in canonical tag order."""
    return {tag: set_class(space, a, tag) for tag in SET_CLASS_TAGS}


# -- clause-by-clause checks of the SC*-closure laws -------------------------


def lemma_1_6_check(space: Space) -> list[dict]:
    """Evaluate the five SC*-closure laws over every subset.

    (i)   x in SC*-cl(J)  iff  every SC*-open set containing x meets J
    (ii)  J SC*-closed    iff  J = SC*-cl(J)
    (iii) J <= I  implies  SC*-cl(J) <= SC*-cl(I)
    (iv)  SC*-cl is idempotent
    (v)   SC*-cl(J) is itself SC*-closed

    Returns the violating (clause, set, witness) records, empty when all hold.
    """
    violations: list[dict] = []
    opens_scstar = scstar_open_family(space)
    closed_scstar = _scstar_closed_set(space)
    for j in space.subsets():
        clj = scstar_closure(space, j)
        for x in range(space.n):
            bit = 1 << x
            member = bool(clj & bit)
            meets_all = all(u & j for u in opens_scstar if u & bit)
            if member != meets_all:
                violations.append(
                    {"clause": "i", "set": j, "point": x, "member": member}
                )
        if (j in closed_scstar) != (j == clj):
            violations.append({"clause": "ii", "set": j})
        if scstar_closure(space, clj) != clj:
            violations.append({"clause": "iv", "set": j})
        if clj not in closed_scstar:
            violations.append({"clause": "v", "set": j})
    for i in space.subsets():
        cli = scstar_closure(space, i)
        for j in space.subsets():
            if j & i == j:
                clj = scstar_closure(space, j)
                if clj & cli != clj:
                    violations.append({"clause": "iii", "set": j, "superset": i})
    return violations


def lemma_1_7_check(space: Space) -> list[dict]:
    """gSC*-open(J) iff every closed F <= J satisfies F <= SC*-int(J)."""
    violations: list[dict] = []
    for j in space.subsets():
        lhs = gscstar_open(space, j)
        sij = scstar_interior(space, j)
        rhs = all(
            f & sij == f for f in space.closed_sets if f & j == f
        )
        if lhs != rhs:
            violations.append({"clause": "iff", "set": j, "open_side": lhs})
    return violations
