"""Space-level separation axioms and their alternative characterizations.

Every predicate is the literal quantified statement, evaluated over the
exact families it names (closed sets, regular-closed sets, SC*-open sets,
...).  Where a notion has two accepted formulations, both are implemented
and their agreement is monitored by the report machinery instead of being
assumed:

  scstar-t1            every singleton is SC*-closed (primary form)
  scstar-t1-pairwise   distinct points are told apart by SC*-open sets
  scstar-normal        disjoint closed sets split by disjoint SC*-open sets
  scstar-normal-shrinking   closed J <= open I admits an SC*-open M with
                            J <= M <= SC*-cl(M) <= I

scstar-compact is constant true here: on a finite space every cover is
already finite, so any subcover requirement is met trivially.
"""

from __future__ import annotations

from . import gensets, operators
from .spaces import Space, bit_indices

AXIOM_TAGS = (
    "regular",
    "g-regular",
    "scstar-regular",
    "softly-regular",
    "almost-regular",
    "weakly-regular",
    "alpha-regular",
    "strongly-rg-regular",
    "scstar-t1",
    "scstar-t2",
    "scstar-t3",
    "scstar-normal",
    "scstar-compact",
)

SECONDARY_TAGS = ("scstar-t1-pairwise", "scstar-normal-shrinking")

VARIANT_TAGS = (
    "def-2.1",
    "t2.10-ii",
    "t2.10-iii",
    "t2.10-iv",
    "t2.10-v",
    "t2.11",
    "t4.12-ii",
    "t4.12-iii",
    "t4.12-iv",
)


def _g_open_family(space: Space) -> tuple[int, ...]:
    return space._memo(
        "fam:g-open",
        lambda: tuple(
            a
            for a in space.subsets()
            if gensets.g_closed(space, space.complement(a))
        ),
    )


def _alpha_open_family(space: Space) -> tuple[int, ...]:
    return operators.alpha_open_family(space)


def _pi_closed_family(space: Space) -> tuple[int, ...]:
    return space._memo(
        "fam:pi-closed",
        lambda: tuple(
            a
            for a in space.subsets()
            if operators.pi_open(space, space.complement(a))
        ),
    )


def _rg_closed_family(space: Space) -> tuple[int, ...]:
    return space._memo(
        "fam:rg-closed",
        lambda: tuple(a for a in space.subsets() if gensets.rg_closed(space, a)),
    )


def _exists_disjoint_pair(family, around: int, point_bit: int) -> bool:
    """Disjoint U, V from ``family`` with around <= U and point_bit in V."""
    for u in family:
        if around & u == around:
            rest = ~u
            for v in family:
                if v & point_bit and v & rest == v:
                    return True
    return False


def _point_vs_closed(space: Space, closed_like, separating) -> bool:
    for f in closed_like:
        for x in bit_indices(space.complement(f)):
            if not _exists_disjoint_pair(separating, f, 1 << x):
                return False
    return True


def _regular(space: Space) -> bool:
    return _point_vs_closed(space, space.closed_sets, space.opens)


def _g_regular(space: Space) -> bool:
    return _point_vs_closed(space, space.closed_sets, _g_open_family(space))


def _scstar_regular(space: Space) -> bool:
    return _point_vs_closed(
        space, space.closed_sets, gensets.scstar_open_family(space)
    )


def _alpha_regular(space: Space) -> bool:
    return _point_vs_closed(space, space.closed_sets, _alpha_open_family(space))


def _softly_regular(space: Space) -> bool:
    return _point_vs_closed(space, _pi_closed_family(space), space.opens)


def _almost_regular(space: Space) -> bool:
    return _point_vs_closed(
        space, operators.regular_closed_family(space), space.opens
    )


def _strongly_rg_regular(space: Space) -> bool:
    return _point_vs_closed(space, _rg_closed_family(space), space.opens)


def _weakly_regular(space: Space) -> bool:
    for u in operators.regular_open_family(space):
        for x in bit_indices(u):
            bit = 1 << x
            hit = False
            for v in space.opens:
                cv = space.closure(v)
                if v & bit and v & cv == v and cv & u == cv:
                    hit = True
                    break
            if not hit:
                return False
    return True


def _scstar_t1(space: Space) -> bool:
    return all(gensets.is_scstar_closed(space, 1 << x) for x in range(space.n))


def _scstar_t1_pairwise(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for x in range(space.n):
        for y in range(space.n):
            if x == y:
                continue
            xb, yb = 1 << x, 1 << y
            if not any(u & xb and not u & yb for u in family):
                return False
    return True


def _scstar_t2(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for x in range(space.n):
        for y in range(x + 1, space.n):
            xb, yb = 1 << x, 1 << y
            if not any(
                u & xb and any(v & yb and not u & v for v in family) for u in family
            ):
                return False
    return True


def _t2_classical(space: Space) -> bool:
    for x in range(space.n):
        for y in range(x + 1, space.n):
            xb, yb = 1 << x, 1 << y
            if not any(
                u & xb and any(v & yb and not u & v for v in space.opens)
                for u in space.opens
            ):
                return False
    return True


def _scstar_normal(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    closeds = space.closed_sets
    for f in closeds:
        for g in closeds:
            if f & g:
                continue
            ok = False
            for u in family:
                if f & u == f:
                    rest = ~u
                    if any(g & v == g and v & rest == v for v in family):
                        ok = True
                        break
            if not ok:
                return False
    return True


def _scstar_normal_shrinking(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for j in space.closed_sets:
        for i in space.opens:
            if j & i != j:
                continue
            hit = False
            for m in family:
                cm = gensets.scstar_closure(space, m)
                if j & m == j and m & cm == m and cm & i == cm:
                    hit = True
                    break
            if not hit:
                return False
    return True


def _scstar_compact(space: Space) -> bool:
    return True


_AXIOMS = {
    "regular": _regular,
    "g-regular": _g_regular,
    "scstar-regular": _scstar_regular,
    "softly-regular": _softly_regular,
    "almost-regular": _almost_regular,
    "weakly-regular": _weakly_regular,
    "alpha-regular": _alpha_regular,
    "strongly-rg-regular": _strongly_rg_regular,
    "scstar-t1": _scstar_t1,
    "scstar-t2": _scstar_t2,
    "scstar-normal": _scstar_normal,
    "scstar-compact": _scstar_compact,
    "scstar-t1-pairwise": _scstar_t1_pairwise,
    "scstar-normal-shrinking": _scstar_normal_shrinking,
    "t2": _t2_classical,
}


def axiom(space: Space, tag: str) -> bool:
    """Truth of one separation axiom on ``space`` (memoized per space)."""
    if tag == "scstar-t3":
        return axiom(space, "scstar-regular") and axiom(space, "scstar-t1")
    try:
        fn = _AXIOMS[tag]
    except KeyError:
        raise ValueError(f"unknown axiom tag {tag!r}") from None
    return space._memo(f"axiom:{tag}", lambda: fn(space))


# -- alternative characterizations of SC*-regularity -------------------------


def _v_t2_10_ii(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for m in space.opens:
        for x in bit_indices(m):
            bit = 1 << x
            hit = False
            for nn in family:
                cn = gensets.scstar_closure(space, nn)
                if nn & bit and nn & cn == nn and cn & m == cn:
                    hit = True
                    break
            if not hit:
                return False
    return True


def _closed_is_intersection_of_scstar_closures(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for f in space.closed_sets:
        acc = space.full
        for nn in family:
            if f & nn == f:
                acc &= gensets.scstar_closure(space, nn)
        if acc != f:
            return False
    return True


def _v_t2_10_iv(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for j in space.subsets():
        for m in space.opens:
            if not j & m:
                continue
            if not any(
                j & nn and gensets.scstar_closure(space, nn) & m
                == gensets.scstar_closure(space, nn)
                for nn in family
            ):
                return False
    return True


def _v_t2_10_v(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for j in space.subsets():
        if j == 0:
            continue
        for f in space.closed_sets:
            if j & f:
                continue
            ok = False
            for nn in family:
                if not j & nn:
                    continue
                rest = ~nn
                if any(f & w == f and w & rest == w for w in family):
                    ok = True
                    break
            if not ok:
                return False
    return True


def _v_t2_11(space: Space) -> bool:
    family = gensets.scstar_open_family(space)
    for f in space.closed_sets:
        for x in bit_indices(space.complement(f)):
            bit = 1 << x
            ok = False
            for m in family:
                if not m & bit:
                    continue
                cm = gensets.scstar_closure(space, m)
                for nn in family:
                    if f & nn == f and not cm & gensets.scstar_closure(space, nn):
                        ok = True
                        break
                if ok:
                    break
            if not ok:
                return False
    return True


def _v_t4_12_ii(space: Space) -> bool:
    sc = gensets.scstar_open_family(space)
    gsc = gensets.gscstar_open_family(space)
    for f in space.closed_sets:
        for x in bit_indices(space.complement(f)):
            bit = 1 << x
            ok = False
            for m in sc:
                if m & bit:
                    rest = ~m
                    if any(f & nn == f and nn & rest == nn for nn in gsc):
                        ok = True
                        break
            if not ok:
                return False
    return True


def _v_t4_12_iii(space: Space) -> bool:
    # Nonempty J, as in the t2.10-v clause of the same shape.
    sc = gensets.scstar_open_family(space)
    gsc = gensets.gscstar_open_family(space)
    for j in space.subsets():
        if j == 0:
            continue
        for f in space.closed_sets:
            if j & f:
                continue
            ok = False
            for m in sc:
                if j & m:
                    rest = ~m
                    if any(f & nn == f and nn & rest == nn for nn in gsc):
                        ok = True
                        break
            if not ok:
                return False
    return True


_VARIANTS = {
    "def-2.1": _scstar_regular,
    "t2.10-ii": _v_t2_10_ii,
    "t2.10-iii": _closed_is_intersection_of_scstar_closures,
    "t2.10-iv": _v_t2_10_iv,
    "t2.10-v": _v_t2_10_v,
    "t2.11": _v_t2_11,
    "t4.12-ii": _v_t4_12_ii,
    "t4.12-iii": _v_t4_12_iii,
    "t4.12-iv": _closed_is_intersection_of_scstar_closures,
}


def scstar_regular_variant(space: Space, tag: str) -> bool:
    """One of the alternative SC*-regularity characterizations, literally."""
    try:
        fn = _VARIANTS[tag]
    except KeyError:
        raise ValueError(f"unknown variant tag {tag!r}") from None
    return space._memo(f"variant:{tag}", lambda: fn(space))


def classify_space(space: Space) -> dict[str, bool]:
    """Axiom vector: every axiom tag, both monitored forms, every variant."""
    out = {tag: axiom(space, tag) for tag in AXIOM_TAGS}
    for tag in SECONDARY_TAGS:
        out[tag] = axiom(space, tag)
    for tag in VARIANT_TAGS:
        out[tag] = scstar_regular_variant(space, tag)
    return out
