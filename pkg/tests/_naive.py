"""Independent reference model for the tests.

Everything here works on frozensets of labels and scans the powerset
directly from the definitions.  It deliberately shares no representation
or code with the engine; expected values in the tests are frozen from (or
cross-checked against) this model.
"""

from itertools import combinations


def powerset(universe):
    items = sorted(universe)
    out = []
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            out.append(frozenset(combo))
    return out


class Model:
    def __init__(self, universe, opens):
        self.universe = frozenset(universe)
        self.opens = {frozenset(u) for u in opens}
        self.closeds = {self.universe - u for u in self.opens}

    def closure(self, a):
        a = frozenset(a)
        acc = frozenset(self.universe)
        for c in self.closeds:
            if a <= c:
                acc &= c
        return acc

    def interior(self, a):
        a = frozenset(a)
        acc = frozenset()
        for u in self.opens:
            if u <= a:
                acc |= u
        return acc

    def min_open(self, a):
        a = frozenset(a)
        acc = frozenset(self.universe)
        for u in self.opens:
            if a <= u:
                acc &= u
        return acc

    # -- set classes, straight from the inclusions -------------------------

    def regular_open(self, a):
        return frozenset(a) == self.interior(self.closure(a))

    def semi_open(self, a):
        return frozenset(a) <= self.closure(self.interior(a))

    def semi_closed(self, a):
        return self.semi_open(self.universe - frozenset(a))

    def alpha_open(self, a):
        return frozenset(a) <= self.interior(self.closure(self.interior(a)))

    def cstar_open(self, a):
        a = frozenset(a)
        return self.interior(self.closure(a)) <= a <= self.closure(self.interior(a))

    def cstar_closed(self, a):
        return self.cstar_open(self.universe - frozenset(a))

    def pi_open(self, a):
        a = frozenset(a)
        acc = frozenset()
        for r in powerset(self.universe):
            if self.regular_open(r) and r <= a:
                acc |= r
        return acc == a

    def semi_closure(self, a):
        a = frozenset(a)
        acc = frozenset(self.universe)
        for b in powerset(self.universe):
            if a <= b and self.semi_closed(b):
                acc &= b
        return acc

    def semi_interior(self, a):
        a = frozenset(a)
        acc = frozenset()
        for b in powerset(self.universe):
            if b <= a and self.semi_open(b):
                acc |= b
        return acc

    def cstar_closure(self, a):
        a = frozenset(a)
        acc = frozenset(self.universe)
        for b in powerset(self.universe):
            if a <= b and self.cstar_closed(b):
                acc &= b
        return acc

    def scstar_closed(self, a):
        a = frozenset(a)
        scl = self.semi_closure(a)
        for u in powerset(self.universe):
            if self.cstar_open(u) and a <= u and not scl <= u:
                return False
        return True

    def scstar_closure(self, a):
        a = frozenset(a)
        acc = frozenset(self.universe)
        for b in powerset(self.universe):
            if a <= b and self.scstar_closed(b):
                acc &= b
        return acc

    def g_closed(self, a):
        a = frozenset(a)
        cl = self.closure(a)
        return all(cl <= u for u in self.opens if a <= u)

    def rg_closed(self, a):
        a = frozenset(a)
        cl = self.closure(a)
        for u in powerset(self.universe):
            if self.regular_open(u) and a <= u and not cl <= u:
                return False
        return True

    def gscstar_closed(self, a):
        a = frozenset(a)
        cl = self.scstar_closure(a)
        return all(cl <= u for u in self.opens if a <= u)

    def scstarg_closed(self, a):
        a = frozenset(a)
        cl = self.scstar_closure(a)
        for u in powerset(self.universe):
            if self.scstar_closed(self.universe - u) and a <= u and not cl <= u:
                return False
        return True

    # -- axioms -------------------------------------------------------------

    def regular(self):
        for f in self.closeds:
            for x in self.universe - f:
                if not any(
                    f <= u and x in v and not u & v
                    for u in self.opens
                    for v in self.opens
                ):
                    return False
        return True


def from_space(space):
    """Build the reference model from an engine Space."""
    universe = set(space.labels)
    opens = [set(space.labels_of(u)) for u in space.opens]
    return Model(universe, opens)
