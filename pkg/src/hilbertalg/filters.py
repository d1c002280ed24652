"""Filters, the filter lattice, filter congruences, and monomial filters."""

from __future__ import annotations

from dataclasses import dataclass

from .core import InvariantViolation
from .lattice import FiniteLattice


def is_filter(alg, members):
    """True iff members contains the unit and is closed under detachment."""
    if alg.one not in members:
        return False
    imp = alg.imp
    for x in members:
        row = imp[x]
        for y in alg.elements:
            if row[y] in members and y not in members:
                return False
    return True


def is_filter_via_bounds(alg, members):
    """Equivalent test: nonempty, and x <= y -> z with x, y members forces z in."""
    if not members:
        return False
    leq, imp = alg.leq, alg.imp
    for x in members:
        for y in members:
            for z in alg.elements:
                if leq[x][imp[y][z]] and z not in members:
                    return False
    return True


def filter_generated(alg, seed):
    """Least filter including seed, computed as a detachment-closure fixpoint."""
    imp = alg.imp
    members = set(seed)
    members.add(alg.one)
    changed = True
    while changed:
        changed = False
        for x in tuple(members):
            row = imp[x]
            for y in alg.elements:
                if row[y] in members and y not in members:
                    members.add(y)
                    changed = True
    return frozenset(members)


def filter_join(alg, j, k):
    return filter_generated(alg, set(j) | set(k))


def _subset_key(s):
    return (len(s), sorted(s))


class FilterLattice:
    """All filters of an algebra, ordered by inclusion.

    The carrier is found by closing the least filter under joins with
    principal filters, which reaches every filter without scanning all
    2^n subsets.  Construction re-checks the structural facts every filter
    lattice has: bounds {1} and the universe, meet = intersection,
    join = generated union, and distributivity.
    """

    def __init__(self, alg):
        self.alg = alg
        bottom = frozenset([alg.one])
        principal = [filter_generated(alg, [x]) for x in alg.elements]
        found = {bottom}
        frontier = [bottom]
        while frontier:
            current = frontier.pop()
            for p in principal:
                nxt = filter_join(alg, current, p)
                if nxt not in found:
                    found.add(nxt)
                    frontier.append(nxt)
        self.filters = tuple(sorted(found, key=_subset_key))
        self._index = {f: i for i, f in enumerate(self.filters)}
        self.lattice = FiniteLattice(
            [[a <= b for b in self.filters] for a in self.filters]
        )
        self._verify()

    def _verify(self):
        alg = self.alg
        if self.filters[self.lattice.bottom] != frozenset([alg.one]):
            raise InvariantViolation("least filter is not {1}")
        if self.filters[self.lattice.top] != frozenset(alg.elements):
            raise InvariantViolation("greatest filter is not the universe")
        k = len(self.filters)
        for i in range(k):
            for j in range(k):
                meet = self.filters[i] & self.filters[j]
                if meet not in self._index:
                    raise InvariantViolation("filters are not closed under intersection")
                if self.lattice.meet_table[i][j] != self._index[meet]:
                    raise InvariantViolation("filter meet is not intersection")
                join = filter_join(alg, self.filters[i], self.filters[j])
                if self.lattice.join_table[i][j] != self._index[join]:
                    raise InvariantViolation("filter join is not the generated union")
        if not self.lattice.is_distributive:
            raise InvariantViolation("filter lattice is not distributive")

    def __len__(self):
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def index(self, members):
        return self._index[frozenset(members)]


def all_filters(alg):
    return FilterLattice(alg)


def class_of(alg, members, a):
    """Congruence class of a modulo the filter: both implications land in it."""
    imp = alg.imp
    return frozenset(
        b for b in alg.elements if imp[a][b] in members and imp[b][a] in members
    )


@dataclass(frozen=True)
class CongruenceClasses:
    filter: frozenset
    classes: tuple[frozenset, ...]


def congruence_classes(alg, members):
    """Partition of the universe by the filter congruence."""
    classes = []
    assigned = [False] * alg.n
    for a in alg.elements:
        if assigned[a]:
            continue
        cls = class_of(alg, members, a)
        if a not in cls:
            raise InvariantViolation(f"congruence class of {a} does not contain it")
        for b in cls:
            if assigned[b] or class_of(alg, members, b) != cls:
                raise InvariantViolation("congruence classes do not partition the universe")
            assigned[b] = True
        classes.append(cls)
    return CongruenceClasses(frozenset(members), tuple(classes))


def lower_set(alg, members, a):
    """The set of x with x -> a in the filter; an ideal of the algebra."""
    imp = alg.imp
    return frozenset(x for x in alg.elements if imp[x][a] in members)


def monomial_max(alg, members, a):
    """Greatest element of the congruence class of a, or None.

    On a valid algebra a greatest element is automatically unique; several
    maximal candidates can only appear on broken tables and also yield None.
    """
    cls = class_of(alg, members, a)
    leq = alg.leq
    tops = [m for m in cls if all(leq[x][m] for x in cls)]
    if len(tops) == 1:
        return tops[0]
    return None


def is_monomial(alg, members):
    """True iff every congruence class of the filter has a greatest element."""
    return all(monomial_max(alg, members, a) is not None for a in alg.elements)
