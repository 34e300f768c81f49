"""Finite groups by multiplication table, commutator subgroups, and
abelianization into (rank, torsion) normal form."""

from __future__ import annotations

import itertools

from .intlinalg import AbPresentation


class FinGroup:
    """Finite group: element list plus full multiplication table on indices.

    table[i][j] is the index of elements[i] * elements[j].
    """

    __slots__ = ("elements", "table", "identity", "_index")

    def __init__(self, elements, table, name=None):
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        ident = None
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(n)):
                ident = e
                break
        if ident is None:
            raise ValueError("multiplication table has no identity")
        self.identity = ident

    def __len__(self):
        return len(self.elements)

    def index(self, element):
        return self._index[element]

    def mul(self, i, j):
        return self.table[i][j]

    def inv(self, i):
        row = self.table[i]
        for j in range(len(self.elements)):
            if row[j] == self.identity and self.table[j][i] == self.identity:
                return j
        raise ValueError("element %r has no inverse" % (self.elements[i],))

    def is_valid(self):
        """Exhaustive associativity and inverse check."""
        n = len(self.elements)
        t = self.table
        for i in range(n):
            for j in range(n):
                tij = t[i][j]
                for k in range(n):
                    if t[tij][k] != t[i][t[j][k]]:
                        return False
        try:
            for i in range(n):
                self.inv(i)
        except ValueError:
            return False
        return True

    @classmethod
    def from_mult(cls, elements, op, name=None):
        elements = list(elements)
        idx = {e: i for i, e in enumerate(elements)}
        table = [[idx[op(a, b)] for b in elements] for a in elements]
        return cls(elements, table, name=name)

    @classmethod
    def cyclic(cls, n):
        return cls(list(range(n)), [[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def symmetric3(cls):
        perms = list(itertools.permutations((0, 1, 2)))
        compose = lambda p, q: tuple(p[q[i]] for i in range(3))
        return cls.from_mult(perms, compose)

    def subgroup_closure(self, generator_indices):
        """Indices of the subgroup generated by the given elements."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = sorted(set(generator_indices) | {self.identity})
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def commutator_subgroup(self):
        n = len(self.elements)
        comms = set()
        for i in range(n):
            ii = self.inv(i)
            for j in range(n):
                comms.add(self.table[self.table[i][j]][self.table[ii][self.inv(j)]])
        return self.subgroup_closure(comms)

    def quotient(self, normal_indices):
        """Quotient by a normal subgroup; cosets labelled by least member."""
        nset = set(normal_indices)
        n = len(self.elements)
        coset_of = [None] * n
        reps = []
        for x in range(n):
            if coset_of[x] is not None:
                continue
            members = sorted(self.table[h][x] for h in nset)
            rep = members[0]
            reps.append(rep)
            for m in members:
                coset_of[m] = rep
        rep_index = {r: k for k, r in enumerate(reps)}
        table = [[rep_index[coset_of[self.table[a][b]]] for b in reps] for a in reps]
        quot = FinGroup(reps, table)
        return quot, [rep_index[coset_of[x]] for x in range(n)]


def decompose_abelian(group):
    """AbPresentation of an abelian FinGroup (generators = its elements)."""
    n = len(group.elements)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * n
            row[i] += 1
            row[j] += 1
            row[group.table[i][j]] -= 1
            rows.append(row)
    return AbPresentation(n, rows)


def abelianization(group):
    """G / [G, G] as a normalized presentation, plus the map sending each
    element index of G to its generator vector in the quotient presentation.

    Returns (presentation, coords) where coords[i] is a tuple over the
    presentation's generators (the elements of the abelian quotient).
    """
    commutators = group.commutator_subgroup()
    quot, coset_map = group.quotient(commutators)
    pres = decompose_abelian(quot)
    k = len(quot.elements)
    coords = []
    for x in range(len(group.elements)):
        vec = [0] * k
        vec[coset_map[x]] = 1
        coords.append(tuple(vec))
    return pres, coords
