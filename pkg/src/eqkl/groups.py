"""Permutation groups given by generators: enumeration, orbits, stabilizers,
conjugacy classes.

Everything is deterministic: breadth-first searches visit generators in the
order given, so orbit transversals, element enumerations and class
representatives never depend on hashing or timing.  Groups above the
enumeration bound (default 10^7, env EQKL_ENUM_BOUND) can still run orbit and
Schreier-generator computations; only element enumeration is refused.
"""

import os
from collections import deque

from .perms import Perm, popcount

DEFAULT_ENUM_BOUND = 10_000_000


def enum_bound() -> int:
    value = os.environ.get("EQKL_ENUM_BOUND")
    return int(value) if value else DEFAULT_ENUM_BOUND


class EnumerationBoundError(RuntimeError):
    def __init__(self, bound):
        super().__init__(
            f"group has more than {bound} elements; enumeration refused "
            f"(raise EQKL_ENUM_BOUND or supply class representatives)"
        )
        self.bound = bound


class PermGroup:
    def __init__(self, degree: int, generators):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g.is_identity() or g.img in seen:
                continue
            seen.add(g.img)
            gens.append(g)
        self.generators = tuple(gens)
        self._elements = None
        self._classes = None
        self._elem_to_class = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [])

    def key(self):
        return (self.degree, tuple(sorted(g.img for g in self.generators)))

    def elements(self, bound=None) -> list[Perm]:
        """Every element exactly once, in deterministic BFS order."""
        if self._elements is not None:
            return self._elements
        bound = bound or enum_bound()
        ident = Perm.identity(self.degree)
        out = [ident]
        seen = {ident.img}
        queue = deque([ident])
        while queue:
            cur = queue.popleft()
            for g in self.generators:
                nxt = g * cur
                if nxt.img not in seen:
                    if len(out) >= bound:
                        raise EnumerationBoundError(bound)
                    seen.add(nxt.img)
                    out.append(nxt)
                    queue.append(nxt)
        self._elements = out
        return out

    def order(self, bound=None) -> int:
        return len(self.elements(bound))

    def orbit_transversal(self, seed_mask: int) -> list[tuple[int, Perm]]:
        """BFS orbit of a point-set bitmask, with a witness mapping seed to it."""
        ident = Perm.identity(self.degree)
        out = [(seed_mask, ident)]
        seen = {seed_mask}
        queue = deque([(seed_mask, ident)])
        while queue:
            mask, wit = queue.popleft()
            for g in self.generators:
                nmask = g.act_mask(mask)
                if nmask not in seen:
                    seen.add(nmask)
                    entry = (nmask, g * wit)
                    out.append(entry)
                    queue.append(entry)
        return out

    def orbit_of_masks(self, seed_mask: int) -> set[int]:
        return {m for m, _ in self.orbit_transversal(seed_mask)}

    def stabilizer(self, mask: int) -> "PermGroup":
        """Setwise stabilizer, generated by Schreier generators of the orbit."""
        orbit = self.orbit_transversal(mask)
        where = {m: w for m, w in orbit}
        gens = []
        seen = set()
        for m, wit in orbit:
            for g in self.generators:
                target = g.act_mask(m)
                schreier = where[target].inv() * g * wit
                if not schreier.is_identity() and schreier.img not in seen:
                    seen.add(schreier.img)
                    gens.append(schreier)
        return PermGroup(self.degree, gens)

    def subgroup_fixing(self, mask: int) -> "PermGroup":
        """Setwise stabilizer as an explicit element list (enumerable groups)."""
        elems = [g for g in self.elements() if g.fixes_mask(mask)]
        return PermGroup(self.degree, [g for g in elems if not g.is_identity()])

    def conjugacy_classes(self) -> list[tuple[Perm, int]]:
        """(representative, size) per class; identity class first."""
        self._compute_classes()
        return self._classes

    def class_index_of(self, perm: Perm) -> int:
        self._compute_classes()
        return self._elem_to_class[perm.img]

    def _compute_classes(self):
        if self._classes is not None:
            return
        elems = self.elements()
        to_class = {}
        classes = []
        for e in elems:
            if e.img in to_class:
                continue
            idx = len(classes)
            members = [e]
            to_class[e.img] = idx
            queue = deque([e])
            while queue:
                cur = queue.popleft()
                for g in self.generators:
                    conj = g.inv() * cur * g
                    if conj.img not in to_class:
                        to_class[conj.img] = idx
                        members.append(conj)
                        queue.append(conj)
            classes.append((e, len(members)))
        self._classes = classes
        self._elem_to_class = to_class

    def preserves_bases(self, bases_set) -> bool:
        return all(
            all(g.act_mask(b) in bases_set for b in bases_set)
            for g in self.generators
        )

    def is_homomorphism_on_generators(self, action) -> bool:
        """Spot-check that action(g*h) = action(g)*action(h) on generator pairs."""
        gens = self.generators or (Perm.identity(self.degree),)
        for a in gens:
            for b in gens:
                if action(a * b) != action(a) * action(b):
                    return False
        return True

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup.trivial(max(n, 1))
    gens = [Perm.from_cycles(n, [[1, 2]]), Perm.from_cycles(n, [list(range(1, n + 1))])]
    return PermGroup(n, gens)
