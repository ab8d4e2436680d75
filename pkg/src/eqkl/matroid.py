"""Matroids with an explicit basis family, plus Steiner-system matroids.

Subsets of the ground set are machine-word bitmasks (points 1..n live on bits
0..n-1).  Bases are kept sorted with a hash set for membership.  Matroids
built from Steiner systems carry the block structure, which gives constant
time rank queries and identifies the hyperplanes without subset enumeration;
generic matroids fall back to the basis oracle.
"""

import json
from dataclasses import dataclass
from itertools import combinations
from random import Random

from .groups import PermGroup
from .perms import mask_of, points_of, popcount

EXHAUSTIVE_EXCHANGE_LIMIT = 12


class MatroidError(ValueError):
    pass


@dataclass(frozen=True)
class SteinerSystem:
    d: int
    block_size: int
    n: int
    blocks: tuple[int, ...]  # bitmasks

    def validate(self):
        """Every d-subset of the ground set lies in exactly one block."""
        report = []
        cover: dict[int, int] = {}
        ok = True
        witness = None
        for block in self.blocks:
            if popcount(block) != self.block_size:
                ok = False
                witness = f"block {sorted(points_of(block))} has wrong size"
                break
            for sub in combinations(points_of(block), self.d):
                m = mask_of(sub)
                if m in cover:
                    ok = False
                    witness = f"{list(sub)} lies in two blocks"
                    break
                cover[m] = block
            if not ok:
                break
        if ok:
            from math import comb

            want = comb(self.n, self.d)
            if len(cover) != want:
                ok = False
                missing = None
                for sub in combinations(range(1, self.n + 1), self.d):
                    if mask_of(sub) not in cover:
                        missing = list(sub)
                        break
                witness = f"{missing} lies in no block"
        report.append(("steiner property: every %d-subset in exactly one block" % self.d,
                       ok, witness or f"{len(self.blocks)} blocks"))
        return ok, report, cover

    def block_through(self, cover, mask):
        return cover.get(mask)


class Matroid:
    def __init__(self, n, rank, bases, ground_mask=None, validate=True,
                 steiner=None, uniform=False, rng_seed=7):
        self.n = n
        self.rank = rank
        self.ground_mask = ground_mask if ground_mask is not None else (1 << n) - 1
        self.bases = tuple(sorted(bases))
        self.bases_set = frozenset(self.bases)
        self._steiner = steiner  # (system, cover dict) for Steiner matroids
        self._uniform = uniform
        if not self.bases:
            raise MatroidError("a matroid needs at least one basis")
        for b in self.bases:
            if popcount(b) != rank or b & ~self.ground_mask:
                raise MatroidError("bases must be rank-sized subsets of the ground set")
        if validate:
            self._check_exchange(rng_seed)

    def _check_exchange(self, rng_seed):
        """Basis exchange; exhaustive on small ground sets, sampled above."""
        if self._uniform or self._steiner:
            return
        bases = self.bases
        if popcount(self.ground_mask) <= EXHAUSTIVE_EXCHANGE_LIMIT and len(bases) <= 1000:
            pairs = ((a, b) for a in bases for b in bases if a != b)
        else:
            rng = Random(rng_seed)
            pairs = (
                (bases[rng.randrange(len(bases))], bases[rng.randrange(len(bases))])
                for _ in range(2000)
            )
        for a, b in pairs:
            if a == b:
                continue
            diff = a & ~b
            while diff:
                x = diff & -diff
                diff ^= x
                ok = False
                need = b & ~a
                while need:
                    y = need & -need
                    need ^= y
                    if (a ^ x) | y in self.bases_set:
                        ok = True
                        break
                if not ok:
                    raise MatroidError(
                        f"basis exchange fails for {sorted(points_of(a))}, "
                        f"{sorted(points_of(b))} at {points_of(x)[0]}"
                    )

    # -- rank and closure oracles ------------------------------------------

    def rank_of(self, mask: int) -> int:
        if mask & ~self.ground_mask:
            raise MatroidError("subset not contained in the ground set")
        if self._uniform:
            return min(popcount(mask), self.rank)
        if self._steiner:
            return self._steiner_rank(mask)
        best = 0
        target = min(popcount(mask), self.rank)
        for b in self.bases:
            got = popcount(b & mask)
            if got > best:
                best = got
                if best == target:
                    break
        return best

    def _steiner_rank(self, mask: int) -> int:
        system, cover = self._steiner
        size = popcount(mask)
        if size < system.d:
            return size
        pts = points_of(mask)
        block = cover.get(mask_of(pts[: system.d]))
        if block is not None and mask & ~block == 0:
            return min(size, self.rank - 1)
        return min(size, self.rank)

    def closure(self, mask: int) -> int:
        r = self.rank_of(mask)
        out = mask
        rest = self.ground_mask & ~mask
        while rest:
            x = rest & -rest
            rest ^= x
            if self.rank_of(mask | x) == r:
                out |= x
        return out

    def loops(self) -> int:
        out = 0
        rest = self.ground_mask
        while rest:
            x = rest & -rest
            rest ^= x
            if self.rank_of(x) == 0:
                out |= x
        return out

    def is_loopless(self) -> bool:
        return self.loops() == 0

    # -- minors and sums -----------------------------------------------------

    def contract(self, mask: int) -> "Matroid":
        r = self.rank_of(mask)
        new_rank = self.rank - r
        ground = self.ground_mask & ~mask
        bases = set()
        for sub in _subsets_of_size(ground, new_rank):
            if self.rank_of(sub | mask) == self.rank:
                bases.add(sub)
        return Matroid(self.n, new_rank, bases, ground_mask=ground, validate=False)

    def restrict(self, mask: int) -> "Matroid":
        r = self.rank_of(mask)
        bases = set()
        for sub in _subsets_of_size(mask, r):
            if self.rank_of(sub) == r:
                bases.add(sub)
        return Matroid(self.n, r, bases, ground_mask=mask, validate=False)

    # -- hyperplanes, stress, relaxation -------------------------------------

    def hyperplanes(self) -> list[int]:
        """Maximal closed rank-(k-1) subsets; big matroids must be Steiner."""
        if self._steiner:
            return list(self._steiner[0].blocks)
        if self._uniform:
            return [mask_of(c) for c in combinations(points_of(self.ground_mask), self.rank - 1)]
        npts = popcount(self.ground_mask)
        if npts > 16:
            raise MatroidError("hyperplane enumeration needs n <= 16 or Steiner structure")
        out = set()
        for sub in _subsets_of_size(self.ground_mask, self.rank - 1):
            if self.rank_of(sub) == self.rank - 1:
                out.add(self.closure(sub))
        return sorted(out)

    def is_stressed(self, hyperplane: int) -> bool:
        """rank k-1, closed, and every (k-1)-subset independent."""
        k = self.rank
        if self.rank_of(hyperplane) != k - 1:
            return False
        if self.closure(hyperplane) != hyperplane:
            return False
        if self._steiner or self._uniform:
            return True
        return all(
            self.rank_of(sub) == k - 1
            for sub in _subsets_of_size(hyperplane, k - 1)
        )

    def relax_orbit(self, hyperplanes) -> "Matroid":
        """Add every rank-sized subset of each listed stressed hyperplane."""
        bases = set(self.bases)
        for h in hyperplanes:
            if not self.is_stressed(h):
                raise MatroidError(
                    f"hyperplane {sorted(points_of(h))} is not stressed")
            bases.update(_subsets_of_size(h, self.rank))
        return Matroid(self.n, self.rank, bases, ground_mask=self.ground_mask)

    def is_paving(self) -> bool:
        """Every circuit has size >= rank, i.e. small subsets are independent."""
        if self._steiner or self._uniform:
            return True
        for sub in _subsets_of_size(self.ground_mask, self.rank - 1):
            if self.rank_of(sub) < self.rank - 1:
                return False
        return True

    def stressed_orbits(self, group: PermGroup):
        """Group orbits of stressed hyperplanes of size >= rank, with witnesses.

        Relaxing all returned orbits turns a paving matroid into the uniform
        matroid of the same rank.
        """
        longs = [h for h in self.hyperplanes() if popcount(h) >= self.rank]
        longs = [h for h in longs if self.is_stressed(h)]
        remaining = set(longs)
        orbits = []
        for h in sorted(remaining):
            if h not in remaining:
                continue
            orbit = group.orbit_transversal(h)
            members = {m for m, _ in orbit}
            if not members <= remaining:
                raise MatroidError("group does not preserve the stressed hyperplanes")
            remaining -= members
            orbits.append(orbit)
        return orbits

    # -- misc -----------------------------------------------------------------

    def preserved_by(self, group: PermGroup) -> bool:
        if group.degree != self.n:
            return False
        return group.preserves_bases(self.bases_set)

    def key(self):
        return (self.ground_mask, self.rank, self.bases)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (f"Matroid(n={self.n}, rank={self.rank}, "
                f"ground={sorted(points_of(self.ground_mask))}, {len(self.bases)} bases)")


def _subsets_of_size(mask: int, size: int):
    pts = points_of(mask, one_based=False)
    for combo in combinations(pts, size):
        m = 0
        for p in combo:
            m |= 1 << p
        yield m


# -- constructors -------------------------------------------------------------

def uniform(k: int, n: int) -> Matroid:
    if not (0 <= k <= n) or n < 1:
        raise MatroidError(f"uniform matroid needs 0 <= k <= n, n >= 1; got k={k}, n={n}")
    bases = _subsets_of_size((1 << n) - 1, k)
    return Matroid(n, k, bases, validate=False, uniform=True)


def boolean(n: int) -> Matroid:
    return uniform(n, n)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Disjoint union; the second summand's points are shifted past the first."""
    if m1.ground_mask != (1 << m1.n) - 1 or m2.ground_mask != (1 << m2.n) - 1:
        raise MatroidError("direct sum needs full ground sets")
    shift = m1.n
    bases = [b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(m1.n + m2.n, m1.rank + m2.rank, bases, validate=False)


VAMOS_CIRCUIT_HYPERPLANES = (
    (1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6), (3, 4, 7, 8), (5, 6, 7, 8))


def vamos() -> Matroid:
    """Rank-4 paving matroid on 8 points with five circuit-hyperplanes."""
    banned = {mask_of(c) for c in VAMOS_CIRCUIT_HYPERPLANES}
    bases = [m for m in _subsets_of_size((1 << 8) - 1, 4) if m not in banned]
    return Matroid(8, 4, bases)


def from_steiner(system: SteinerSystem) -> Matroid:
    """Rank d+1 paving matroid whose hyperplanes are the blocks."""
    ok, report, cover = system.validate()
    if not ok:
        raise MatroidError("invalid Steiner system: " + report[0][2])
    rank = system.d + 1
    blocks = set(system.blocks)
    bases = []
    for cand in _subsets_of_size((1 << system.n) - 1, rank):
        pts = points_of(cand)
        block = cover.get(mask_of(pts[: system.d]))
        if block is None or cand & ~block:
            bases.append(cand)
    return Matroid(system.n, rank, bases, validate=False, steiner=(system, cover))


# -- JSON input ----------------------------------------------------------------

def matroid_from_json(obj) -> Matroid:
    """{"type": "bases"|"uniform"|"steiner"|"vamos", ...} per the file format."""
    kind = obj.get("type")
    if kind == "bases":
        bases = [mask_of(b) for b in obj["bases"]]
        return Matroid(int(obj["n"]), int(obj["rank"]), bases)
    if kind == "uniform":
        return uniform(int(obj["k"]), int(obj["n"]))
    if kind == "steiner":
        system = SteinerSystem(
            int(obj["d"]), int(obj["block_size"]), int(obj["n"]),
            tuple(mask_of(b) for b in obj["blocks"]),
        )
        return from_steiner(system)
    if kind == "vamos":
        return vamos()
    raise MatroidError(f"unknown matroid type {kind!r}")


def load_matroid(source) -> Matroid:
    if isinstance(source, dict):
        return matroid_from_json(source)
    with open(source) as fh:
        return matroid_from_json(json.load(fh))


def steiner_from_json(obj) -> SteinerSystem:
    return SteinerSystem(
        int(obj["d"]), int(obj["block_size"]), int(obj["n"]),
        tuple(mask_of(b) for b in obj["blocks"]),
    )


def add_parallel_point(m: Matroid, point: int) -> Matroid:
    """Extend by a new point parallel to the given one (for Z-invariance tests)."""
    if m.ground_mask != (1 << m.n) - 1:
        raise MatroidError("parallel extension needs a full ground set")
    bit = 1 << (point - 1)
    new_bit = 1 << m.n
    bases = set(m.bases)
    for b in m.bases:
        if b & bit:
            bases.add((b ^ bit) | new_bit)
    return Matroid(m.n + 1, m.rank, bases, validate=False)
