"""Permutations of 1..n with cycle notation, acting on points and bitmask sets.

Internally a permutation is a tuple img with img[i] = image of point i in
0-based coordinates; all text I/O is 1-based disjoint cycles like
"(1,2)(3,4)", with "()" for the identity.  Composition is function
composition: (a * b)(x) = a(b(x)).
"""

from functools import reduce
from math import lcm


class Perm:
    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        img = list(range(n))
        for cyc in cycles:
            if not cyc:
                continue
            for a, b in zip(cyc, cyc[1:]):
                img[a - 1] = b - 1
            img[cyc[-1] - 1] = cyc[0] - 1
        p = cls(img)
        if sorted(p.img) != list(range(n)):
            raise ValueError(f"cycles {cycles} do not define a permutation of 1..{n}")
        return p

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, point0: int) -> int:
        return self.img[point0]

    def __mul__(self, other: "Perm") -> "Perm":
        # (a * b)(x) = a(b(x))
        a = self.img
        return Perm(a[x] for x in other.img)

    def inv(self) -> "Perm":
        out = [0] * len(self.img)
        for i, j in enumerate(self.img):
            out[j] = i
        return Perm(out)

    def conjugated_by(self, x: "Perm") -> "Perm":
        """x^-1 * self * x."""
        return x.inv() * self * x

    def __eq__(self, other):
        return isinstance(other, Perm) and self.img == other.img

    def __hash__(self):
        return hash(self.img)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.img))

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * len(self.img)
        out = []
        for i in range(len(self.img)):
            if seen[i] or self.img[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.img[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.img[j]
            out.append([x + 1 for x in cyc])
        return out

    def cycle_type(self) -> tuple[int, ...]:
        lens = [len(c) for c in self.cycles()]
        lens += [1] * (len(self.img) - sum(lens))
        return tuple(sorted(lens, reverse=True))

    def order(self) -> int:
        return reduce(lcm, (len(c) for c in self.cycles()), 1)

    def act_mask(self, mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << self.img[low.bit_length() - 1]
            mask ^= low
        return out

    def fixes_mask(self, mask: int) -> bool:
        return self.act_mask(mask) == mask

    def restrict_to(self, points0: tuple[int, ...]) -> "Perm":
        """Action on a setwise-invariant list of 0-based points, relabelled 0..h-1."""
        index = {p: i for i, p in enumerate(points0)}
        return Perm(index[self.img[p]] for p in points0)

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self):
        return f"Perm({self})"


def parse_perm(s: str, n: int) -> Perm:
    """Parse 1-based disjoint cycles, e.g. "(1,2)(3,4)"; "()" is the identity."""
    s = s.replace(" ", "")
    if s in ("", "()"):
        return Perm.identity(n)
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad permutation literal {s!r}")
    cycles = []
    for chunk in s[1:-1].split(")("):
        if not chunk:
            continue
        cyc = [int(x) for x in chunk.split(",")]
        if any(not (1 <= x <= n) for x in cyc):
            raise ValueError(f"point out of range 1..{n} in {s!r}")
        cycles.append(cyc)
    flat = [x for c in cycles for x in c]
    if len(set(flat)) != len(flat):
        raise ValueError(f"cycles in {s!r} are not disjoint")
    return Perm.from_cycles(n, cycles)


def mask_of(points, one_based=True) -> int:
    m = 0
    for p in points:
        m |= 1 << (p - 1 if one_based else p)
    return m


def points_of(mask: int, one_based=True) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - (0 if one_based else 1))
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()
