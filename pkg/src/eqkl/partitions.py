"""Integer partitions, skew shapes, and symmetric-group combinatorics.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ().  A skew shape outer/inner is a SkewShape named tuple; when
inner does not fit inside outer the shape is "zero" and every expansion of it
is empty.

The three workhorses are the Littlewood-Richardson expansion of a skew shape
(by direct enumeration of lattice-word semistandard fillings), the Pieri rule
for multiplying by a one-row shape, and the Murnaghan-Nakayama recursion for
character values of Specht modules, implemented on beta-sets.
"""

from functools import cache
from math import factorial
from typing import Iterator, NamedTuple


def as_partition(parts) -> tuple[int, ...]:
    """Canonicalize an iterable of parts: strip zeros, check weak decrease."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def exp_shape(*groups: tuple[int, int]):
    """Build a partition from exponent notation [a^i, b^j, ...].

    Each group is a pair (part, multiplicity).  Zero parts are allowed only
    in a trailing position; a sequence that is not weakly decreasing denotes
    the zero module and yields None.
    """
    parts = []
    for value, mult in groups:
        if mult < 0:
            return None
        parts.extend([value] * mult)
    while parts and parts[-1] == 0:
        parts.pop()
    if any(x <= 0 for x in parts):
        return None
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    return tuple(parts)


class SkewShape(NamedTuple):
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def is_valid(self) -> bool:
        """inner fits inside outer part-wise; otherwise the shape is zero."""
        inn = self.inner + (0,) * (len(self.outer) - len(self.inner))
        if len(self.inner) > len(self.outer):
            return False
        return all(i <= o for o, i in zip(self.outer, inn))

    def __str__(self) -> str:
        if self.inner:
            return f"{format_partition(self.outer)}/{format_partition(self.inner)}"
        return format_partition(self.outer)


def format_partition(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"bad partition literal {s!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    return as_partition(int(x) for x in body.split(","))


def parse_skew(s: str) -> SkewShape:
    if "/" in s:
        a, b = s.split("/", 1)
        return SkewShape(parse_partition(a), parse_partition(b))
    return SkewShape(parse_partition(s), ())


def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""

    def gen(n, maxpart):
        if n == 0:
            yield ()
            return
        for first in range(min(n, maxpart), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    yield from gen(n, n)


def contains(outer, inner) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for o, i in zip(outer, inner))


@cache
def dim_specht(lam: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of lam, by the hook length formula."""
    n = sum(lam)
    if n == 0:
        return 1
    conj = conjugate(lam)
    num = factorial(n)
    for i, row in enumerate(lam):
        for j in range(row):
            num //= (row - j) + (conj[j] - i) - 1
    return num


def conjugate(lam) -> tuple[int, ...]:
    if not lam:
        return ()
    out = [0] * lam[0]
    for row in lam:
        for j in range(row):
            out[j] += 1
    return tuple(out)


def pieri_row(lam, i: int) -> set[tuple[int, ...]]:
    """Partitions obtained from lam by adding a horizontal strip of i boxes."""
    lam = tuple(lam)
    rows = len(lam)
    results = set()

    def place(row, remaining, built):
        # built holds the new row lengths chosen so far (rows 0..row-1)
        if row == rows + 1:
            if remaining == 0:
                results.add(as_partition(built))
            return
        old = lam[row] if row < rows else 0
        # strip condition: new[row] <= old[row-1] keeps added boxes in
        # distinct columns
        hi = old + remaining
        if row >= 1:
            hi = min(hi, lam[row - 1])
        for new in range(old, hi + 1):
            place(row + 1, remaining - (new - old), built + [new])

    place(0, i, [])
    return results


def branch_remove_box(lam) -> set[tuple[int, ...]]:
    """All partitions obtained by removing one corner box of lam."""
    lam = tuple(lam)
    if sum(lam) == 0:
        raise ValueError("cannot remove a box from the empty partition")
    out = set()
    for i, row in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < row:
            new = lam[:i] + (row - 1,) + lam[i + 1:]
            out.add(as_partition(new))
    return out


def addable_boxes(lam) -> list[int]:
    """Row indices where a box can be added to lam keeping it a partition."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam) + 1):
        cur = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > cur:
            out.append(i)
    return out


def branch_skew_add_inner_box(shape: SkewShape) -> set[SkewShape]:
    """All shapes outer/mu' with mu' = inner plus one box, still inside outer."""
    outer, inner = shape.outer, shape.inner
    if not shape.is_valid() or shape.size < 1:
        raise ValueError(f"shape {shape} is empty or invalid")
    out = set()
    for r in addable_boxes(inner):
        if r < len(inner):
            mu = inner[:r] + (inner[r] + 1,) + inner[r + 1:]
        else:
            mu = inner + (1,)
        cand = SkewShape(outer, as_partition(mu))
        if cand.is_valid():
            out.add(cand)
    return out


@cache
def lr_expand_cached(outer, inner):
    """Littlewood-Richardson expansion of the skew Specht module outer/inner.

    Enumerates semistandard fillings whose reverse reading word is a lattice
    word; the content of each filling contributes one to the multiplicity of
    that partition.  Returns a dict partition -> multiplicity; an invalid
    containment gives the empty dict.
    """
    if not contains(outer, inner):
        return {}
    inn = inner + (0,) * (len(outer) - len(inner))
    cells = []  # reverse reading order: each row right-to-left
    for r, row in enumerate(outer):
        for c in range(row - 1, inn[r] - 1, -1):
            cells.append((r, c))
    if not cells:
        return {(): 1}

    nrows = len(outer)
    values = {}
    counts = [0] * (nrows + 2)  # counts[v] = number of entries equal to v so far
    found: dict[tuple[int, ...], int] = {}

    def fill(idx):
        if idx == len(cells):
            content = []
            for v in range(1, nrows + 1):
                if counts[v] == 0:
                    break
                content.append(counts[v])
            key = tuple(content)
            found[key] = found.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo, hi = 1, nrows
        right = values.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        if r > 0 and c >= inn[r - 1]:
            lo = max(lo, values[(r - 1, c)] + 1)
        for v in range(lo, hi + 1):
            # lattice condition on the reverse reading word
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            values[(r, c)] = v
            counts[v] += 1
            fill(idx + 1)
            counts[v] -= 1
        values.pop((r, c), None)

    fill(0)
    return found


def lr_expand(shape: SkewShape) -> dict[tuple[int, ...], int]:
    return dict(lr_expand_cached(tuple(shape.outer), tuple(shape.inner)))


def _beta(lam):
    r = len(lam)
    return tuple(lam[i] + (r - 1 - i) for i in range(r))


def _beta_to_partition(beta):
    b = tuple(sorted(beta, reverse=True))
    r = len(b)
    return as_partition(b[i] - (r - 1 - i) for i in range(r))


@cache
def mn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Character of the Specht module V_lam at cycle type mu (Murnaghan-Nakayama).

    Border strips are removed on the beta-set: removing a strip of length l
    replaces a beta number b by b-l, with sign (-1)^(number of beta numbers
    jumped over).
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if not mu:
        return 1
    l, rest = mu[0], mu[1:]
    beta = set(_beta(lam))
    total = 0
    for b in beta:
        if b >= l and (b - l) not in beta:
            height = sum(1 for c in beta if b - l < c < b)
            nxt = _beta_to_partition((beta - {b}) | {b - l})
            total += (-1) ** height * mn_character(nxt, rest)
    return total


def cycle_type_sign(mu) -> int:
    """Sign of any permutation of cycle type mu."""
    return (-1) ** sum(part - 1 for part in mu)
