"""Independent oracles the tests check the library against.

Each of these recomputes a quantity by a route the library does not take:
standard tableaux and Littlewood-Richardson coefficients by direct
enumeration, the three matroid polynomials by a plain integer recursion over
all subsets (no group theory), and induced characters by the elementwise
averaging formula.
"""

from fractions import Fraction
from itertools import combinations


# -- tableau enumeration -------------------------------------------------------

def syt_count(outer, inner=()):
    """Standard Young tableaux of a skew shape, counted one box at a time."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if any(i > o for o, i in zip(outer, inner)):
        return 0

    def rec(rows):
        total_left = sum(o - r for o, r in zip(outer, rows))
        if total_left == 0:
            return 1
        out = 0
        for i, (o, r) in enumerate(zip(outer, rows)):
            if r < o and (i == 0 or rows[i - 1] > max(r, inner[i])):
                if r >= inner[i]:
                    out += rec(rows[:i] + (r + 1,) + rows[i + 1:])
        return out

    start = inner
    return rec(tuple(start))


def lr_brute(outer, inner):
    """LR coefficients by filtering all semistandard fillings afterwards."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    if any(i > o for o, i in zip(outer, inner)):
        return {}
    cells = [(r, c) for r, row in enumerate(outer)
             for c in range(inner[r], row)]
    if not cells:
        return {(): 1}
    nmax = len(outer)
    found = {}

    def rec(idx, values):
        if idx == len(cells):
            word = []
            for r, row in enumerate(outer):
                for c in range(row - 1, inner[r] - 1, -1):
                    word.append(values[(r, c)])
            counts = [0] * (nmax + 2)
            for v in word:
                counts[v] += 1
                if v > 1 and counts[v] > counts[v - 1]:
                    return
            content = []
            for v in range(1, nmax + 1):
                if counts[v] == 0:
                    break
                content.append(counts[v])
            if sum(content) == len(cells):
                key = tuple(content)
                found[key] = found.get(key, 0) + 1
            return
        r, c = cells[idx]
        for v in range(1, nmax + 1):
            if (r, c - 1) in values and values[(r, c - 1)] > v:
                continue
            if (r - 1, c) in values and values[(r - 1, c)] >= v:
                continue
            values[(r, c)] = v
            rec(idx + 1, values)
            del values[(r, c)]

    rec(0, {})
    return found


# -- plain integer matroid polynomials (no representation theory) ---------------

def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)]


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _subsets(mask):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class IntRecursion:
    """Non-equivariant P, Q, Z by summation over every subset."""

    def __init__(self):
        self.p_memo = {}
        self.q_memo = {}

    def p(self, matroid):
        key = matroid.key()
        if key in self.p_memo:
            return self.p_memo[key]
        ground = matroid.ground_mask
        if ground == 0:
            out = [1]
        elif matroid.loops():
            out = []
        else:
            k = matroid.rank
            r = [0] * (k + 1)
            for s in _subsets(ground):
                if s == 0:
                    continue
                sub = self.p(matroid.contract(s))
                rk = matroid.rank_of(s)
                for i, c in enumerate(sub):
                    r[rk + i] += c
            out = [0] * (k + 1)
            for i in range((k + 1) // 2):
                if 2 * i < k:
                    out[i] = r[k - i] - r[i]
            out = _poly_trim(out)
        self.p_memo[key] = out
        return out

    def z(self, matroid):
        ground = matroid.ground_mask
        if ground == 0:
            return [1]
        total = []
        for s in _subsets(ground):
            sub = self.p(matroid.contract(s))
            rk = matroid.rank_of(s)
            total = _poly_add(total, [0] * rk + sub)
        return _poly_trim(total)

    def q(self, matroid):
        key = matroid.key()
        if key in self.q_memo:
            return self.q_memo[key]
        ground = matroid.ground_mask
        if ground == 0:
            out = [1]
        elif matroid.loops():
            out = []
        else:
            k = matroid.rank
            total = []
            for s in _subsets(ground):
                if s == ground:
                    continue
                q_loc = self.q(matroid.restrict(s))
                p_con = self.p(matroid.contract(s))
                prod = [0] * (len(q_loc) + len(p_con) - 1) if q_loc and p_con else []
                for i, a in enumerate(q_loc):
                    for j, b in enumerate(p_con):
                        prod[i + j] += a * b
                sign = (-1) ** matroid.rank_of(s)
                total = _poly_add(total, [sign * c for c in prod])
            sign = (-1) ** (k + 1)
            out = _poly_trim([sign * c for c in total])
        self.q_memo[key] = out
        return out


# -- induced characters, elementwise ---------------------------------------------

def induced_char_elementwise(group_elements, sub_elements, chi_by_img, g):
    """(1/|H|) sum over x in G of chi(x g x^-1), extending chi by zero."""
    total = Fraction(0)
    sub = set(sub_elements)
    for x in group_elements:
        y = x * g * x.inv()
        if y.img in sub:
            total += chi_by_img[y.img]
    return total / len(sub)


# -- stressed hyperplane, definitional form --------------------------------------

def is_stressed_definitional(matroid, hyperplane_mask):
    """Every rank-sized subset of H is a circuit, and H is a rank-(k-1) flat."""
    from eqkl.perms import points_of

    k = matroid.rank
    pts = points_of(hyperplane_mask)
    if matroid.rank_of(hyperplane_mask) != k - 1:
        return False
    if matroid.closure(hyperplane_mask) != hyperplane_mask:
        return False
    for sub in combinations(pts, k):
        m = 0
        for p in sub:
            m |= 1 << (p - 1)
        # circuit: dependent, all proper subsets independent
        if matroid.rank_of(m) != k - 1:
            return False
        for q in sub:
            mm = m & ~(1 << (q - 1))
            if matroid.rank_of(mm) != k - 1:
                return False
    return True
