"""Dixon-Schneider character tables for enumerable permutation groups.

Build-time tool.  Computes the class-multiplication matrices, finds their
common eigenvectors over a large prime field, recovers degrees and character
values mod p, and lifts every value exactly to a cyclotomic integer via
eigenvalue multiplicities.  Values are then expressed as a + b*sqrt(d); the
sign of b is fixed numerically and the finished table is re-verified with
exact orthogonality by the package validator.
"""

import cmath
import os
import sys
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eqkl.chartab import QuadraticValue  # noqa: E402


# -- tiny polynomial / cyclotomic helpers --------------------------------------

def poly_divmod(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, dc in enumerate(den):
            num[i + j] -= c * dc
    while num and num[-1] == 0:
        num.pop()
    return out, num


_CYCLO = {}


def cyclotomic(n):
    if n in _CYCLO:
        return _CYCLO[n]
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = poly_divmod(poly, cyclotomic(d))
            assert not r
            poly = q
    _CYCLO[n] = poly
    return poly


class Cyclo:
    """Element of Z[x]/Phi_n(x), i.e. an integer combination of n-th roots."""

    __slots__ = ("n", "vec")

    def __init__(self, n, vec):
        phi = len(cyclotomic(n)) - 1
        v = list(vec) + [0] * (phi - len(vec))
        self.n = n
        self.vec = tuple(v[:phi]) if len(v) <= phi else tuple(self._reduce(v, n))

    @staticmethod
    def _reduce(vec, n):
        phi_poly = cyclotomic(n)
        phi = len(phi_poly) - 1
        v = list(vec)
        for i in range(len(v) - 1, phi - 1, -1):
            c = v[i]
            if c:
                v[i] = 0
                for j in range(phi):
                    v[i - phi + j] -= c * phi_poly[j]
        return v[:phi]

    @classmethod
    def root_power(cls, n, t):
        t %= n
        v = [0] * (t + 1)
        v[t] = 1
        return cls(n, cls._reduce(v, n))

    def __add__(self, other):
        return Cyclo(self.n, [a + b for a, b in zip(self.vec, other.vec)])

    def __sub__(self, other):
        return Cyclo(self.n, [a - b for a, b in zip(self.vec, other.vec)])

    def __mul__(self, other):
        out = [0] * (len(self.vec) + len(other.vec) - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    out[i + j] += a * b
        return Cyclo(self.n, self._reduce(out, self.n))

    def galois(self, s):
        out = [0] * len(self.vec)
        tmp = [0] * (self.n + 1)
        for i, a in enumerate(self.vec):
            if a:
                tmp[(i * s) % self.n] += a
        red = self._reduce(tmp, self.n)
        return Cyclo(self.n, red)

    def is_rational(self):
        return all(c == 0 for c in self.vec[1:])

    def numeric(self):
        return sum(a * cmath.exp(2j * cmath.pi * i / self.n)
                   for i, a in enumerate(self.vec))


def squarefree_part(m: int) -> tuple[int, int]:
    """m = e^2 * d with d squarefree; returns (d, e) for m != 0."""
    sign = -1 if m < 0 else 1
    m = abs(m)
    e = 1
    d = 1
    f = 2
    while f * f <= m:
        cnt = 0
        while m % f == 0:
            m //= f
            cnt += 1
        e *= f ** (cnt // 2)
        if cnt % 2:
            d *= f
        f += 1
    d *= m
    return sign * d, e


def cyclo_to_quadratic(value: Cyclo) -> QuadraticValue:
    """Express a cyclotomic integer lying in a quadratic field as a+b*sqrt(d)."""
    n = value.n
    images = {}
    for s in range(1, n + 1):
        if gcd(s, n) == 1:
            images[value.galois(s).vec] = None
    images = [Cyclo(n, v) for v in images]
    if len(images) == 1:
        assert value.is_rational(), value.vec
        return QuadraticValue(Fraction(value.vec[0] if value.vec else 0))
    if len(images) != 2:
        raise ValueError(f"value generates a degree-{len(images)} field")
    other = images[0] if images[0].vec != value.vec else images[1]
    tot = value + other
    assert tot.is_rational()
    a = Fraction(tot.vec[0] if tot.vec else 0, 2)
    diff = value - other
    sq = diff * diff
    assert sq.is_rational()
    d0 = sq.vec[0] if sq.vec else 0
    assert d0 != 0
    d, e = squarefree_part(d0)
    b = Fraction(e, 2)
    # fix the sign of b against the principal branch of sqrt(d)
    num = value.numeric()
    root = cmath.sqrt(complex(d))
    approx = complex(a) + complex(b) * root
    if abs(approx - num) > 1e-6:
        b = -b
        approx = complex(a) - abs(b) * 0  # recompute below
        approx = complex(a) + complex(b) * root
    assert abs(approx - num) < 1e-6, (value.vec, a, b, d)
    return QuadraticValue(a, b, d)


# -- linear algebra over F_p ----------------------------------------------------

def solve_mod(matrix, rhs, p):
    """Solve M x = rhs over F_p for an (r x m) matrix of full column rank;
    the system must be consistent."""
    rows = len(matrix)
    cols = len(matrix[0])
    m = [matrix[r][:] + [rhs[r] % p] for r in range(rows)]
    pivot_row_of = {}
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][col] % p), None)
        if piv is None:
            raise ValueError("matrix does not have full column rank")
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(rows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        pivot_row_of[col] = rank
        rank += 1
    for r in range(rank, rows):
        if m[r][cols] % p:
            raise ValueError("inconsistent linear system")
    return [m[pivot_row_of[c]][cols] % p for c in range(cols)]


def det_mod(mat, p):
    m = [row[:] for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            if m[r][col]:
                f = (m[r][col] * inv) % p
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
    return det % p


def charpoly_mod(mat, p):
    """det(xI - M) by evaluation at n+1 points and Lagrange interpolation."""
    n = len(mat)
    xs = list(range(n + 1))
    ys = []
    for x in xs:
        shifted = [[((x if a == b else 0) - mat[a][b]) % p for b in range(n)]
                   for a in range(n)]
        ys.append(det_mod(shifted, p))
    # Lagrange interpolation over F_p
    coeffs = [0] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [1]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = polymul_plain(num, [(-xj) % p, 1], p)
            denom = (denom * (xi - xj)) % p
        scale = (yi * pow(denom, p - 2, p)) % p
        for k, c in enumerate(num):
            coeffs[k] = (coeffs[k] + scale * c) % p
    return coeffs


def polymul_plain(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def polyadd(a, b, p):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
            for i in range(n)]


def poly_roots_mod(poly, p):
    """All roots in F_p of a polynomial splitting into linear factors."""
    poly = [c % p for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    roots = []

    def monic(f):
        inv = pow(f[-1], p - 2, p)
        return [(c * inv) % p for c in f]

    def polymod(a, f):
        a = a[:]
        while len(a) >= len(f):
            c = a[-1]
            if c:
                off = len(a) - len(f)
                for j in range(len(f)):
                    a[off + j] = (a[off + j] - c * f[j]) % p
            a.pop()
        while a and a[-1] == 0:
            a.pop()
        return a

    def polymul(a, b, f):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return polymod(out, f)

    def polypow_x(e, f):
        result = [1]
        base = polymod([0, 1], f)
        while e:
            if e & 1:
                result = polymul(result, base, f)
            base = polymul(base, base, f)
            e >>= 1
        return result

    def polygcd(a, b):
        a, b = a[:], b[:]
        while b:
            a = polymod(a, monic(b))
            a, b = b, a
        return monic(a) if a else a

    import random

    rng = random.Random(12345)

    def split(f):
        if len(f) <= 1:
            return
        if len(f) == 2:
            roots.append((-f[0] * pow(f[1], p - 2, p)) % p)
            return
        while True:
            shift = rng.randrange(p)
            # gcd(f(x), (x+shift)^((p-1)/2) - 1)
            base = polymod([shift, 1], f)
            acc = [1]
            e = (p - 1) // 2
            b = base
            while e:
                if e & 1:
                    acc = polymul(acc, b, f)
                b = polymul(b, b, f)
                e >>= 1
            acc = polyadd(acc, [p - 1], p)
            g = polygcd(acc, f)
            if 0 < len(g) - 1 < len(f) - 1:
                split(g)
                q, r = divmod_poly(f, g)
                assert not r
                split(q)
                return

    def divmod_poly(num, den):
        num = [c % p for c in num]
        dinv = pow(den[-1], p - 2, p)
        out = [0] * (len(num) - len(den) + 1)
        for i in range(len(out) - 1, -1, -1):
            c = (num[i + len(den) - 1] * dinv) % p
            out[i] = c
            for j, dc in enumerate(den):
                num[i + j] = (num[i + j] - c * dc) % p
        while num and num[-1] == 0:
            num.pop()
        return out, num

    def derivative(f):
        return [(i * c) % p for i, c in enumerate(f)][1:]

    f = monic(poly)
    fp = derivative(f)
    if fp:
        g = polygcd(f, fp)
        if len(g) > 1:
            q, rr = divmod_poly(f, g)
            assert not rr
            f = monic(q)

    split(f)
    return sorted(set(roots))


# -- the main computation --------------------------------------------------------


def find_prime(exponent, floor):
    p = ((floor // exponent) + 1) * exponent + 1
    while True:
        if is_prime(p):
            return p
        p += exponent


def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primitive_root(p):
    factors = set()
    m = p - 1
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    for z in range(2, p):
        if all(pow(z, (p - 1) // q, p) != 1 for q in factors):
            return z
    raise RuntimeError


def dixon_table(group, verbose=True):
    """Exact irreducible characters of an enumerable group.

    Returns (class_data, rows): class_data is a list of (rep, size, order),
    rows a list of value-lists of QuadraticValue, unsorted.
    """
    elems = group.elements()
    order = len(elems)
    classes = group.conjugacy_classes()
    r = len(classes)
    reps = [rep for rep, _ in classes]
    sizes = [size for _, size in classes]
    if verbose:
        print(f"group of order {order} with {r} classes")
    members = [[] for _ in range(r)]
    for e in elems:
        members[group.class_index_of(e)].append(e)
    inv_class = [group.class_index_of(rep.inv()) for rep in reps]
    exponent = reduce(lcm, (rep.order() for rep in reps), 1)
    p = find_prime(exponent, 2 * order + 10)
    z = primitive_root(p)
    if verbose:
        print(f"exponent {exponent}, prime {p}")

    # class multiplication matrices B_i[j][k] = #{(x,y) in Ci x Cj : xy = z_k}
    B = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        for x in members[i]:
            xi = x.inv()
            for k in range(r):
                y = xi * reps[k]
                B[i][group.class_index_of(y)][k] += 1
    if verbose:
        print("class algebra built")

    # split common eigenspaces over F_p
    spaces = [[_unit(r, j) for j in range(r)]]  # list of bases
    for i in range(1, r):
        mat = [[B[i][j][k] % p for k in range(r)] for j in range(r)]
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            m = len(basis)
            # coordinates of B_i * v in the basis
            cols = []
            for v in basis:
                bv = _matvec(mat, v, p)
                cols.append(bv)
            # solve basis-matrix * X = cols
            bt = _transpose(basis)
            coords = [solve_mod([row[:] for row in bt], col, p) for col in cols]
            t = _transpose(coords)  # action matrix m x m
            roots = poly_roots_mod(charpoly_mod(t, p), p)
            for lam in roots:
                shift = [[(t[a][b] - (lam if a == b else 0)) % p for b in range(m)]
                         for a in range(m)]
                ker = _kernel(shift, p)
                if ker:
                    sub = [_combine(basis, coeffs, p) for coeffs in ker]
                    new_spaces.append(sub)
        spaces = new_spaces
        if all(len(b) == 1 for b in spaces):
            break
    assert len(spaces) == r and all(len(b) == 1 for b in spaces), \
        f"eigenspace splitting incomplete: {[len(b) for b in spaces]}"

    ident = next(j for j in range(r) if sizes[j] == 1 and reps[j].is_identity())
    rows = []
    for (vec,) in spaces:
        u = vec
        if u[ident] % p == 0:
            raise RuntimeError("eigenvector vanishes at the identity")
        norm = pow(u[ident], p - 2, p)
        u = [(x * norm) % p for x in u]
        s = 0
        for k in range(r):
            s = (s + u[k] * u[inv_class[k]] * pow(sizes[k], p - 2, p)) % p
        dsq = (order * pow(s, p - 2, p)) % p
        d = isqrt(dsq)
        assert d * d == dsq, "degree is not recovered exactly"
        vals_p = [(d * u[k] * pow(sizes[k], p - 2, p)) % p for k in range(r)]
        # lift each value via eigenvalue multiplicities
        row = []
        for k in range(r):
            n = reps[k].order()
            if n == 1:
                row.append(QuadraticValue(Fraction(d)))
                continue
            omega = pow(z, (p - 1) // n, p)
            powers = []
            g = reps[k]
            cur = g
            powers = [None] * n
            acc = group.elements()[0]  # identity
            cur = acc
            for s_ in range(n):
                powers[s_] = group.class_index_of(cur)
                cur = cur * g
            ninv = pow(n, p - 2, p)
            value = Cyclo(n, [0])
            for t_ in range(n):
                m_t = 0
                for s_ in range(n):
                    m_t = (m_t + vals_p[powers[s_]] * pow(omega, (-s_ * t_) % (p - 1), p)) % p
                m_t = (m_t * ninv) % p
                if m_t >= p - m_t:  # should not happen: multiplicities >= 0
                    raise RuntimeError("negative multiplicity in lift")
                if m_t:
                    assert m_t <= d, (m_t, d)
                    value = value + Cyclo(n, [m_t if i == t_ else 0 for i in range(t_ + 1)])
            row.append(cyclo_to_quadratic(value))
        rows.append(row)
    class_data = [(reps[k], sizes[k], reps[k].order()) for k in range(r)]
    return class_data, rows


def _unit(r, j):
    return [1 if i == j else 0 for i in range(r)]


def _matvec(mat, v, p):
    return [sum(row[k] * v[k] for k in range(len(v))) % p for row in mat]


def _transpose(rows):
    return [list(col) for col in zip(*rows)]


def _kernel(mat, p):
    """Basis of the kernel of a square matrix over F_p."""
    n = len(mat)
    m = [row[:] for row in mat]
    pivots = {}
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] % p), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [(x * inv) % p for x in m[row]]
        for rr in range(n):
            if rr != row and m[rr][col]:
                f = m[rr][col]
                m[rr] = [(x - f * y) % p for x, y in zip(m[rr], m[row])]
        pivots[col] = row
        row += 1
    out = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pc, pr in pivots.items():
            vec[pc] = (-m[pr][col]) % p
        out.append(vec)
    return out


def _combine(basis, coeffs, p):
    out = [0] * len(basis[0])
    for c, v in zip(coeffs, basis):
        if c:
            for i, x in enumerate(v):
                out[i] = (out[i] + c * x) % p
    return out
