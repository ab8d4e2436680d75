"""Virtual symmetric-group representations and their polynomials.

A SymmRep is an integer combination of Specht modules V_lam of one fixed
degree n; a SymmPoly is a polynomial in t whose coefficients are SymmReps of
one degree.  On top of these live the closed-form uniform-matroid polynomials
and the per-hyperplane correction polynomials used by the relaxation fast
path, together with palindromic completion, which is generic over any
coefficient group with +, - and a zero test.
"""

from functools import cache

from .partitions import (
    SkewShape,
    as_partition,
    dim_specht,
    exp_shape,
    branch_remove_box,
    format_partition,
    lr_expand,
    mn_character,
    partitions_of,
    pieri_row,
)


class SymmRep:
    """Integer combination of partitions of a fixed n (a virtual S_n module)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        self.degree = degree
        clean = {}
        for lam, c in (coeffs or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            if c:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def trivial(cls, degree: int) -> "SymmRep":
        return cls(degree, {((degree,) if degree else ()): 1})

    @classmethod
    def from_skew(cls, shape: SkewShape) -> "SymmRep":
        return cls(shape.size, lr_expand(shape))

    def is_zero(self) -> bool:
        return not self.coeffs

    def dim(self) -> int:
        return sum(c * dim_specht(lam) for lam, c in self.coeffs.items())

    def is_honest(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def character(self, cycle_type) -> int:
        mu = as_partition(cycle_type)
        if sum(mu) != self.degree:
            raise ValueError("cycle type of the wrong size")
        return sum(c * mn_character(lam, mu) for lam, c in self.coeffs.items())

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymmRep(self.degree, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return SymmRep(self.degree, {k: scalar * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SymmRep)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs.items(), reverse=True))))

    def __repr__(self):
        return f"SymmRep({self.degree}, {self.coeffs})"

    def __str__(self):
        return render_terms([(lam, c, None) for lam, c in self.coeffs.items()])


def schur_product_coeffs(mu, nu):
    """Littlewood-Richardson product s_mu * s_nu as a dict lam -> c^lam_{mu,nu}."""
    mu, nu = as_partition(mu), as_partition(nu)
    n = sum(mu) + sum(nu)
    if not nu:
        return {mu: 1}
    if not mu:
        return {nu: 1}
    if len(nu) == 1:
        return {lam: 1 for lam in pieri_row(mu, nu[0])}
    if len(mu) == 1:
        return {lam: 1 for lam in pieri_row(nu, mu[0])}
    out = {}
    for lam in partitions_of(n):
        if len(lam) > len(mu) + len(nu) or lam[0] > mu[0] + nu[0]:
            continue
        c = lr_expand(SkewShape(lam, mu)).get(nu, 0)
        if c:
            out[lam] = c
    return out


def induct_product(a: SymmRep, b: SymmRep) -> SymmRep:
    """Induction product of virtual representations (bilinear LR product)."""
    out = {}
    for mu, cm in a.coeffs.items():
        for nu, cn in b.coeffs.items():
            for lam, c in schur_product_coeffs(mu, nu).items():
                out[lam] = out.get(lam, 0) + cm * cn * c
    return SymmRep(a.degree + b.degree, out)


def restrict_one(r: SymmRep) -> SymmRep:
    """Restriction along S_{n-1} < S_n: remove one box from every term."""
    if r.degree < 1:
        raise ValueError("cannot restrict a degree-0 representation")
    out = {}
    for lam, c in r.coeffs.items():
        for mu in branch_remove_box(lam):
            out[mu] = out.get(mu, 0) + c
    return SymmRep(r.degree - 1, out)


class SymmPoly:
    """Polynomial in t with SymmRep coefficients of one fixed degree."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.degree != degree:
                raise ValueError("coefficient degree mismatch")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def zero(cls, degree: int) -> "SymmPoly":
        return cls(degree, [])

    @classmethod
    def constant(cls, rep: SymmRep) -> "SymmPoly":
        return cls(rep.degree, [rep])

    def coeff(self, i: int) -> SymmRep:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return SymmRep(self.degree)

    @property
    def poly_degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def dims(self) -> list[int]:
        return [c.dim() for c in self.coeffs]

    def shift(self, j: int) -> "SymmPoly":
        if self.is_zero():
            return self
        zero = SymmRep(self.degree)
        return SymmPoly(self.degree, [zero] * j + self.coeffs)

    def map_coeffs(self, f, degree=None) -> "SymmPoly":
        degree = self.degree if degree is None else degree
        return SymmPoly(degree, [f(c) for c in self.coeffs])

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        n = max(len(self.coeffs), len(other.coeffs))
        return SymmPoly(self.degree, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar: int):
        return SymmPoly(self.degree, [scalar * c for c in self.coeffs])

    def mul_scalar_poly(self, ints) -> "SymmPoly":
        """Multiply by a polynomial with integer coefficients, e.g. (1 + t)."""
        if self.is_zero():
            return self
        out = [SymmRep(self.degree) for _ in range(len(self.coeffs) + len(ints) - 1)]
        for i, c in enumerate(self.coeffs):
            for j, s in enumerate(ints):
                if s:
                    out[i + j] = out[i + j] + s * c
        return SymmPoly(self.degree, out)

    def __eq__(self, other):
        return (
            isinstance(other, SymmPoly)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"SymmPoly({self.degree}, {self.coeffs})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            for lam, m in c.coeffs.items():
                terms.append((lam, m, i))
        return render_terms(terms)


def render_terms(terms) -> str:
    """Render (partition, multiplicity, power) terms, reverse-lex within power."""
    if not terms:
        return "0"
    parts = []
    by_power = sorted({p or 0 for _, _, p in terms})
    for power in by_power:
        group = sorted(
            [(lam, m) for lam, m, p in terms if (p or 0) == power], reverse=True
        )
        for lam, m in group:
            body = f"V{format_partition(lam)}"
            if m != 1:
                body = f"{m}*{body}"
            if power == 1:
                body += "*t"
            elif power and power > 1:
                body += f"*t^{power}"
            parts.append(body)
    return " + ".join(parts)


def _skew_rep(n, outer, inner) -> SymmRep:
    """SymmRep of degree n from exponent-notation outer/inner, zero if invalid."""
    if outer is None or inner is None:
        return SymmRep(n)
    return SymmRep(n, lr_expand(SkewShape(outer, inner)))


@cache
def uniform_p(k: int, n: int) -> SymmPoly:
    """Equivariant Kazhdan-Lusztig polynomial of the uniform matroid U_{k,n}."""
    _check_uniform_args(k, n)
    coeffs = []
    for i in range((k + 1) // 2):  # i < k/2
        outer = exp_shape((n - 2 * i, 1), (k - 2 * i + 1, i))
        inner = exp_shape((k - 2 * i - 1, i))
        coeffs.append(_skew_rep(n, outer, inner))
    return SymmPoly(n, coeffs)


@cache
def uniform_q(k: int, n: int) -> SymmPoly:
    """Equivariant inverse Kazhdan-Lusztig polynomial of U_{k,n}."""
    _check_uniform_args(k, n)
    coeffs = []
    for i in range((k + 1) // 2):
        lam = exp_shape((n - k + 1, 1), (2, i), (1, k - 2 * i - 1))
        coeffs.append(SymmRep(n, {lam: 1}) if lam is not None else SymmRep(n))
    return SymmPoly(n, coeffs)


@cache
def uniform_z(k: int, n: int) -> SymmPoly:
    """Equivariant Z-polynomial of U_{k,n}.

    Sum over contraction ranks: t^i Ind(triv_i x P_{U_{k-i,n-i}}) for i < k,
    plus t^k times the trivial module; palindromic of degree k.
    """
    _check_uniform_args(k, n)
    total = SymmPoly.zero(n)
    for i in range(k):
        p = uniform_p(k - i, n - i)
        ind = p.map_coeffs(
            lambda c: SymmRep(n, _pieri_rep(c, i)), degree=n
        )
        total = total + ind.shift(i)
    total = total + SymmPoly(n, [SymmRep(n)] * k + [SymmRep.trivial(n)])
    return total


def _pieri_rep(rep: SymmRep, i: int) -> dict:
    out = {}
    for lam, c in rep.coeffs.items():
        for mu in pieri_row(lam, i):
            out[mu] = out.get(mu, 0) + c
    return out


def _check_uniform_args(k, n):
    if not (1 <= k <= n):
        raise ValueError(f"uniform matroid needs 1 <= k <= n, got k={k}, n={n}")


def _check_correction_args(k, h):
    if not (1 <= k <= h):
        raise ValueError(f"correction polynomials need 1 <= k <= h, got k={k}, h={h}")


@cache
def correction_p(k: int, h: int) -> SymmPoly:
    """Change of the KL polynomial when one stressed hyperplane is relaxed."""
    _check_correction_args(k, h)
    if k == 1:
        return SymmPoly.constant(SymmRep.trivial(h))
    coeffs = [SymmRep(h)]
    for i in range(1, (k + 1) // 2):  # 0 < i < k/2
        outer = exp_shape((h - 2 * i + 1, 1), (k - 2 * i + 1, i))
        inner = exp_shape((k - 2 * i, 1), (k - 2 * i - 1, i - 1))
        coeffs.append(_skew_rep(h, outer, inner))
    return SymmPoly(h, coeffs)


@cache
def correction_q(k: int, h: int) -> SymmPoly:
    """Change of the inverse KL polynomial under one relaxation."""
    _check_correction_args(k, h)
    if k == 1:
        return SymmPoly.constant(SymmRep.trivial(h))
    coeffs = []
    for i in range((k + 1) // 2):  # 0 <= i < k/2
        term = SymmRep(h)
        if i > 0:
            lam = exp_shape((h - k + 2, 1), (2, i - 1), (1, k - 2 * i))
            if lam is not None:
                term = term + SymmRep(h, {lam: 1})
        if not (i > 0 and k == h):
            lam = exp_shape((h - k + 1, 1), (2, i), (1, k - 2 * i - 1))
            if lam is not None:
                term = term + SymmRep(h, {lam: 1})
        coeffs.append(term)
    return SymmPoly(h, coeffs)


@cache
def correction_z(k: int, h: int) -> SymmPoly:
    """Change of the Z-polynomial under one relaxation.

    Computed as the model-matroid difference: the restriction to S_h of
    Z_{U_{k,h+1}} minus (1+t) Z_{U_{k-1,h}}.
    """
    _check_correction_args(k, h)
    if k == 1:
        return SymmPoly.zero(h)
    left = uniform_z(k, h + 1).map_coeffs(restrict_one, degree=h)
    right = uniform_z(k - 1, h).mul_scalar_poly([1, 1])
    return left - right


@cache
def correction_r(k: int, h: int) -> SymmPoly:
    """Non-palindromic relaxation kernel whose completion gives p and z.

    r = -t^(k-1) triv_h + sum_{i=1}^{h-1} t^min(i,k-1) Ind(triv_i x p_{k-i,h-i}),
    with p_{k',h'} = 0 for k' <= 0.  The t-powers record the rank of the
    contracted subset inside the stressed hyperplane.
    """
    if k < 2:
        raise ValueError("correction_r needs k >= 2")
    _check_correction_args(k, h)
    total = SymmPoly(h, [SymmRep(h)] * (k - 1) + [(-1) * SymmRep.trivial(h)])
    for i in range(1, h):
        kk, hh = k - i, h - i
        if kk <= 0:
            continue
        p = correction_p(kk, hh)
        ind = p.map_coeffs(lambda c: SymmRep(h, _pieri_rep(c, i)), degree=h)
        total = total + ind.shift(min(i, k - 1))
    return total


def palindromic_completion(coeffs, k: int):
    """Complete r to a degree-k palindromic z = p + r with deg p < k/2.

    coeffs is a list of coefficient-group elements supporting +, - and ==;
    returns (p_coeffs, z_coeffs) as lists of length k+1.  The completion is
    p_i = r_{k-i} - r_i for i < k/2 and zero elsewhere.
    """
    coeffs = list(coeffs)
    if len(coeffs) > k + 1:
        raise ValueError(f"degree of r exceeds target degree {k}")
    if not coeffs:
        raise ValueError("empty polynomial has no completion")
    zero = coeffs[0] - coeffs[0]
    r = coeffs + [zero] * (k + 1 - len(coeffs))
    p = []
    for i in range(k + 1):
        if 2 * i < k:
            p.append(r[k - i] - r[i])
        else:
            p.append(zero)
    z = [p[i] + r[i] for i in range(k + 1)]
    for i in range(k + 1):
        if not z[i] == z[k - i]:
            raise AssertionError("completion failed to produce a palindrome")
    return p, z


def completion_symm(r: SymmPoly, k: int):
    """Palindromic completion specialized to SymmPoly, returning (p, z)."""
    zero = SymmRep(r.degree)
    coeffs = list(r.coeffs) or [zero]
    p, z = palindromic_completion(coeffs, k)
    return SymmPoly(r.degree, p), SymmPoly(r.degree, z)
