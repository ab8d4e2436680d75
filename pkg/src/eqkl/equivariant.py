"""Equivariant Kazhdan-Lusztig, inverse KL and Z-polynomials of matroids.

Two routes compute the same objects.  The brute route follows the defining
recursions, summing over group orbits of ground-set subsets; it needs the
group enumerable and the ground set small, and produces class functions on
ad-hoc conjugacy-class data.  The fast route applies to paving matroids: the
polynomial of the uniform matroid restricted to the group, minus one induced
correction term per orbit of stressed hyperplanes, evaluated directly at
class representatives, which is how groups as large as the big Mathieu
groups stay in reach.
"""

from concurrent.futures import ThreadPoolExecutor

from .chartab import (
    CharacterTable,
    ClassFunction,
    ClassList,
    adhoc_class_list,
    decompose,
    induce_from_stabilizer,
)
from .groups import PermGroup
from .matroid import Matroid
from .perms import Perm, points_of, popcount
from .symrep import (
    SymmPoly,
    correction_p,
    correction_q,
    correction_z,
    palindromic_completion,
    uniform_p,
    uniform_q,
    uniform_z,
)

CORRECTIONS = {"P": correction_p, "Q": correction_q, "Z": correction_z}
UNIFORMS = {"P": uniform_p, "Q": uniform_q, "Z": uniform_z}


class EquivPoly:
    """Polynomial in t whose coefficients are class functions on one group."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: ClassList, coeffs):
        coeffs = [c if isinstance(c, ClassFunction) else ClassFunction(ctx, c)
                  for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.ctx = ctx
        self.coeffs = coeffs

    @classmethod
    def zero(cls, ctx) -> "EquivPoly":
        return cls(ctx, [])

    @classmethod
    def trivial(cls, ctx) -> "EquivPoly":
        return cls(ctx, [ClassFunction.trivial(ctx)])

    def coeff(self, i: int) -> ClassFunction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ClassFunction.zero(self.ctx)

    @property
    def poly_degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def dims(self) -> list[int]:
        return [int(c.dim()) for c in self.coeffs]

    def shift(self, j: int) -> "EquivPoly":
        if self.is_zero():
            return self
        zero = ClassFunction.zero(self.ctx)
        return EquivPoly(self.ctx, [zero] * j + self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return EquivPoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return EquivPoly(self.ctx, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, EquivPoly)
            and self.ctx.key() == other.ctx.key()
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def is_palindromic(self, k: int) -> bool:
        return all(self.coeff(i) == self.coeff(k - i) for i in range(k + 1))

    def tensor_mul(self, other: "EquivPoly") -> "EquivPoly":
        """Polynomial product with pointwise products of coefficients."""
        if self.ctx.key() != other.ctx.key():
            raise ValueError("polynomials live on different class lists")
        if self.is_zero() or other.is_zero():
            return EquivPoly.zero(self.ctx)
        out = [ClassFunction.zero(self.ctx)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EquivPoly(self.ctx, out)

    def __repr__(self):
        return f"EquivPoly(dims={self.dims()})"


def direct_sum_poly(x1, x2):
    """Polynomial of a direct sum: product with tensor products of coefficients.

    EquivPoly x EquivPoly multiplies pointwise on one class list.  For
    SymmPoly arguments the group acts on one summand only, so the other
    factor must have coefficients that are multiples of the trivial module;
    its dimensions then scale the first factor as a plain polynomial, which
    is the Z_{U + B_1} = Z_U (1+t) situation of the model matroids.
    """
    if isinstance(x1, EquivPoly) and isinstance(x2, EquivPoly):
        return x1.tensor_mul(x2)
    if isinstance(x1, SymmPoly) and isinstance(x2, SymmPoly):
        def trivial_scalars(poly):
            out = []
            for c in poly.coeffs:
                if not set(c.coeffs) <= {((poly.degree,) if poly.degree else ())}:
                    return None
                out.append(c.coeffs.get((poly.degree,) if poly.degree else (), 0))
            return out

        for main, other in ((x1, x2), (x2, x1)):
            scalars = trivial_scalars(other)
            if scalars is not None:
                return main.mul_scalar_poly(scalars) if scalars else \
                    SymmPoly.zero(main.degree)
        raise ValueError(
            "direct_sum_poly on SymmPoly needs one factor with trivial "
            "coefficients (the group acts on a single summand)")
    raise TypeError("direct_sum_poly needs two EquivPoly or two SymmPoly")


def _compact_group(degree, elements) -> PermGroup:
    """Group from an explicit element list, with a small generating set."""
    order = len(elements)
    gens: list[Perm] = []
    have = {Perm.identity(degree).img}
    for e in elements:
        if len(have) == order:
            break
        if e.img in have:
            continue
        gens.append(e)
        frontier = list(have)
        while frontier:
            nxt = []
            for img in frontier:
                cur = Perm(img)
                for g in gens:
                    prod = (g * cur).img
                    if prod not in have:
                        have.add(prod)
                        nxt.append(prod)
            frontier = nxt
    group = PermGroup(degree, gens)
    group._elements = [Perm(img) for img in sorted(have)]
    return group


class Brute:
    """Recursive computation of the three polynomials from their definitions.

    Memoized on (bases bitmask list, ground set, group element set), so
    repeated contractions and restrictions are shared across the recursion.
    """

    def __init__(self, bound=None):
        self.bound = bound
        self._p: dict = {}
        self._q: dict = {}
        self._groups: dict = {}

    # -- group bookkeeping --

    def _intern(self, group: PermGroup):
        key = tuple(sorted(e.img for e in group.elements(self.bound)))
        rec = self._groups.get(key)
        if rec is None:
            ctx = adhoc_class_list(group)
            elem_to_class = {e.img: group.class_index_of(e) for e in group.elements()}
            rec = (key, group, ctx, elem_to_class)
            self._groups[key] = rec
        return rec

    def _subgroup(self, group: PermGroup, mask: int):
        elems = [e for e in group.elements() if e.fixes_mask(mask)]
        sub = _compact_group(group.degree, elems)
        return self._intern(sub)

    # -- orbit machinery --

    def _subset_orbits(self, ground: int, group: PermGroup):
        """Orbit transversals covering every subset of the ground set."""
        seen = set()
        out = []
        masks = []
        mask = ground
        while True:
            masks.append(mask)
            if mask == 0:
                break
            mask = (mask - 1) & ground
        for mask in sorted(masks):
            if mask in seen:
                continue
            orbit = group.orbit_transversal(mask)
            seen.update(m for m, _ in orbit)
            out.append(orbit)
        return out

    def _induce(self, sub_rec, poly: EquivPoly, orbit, ctx: ClassList) -> EquivPoly:
        _, _, sub_ctx, sub_map = sub_rec
        out = []
        for f in poly.coeffs:
            vals = []
            for g in ctx.reps:
                total = 0
                for mask, wit in orbit:
                    if g.act_mask(mask) == mask:
                        y = wit.inv() * g * wit
                        total += f.values[sub_map[y.img]].as_fraction()
                vals.append(total)
            out.append(ClassFunction(ctx, vals))
        return EquivPoly(ctx, out)

    # -- the recursions --

    def p_and_z(self, matroid: Matroid, group: PermGroup):
        """(P, Z) from the subset-orbit sum and palindromic completion."""
        rec = self._intern(group)
        key = (matroid.key(), rec[0])
        hit = self._p.get(key)
        if hit is not None:
            return hit
        ctx = rec[2]
        ground = matroid.ground_mask
        if ground == 0:
            out = (EquivPoly.trivial(ctx), EquivPoly.trivial(ctx))
            self._p[key] = out
            return out
        k = matroid.rank
        zero = ClassFunction.zero(ctx)
        r_coeffs = [zero for _ in range(k + 1)]
        for orbit in self._subset_orbits(ground, group):
            s_mask = orbit[0][0]
            if s_mask == 0:
                continue
            if s_mask == ground:
                r_coeffs[k] = r_coeffs[k] + ClassFunction.trivial(ctx)
                continue
            contracted = matroid.contract(s_mask)
            if contracted.loops():
                continue
            sub_rec = self._subgroup(group, s_mask)
            sub_p, _ = self.p_and_z(contracted, sub_rec[1])
            if sub_p.is_zero():
                continue
            induced = self._induce(sub_rec, sub_p, orbit, ctx)
            rk = matroid.rank_of(s_mask)
            for i, c in enumerate(induced.coeffs):
                r_coeffs[rk + i] = r_coeffs[rk + i] + c
        if matroid.loops():
            p = EquivPoly.zero(ctx)
            z = EquivPoly(ctx, r_coeffs)
        else:
            p_list, z_list = palindromic_completion(r_coeffs, k)
            p = EquivPoly(ctx, p_list)
            z = EquivPoly(ctx, z_list)
        out = (p, z)
        self._p[key] = out
        return out

    def q(self, matroid: Matroid, group: PermGroup) -> EquivPoly:
        rec = self._intern(group)
        key = (matroid.key(), rec[0])
        hit = self._q.get(key)
        if hit is not None:
            return hit
        ctx = rec[2]
        ground = matroid.ground_mask
        if ground == 0:
            out = EquivPoly.trivial(ctx)
            self._q[key] = out
            return out
        if matroid.loops():
            out = EquivPoly.zero(ctx)
            self._q[key] = out
            return out
        k = matroid.rank
        total = EquivPoly.zero(ctx)
        for orbit in self._subset_orbits(ground, group):
            s_mask = orbit[0][0]
            if s_mask == ground:
                continue
            sub_rec = self._subgroup(group, s_mask)
            sub_group = sub_rec[1]
            q_loc = self.q(matroid.restrict(s_mask), sub_group)
            if q_loc.is_zero():
                continue
            p_con, _ = self.p_and_z(matroid.contract(s_mask), sub_group)
            if p_con.is_zero():
                continue
            term = q_loc.tensor_mul(p_con)
            induced = self._induce(sub_rec, term, orbit, ctx)
            sign = (-1) ** matroid.rank_of(s_mask)
            if sign < 0:
                induced = EquivPoly.zero(ctx) - induced
            total = total + induced
        sign = (-1) ** (k + 1)
        out = total if sign > 0 else EquivPoly.zero(ctx) - total
        self._q[key] = out
        return out

    def compute(self, matroid: Matroid, group: PermGroup, which: str) -> EquivPoly:
        if which == "P":
            return self.p_and_z(matroid, group)[0]
        if which == "Z":
            return self.p_and_z(matroid, group)[1]
        if which == "Q":
            return self.q(matroid, group)
        raise ValueError(f"unknown polynomial {which!r}")

    def eq_q_residual(self, matroid: Matroid, group: PermGroup) -> EquivPoly:
        """The defining alternating sum for Q over all subset orbits.

        Zero exactly iff the computed P and Q satisfy the defining relation.
        """
        rec = self._intern(group)
        ctx = rec[2]
        ground = matroid.ground_mask
        if ground == 0:
            raise ValueError("the defining relation applies to nonempty ground sets")
        total = EquivPoly.zero(ctx)
        for orbit in self._subset_orbits(ground, group):
            s_mask = orbit[0][0]
            sub_rec = self._subgroup(group, s_mask)
            sub_group = sub_rec[1]
            q_loc = self.q(matroid.restrict(s_mask), sub_group)
            p_con, _ = self.p_and_z(matroid.contract(s_mask), sub_group)
            term = q_loc.tensor_mul(p_con)
            if term.is_zero():
                continue
            induced = self._induce(sub_rec, term, orbit, ctx)
            if matroid.rank_of(s_mask) % 2:
                induced = EquivPoly.zero(ctx) - induced
            total = total + induced
        return total


_DEFAULT_BRUTE = Brute()


def p_brute(matroid, group, engine=None) -> EquivPoly:
    return (engine or _DEFAULT_BRUTE).compute(matroid, group, "P")


def q_brute(matroid, group, engine=None) -> EquivPoly:
    return (engine or _DEFAULT_BRUTE).compute(matroid, group, "Q")


def z_brute(matroid, group, engine=None) -> EquivPoly:
    return (engine or _DEFAULT_BRUTE).compute(matroid, group, "Z")


def eq_q_residual(matroid, group, engine=None) -> EquivPoly:
    return (engine or _DEFAULT_BRUTE).eq_q_residual(matroid, group)


# -- the paving fast path ------------------------------------------------------


def table_class_list(table: CharacterTable) -> ClassList:
    ctx = table.class_list()
    if any(r is None for r in ctx.reps):
        raise ValueError("fast path needs class representatives in the table")
    return ctx


def restrict_symm_poly(spoly: SymmPoly, ctx: ClassList, threads: int = 1) -> EquivPoly:
    """Pull a symmetric-group polynomial back to the group at class reps."""
    reps = ctx.reps

    def value(args):
        coeff, g = args
        return coeff.character(g.cycle_type())

    coeffs = []
    for coeff in spoly.coeffs:
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                vals = list(pool.map(value, [(coeff, g) for g in reps]))
        else:
            vals = [coeff.character(g.cycle_type()) for g in reps]
        coeffs.append(ClassFunction(ctx, vals))
    return EquivPoly(ctx, coeffs)


def orbit_delta(corr: SymmPoly, orbit, ctx: ClassList) -> EquivPoly:
    """Induced correction term for one orbit of stressed hyperplanes."""
    seed = orbit[0][0]
    h_points = points_of(seed, one_based=False)
    coeffs = []
    for coeff in corr.coeffs:
        def chi(y, coeff=coeff):
            return coeff.character(y.restrict_to(h_points).cycle_type())

        vals = induce_from_stabilizer(chi, orbit, ctx.reps)
        coeffs.append(ClassFunction(ctx, vals))
    return EquivPoly(ctx, coeffs)


def relaxation_delta(k: int, h: int, group: PermGroup, hyperplane_mask: int,
                     ctx: ClassList, which: str = "P") -> EquivPoly:
    """Per-orbit correction to P, Q or Z when the orbit of H is relaxed."""
    corr = CORRECTIONS[which](k, h)
    orbit = group.orbit_transversal(hyperplane_mask)
    return orbit_delta(corr, orbit, ctx)


def fast_paving(matroid: Matroid, group: PermGroup, which: str,
                table: CharacterTable | None = None, threads: int = 1,
                progress=None):
    """Polynomial of a paving matroid via uniform closed forms and corrections.

    Returns (EquivPoly, decomposition), where the decomposition is a list of
    {irreducible: multiplicity} dicts per degree when a table is given, else
    None.
    """
    if which not in UNIFORMS:
        raise ValueError(f"unknown polynomial {which!r}")
    if not matroid.is_paving():
        raise ValueError("fast path applies to paving matroids only")
    n = popcount(matroid.ground_mask)
    if matroid.ground_mask != (1 << n) - 1 or group.degree != n:
        raise ValueError("fast path needs a full ground set matching the group degree")
    if not matroid.preserved_by(group):
        raise ValueError("group does not preserve the matroid")
    k = matroid.rank
    ctx = table_class_list(table) if table is not None else adhoc_class_list(group)
    if progress:
        progress(f"uniform reference U({k},{n})")
    total = restrict_symm_poly(UNIFORMS[which](k, n), ctx, threads=threads)
    orbits = matroid.stressed_orbits(group)
    for idx, orbit in enumerate(orbits):
        h = popcount(orbit[0][0])
        if progress:
            progress(f"orbit {idx + 1}/{len(orbits)}: {len(orbit)} stressed "
                     f"hyperplanes of size {h}")
        corr = CORRECTIONS[which](k, h)
        total = total - orbit_delta(corr, orbit, ctx)
    decomposition = None
    if table is not None:
        decomposition = [decompose(c, table) for c in total.coeffs]
    return total, decomposition


def equiv_on_table_ctx(poly: EquivPoly, group: PermGroup,
                       table: CharacterTable) -> EquivPoly:
    """Re-express a brute-path polynomial on a table's class list.

    Matches ad-hoc classes to table classes by locating each table
    representative in the enumerated group.
    """
    ctx = table_class_list(table)
    coeffs = []
    for c in poly.coeffs:
        vals = [c.values[group.class_index_of(rep)] for rep in ctx.reps]
        coeffs.append(ClassFunction(ctx, vals))
    return EquivPoly(ctx, coeffs)


class GedeonReport:
    def __init__(self, per_degree, names):
        self.per_degree = per_degree  # list of dicts irreducible -> multiplicity
        self.names = names

    @property
    def passed(self) -> bool:
        return all(m >= 0 for d in self.per_degree for m in d.values())

    def lines(self):
        out = []
        for i, d in enumerate(self.per_degree):
            body = " + ".join(f"{m}*{nm}" if m != 1 else nm
                              for nm, m in d.items()) or "0"
            out.append(f"t^{i}: {body}")
        out.append("PASS: all multiplicities nonnegative" if self.passed
                   else "FAIL: some multiplicity negative")
        return out


def gedeon_check(matroid: Matroid, group: PermGroup,
                 table: CharacterTable, engine=None) -> GedeonReport:
    """Decompose P of the uniform matroid minus P of the matroid; all
    multiplicities must be honest (nonnegative integers)."""
    ctx = table_class_list(table)
    if matroid.is_paving():
        k = matroid.rank
        diff = EquivPoly.zero(ctx)
        for orbit in matroid.stressed_orbits(group):
            h = popcount(orbit[0][0])
            diff = diff + orbit_delta(correction_p(k, h), orbit, ctx)
    else:
        from .matroid import uniform

        eng = engine or _DEFAULT_BRUTE
        n = popcount(matroid.ground_mask)
        pm = equiv_on_table_ctx(eng.compute(matroid, group, "P"), group, table)
        pu = equiv_on_table_ctx(eng.compute(uniform(matroid.rank, n), group, "P"),
                                group, table)
        diff = pu - pm
    per_degree = [decompose(c, table) for c in diff.coeffs]
    return GedeonReport(per_degree, [nm for nm, _ in table.irreducibles])
