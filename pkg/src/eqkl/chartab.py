"""Exact character tables, class functions, induction and restriction.

Table entries are values a + b*sqrt(d) with exact rational a, b (ATLAS-style
quadratic irrationalities such as (-1+sqrt(-11))/2).  All inner products are
computed exactly; a table is accepted only if its rows are exactly
orthonormal.  Class functions are value vectors over a fixed class list,
which either comes from a table file (large groups, representatives
supplied) or is computed by enumeration (small groups).
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial, lcm

from .groups import PermGroup
from .partitions import mn_character, partitions_of
from .perms import Perm, parse_perm


def _squarefree(d: int) -> bool:
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class QuadraticValue:
    """Exact value a + b*sqrt(d); b = 0 forces d = 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0 and self.d != 0:
            object.__setattr__(self, "d", 0)
        if self.b != 0:
            if self.d in (0, 1) or not _squarefree(self.d):
                raise ValueError(f"radicand must be squarefree and != 0, 1: {self.d}")

    @classmethod
    def of(cls, x) -> "QuadraticValue":
        if isinstance(x, QuadraticValue):
            return x
        return cls(Fraction(x))

    def conj(self) -> "QuadraticValue":
        return QuadraticValue(self.a, -self.b, self.d)

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.a

    def __add__(self, other):
        other = QuadraticValue.of(other)
        if self.b == 0:
            return QuadraticValue(self.a + other.a, other.b, other.d)
        if other.b == 0:
            return QuadraticValue(self.a + other.a, self.b, self.d)
        if self.d != other.d:
            raise ValueError(f"cannot add sqrt({self.d}) and sqrt({other.d})")
        return QuadraticValue(self.a + other.a, self.b + other.b, self.d)

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-QuadraticValue.of(other))

    def __mul__(self, other):
        other = QuadraticValue.of(other)
        if self.b == 0:
            return QuadraticValue(self.a * other.a, self.a * other.b, other.d)
        if other.b == 0:
            return QuadraticValue(self.a * other.a, self.b * other.a, self.d)
        if self.d != other.d:
            raise ValueError(f"cannot multiply sqrt({self.d}) by sqrt({other.d})")
        return QuadraticValue(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__
    __radd__ = __add__

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        s = "" if self.a == 0 else f"{self.a}"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        coef = "" if mag == 1 else f"{mag}*"
        return f"{s}{sign}{coef}sqrt({self.d})" if s else f"{'-' if self.b < 0 else ''}{coef}sqrt({self.d})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "d": self.d}

    @classmethod
    def from_json(cls, obj) -> "QuadraticValue":
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj))
        return cls(Fraction(str(obj["a"])), Fraction(str(obj.get("b", 0))), int(obj.get("d", 0)))


QV_ZERO = QuadraticValue(0)
QV_ONE = QuadraticValue(1)


@dataclass(frozen=True)
class ClassInfo:
    name: str
    size: int
    order: int
    rep: Perm | None = None


class ClassList:
    """Fixed list of conjugacy classes that class functions are indexed by."""

    def __init__(self, classes, group_order, label=""):
        self.classes = tuple(classes)
        self.group_order = group_order
        self.label = label
        ident = [i for i, c in enumerate(self.classes) if c.order == 1]
        if len(ident) != 1 or self.classes[ident[0]].size != 1:
            raise ValueError("class list must contain exactly one identity class")
        self.identity_index = ident[0]

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self):
        return tuple(c.size for c in self.classes)

    @property
    def names(self):
        return tuple(c.name for c in self.classes)

    @property
    def reps(self):
        return tuple(c.rep for c in self.classes)

    def key(self):
        return (self.group_order, self.names, self.sizes)


def adhoc_class_list(group: PermGroup) -> ClassList:
    """Class list of an enumerable group, representatives in BFS order."""
    classes = group.conjugacy_classes()
    infos = [
        ClassInfo(name=str(rep), size=size, order=rep.order(), rep=rep)
        for rep, size in classes
    ]
    return ClassList(infos, group.order(), label="adhoc")


class ClassFunction:
    __slots__ = ("ctx", "values")

    def __init__(self, ctx: ClassList, values):
        values = tuple(QuadraticValue.of(v) for v in values)
        if len(values) != len(ctx):
            raise ValueError("value count does not match class count")
        self.ctx = ctx
        self.values = values

    @classmethod
    def trivial(cls, ctx: ClassList) -> "ClassFunction":
        return cls(ctx, [1] * len(ctx))

    @classmethod
    def zero(cls, ctx: ClassList) -> "ClassFunction":
        return cls(ctx, [0] * len(ctx))

    def _check(self, other):
        if self.ctx.key() != other.ctx.key():
            raise ValueError("class functions live on different class lists")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.ctx, [x + y for x, y in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.ctx, [x - y for x, y in zip(self.values, other.values)])

    def __mul__(self, other):
        """Pointwise (tensor) product."""
        self._check(other)
        return ClassFunction(self.ctx, [x * y for x, y in zip(self.values, other.values)])

    def __rmul__(self, scalar):
        return ClassFunction(self.ctx, [QuadraticValue.of(scalar) * v for v in self.values])

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.ctx.key() == other.ctx.key()
            and self.values == other.values
        )

    def is_zero(self) -> bool:
        return all(not v for v in self.values)

    def dim(self):
        v = self.values[self.ctx.identity_index]
        return v.as_fraction()

    def is_integral(self) -> bool:
        return all(v.is_rational() and v.a.denominator == 1 for v in self.values)

    def __repr__(self):
        return f"ClassFunction({[str(v) for v in self.values]})"


def inner_product(f: ClassFunction, g: ClassFunction) -> QuadraticValue:
    """(1/|G|) sum over classes of |C| f(C) conj(g(C)), exactly."""
    if f.ctx.key() != g.ctx.key():
        raise ValueError("class functions live on different class lists")
    acc: dict[int, Fraction] = {}
    for size, x, y in zip(f.ctx.sizes, f.values, g.values):
        prod = x * y.conj()
        acc[0] = acc.get(0, Fraction(0)) + size * prod.a
        if prod.b:
            acc[prod.d] = acc.get(prod.d, Fraction(0)) + size * prod.b
    order = f.ctx.group_order
    irr = [(d, c) for d, c in acc.items() if d != 0 and c != 0]
    if len(irr) > 1:
        raise ValueError("inner product does not lie in a quadratic field")
    a = acc.get(0, Fraction(0)) / order
    if irr:
        d, c = irr[0]
        return QuadraticValue(a, c / order, d)
    return QuadraticValue(a)


class CharacterTable:
    def __init__(self, group_order, classes, irreducibles, degree=None, name=""):
        self.group_order = group_order
        self.classes = tuple(classes)
        self.irreducibles = tuple((nm, tuple(QuadraticValue.of(v) for v in vals))
                                  for nm, vals in irreducibles)
        self.degree = degree
        self.name = name
        self._ctx = ClassList(self.classes, group_order, label=name or "table")

    def class_list(self) -> ClassList:
        return self._ctx

    def irreducible(self, name: str) -> ClassFunction:
        for nm, vals in self.irreducibles:
            if nm == name:
                return ClassFunction(self._ctx, vals)
        raise KeyError(name)

    def irreducible_dims(self) -> dict[str, int]:
        i = self._ctx.identity_index
        return {nm: int(vals[i].as_fraction()) for nm, vals in self.irreducibles}

    def to_json(self) -> dict:
        out = {
            "group_order": self.group_order,
            "classes": [
                {
                    "name": c.name,
                    "size": c.size,
                    "order": c.order,
                    **({"rep": str(c.rep)} if c.rep is not None else {}),
                }
                for c in self.classes
            ],
            "irreducibles": [
                {"name": nm, "values": [v.to_json() for v in vals]}
                for nm, vals in self.irreducibles
            ],
        }
        if self.degree is not None:
            out["degree"] = self.degree
        return out


def load_table(source, name="") -> CharacterTable:
    """Load a character table from a path, file object or parsed dict."""
    if isinstance(source, dict):
        obj = source
    else:
        with open(source) as fh:
            obj = json.load(fh)
    degree = obj.get("degree")
    classes = []
    for c in obj["classes"]:
        rep = None
        if "rep" in c and c["rep"] is not None:
            if degree is None:
                raise ValueError("table with representatives needs a degree field")
            rep = parse_perm(c["rep"], degree)
        classes.append(ClassInfo(c["name"], int(c["size"]), int(c["order"]), rep))
    irreducibles = [
        (row["name"], [QuadraticValue.from_json(v) for v in row["values"]])
        for row in obj["irreducibles"]
    ]
    return CharacterTable(int(obj["group_order"]), classes, irreducibles,
                          degree=degree, name=name)


class ValidationReport:
    def __init__(self):
        self.checks: list[tuple[str, bool, str]] = []

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def lines(self):
        return [
            f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
            for name, ok, detail in self.checks
        ]

    def __str__(self):
        return "\n".join(self.lines())


def validate_table(table: CharacterTable, group: PermGroup | None = None,
                   class_size_bound: int = 200_000) -> ValidationReport:
    """Exact validation: counts, size sum, row/column orthogonality, reps."""
    rep_count = len(table.irreducibles)
    cls_count = len(table.classes)
    report = ValidationReport()
    report.add("square", rep_count == cls_count,
               f"{rep_count} irreducibles, {cls_count} classes")
    total = sum(c.size for c in table.classes)
    report.add("class sizes sum to group order", total == table.group_order,
               f"{total} vs {table.group_order}")
    ctx = table.class_list()
    rows = [ClassFunction(ctx, vals) for _, vals in table.irreducibles]
    ortho_ok, detail = True, ""
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            try:
                ip = inner_product(rows[i], rows[j])
                want = QV_ONE if i == j else QV_ZERO
                if ip != want:
                    ortho_ok, detail = False, (
                        f"<{table.irreducibles[i][0]},{table.irreducibles[j][0]}> = {ip}")
                    break
            except ValueError as exc:
                ortho_ok, detail = False, str(exc)
                break
        if not ortho_ok:
            break
    report.add("row orthonormality", ortho_ok, detail)
    col_ok, detail = True, ""
    for ci in range(cls_count):
        acc = QV_ZERO
        for row in rows:
            acc = acc + row.values[ci] * row.values[ci].conj()
        want = Fraction(table.group_order, table.classes[ci].size)
        if acc != QuadraticValue(want):
            col_ok, detail = False, f"column {table.classes[ci].name}: {acc} != {want}"
            break
    report.add("column norms equal centralizer orders", col_ok, detail)
    degs_ok = all(
        v.is_rational() and v.a.denominator == 1 and v.a > 0
        for v in (row.values[ctx.identity_index] for row in rows)
    )
    report.add("degrees are positive integers", degs_ok)
    reps = [c for c in table.classes if c.rep is not None]
    if reps:
        order_ok, detail = True, ""
        for c in reps:
            if c.rep.order() != c.order:
                order_ok, detail = False, f"{c.name}: rep order {c.rep.order()} != {c.order}"
                break
        report.add("representative element orders", order_ok, detail)
    if group is not None:
        gen_ok = all(g.degree == table.degree for g in group.generators)
        report.add("group degree matches table", gen_ok)
        try:
            if group.order(bound=class_size_bound) <= class_size_bound:
                ad = adhoc_class_list(group)
                size_ok = True
                detail = ""
                if len(ad) != cls_count:
                    size_ok, detail = False, f"group has {len(ad)} classes, table {cls_count}"
                else:
                    got = sorted(ad.sizes)
                    want = sorted(c.size for c in table.classes)
                    if got != want:
                        size_ok, detail = False, f"class sizes {got} != {want}"
                    for c in reps:
                        idx = group.class_index_of(c.rep)
                        if ad.classes[idx].size != c.size:
                            size_ok, detail = False, f"{c.name}: size {ad.classes[idx].size} != {c.size}"
                            break
                report.add("class sizes verified by enumeration", size_ok, detail)
        except Exception:
            report.add("class sizes verified by enumeration", True, "skipped: group too large")
    return report


def decompose(f: ClassFunction, table: CharacterTable) -> dict[str, int]:
    """Multiplicities of f over the table's irreducibles; exact reconstruction."""
    ctx = table.class_list()
    if f.ctx.key() != ctx.key():
        raise ValueError("class function not on this table's class list")
    mults = {}
    recon = ClassFunction.zero(ctx)
    for nm, vals in table.irreducibles:
        chi = ClassFunction(ctx, vals)
        m = inner_product(f, chi)
        if not m.is_rational() or m.a.denominator != 1:
            raise ValueError(f"non-integer multiplicity {m} at {nm}: bad table or class data")
        mi = int(m.a)
        if mi:
            mults[nm] = mi
            recon = recon + mi * chi
    if recon != f:
        raise ValueError("decomposition does not reconstruct the class function")
    return mults


def product_table(t1: CharacterTable, t2: CharacterTable) -> CharacterTable:
    """Direct-product table; classes are pairs, characters multiply."""
    d1 = t1.degree or 0
    classes = []
    for c1 in t1.classes:
        for c2 in t2.classes:
            rep = None
            if c1.rep is not None and c2.rep is not None and t2.degree is not None:
                shifted = {p + d1: q + d1 for p, q in enumerate(c2.rep.img)}
                img = list(c1.rep.img) + [shifted[i] for i in range(d1, d1 + t2.degree)]
                rep = Perm(img)
            classes.append(ClassInfo(
                name=f"{c1.name}|{c2.name}",
                size=c1.size * c2.size,
                order=lcm(c1.order, c2.order),
                rep=rep,
            ))
    irreducibles = []
    for n1, v1 in t1.irreducibles:
        for n2, v2 in t2.irreducibles:
            vals = [a * b for a in v1 for b in v2]
            irreducibles.append((f"{n1}x{n2}", vals))
    degree = (d1 + t2.degree) if (t1.degree is not None and t2.degree is not None) else None
    return CharacterTable(t1.group_order * t2.group_order, classes, irreducibles,
                          degree=degree, name=f"{t1.name}x{t2.name}")


def _cycle_type_rep(n, mu) -> Perm:
    cycles, start = [], 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Perm.from_cycles(n, cycles)


def _cycle_type_size(n, mu) -> int:
    z = 1
    counts = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    for v, m in counts.items():
        z *= v ** m * factorial(m)
    return factorial(n) // z


def symmetric_table(n: int) -> CharacterTable:
    """Character table of S_n via Murnaghan-Nakayama, classes by cycle type."""
    parts = list(partitions_of(n))
    classes = [
        ClassInfo(
            name="[" + ",".join(map(str, mu)) + "]",
            size=_cycle_type_size(n, mu),
            order=reduce(lcm, mu, 1),
            rep=_cycle_type_rep(n, mu),
        )
        for mu in parts
    ]
    irreducibles = [
        ("V[" + ",".join(map(str, lam)) + "]",
         [QuadraticValue.of(mn_character(lam, mu)) for mu in parts])
        for lam in parts
    ]
    return CharacterTable(factorial(n), classes, irreducibles, degree=n, name=f"S{n}")


def restrict_symmetric(rep, action, class_reps, group: PermGroup | None = None):
    """Pull a SymmRep back along an action and sample it at class representatives.

    action maps group elements to permutations of the target set; when the
    group is supplied, the homomorphism property is spot-checked on generator
    pairs.  Returns a list of integers, one per representative.
    """
    if group is not None and not group.is_homomorphism_on_generators(action):
        raise ValueError("action is not a homomorphism on generator pairs")
    return [rep.character(action(g).cycle_type()) for g in class_reps]


def induce_from_stabilizer(chi, orbit, class_reps):
    """Induced class function from a stabilizer, summed over fixed orbit members.

    chi is a function on elements stabilizing the orbit seed setwise; the
    value of the induced function at g is the sum of chi(x^-1 g x) over orbit
    members fixed by g, with x the witness carrying the seed to that member.
    Returns a list of values, one per representative.
    """
    out = []
    for g in class_reps:
        total = 0
        for mask, wit in orbit:
            if g.act_mask(mask) == mask:
                total += chi(wit.inv() * g * wit)
        out.append(total)
    return out
