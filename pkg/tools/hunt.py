"""Character tables of groups too large to enumerate (M23, M24).

Strategy: conjugacy classes are pinned down by sampling random words and
classifying by (element order, cycle type); in these groups every collision
of that signature is an algebraically conjugate pair, whose two labels are a
convention.  Rational virtual characters are then generated (permutation
characters on points, pairs, triples and blocks; inductions from the
subgroup below in the chain and from cyclic subgroups; tensor products and
symmetrized squares), reduced greedily against known irreducibles by exact
inner products.  Norm-1 residuals are new irreducibles; the norm-2 residuals
that survive are sums of Galois-conjugate pairs, which are split exactly by
solving the small quadratic system its orthogonality relations impose.
"""

import os
import sys
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eqkl.chartab import QuadraticValue  # noqa: E402
from eqkl.perms import Perm  # noqa: E402


class BigClasses:
    """Conjugacy class data for a group given by sampled representatives."""

    def __init__(self, group_order, entries, galois_pairs):
        # entries: list of (name, size, order, rep)
        self.group_order = group_order
        self.entries = entries
        self.galois_pairs = galois_pairs  # list of (iA, iB)
        self.by_signature = {}
        for i, (_, _, order, rep) in enumerate(entries):
            self.by_signature.setdefault((order, rep.cycle_type()), []).append(i)

    def __len__(self):
        return len(self.entries)

    @property
    def sizes(self):
        return [e[1] for e in self.entries]

    @property
    def reps(self):
        return [e[3] for e in self.entries]

    def classify(self, perm) -> int:
        """Class index by signature; a Galois pair resolves to its A member."""
        key = (perm.order(), perm.cycle_type())
        hits = self.by_signature[key]
        return hits[0]

    def symmetrize(self, values):
        """Average over Galois pairs; exact for genuinely rational functions."""
        vals = [Fraction(v) for v in values]
        for a, b in self.galois_pairs:
            s = vals[a] + vals[b]
            vals[a] = vals[b] = s / 2
        return tuple(vals)

    def inner(self, f, g):
        total = Fraction(0)
        for size, x, y in zip(self.sizes, f, g):
            total += size * x * y
        return total / self.group_order


def sample_classes(group, group_order, centralizer_orders, seed=5):
    """Find one representative per class by deterministic random words.

    centralizer_orders: dict (element order, cycle_type) -> list of
    centralizer orders for the classes with that signature (two equal values
    mark an algebraically conjugate pair).
    """
    import random

    rng = random.Random(seed)
    gens = list(group.generators)
    want = dict(centralizer_orders)
    ident = Perm.identity(group.degree)
    found = {(1, ident.cycle_type()): ident}
    cur = ident
    steps = 0
    while len(found) < len(want):
        cur = cur * gens[rng.randrange(len(gens))]
        steps += 1
        if steps > 2_000_000:
            raise RuntimeError(f"sampling stalled; missing {set(want) - set(found)}")
        n = cur.order()
        probe = cur
        for s in range(1, n):
            if s > 1:
                probe = probe * cur
            if n % s and s != 1:
                continue
            sig = (probe.order(), probe.cycle_type())
            if sig in want and sig not in found:
                found[sig] = probe
    entries = []
    galois_pairs = []
    for sig in sorted(want, key=lambda s: (s[0], tuple(sorted(s[1])))):
        cents = want[sig]
        rep = found[sig]
        n = sig[0]
        if len(cents) == 1:
            entries.append((None, group_order // cents[0], n, rep))
        elif len(cents) == 2:
            assert cents[0] == cents[1], "paired classes must share a size"
            m = _pair_power(n)
            rep_b = power(rep, m)
            assert (rep_b.order(), rep_b.cycle_type()) == sig
            ia = len(entries)
            entries.append((None, group_order // cents[0], n, rep))
            entries.append((None, group_order // cents[1], n, rep_b))
            galois_pairs.append((ia, ia + 1))
        else:
            raise RuntimeError(f"unexpected signature multiplicity {len(cents)}")
    return entries, galois_pairs


def power(perm, s):
    out = Perm.identity(perm.degree)
    base = perm
    while s:
        if s & 1:
            out = out * base
        base = base * base
        s >>= 1
    return out


def _pair_power(n):
    """An exponent moving between the two classes of an algebraic pair.

    Any unit that is not a square-type residue works; the assignment within a
    pair is a labelling convention, so the smallest coprime non-identity
    exponent whose action is nontrivial on the quadratic subfield is used.
    """
    for m in range(2, n):
        if gcd(m, n) == 1:
            return m
    return 1


# -- candidate generators -------------------------------------------------------


def perm_char_points(classes: BigClasses):
    return tuple(Fraction(sum(1 for i, p in enumerate(rep.img) if p == i))
                 for rep in classes.reps)


def perm_char_subsets(classes: BigClasses, size):
    """Number of fixed `size`-subsets of the permuted points."""
    out = []
    for rep in classes.reps:
        lens = [len(c) for c in rep.cycles()]
        fixed = rep.degree - sum(lens)
        # count multisets of cycles whose lengths sum to `size`
        counts = {}
        for length in lens + [1] * fixed:
            counts[length] = counts.get(length, 0) + 1
        total = [0] * (size + 1)
        total[0] = 1
        for length, mult in counts.items():
            new = total[:]
            for used in range(1, mult + 1):
                add = used * length
                if add > size:
                    break
                for s in range(size - add, -1, -1):
                    if total[s]:
                        from math import comb

                        new[s + add] += total[s] * comb(mult, used)
            total = new
        out.append(Fraction(total[size]))
    return tuple(out)


def perm_char_blocks(classes: BigClasses, block_masks):
    out = []
    for rep in classes.reps:
        out.append(Fraction(sum(1 for b in block_masks if rep.act_mask(b) == b)))
    return tuple(out)


def induce_by_fusion(sub_sizes, sub_group_order, sub_values, fusion,
                     classes: BigClasses):
    """Induced class function via the class-fusion formula, symmetrized."""
    acc = [Fraction(0)] * len(classes)
    for c_sub, gi in enumerate(fusion):
        cent_sub = Fraction(sub_group_order, sub_sizes[c_sub])
        acc[gi] += Fraction(sub_values[c_sub]) / cent_sub
    out = []
    for gi, v in enumerate(acc):
        cent = Fraction(classes.group_order, classes.sizes[gi])
        out.append(v * cent)
    return classes.symmetrize(out)


def cyclic_inductions(classes: BigClasses):
    """Artin seeds: inductions of rational characters of cyclic subgroups."""
    from sympy import mobius

    out = []
    for idx, rep in enumerate(classes.reps):
        n = rep.order()
        if n == 1:
            continue
        power_class = [classes.classify(power(rep, s)) for s in range(n)]
        for e in _divisors(n):
            if e == 1:
                continue
            # rational character of Z/n: sum over primitive e-th root chars,
            # value at g^s is the Ramanujan sum c_e(s)
            values = [_ramanujan(e, s) for s in range(n)]
            acc = [Fraction(0)] * len(classes)
            for s in range(n):
                acc[power_class[s]] += Fraction(values[s], n)
            ind = []
            for gi, v in enumerate(acc):
                cent = Fraction(classes.group_order, classes.sizes[gi])
                ind.append(v * cent)
            out.append(classes.symmetrize(ind))
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _ramanujan(e, s):
    g = gcd(e, s)
    m = e // g
    from sympy import mobius, totient

    return int(mobius(m)) * int(totient(e)) // int(totient(m))


def power_map(classes: BigClasses, idx, s):
    return classes.classify(power(classes.reps[idx], s))


def sym2(classes: BigClasses, f):
    sq = [v * v for v in f]
    two = [f[power_map(classes, i, 2)] for i in range(len(classes))]
    return (classes.symmetrize([(a + b) / 2 for a, b in zip(sq, two)]),
            classes.symmetrize([(a - b) / 2 for a, b in zip(sq, two)]))


def adams(classes: BigClasses, f, s):
    return classes.symmetrize([f[power_map(classes, i, s)] for i in range(len(classes))])


# -- the reduction loop ----------------------------------------------------------


class Hunter:
    def __init__(self, classes: BigClasses, verbose=True):
        self.classes = classes
        self.known = []  # irreducible value tuples, rational entries
        self.pair_sums = []  # norm-2 residuals (Galois pair sums)
        self.residuals = []  # reduced leftovers of norm >= 3
        self.verbose = verbose

    def _reduce(self, f):
        f = list(self.classes.symmetrize(f))
        ident = self._ident()
        for chi in self.known:
            m = self.classes.inner(f, chi)
            assert m.denominator == 1, f"non-integral multiplicity {m}"
            if m:
                f = [a - m * b for a, b in zip(f, chi)]
        return tuple(f)

    def _ident(self):
        return next(i for i, e in enumerate(self.classes.entries) if e[2] == 1)

    def feed(self, f) -> bool:
        """Reduce a candidate; returns True if something new was learned."""
        r = self._reduce(f)
        n2 = self.classes.inner(r, r)
        if n2 == 0:
            return False
        ident = self._ident()
        if n2 == 1:
            if r[ident] < 0:
                r = tuple(-x for x in r)
            assert r[ident] > 0
            self.known.append(r)
            if self.verbose:
                print(f"  irreducible of degree {r[ident]} "
                      f"({len(self.known)}/{len(self.classes)})")
            self._requeue_pairs()
            return True
        if n2 == 2 and r[ident] > 0:
            if any(s == r for s in self.pair_sums):
                return False
            self.pair_sums.append(r)
            if self.verbose:
                print(f"  pair sum of dimension {r[ident]} stored "
                      f"({len(self.pair_sums)} pairs)")
            return True
        # keep modest leftovers for lattice reduction
        if 2 < n2 <= 60:
            if r[ident] < 0:
                r = tuple(-x for x in r)
            if r not in self.residuals:
                self.residuals.append(r)
                if len(self.residuals) > 160:
                    self.residuals.pop(0)
        return False

    def crunch(self):
        """Gauss-reduce the residual pool to pull out short vectors."""
        pool = [list(v) for v in self.residuals] + [list(s) for s in self.pair_sums]
        self.residuals = []
        changed = True
        sweeps = 0
        while changed and sweeps < 30:
            changed = False
            sweeps += 1
            pool = [self._reduce(v) for v in pool]
            pool = [list(v) for v in pool
                    if self.classes.inner(v, v) not in (0,)]
            pool.sort(key=lambda v: self.classes.inner(v, v))
            for i in range(len(pool)):
                ni = self.classes.inner(pool[i], pool[i])
                if ni == 0:
                    continue
                for j in range(len(pool)):
                    if i == j:
                        continue
                    ip = self.classes.inner(pool[j], pool[i])
                    m = (2 * ip + ni) // (2 * ni)  # nearest integer to ip/ni
                    if m:
                        cand = [a - m * b for a, b in zip(pool[j], pool[i])]
                        if self.classes.inner(cand, cand) < self.classes.inner(pool[j], pool[j]):
                            pool[j] = cand
                            changed = True
        for v in pool:
            n2 = self.classes.inner(v, v)
            if n2 in (1, 2):
                self.feed(tuple(v))
            elif 2 < n2 <= 60:
                vt = tuple(v)
                ident = self._ident()
                if vt[ident] < 0:
                    vt = tuple(-x for x in vt)
                if vt not in self.residuals:
                    self.residuals.append(vt)

    def _requeue_pairs(self):
        pairs = self.pair_sums
        self.pair_sums = []
        for s in pairs:
            self.feed(s)

    def complete(self) -> bool:
        return len(self.known) + 2 * len(self.pair_sums) == len(self.classes)


# -- pair splitting ----------------------------------------------------------------


def quadratic_subfield_radicands(n):
    """Squarefree d with Q(sqrt(d)) inside Q(zeta_n)."""
    out = []
    for d in range(-4 * n, 4 * n + 1):
        if d in (0, 1):
            continue
        ad = abs(d)
        if any(ad % (f * f) == 0 for f in range(2, int(ad ** 0.5) + 1)):
            continue
        disc = d if d % 4 == 1 else 4 * d
        if n % abs(disc) == 0:
            out.append(d)
    return out


def split_pairs(classes: BigClasses, pair_sums, verbose=True):
    """Split each Galois pair sum into chi and its conjugate, exactly.

    Each split is chi = (s + delta)/2 with delta supported on paired classes,
    delta(A) = -delta(B) = beta*sqrt(d); the quadratic constraints are
    <delta,delta> = 2 and orthogonality between distinct deltas.
    """
    pair_classes = classes.galois_pairs
    results = []  # list of (s, d, {pair index -> beta}) to turn into rows
    chosen = []
    for s in pair_sums:
        options = []
        orders = {}
        for pi, (ia, ib) in enumerate(pair_classes):
            orders[pi] = classes.entries[ia][2]
        # candidate radicands: must embed in all supported class orders; try
        # every radicand available to at least one pair class
        cand_d = set()
        for pi, n in orders.items():
            cand_d.update(quadratic_subfield_radicands(n))
        for d in sorted(cand_d):
            support = [pi for pi, n in orders.items()
                       if d in quadratic_subfield_radicands(n)]
            # solve sum over support of |C_P| * beta_P^2 * |d| = |G|
            target = Fraction(classes.group_order, abs(d))
            sols = _beta_solutions(classes, s, support, target, pair_classes)
            for betas in sols:
                options.append((d, betas))
        results.append((s, options))
    # choose one option per pair, requiring mutual orthogonality
    final = []

    def ok_together(chosen_opts):
        for i in range(len(chosen_opts)):
            for j in range(i + 1, len(chosen_opts)):
                (d1, b1), (d2, b2) = chosen_opts[i], chosen_opts[j]
                shared = set(b1) & set(b2)
                if d1 != d2:
                    if any(b1[p] and b2[p] for p in shared):
                        return False
                else:
                    tot = Fraction(0)
                    for p in shared:
                        ia, _ = pair_classes[p]
                        tot += classes.sizes[ia] * b1[p] * b2[p]
                    if tot != 0:
                        return False
        return True

    def search(i, acc):
        if i == len(results):
            return list(acc)
        s, opts = results[i]
        for opt in opts:
            acc.append(opt)
            if ok_together(acc):
                got = search(i + 1, acc)
                if got is not None:
                    return got
            acc.pop()
        return None

    sol = search(0, [])
    assert sol is not None, "pair splitting found no consistent solution"
    rows = []
    for (s, _), (d, betas) in zip(results, sol):
        va, vb = [], []
        for ci in range(len(classes)):
            base = Fraction(s[ci], 2)
            beta, sign = Fraction(0), 0
            for p, (ia, ib) in enumerate(pair_classes):
                if betas.get(p):
                    if ci == ia:
                        beta, sign = betas[p], 1
                    elif ci == ib:
                        beta, sign = betas[p], -1
            if sign == 0:
                if s[ci].denominator != 1 or s[ci] % 2:
                    raise AssertionError("rational value of a split pair must be even")
                va.append(QuadraticValue(base))
                vb.append(QuadraticValue(base))
            else:
                half = Fraction(beta, 2) * sign
                va.append(QuadraticValue(base, half, d))
                vb.append(QuadraticValue(base, -half, d))
        rows.append((tuple(va), tuple(vb)))
        if verbose:
            print(f"  split a pair with radicand {d}")
    return rows


def _beta_solutions(classes: BigClasses, s, support, target, pair_classes):
    """Integer-or-half-integer beta vectors with the required norm.

    Values chi(P) = (s_P + beta_P sqrt(d))/2 must be algebraic integers, so
    beta_P is congruent to s_P mod 2 for d = 1 mod 4 (and both even
    otherwise, which does not occur here).  beta_P = 0 is allowed only when
    s_P is even.
    """
    sols = []
    sizes = [classes.sizes[pair_classes[p][0]] for p in support]

    def rec(i, remaining, acc):
        if i == len(support):
            if remaining == 0:
                sols.append({p: b for p, b in zip(support, acc) })
            return
        p = support[i]
        ia, _ = pair_classes[p]
        sval = s[ia]
        parity = sval % 2
        size = sizes[i]
        b = parity if parity else 0
        # beta must match parity of s at that class; enumerate |beta| upward
        beta = parity
        if parity == 0:
            beta = 0
        seen_any = False
        while True:
            cost = size * beta * beta
            if beta and cost > remaining:
                break
            if beta == 0:
                rec(i + 1, remaining, acc + [Fraction(0)])
                beta = 2
                continue
            if cost <= remaining:
                # sign convention: first nonzero beta positive, rest free
                signs = [beta]
                if any(acc):
                    signs = [beta, -beta]
                for sb in signs:
                    rec(i + 1, remaining - cost, acc + [Fraction(sb)])
            beta += 2
        return

    def rec_start():
        rec(0, target, [])

    rec_start()
    # require full parity compliance: odd s_P forces nonzero beta_P, even
    # allows zero; drop duplicates
    uniq = []
    for sol in sols:
        ok = True
        for p, (ia, ib) in enumerate(pair_classes):
            sval = s[ia]
            if sval % 2 and (p not in sol or sol[p] % 2 == 0):
                ok = False
                break
        if ok and sol not in uniq:
            uniq.append(sol)
    return uniq
