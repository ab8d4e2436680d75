"""Shared helpers for asset generation: Golay code, Mathieu chain, IO.

Everything here is build-time tooling; nothing ships in the package.  Points
are 1-based; field element f of F_23 is point f+1 and the extended position
(infinity) is point 24.
"""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from eqkl.perms import Perm, mask_of, points_of, popcount  # noqa: E402

P = 23
INF_POINT = 24


def qr_residues(p):
    return {(i * i) % p for i in range(1, p)}


def golay_codewords():
    """Span of the extended quadratic-residue rows: 4096 codewords on 24 bits.

    Row u (u in F_23) is the characteristic vector of {u+r : r in QR(23)}
    together with the infinity position; bit f is point f+1, bit 23 is
    infinity.
    """
    residues = qr_residues(P)
    rows = []
    for u in range(P):
        m = 1 << P  # infinity column
        for r in residues:
            m |= 1 << ((u + r) % P)
        rows.append(m)
    # Gaussian elimination over F_2 to find a basis
    basis = []
    for row in rows:
        cur = row
        for b in basis:
            cur = min(cur, cur ^ b)
        if cur:
            basis.append(cur)
            basis.sort(reverse=True)
    span = [0]
    for b in basis:
        span += [w ^ b for w in span]
    assert len(span) == 1 << len(basis)
    return basis, span


def octads_and_dodecads():
    basis, span = golay_codewords()
    assert len(span) == 4096, f"code has dimension {len(basis)}, want 12"
    by_weight = {}
    for w in span:
        by_weight.setdefault(popcount(w), []).append(w)
    weights = {k: len(v) for k, v in sorted(by_weight.items())}
    assert weights == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, weights
    return sorted(by_weight[8]), sorted(by_weight[12])


def field_perm(fn):
    """Permutation of 1..24 from a function on F_23 + {None = infinity}."""
    img = [None] * 24
    for point in range(1, 25):
        f = None if point == INF_POINT else point - 1
        g = fn(f)
        img[point - 1] = (INF_POINT if g is None else g + 1) - 1
    assert sorted(img) == list(range(24))
    return Perm(img)


def inv_mod(a, p=P):
    return pow(a, p - 2, p)


def m24_generators():
    """Conway-Sloane generators of M24 on P^1(F_23).

    alpha: x -> x+1; beta: x -> 2x; gamma: x -> -1/x;
    delta: x -> 9x^3 on squares (0 and infinity fixed), x^3/9 on non-squares;
    the 9x^3 / x^3/9 roles are the ones matching the residue-row labelling of
    the code built here.
    """
    residues = qr_residues(P)

    def alpha(f):
        return None if f is None else (f + 1) % P

    def beta(f):
        return None if f is None else (2 * f) % P

    def gamma(f):
        if f is None:
            return 0
        if f == 0:
            return None
        return (-inv_mod(f)) % P

    def delta(f):
        if f is None or f == 0:
            return f
        if f in residues:
            return (9 * pow(f, 3, P)) % P
        return (pow(f, 3, P) * inv_mod(9)) % P

    return [field_perm(fn) for fn in (alpha, beta, gamma, delta)]


def preserves_blocks(perm, block_masks):
    blocks = set(block_masks)
    return all(perm.act_mask(b) in blocks for b in blocks)


def restrict_group_gens(gens, points):
    """Restrict generators fixing `points` setwise to those points, 1-based."""
    pts0 = tuple(p - 1 for p in sorted(points))
    return [g.restrict_to(pts0) for g in gens]


def blocks_to_lists(blocks):
    return [sorted(points_of(b)) for b in sorted(blocks)]


def write_json(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")
    print("wrote", path)


def sympy_group(gens):
    from sympy.combinatorics import Permutation, PermutationGroup

    return PermutationGroup([Permutation(list(g.img)) for g in gens])


def reduce_generators(gens, order, degree, tries=200, seed=1):
    """Find a short word-generated subset with the same order."""
    import random

    rng = random.Random(seed)
    best = list(gens)

    def group_order(gen_subset):
        return sympy_group(gen_subset).order()

    # try pairs of random products
    pool = list(gens)
    for _ in range(tries):
        a = pool[rng.randrange(len(pool))]
        b = pool[rng.randrange(len(pool))]
        for _ in range(rng.randrange(1, 4)):
            a = a * pool[rng.randrange(len(pool))]
        cand = [a, b]
        if group_order(cand) == order:
            return cand
    # fall back to a greedy prefix
    chosen = []
    for g in pool:
        chosen.append(g)
        if group_order(chosen) == order:
            return chosen
    return best
