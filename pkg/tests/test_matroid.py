import json
from itertools import combinations
from random import Random

import pytest

from conftest import asset_path, load_asset_group, load_asset_matroid
from eqkl.matroid import (
    Matroid,
    MatroidError,
    SteinerSystem,
    add_parallel_point,
    boolean,
    direct_sum,
    from_steiner,
    load_matroid,
    matroid_from_json,
    steiner_from_json,
    uniform,
    vamos,
)
from eqkl.perms import mask_of, points_of, popcount
from oracles import is_stressed_definitional


def test_uniform_rank_oracle():
    u = uniform(3, 6)
    for pts in [(1,), (1, 2, 3), (1, 2, 3, 4, 5)]:
        assert u.rank_of(mask_of(pts)) == min(len(pts), 3)
    assert u.rank_of(0) == 0
    assert u.loops() == 0
    u0 = uniform(0, 3)
    assert u0.loops() == mask_of([1, 2, 3])
    assert len(u0.bases) == 1


def test_vamos_basics():
    v = vamos()
    assert len(v.bases) == 65
    assert v.rank == 4 and v.is_loopless()
    assert v.rank_of(mask_of([1, 2, 3, 4])) == 3
    assert v.rank_of(mask_of([1, 2, 3, 5])) == 4
    assert v.is_paving()


def test_exchange_axiom_rejects_non_matroid():
    with pytest.raises(MatroidError):
        Matroid(4, 2, [mask_of([1, 2]), mask_of([3, 4])])


def test_rank_submodular_and_unit_increase():
    rng = Random(3)
    for m in (vamos(), uniform(3, 7), direct_sum(uniform(2, 4), boolean(2))):
        ground = m.ground_mask
        n = popcount(ground)
        for _ in range(150):
            a = rng.getrandbits(n) & ground
            b = rng.getrandbits(n) & ground
            ra, rb = m.rank_of(a), m.rank_of(b)
            assert m.rank_of(a | b) + m.rank_of(a & b) <= ra + rb
            for p in points_of(ground):
                bit = 1 << (p - 1)
                if not a & bit:
                    assert ra <= m.rank_of(a | bit) <= ra + 1


def test_contract_restrict():
    u = uniform(4, 8)
    c = u.contract(mask_of([1]))
    assert c.rank == 3 and popcount(c.ground_mask) == 7
    assert sorted(points_of(c.ground_mask)) == list(range(2, 9))
    assert u.contract(0).bases == u.bases
    assert u.restrict(u.ground_mask).bases == u.bases
    v = vamos()
    cv = v.contract(mask_of([1, 2, 3, 4]))
    assert cv.rank == 1 and cv.loops() == 0
    # restriction of a uniform matroid is uniform
    r = u.restrict(mask_of([1, 2, 3]))
    assert r.rank == 3 and len(r.bases) == 1
    assert v.contract(mask_of([1, 2, 5, 6])).loops() == 0


def test_loops_after_spanning_contraction():
    u = uniform(2, 5)
    c = u.contract(mask_of([1, 2]))
    assert c.loops() == c.ground_mask


def test_hyperplanes_and_stress():
    v = vamos()
    big = [h for h in v.hyperplanes() if popcount(h) >= 4]
    want = [mask_of(s) for s in
            [(1, 2, 3, 4), (1, 2, 5, 6), (3, 4, 5, 6), (3, 4, 7, 8), (5, 6, 7, 8)]]
    assert sorted(big) == sorted(want)
    for h in big:
        assert v.is_stressed(h)
        assert is_stressed_definitional(v, h)
    assert not v.is_stressed(mask_of([1, 2, 3, 5]))
    u = uniform(3, 5)
    for pts in combinations(range(1, 6), 2):
        assert u.is_stressed(mask_of(pts))
        assert is_stressed_definitional(u, mask_of(pts))
    m = direct_sum(uniform(2, 4), boolean(1))
    assert m.is_stressed(mask_of([1, 2, 3, 4]))
    assert is_stressed_definitional(m, mask_of([1, 2, 3, 4]))


def test_relaxation():
    v = vamos()
    big = [h for h in v.hyperplanes() if popcount(h) >= 4]
    relaxed = v.relax_orbit(big)
    assert relaxed.bases == uniform(4, 8).bases
    assert v.relax_orbit([]).bases == v.bases
    m = direct_sum(uniform(2, 4), boolean(1))
    r = m.relax_orbit([mask_of([1, 2, 3, 4])])
    assert r.bases == uniform(3, 5).bases
    with pytest.raises(MatroidError):
        v.relax_orbit([mask_of([1, 2, 3, 5])])


def test_stressed_orbits(vamos_group):
    v = vamos()
    orbits = v.stressed_orbits(vamos_group)
    assert sorted(len(o) for o in orbits) == [1, 4]
    u = uniform(3, 6)
    from eqkl.groups import symmetric_group

    assert u.stressed_orbits(symmetric_group(6)) == []


def test_steiner_validation():
    blocks = json.load(open(asset_path("s_4_5_11.json")))["blocks"]
    system = SteinerSystem(4, 5, 11, tuple(mask_of(b) for b in blocks))
    ok, report, cover = system.validate()
    assert ok and len(blocks) == 66
    broken = SteinerSystem(4, 5, 11, system.blocks[1:])
    ok, report, _ = broken.validate()
    assert not ok
    assert "no block" in report[0][2]


def test_from_steiner_matroids():
    cases = [("s_4_5_11", 5, 11, 66), ("s_5_6_12", 6, 12, 132),
              ("s_3_6_22", 4, 22, 77)]
    for name, rank, n, nblocks in cases:
        m = load_asset_matroid(name)
        assert m.rank == rank and popcount(m.ground_mask) == n
        assert m.is_paving()
        blocks = m.hyperplanes()
        assert len(blocks) == nblocks
        # blocks have rank d and d-subsets are independent
        d = rank - 1
        for b in blocks[:5]:
            assert m.rank_of(b) == d
            assert m.is_stressed(b)
        for pts in combinations(range(1, d + 2), d):
            assert m.rank_of(mask_of(pts)) == d


def test_steiner_rank_oracle_matches_basis_oracle():
    m = load_asset_matroid("s_4_5_11")
    plain = Matroid(m.n, m.rank, m.bases, validate=False)
    rng = Random(11)
    for _ in range(60):
        s = rng.getrandbits(11)
        assert m.rank_of(s) == plain.rank_of(s)


def test_relaxing_all_orbits_gives_uniform():
    for name, group_name in [("s_4_5_11", "m11"), ("s_5_6_12", "m12"),
                              ("s_3_6_22", "m22"), ("s_4_7_23", "m23"),
                              ("s_5_8_24", "m24")]:
        m = load_asset_matroid(name)
        group = load_asset_group(group_name)
        orbits = m.stressed_orbits(group)
        relaxed = m.relax_orbit([h for orbit in orbits for h, _ in orbit])
        n, k = popcount(m.ground_mask), m.rank
        assert relaxed.bases == uniform(k, n).bases


def test_stressed_definitional_on_bundled_blocks():
    for name in ("s_4_5_11", "s_3_6_22"):
        m = load_asset_matroid(name)
        for h in m.hyperplanes()[:3]:
            assert m.is_stressed(h)
            assert is_stressed_definitional(m, h)


def test_direct_sum_and_parallel():
    m = direct_sum(uniform(1, 2), uniform(1, 2))
    assert m.rank == 2 and len(m.bases) == 4
    mp = add_parallel_point(uniform(2, 3), 1)
    assert mp.rank == 2 and popcount(mp.ground_mask) == 4
    assert mp.rank_of(mask_of([1, 4])) == 1


def test_matroid_json_formats():
    assert matroid_from_json({"type": "vamos"}).bases == vamos().bases
    assert matroid_from_json({"type": "uniform", "k": 2, "n": 4}).rank == 2
    m = matroid_from_json({
        "type": "bases", "n": 3, "rank": 2,
        "bases": [[1, 2], [1, 3], [2, 3]],
    })
    assert m.bases == uniform(2, 3).bases
    with pytest.raises(MatroidError):
        matroid_from_json({"type": "nonsense"})


def test_group_preserves_bundled_blocks():
    for name, group_name in [("s_4_5_11", "m11"), ("s_5_6_12", "m12"),
                              ("s_3_6_22", "m22"), ("s_4_7_23", "m23"),
                              ("s_5_8_24", "m24")]:
        obj = json.load(open(asset_path(f"{name}.json")))
        blocks = {mask_of(b) for b in obj["blocks"]}
        group = load_asset_group(group_name)
        for g in group.generators:
            assert all(g.act_mask(b) in blocks for b in blocks), (name, group_name)
