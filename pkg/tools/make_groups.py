"""Build the Steiner-system and Mathieu-group assets from the Golay code.

Chain: extended QR code -> octads -> S(5,8,24) with M24 = <alpha,beta,gamma,
delta>; point stabilizers give M23/S(4,7,23) and M22/S(3,6,22); the setwise
stabilizer of a dodecad gives M12 acting on S(5,6,12) (hexads = 6-point
intersections of octads with the dodecad), and its point stabilizer gives
M11/S(4,5,11).  Orders are verified with sympy's Schreier-Sims.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

from asset_lib import (
    INF_POINT,
    blocks_to_lists,
    m24_generators,
    octads_and_dodecads,
    preserves_blocks,
    reduce_generators,
    restrict_group_gens,
    sympy_group,
    write_json,
)

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
from eqkl.groups import PermGroup  # noqa: E402
from eqkl.matroid import SteinerSystem  # noqa: E402
from eqkl.perms import mask_of, points_of, popcount  # noqa: E402

ASSETS = os.path.join(os.path.dirname(__file__), "..", "src", "eqkl", "assets")

ORDERS = {
    "m24": 244823040,
    "m23": 10200960,
    "m22": 443520,
    "m12": 95040,
    "m11": 7920,
}


def check_steiner(name, d, bs, n, blocks):
    system = SteinerSystem(d, bs, n, tuple(sorted(blocks)))
    ok, report, _ = system.validate()
    assert ok, (name, report)
    print(f"{name}: S({d},{bs},{n}) with {len(blocks)} blocks OK")
    return system


def group_json(degree, gens):
    return {"degree": degree, "generators": [str(g) for g in gens]}


def main():
    octads, dodecads = octads_and_dodecads()
    print(f"octads: {len(octads)}, dodecads: {len(dodecads)}")

    gens24 = m24_generators()
    for i, g in enumerate(gens24):
        assert preserves_blocks(g, octads), f"generator {i} breaks the octads"
    print("all four generators preserve the octad set")

    o24 = sympy_group(gens24).order()
    assert o24 == ORDERS["m24"], o24
    print("|M24| =", o24)

    # S(5,8,24)
    check_steiner("s_5_8_24", 5, 8, 24, octads)
    write_json(os.path.join(ASSETS, "s_5_8_24.json"), {
        "type": "steiner", "d": 5, "block_size": 8, "n": 24,
        "blocks": blocks_to_lists(octads),
    })
    write_json(os.path.join(ASSETS, "m24.json"), group_json(24, gens24))

    W24 = PermGroup(24, gens24)

    # M23: stabilizer of point 24 (Schreier generators, then reduced)
    stab23 = W24.stabilizer(mask_of([24]))
    gens23_full = [g for g in stab23.generators]
    assert all(g(INF_POINT - 1) == INF_POINT - 1 for g in gens23_full)
    gens23r = restrict_group_gens(gens23_full, range(1, 24))
    o23 = sympy_group(gens23r).order()
    assert o23 == ORDERS["m23"], o23
    gens23r = reduce_generators(gens23r, ORDERS["m23"], 23)
    print("|M23| =", o23, "generators:", len(gens23r))
    blocks23 = [b & ~(1 << 23) for b in octads if b >> 23]
    check_steiner("s_4_7_23", 4, 7, 23, blocks23)
    assert all(preserves_blocks(g, blocks23) for g in gens23r)
    write_json(os.path.join(ASSETS, "s_4_7_23.json"), {
        "type": "steiner", "d": 4, "block_size": 7, "n": 23,
        "blocks": blocks_to_lists(blocks23),
    })
    write_json(os.path.join(ASSETS, "m23.json"), group_json(23, gens23r))

    # M22: stabilizer of 23 and 24
    W23 = PermGroup(23, gens23r)
    stab22 = W23.stabilizer(mask_of([23]))
    gens22_full = [g for g in stab22.generators]
    gens22r = restrict_group_gens(gens22_full, range(1, 23))
    o22 = sympy_group(gens22r).order()
    assert o22 == ORDERS["m22"], o22
    gens22r = reduce_generators(gens22r, ORDERS["m22"], 22)
    print("|M22| =", o22, "generators:", len(gens22r))
    blocks22 = [b & ~(1 << 22) for b in blocks23 if b >> 22]
    check_steiner("s_3_6_22", 3, 6, 22, blocks22)
    assert all(preserves_blocks(g, blocks22) for g in gens22r)
    write_json(os.path.join(ASSETS, "s_3_6_22.json"), {
        "type": "steiner", "d": 3, "block_size": 6, "n": 22,
        "blocks": blocks_to_lists(blocks22),
    })
    write_json(os.path.join(ASSETS, "m22.json"), group_json(22, gens22r))

    # M12: setwise stabilizer of a dodecad, acting on its 12 points.
    dodecad = dodecads[0]
    dpoints = sorted(points_of(dodecad))
    print("dodecad:", dpoints)
    orbit = W24.orbit_transversal(dodecad)
    assert len(orbit) == 2576, len(orbit)
    stab12 = W24.stabilizer(dodecad)
    gens12r = restrict_group_gens(stab12.generators, dpoints)
    o12 = sympy_group(gens12r).order()
    assert o12 == ORDERS["m12"], o12
    gens12r = reduce_generators(gens12r, ORDERS["m12"], 12)
    print("|M12| =", o12, "generators:", len(gens12r))
    hexads = set()
    for o in octads:
        inter = o & dodecad
        if popcount(inter) == 6:
            hexads.add(mask_of([dpoints.index(p) + 1 for p in points_of(inter)]))
    check_steiner("s_5_6_12", 5, 6, 12, hexads)
    assert all(preserves_blocks(g, hexads) for g in gens12r)
    write_json(os.path.join(ASSETS, "s_5_6_12.json"), {
        "type": "steiner", "d": 5, "block_size": 6, "n": 12,
        "blocks": blocks_to_lists(hexads),
    })
    write_json(os.path.join(ASSETS, "m12.json"), group_json(12, gens12r))

    # M11: stabilizer of point 12 inside M12
    W12 = PermGroup(12, gens12r)
    stab11 = W12.stabilizer(mask_of([12]))
    gens11r = restrict_group_gens(stab11.generators, range(1, 12))
    o11 = sympy_group(gens11r).order()
    assert o11 == ORDERS["m11"], o11
    gens11r = reduce_generators(gens11r, ORDERS["m11"], 11)
    print("|M11| =", o11, "generators:", len(gens11r))
    blocks11 = [b & ~(1 << 11) for b in hexads if b >> 11]
    check_steiner("s_4_5_11", 4, 5, 11, blocks11)
    assert all(preserves_blocks(g, blocks11) for g in gens11r)
    write_json(os.path.join(ASSETS, "s_4_5_11.json"), {
        "type": "steiner", "d": 4, "block_size": 5, "n": 11,
        "blocks": blocks_to_lists(blocks11),
    })
    write_json(os.path.join(ASSETS, "m11.json"), group_json(11, gens11r))

    print("group/steiner assets complete")


if __name__ == "__main__":
    main()
