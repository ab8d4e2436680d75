import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from eqkl.chartab import load_table
from eqkl.equivariant import Brute
from eqkl.groups import PermGroup
from eqkl.matroid import load_matroid
from eqkl.perms import parse_perm

ASSETS = os.path.join(os.path.dirname(__file__), "..", "src", "eqkl", "assets")


def asset_path(name):
    return os.path.join(ASSETS, name)


def load_asset_group(name):
    with open(asset_path(f"{name}.json")) as fh:
        obj = json.load(fh)
    n = obj["degree"]
    return PermGroup(n, [parse_perm(s, n) for s in obj["generators"]])


def load_asset_matroid(name):
    return load_matroid(asset_path(f"{name}.json"))


def load_asset_table(name):
    return load_table(asset_path(f"{name}.json"), name=name)


@pytest.fixture(scope="session")
def engine():
    """One shared brute engine so memoized subresults are reused."""
    return Brute()


@pytest.fixture(scope="session")
def vamos_group():
    return load_asset_group("vamos_w")
