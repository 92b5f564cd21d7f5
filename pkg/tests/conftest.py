"""Shared fixtures: cached root systems and bases, and the type matrix."""

from functools import lru_cache

import pytest

from chevalley.chevgrp import ChevalleyBasis, build_basis
from chevalley.rootsys import RootSystem, build

TYPE_MATRIX = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)]


@lru_cache(maxsize=None)
def cached_system(label: str, rank: int) -> RootSystem:
    return build(label, rank)


@lru_cache(maxsize=None)
def cached_basis(label: str, rank: int) -> ChevalleyBasis:
    return build_basis(cached_system(label, rank))


@pytest.fixture
def system():
    return cached_system


@pytest.fixture
def basis():
    return cached_basis
