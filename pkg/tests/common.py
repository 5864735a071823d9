"""Shared grids and a cached eigen-solve for the test modules."""

import functools

from mathieu import Category, eig_spm

CATEGORIES = list(Category)
Q_GRID = (0.0, 5.0, 10.0, 15.0, 20.0, 25.0)


@functools.lru_cache(maxsize=None)
def spectral(kf, q, dim=25):
    return eig_spm(kf, q, dim)
