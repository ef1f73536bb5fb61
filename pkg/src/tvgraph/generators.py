"""Named point configurations: exact regular polygons, the clustered
simplex example, seeded random configurations, and file loading."""
from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from .errors import DegenerateAfterRetries, InvalidArguments
from .geometry import PointConfig, in_general_position
from .scalars import cyclotomic_field

PERTURBATION_DENOMINATOR = 2 ** 20  # power of a fixed base, for compact exact files
RANDOM_GRID = 2 ** 16
MAX_REGENERATION_ATTEMPTS = 100


def regular_polygon(n: int) -> PointConfig:
    """Vertices (cos 2*pi*k/n, sin 2*pi*k/n), exactly, in the 4n-th
    cyclotomic field; counterclockwise, centered at the origin.

    Rational approximation is never used: the diagonal concurrencies of
    regular polygons change the partition graph, so coordinates must be exact.
    """
    if n < 3:
        raise InvalidArguments("polygon needs at least 3 vertices")
    m = 4 * n
    field = cyclotomic_field(m)
    # 1/i = zeta^(3m/4)
    inv_i = field.zeta_pow(3 * m // 4)
    points = []
    for k in range(n):
        z = field.zeta_pow(4 * k)
        zbar = field.zeta_pow(-4 * k)
        cos_k = (z + zbar) / 2
        sin_k = (z - zbar) * inv_i / 2
        points.append((cos_k, sin_k))
    return PointConfig(2, tuple(points), field)


def dihedral_permutations(n: int):
    """Point-index action of the dihedral group on regular_polygon(n)."""
    perms = []
    for shift in range(n):
        perms.append(tuple((k + shift) % n for k in range(n)))
        perms.append(tuple((shift - k) % n for k in range(n)))
    return perms


def _seeded_rational(rng, scale: mpq) -> mpq:
    numerator = int(rng.integers(-PERTURBATION_DENOMINATOR, PERTURBATION_DENOMINATOR + 1))
    return scale * mpq(numerator, PERTURBATION_DENOMINATOR)


def perturbed_clusters(d: int, r: int, scale=None, seed: int = 0) -> PointConfig:
    """(d+1)(r-1)+1 rational points: r-1 points near each vertex of the
    standard simplex, one near its barycenter, perturbed into general
    position.  Every Tverberg r-partition of the output isolates the
    barycenter point."""
    if d < 2 or r < 2:
        raise InvalidArguments("need d >= 2 and r >= 2")
    if scale is None:
        scale = mpq(1, 1000)  # default: 1/1000 of the unit simplex edge
    scale = mpq(scale)
    if scale <= 0:
        raise InvalidArguments("perturbation scale must be positive")
    simplex = [tuple(mpq(0) for _ in range(d))]
    for j in range(d):
        simplex.append(tuple(mpq(1 if k == j else 0) for k in range(d)))
    barycenter = tuple(mpq(sum(v[k] for v in simplex), d + 1) for k in range(d))
    for attempt in range(MAX_REGENERATION_ATTEMPTS):
        rng = np.random.default_rng([seed, attempt])
        points = []
        for vertex in simplex:
            for _ in range(r - 1):
                points.append(tuple(c + _seeded_rational(rng, scale) for c in vertex))
        points.append(tuple(c + _seeded_rational(rng, scale) for c in barycenter))
        config = PointConfig(d, tuple(points))
        if in_general_position(config):
            return config
    raise DegenerateAfterRetries("could not reach general position")


def random_uniform(n: int, d: int, seed: int = 0, bound: int = 10) -> PointConfig:
    """n rational points with coordinates k/GRID, k uniform in
    [-bound*GRID, bound*GRID]; general position enforced by reseeding."""
    if n < 1:
        raise InvalidArguments("need at least one point")
    for attempt in range(MAX_REGENERATION_ATTEMPTS):
        rng = np.random.default_rng([seed, attempt])
        points = tuple(
            tuple(mpq(int(k), RANDOM_GRID) for k in rng.integers(-bound * RANDOM_GRID, bound * RANDOM_GRID + 1, size=d))
            for _ in range(n)
        )
        config = PointConfig(d, points)
        if n < d + 1 or in_general_position(config):
            return config
    raise DegenerateAfterRetries("could not reach general position")
