"""Sarkaria tensor lift, random-partition Monte Carlo, and closed-form
probability/tolerance bounds."""
from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np
from gmpy2 import mpq

from .core import hulls_intersect, is_tverberg, tverberg_number
from .geometry import PointConfig
from .lp import lp_feasible
from .partitions import Partition

RNG_ID = "numpy-pcg64"


def simplex_vectors(r: int):
    """Rational sum-zero spanning vectors: e_j for j < r-1, then -(e_1+...+e_{r-1}).

    A regular simplex would be irrational for general r; sum-zero spanning is
    all the lift equivalence needs.
    """
    vectors = []
    for j in range(r - 1):
        vectors.append(tuple(mpq(1 if k == j else 0) for k in range(r - 1)))
    vectors.append(tuple(mpq(-1) for _ in range(r - 1)))
    return tuple(vectors)


@dataclass(frozen=True)
class LiftedConfig:
    """Per-point blocks X_a of r lifted points in dimension (d+1)(r-1)."""

    base: PointConfig
    r: int
    simplex: tuple  # the r sum-zero vectors in R^{r-1}
    lifted: tuple  # lifted[i][j] = tensor of (p_i, 1) with simplex[j]

    @property
    def lifted_dim(self) -> int:
        return (self.base.dim + 1) * (self.r - 1)


def sarkaria_lift(config: PointConfig, r: int) -> LiftedConfig:
    """Tensor lift: block l of the image of point a under label j is
    simplex[j][l] * (a, 1), concatenated over l = 0..r-2."""
    if r < 2:
        raise ValueError("need r >= 2")
    vectors = simplex_vectors(r)
    one = config.zero_scalar() + 1
    lifted = []
    for p in config.points:
        homog = tuple(p) + (one,)
        blocks = []
        for v in vectors:
            coords = []
            for vl in v:
                coords.extend(c * vl for c in homog)
            blocks.append(tuple(coords))
        lifted.append(tuple(blocks))
    return LiftedConfig(config, r, vectors, tuple(lifted))


def tverberg_via_lift(lifted: LiftedConfig, labels) -> bool:
    """True iff the labeling's choice of lifted points captures the origin
    in its convex hull (labels may leave parts empty)."""
    labels = list(labels)
    if len(labels) != lifted.base.n:
        raise ValueError("one label per base point required")
    zero = lifted.base.zero_scalar()
    one = zero + 1
    points = [lifted.lifted[i][labels[i]] for i in range(lifted.base.n)]
    dim = lifted.lifted_dim
    rows = []
    rhs = []
    for coord in range(dim):
        rows.append([pt[coord] for pt in points])
        rhs.append(zero)
    rows.append([one] * len(points))
    rhs.append(one)
    return lp_feasible(rows, rhs).feasible


def origin_in_block_hull(lifted: LiftedConfig, i: int) -> bool:
    """Exact check that conv(X_a) contains the origin (coefficients all 1/r)."""
    zero = lifted.base.zero_scalar()
    r = lifted.r
    for coord in range(lifted.lifted_dim):
        acc = zero
        for j in range(r):
            acc = acc + lifted.lifted[i][j][coord]
        if not acc == zero:
            return False
    return True


# -- random-partition experiment ----------------------------------------------

@dataclass(frozen=True)
class TrialRecord:
    trial: int
    labels: tuple
    nonempty_parts: int
    is_tverberg: bool
    is_max_degree: bool


def _max_degree_check(config: PointConfig, partition: Partition) -> bool:
    """Degree n(r-1) iff no singleton parts and every single-point deletion
    leaves the r hulls intersecting (deletion survival implies every move
    survives: re-adding the point only grows a hull)."""
    if any(size == 1 for size in partition.part_sizes()):
        return False
    blocks = [list(b) for b in partition.parts()]
    for i in range(config.n):
        reduced = [[x for x in block if x != i] for block in blocks]
        if not hulls_intersect(config, reduced):
            return False
    return True


def trial_labels(seed: int, trial: int, n: int, r: int) -> tuple:
    """Uniform labels for one trial, from a stream keyed by (seed, trial)."""
    rng = np.random.default_rng([seed, trial])
    return tuple(int(x) for x in rng.integers(0, r, size=n))


def mc_max_degree_probability(config: PointConfig, r: int, trials: int, seed: int):
    """Frequency of uniform labelings that are Tverberg r-partitions of
    maximal degree n(r-1), plus the per-trial log.  Deterministic per seed."""
    if trials < 1:
        raise ValueError("need at least one trial")
    n = config.n
    records = []
    successes = 0
    for t in range(trials):
        labels = trial_labels(seed, t, n, r)
        nonempty = len(set(labels))
        tverberg = False
        max_degree = False
        if nonempty == r:
            partition = Partition(labels)
            tverberg = is_tverberg(config, partition) is not None
            if tverberg:
                max_degree = _max_degree_check(config, partition)
        if max_degree:
            successes += 1
        records.append(TrialRecord(t, labels, nonempty, tverberg, max_degree))
    return successes / trials, records


def probability_lower_bound(n: int, r: int, d: int) -> float:
    """Closed-form lower bound on the probability that a uniform labeling is
    a maximal-degree Tverberg partition; may be negative (vacuous) for small n."""
    if n <= r:
        raise ValueError("need n > r")
    with mpmath.workdps(60):
        e = (r - 1) * (d + 1)
        poly = mpmath.mpf(r) ** e * mpmath.mpf(n) ** e
        decay = mpmath.e ** (mpmath.mpf(-2) * (n - r) ** 2 / (mpmath.mpf(n) * r * r))
        return float(1 - poly * decay)


def tolerance_point_bounds(d: int, t: int, r: int):
    """Point counts guaranteeing tolerance-t Tverberg partitions:
    the general bound and the low-dimension bound."""
    if d < 1 or t < 0 or r < 1:
        raise ValueError("need d >= 1, t >= 0, r >= 1")
    general = (t + 1) * (r - 1) * (d + 1) + 1
    low_dim = 2 ** (d - 1) * (r * (t + 2) - 1)
    return general, low_dim


def max_degree_threshold(d: int, r: int) -> int:
    """Alias of the t=0 general tolerance bound, i.e. Tv(d, r)."""
    return tverberg_number(d, r)
