"""Geometric partition predicates: Tverberg tests with certificates,
support reduction, essential points, tolerance, and nerve complexes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotTverberg, PartitionMismatch
from .geometry import PointConfig, affine_dependence_kernel
from .lp import lp_feasible
from .partitions import Partition, canonicalize_assignment, enumerate_r_partitions
from .scalars import format_scalar, sign


def tverberg_number(d: int, r: int) -> int:
    """Minimum point count guaranteeing a Tverberg r-partition in R^d."""
    return (d + 1) * (r - 1) + 1


@dataclass(frozen=True)
class TverbergCertificate:
    """Witness of a common point of the parts' convex hulls.

    ``coefficients`` maps point index -> positive scalar; within each part
    the coefficients of its support points sum to one, and the weighted sum
    of each part's support equals ``witness`` exactly.
    """

    witness: tuple
    coefficients: dict
    support: frozenset

    def to_json_dict(self):
        return {
            "witness": [format_scalar(c) for c in self.witness],
            "coefficients": {str(i): format_scalar(v) for i, v in sorted(self.coefficients.items())},
            "support": sorted(self.support),
        }


def hull_intersection_system(config: PointConfig, blocks):
    """Equality system whose feasibility decides common hull intersection.

    Variables are convex coefficients of the points in the given blocks;
    rows force per-block coefficient sums of 1 and equal weighted sums.
    """
    d = config.dim
    zero = config.zero_scalar()
    one = zero + 1
    variables = [i for block in blocks for i in block]
    col_of = {i: c for c, i in enumerate(variables)}
    nvars = len(variables)
    rows, rhs = [], []
    for block in blocks:
        row = [zero] * nvars
        for i in block:
            row[col_of[i]] = one
        rows.append(row)
        rhs.append(one)
    first = blocks[0]
    for other in blocks[1:]:
        for coord in range(d):
            row = [zero] * nvars
            for i in first:
                row[col_of[i]] = config.points[i][coord]
            for i in other:
                row[col_of[i]] = row[col_of[i]] - config.points[i][coord]
            rows.append(row)
            rhs.append(zero)
    return rows, rhs, variables


def hulls_intersect(config: PointConfig, blocks) -> bool:
    """Exact decision of whether the convex hulls of the blocks share a point."""
    if any(not block for block in blocks):
        return False
    if len(blocks) == 1:
        return True
    rows, rhs, _ = hull_intersection_system(config, blocks)
    return lp_feasible(rows, rhs).feasible


def is_tverberg(config: PointConfig, partition: Partition):
    """Certificate of hull intersection for the partition, or None.

    The basic feasible solution of the underlying LP directly yields a
    support of size at most (d+1)(r-1)+1.
    """
    if partition.n != config.n:
        raise PartitionMismatch(
            f"partition over {partition.n} elements, configuration has {config.n}"
        )
    blocks = partition.parts()
    rows, rhs, variables = hull_intersection_system(config, blocks)
    result = lp_feasible(rows, rhs)
    if not result.feasible:
        return None
    coefficients = {variables[col]: val for col, val in result.basic_solution.items()}
    support = frozenset(coefficients)
    d = config.dim
    zero = config.zero_scalar()
    witness = [zero] * d
    for i in blocks[0]:
        if i in coefficients:
            for coord in range(d):
                witness[coord] = witness[coord] + coefficients[i] * config.points[i][coord]
    return TverbergCertificate(tuple(witness), coefficients, support)


def por_reduction(config: PointConfig, partition: Partition):
    """Support subset S' with |S'| <= (d+1)(r-1)+1 whose induced partition
    is still Tverberg, straight from the basic feasible solution."""
    cert = is_tverberg(config, partition)
    if cert is None:
        raise NotTverberg("partition is not a Tverberg partition")
    support = sorted(cert.support)
    restricted = Partition([partition.assignment[i] for i in support])
    return support, restricted


def essential_points(config: PointConfig, partition: Partition, oracle=None):
    """Per-point table of valid single-element moves.

    A move (x, j -> k) is valid iff part j keeps another element and the
    moved partition still has intersecting hulls.  A point is essential iff
    it has no valid move.
    """
    test = oracle.is_tverberg if oracle is not None else (
        lambda p: is_tverberg(config, p) is not None
    )
    if oracle is None and is_tverberg(config, partition) is None:
        raise NotTverberg("partition is not a Tverberg partition")
    if oracle is not None and not test(partition):
        raise NotTverberg("partition is not a Tverberg partition")
    sizes = partition.part_sizes()
    table = {}
    for i, src in enumerate(partition.assignment):
        moves = {}
        for target in range(partition.r):
            if target == src:
                continue
            if sizes[src] == 1:
                moves[target] = False
            else:
                moves[target] = test(partition.move(i, target))
        table[i] = moves
    return table


def essential_set(move_table) -> set:
    return {i for i, moves in move_table.items() if not any(moves.values())}


def tverberg_degree(config: PointConfig, partition: Partition, oracle=None) -> int:
    """Number of valid moves = degree of the partition in G_T[S,r]."""
    table = essential_points(config, partition, oracle=oracle)
    return sum(1 for moves in table.values() for ok in moves.values() if ok)


def tolerance_check(config: PointConfig, partition: Partition, t: int) -> bool:
    """True iff the hulls still intersect after deleting any <= t points.

    Deleting a subset that empties a part counts as failure.  Checking the
    size-t subsets suffices: shrinking the deleted set only grows the hulls.
    """
    if partition.n != config.n:
        raise PartitionMismatch("partition/configuration size mismatch")
    t = min(t, config.n)
    for deleted in itertools.combinations(range(config.n), t):
        gone = set(deleted)
        blocks = [
            [i for i in block if i not in gone] for block in partition.parts()
        ]
        if any(not b for b in blocks):
            return False
        if not hulls_intersect(config, blocks):
            return False
    return True


# nerve isomorphism classes for r = 3, ordered by census-table column:
# no edges, one edge, two edges, hollow triangle, filled triangle
NERVE_CLASS_NAMES_R3 = ("no-edges", "one-edge", "two-edges", "hollow-triangle", "filled")


@dataclass(frozen=True)
class NerveClass:
    """Intersection pattern of the parts' convex hulls, up to relabeling."""

    r: int
    faces: frozenset  # frozensets of part indices with common hull point
    iso_class: object  # int 0..4 for r = 3, canonical face signature otherwise

    @property
    def name(self) -> str:
        if self.r == 3 and isinstance(self.iso_class, int):
            return NERVE_CLASS_NAMES_R3[self.iso_class]
        return str(self.iso_class)


def nerve(config: PointConfig, partition: Partition) -> NerveClass:
    """Nerve complex of the partition's convex hulls, with canonical label."""
    blocks = partition.parts()
    r = partition.r
    faces = {frozenset([j]) for j in range(r)}
    intersecting = {}
    # decide from the top down so that known-intersecting supersets skip LPs
    for size in range(r, 1, -1):
        for subset in itertools.combinations(range(r), size):
            key = frozenset(subset)
            if any(key < sup for sup in intersecting if intersecting[sup]):
                intersecting[key] = True
                continue
            intersecting[key] = hulls_intersect(config, [blocks[j] for j in subset])
    faces |= {key for key, ok in intersecting.items() if ok}
    faces = frozenset(faces)
    if r == 3:
        edges = sum(1 for f in faces if len(f) == 2)
        filled = any(len(f) == 3 for f in faces)
        iso = 4 if filled else edges
        return NerveClass(r, faces, iso)
    return NerveClass(r, faces, _canonical_face_signature(faces, r))


def _canonical_face_signature(faces, r) -> tuple:
    best = None
    for perm in itertools.permutations(range(r)):
        relabeled = sorted(
            tuple(sorted(perm[j] for j in face)) for face in faces
        )
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return best


def radon_partitions_via_kernel(config: PointConfig):
    """All Radon 2-partitions, via the affine-dependence kernel.

    Kernel dimension 1: the generator's strict signs give the core sides and
    zero-coefficient points complete to either side.  Higher kernel
    dimension falls back to exhaustive testing.
    """
    kernel = affine_dependence_kernel(config)
    if not kernel:
        return []
    if len(kernel) == 1:
        alpha = kernel[0]
        pos = [i for i, a in enumerate(alpha) if sign(a) > 0]
        neg = [i for i, a in enumerate(alpha) if sign(a) < 0]
        zero = [i for i, a in enumerate(alpha) if sign(a) == 0]
        found = set()
        for choice in itertools.product((0, 1), repeat=len(zero)):
            assignment = [0] * config.n
            for i in neg:
                assignment[i] = 1
            for i, side in zip(zero, choice):
                assignment[i] = side
            found.add(Partition(assignment))
        return sorted(found)
    results = []
    for partition in enumerate_r_partitions(config.n, 2):
        if is_tverberg(config, partition) is not None:
            results.append(partition)
    return results


# -- symmetry-aware memoized oracle ------------------------------------------

def verify_isometry(config: PointConfig, perm) -> bool:
    """Exact check that a point-index permutation preserves all pairwise
    squared distances (hence extends to an isometry of the affine hull)."""
    n = config.n
    if sorted(perm) != list(range(n)):
        return False
    for i in range(n):
        for j in range(i + 1, n):
            if not config.squared_distance(i, j) == config.squared_distance(perm[i], perm[j]):
                return False
    return True


def distance_preserving_permutations(config: PointConfig, limit: int = 10000):
    """All point-index permutations preserving pairwise squared distances.

    Backtracking on distance profiles; trivial for generic configurations,
    the full dihedral group for regular polygons.
    """
    n = config.n
    dist = [[config.squared_distance(i, j) for j in range(n)] for i in range(n)]
    profiles = [tuple(sorted(hash(d) for d in row)) for row in dist]
    perms = []

    def extend(mapping):
        if len(perms) > limit:
            raise RuntimeError("symmetry group larger than limit")
        k = len(mapping)
        if k == n:
            perms.append(tuple(mapping))
            return
        used = set(mapping)
        for cand in range(n):
            if cand in used or profiles[cand] != profiles[k]:
                continue
            if all(dist[k][i] == dist[cand][mapping[i]] for i in range(k)):
                extend(mapping + [cand])

    extend([])
    return perms


class TverbergOracle:
    """Memoized Tverberg and nerve queries, optionally folded by symmetry.

    Supplied permutations are verified to be exact isometries; queries are
    cached per symmetry orbit, so highly symmetric configurations (regular
    polygons) cost one LP per orbit instead of one per partition.
    """

    def __init__(self, config: PointConfig, symmetries=None):
        self.config = config
        if symmetries:
            for perm in symmetries:
                if not verify_isometry(config, perm):
                    raise ValueError(f"permutation {perm} is not an isometry")
            self.symmetries = [tuple(p) for p in symmetries]
        else:
            self.symmetries = []
        self._tv_cache: dict = {}
        self._nerve_cache: dict = {}
        self._rep_cache: dict = {}

    def orbit_key(self, partition: Partition) -> tuple:
        if not self.symmetries:
            return partition.assignment
        cached = self._rep_cache.get(partition.assignment)
        if cached is not None:
            return cached
        assignment = partition.assignment
        best = assignment
        for perm in self.symmetries:
            image = [0] * len(assignment)
            for i, a in enumerate(assignment):
                image[perm[i]] = a
            image = canonicalize_assignment(image)
            if image < best:
                best = image
        self._rep_cache[partition.assignment] = best
        return best

    def is_tverberg(self, partition: Partition) -> bool:
        key = self.orbit_key(partition)
        hit = self._tv_cache.get(key)
        if hit is None:
            hit = is_tverberg(self.config, Partition(key)) is not None
            self._tv_cache[key] = hit
        return hit

    def certificate(self, partition: Partition):
        return is_tverberg(self.config, partition)

    def nerve_class(self, partition: Partition) -> NerveClass:
        key = self.orbit_key(partition)
        hit = self._nerve_cache.get(key)
        if hit is None:
            hit = nerve(self.config, Partition(key))
            self._nerve_cache[key] = hit
        return hit


def nerve_census(config: PointConfig, r: int = 3, symmetries=None, oracle=None):
    """Counts of nerve isomorphism classes over all r-partitions.

    For r = 3 returns a 5-tuple in census-table column order; for general r
    returns a dict keyed by canonical face signature.
    """
    if oracle is None:
        oracle = TverbergOracle(config, symmetries)
    if r == 3:
        counts = [0] * 5
        for partition in enumerate_r_partitions(config.n, r):
            counts[oracle.nerve_class(partition).iso_class] += 1
        return tuple(counts)
    counts: dict = {}
    for partition in enumerate_r_partitions(config.n, r):
        key = oracle.nerve_class(partition).iso_class
        counts[key] = counts.get(key, 0) + 1
    return counts
