"""Geometry-free set-partition machinery.

Partitions into exactly r nonempty parts, canonicalized as restricted-growth
strings, plus the closed-form counts, degree, diameter and clique facts of
the abstract partition graph.
"""
from __future__ import annotations

import math
import warnings
from functools import lru_cache

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import HypothesisViolatedWarning, InvalidArguments, SizeMismatch


def canonicalize_assignment(assignment) -> tuple:
    """Relabel part indices so first occurrences appear in increasing order."""
    relabel = {}
    out = []
    for a in assignment:
        if a not in relabel:
            relabel[a] = len(relabel)
        out.append(relabel[a])
    return tuple(out)


class Partition:
    """A partition of {0..n-1} into exactly r nonempty parts.

    Stored in restricted-growth canonical form; equality and hashing go
    through that form, so part labelings never matter.
    """

    __slots__ = ("n", "r", "assignment")

    def __init__(self, assignment):
        assignment = canonicalize_assignment(assignment)
        if not assignment:
            raise InvalidArguments("partition of the empty set")
        self.assignment = assignment
        self.n = len(assignment)
        self.r = max(assignment) + 1

    @classmethod
    def from_blocks(cls, blocks, n=None):
        if n is None:
            n = sum(len(b) for b in blocks)
        assignment = [-1] * n
        for label, block in enumerate(blocks):
            for i in block:
                if assignment[i] != -1:
                    raise InvalidArguments(f"element {i} appears twice")
                assignment[i] = label
        if -1 in assignment:
            raise InvalidArguments("blocks do not cover all elements")
        return cls(assignment)

    @classmethod
    def from_string(cls, text):
        try:
            parts = [int(tok) for tok in text.strip().split(",")]
        except ValueError as exc:
            raise InvalidArguments(f"malformed partition string {text!r}") from exc
        return cls(parts)

    def parts(self):
        blocks = [[] for _ in range(self.r)]
        for i, a in enumerate(self.assignment):
            blocks[a].append(i)
        return tuple(tuple(b) for b in blocks)

    def part_sizes(self):
        sizes = [0] * self.r
        for a in self.assignment:
            sizes[a] += 1
        return tuple(sizes)

    def move(self, element: int, target_part: int) -> "Partition":
        """Partition obtained by moving one element to another part.

        Raises InvalidArguments if the move would empty the source part or
        is a no-op.
        """
        src = self.assignment[element]
        if target_part == src:
            raise InvalidArguments("element already in target part")
        if not 0 <= target_part < self.r:
            raise InvalidArguments("target part out of range")
        if self.part_sizes()[src] == 1:
            raise InvalidArguments("move would empty a part")
        new = list(self.assignment)
        new[element] = target_part
        return Partition(new)

    def single_moves(self):
        """Yield (element, target_part, resulting Partition) for all valid moves."""
        sizes = self.part_sizes()
        for i, src in enumerate(self.assignment):
            if sizes[src] == 1:
                continue
            for target in range(self.r):
                if target != src:
                    yield i, target, self.move(i, target)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.assignment == other.assignment

    def __lt__(self, other):
        return self.assignment < other.assignment

    def __hash__(self):
        return hash(self.assignment)

    def __str__(self):
        return ",".join(str(a) for a in self.assignment)

    def __repr__(self):
        return f"Partition({self})"


def enumerate_r_partitions(n: int, r: int):
    """All partitions of {0..n-1} into exactly r nonempty parts, in
    lexicographic restricted-growth order."""
    if r < 1 or r > n:
        raise InvalidArguments(f"need 1 <= r <= n, got r={r}, n={n}")
    yield from _rgs(n, r, (0,), 0)


def _rgs(n, r, prefix, cur_max):
    pos = len(prefix)
    if pos == n:
        if cur_max == r - 1:
            yield Partition(prefix)
        return
    if cur_max + (n - pos) < r - 1:
        return  # cannot reach r parts anymore
    limit = min(cur_max + 1, r - 1)
    for label in range(limit + 1):
        yield from _rgs(n, r, prefix + (label,), max(cur_max, label))


def partition_distance(p: Partition, q: Partition) -> int:
    """Regnier distance: n minus the maximum total part overlap over all
    part-to-part correspondences (optimal assignment, not greedy)."""
    if p.n != q.n:
        raise SizeMismatch("partitions are over different ground sets")
    k = max(p.r, q.r)
    overlap = np.zeros((k, k), dtype=np.int64)
    for i in range(p.n):
        overlap[p.assignment[i], q.assignment[i]] += 1
    rows, cols = linear_sum_assignment(-overlap)
    return p.n - int(overlap[rows, cols].sum())


@lru_cache(maxsize=None)
def stirling2(n: int, r: int) -> int:
    """Stirling number of the second kind."""
    if n < 0 or r < 0:
        raise InvalidArguments("arguments must be nonnegative")
    if n == 0 and r == 0:
        return 1
    if n == 0 or r == 0:
        return 0
    return r * stirling2(n - 1, r) + stirling2(n - 1, r - 1)


@lru_cache(maxsize=None)
def stirling2_assoc(n: int, r: int) -> int:
    """2-associated Stirling number of the second kind: partitions into r
    blocks, each of size at least 2."""
    if n < 0 or r < 0:
        raise InvalidArguments("arguments must be nonnegative")
    if n == 0 and r == 0:
        return 1
    if r == 0 or n < 2 * r:
        return 0
    return r * stirling2_assoc(n - 1, r) + (n - 1) * stirling2_assoc(n - 2, r - 1)


def abstract_degree(p: Partition) -> int:
    """Degree of a partition in the abstract r-partition graph: every
    element of a non-singleton part can move to any of the other r-1 parts."""
    movable = sum(size for size in p.part_sizes() if size != 1)
    return movable * (p.r - 1)


def abstract_edge_count(n: int, r: int) -> int:
    """Number of edges of the abstract r-partition graph on n elements.

    Uses the closed form when r <= n/2; otherwise falls back to summing
    degrees over the enumerated partitions and warns that the closed form's
    hypothesis was violated.
    """
    if r < 1 or r > n:
        raise InvalidArguments(f"need 1 <= r <= n, got r={r}, n={n}")
    if 2 * r <= n:
        total = 0
        for k in range(r):
            total += math.comb(n, k) * stirling2_assoc(n - k, r - k) * (n - k) * (r - 1)
        assert total % 2 == 0
        return total // 2
    warnings.warn(
        f"edge-count closed form assumes r <= n/2 (got n={n}, r={r}); "
        "falling back to enumeration",
        HypothesisViolatedWarning,
        stacklevel=2,
    )
    total = sum(abstract_degree(p) for p in enumerate_r_partitions(n, r))
    assert total % 2 == 0
    return total // 2


def abstract_diameter(n: int, r: int) -> int:
    """Diameter of the abstract r-partition graph (piecewise closed form)."""
    if r < 1 or r > n:
        raise InvalidArguments(f"need 1 <= r <= n, got r={r}, n={n}")
    if n <= 2 * r - 2:
        return 2 * n - 2 * r
    return n - math.ceil(n / r)


def abstract_graph(n: int, r: int):
    """Vertices and adjacency of the abstract r-partition graph.

    Returns (vertices, adjacency) with vertices in enumeration order and
    adjacency as per-vertex sorted lists of neighbor indices.
    """
    vertices = list(enumerate_r_partitions(n, r))
    index = {p: i for i, p in enumerate(vertices)}
    adjacency = [set() for _ in vertices]
    for i, p in enumerate(vertices):
        for _, _, q in p.single_moves():
            j = index[q]
            if j != i:
                adjacency[i].add(j)
                adjacency[j].add(i)
    return vertices, [sorted(s) for s in adjacency]
