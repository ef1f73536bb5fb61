"""The Tverberg partition graph: construction, statistics, constructive
paths, and serialization."""
from __future__ import annotations

import csv
import io
import json
import os
from collections import deque
from dataclasses import dataclass, field

from .core import (
    TverbergOracle,
    is_tverberg,
    tverberg_number,
)
from .errors import (
    NoPathFound,
    NotRadon,
    NotTverberg,
    TooFewPoints,
    TooManyPartitions,
    UnsupportedFormat,
)
from .geometry import PointConfig
from .partitions import Partition, enumerate_r_partitions, stirling2
from .scalars import format_scalar, sign

FORMAT_VERSION = 1

DEFAULT_MAX_PARTITIONS = 5_000_000


def partition_cap() -> int:
    env = os.environ.get("TVG_MAX_PARTITIONS")
    return int(env) if env else DEFAULT_MAX_PARTITIONS


@dataclass
class TverbergGraph:
    config: PointConfig
    r: int
    vertices: list  # canonical Partitions, in enumeration order
    adjacency: list  # sorted neighbor index lists
    degrees: list = field(default_factory=list)
    component_ids: list = field(default_factory=list)

    def __post_init__(self):
        if not self.degrees:
            self.degrees = [len(a) for a in self.adjacency]
        if not self.component_ids:
            self.component_ids = _components(self.adjacency)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def index_of(self, partition: Partition):
        try:
            return self.vertices.index(partition)
        except ValueError:
            return None


def _components(adjacency):
    n = len(adjacency)
    comp = [-1] * n
    cid = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        queue = deque([start])
        comp[start] = cid
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if comp[v] == -1:
                    comp[v] = cid
                    queue.append(v)
        cid += 1
    return comp


def build_graph(
    config: PointConfig,
    r: int,
    symmetries=None,
    max_partitions: int | None = None,
    oracle: TverbergOracle | None = None,
) -> TverbergGraph:
    """Enumerate all r-partitions, keep the Tverberg ones, and connect
    partitions that differ by a single-element move."""
    if r < 2:
        raise ValueError("need r >= 2")
    if config.n < r:
        raise TooFewPoints(f"need at least r={r} points")
    cap = max_partitions if max_partitions is not None else partition_cap()
    total = stirling2(config.n, r)
    if total > cap:
        raise TooManyPartitions(
            f"{total} partitions exceed the cap of {cap}; raise --max-partitions"
        )
    if oracle is None:
        oracle = TverbergOracle(config, symmetries)
    vertices = [p for p in enumerate_r_partitions(config.n, r) if oracle.is_tverberg(p)]
    index = {p: i for i, p in enumerate(vertices)}
    adjacency = [set() for _ in vertices]
    for i, p in enumerate(vertices):
        for _, _, q in p.single_moves():
            j = index.get(q)
            if j is not None and j != i:
                adjacency[i].add(j)
                adjacency[j].add(i)
    return TverbergGraph(config, r, vertices, [sorted(s) for s in adjacency])


# -- statistics ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    degree_histogram: dict
    component_count: int
    diameter: int | None  # of the largest component; None for the empty graph
    clique_number: int

    def to_json_dict(self):
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "components": self.component_count,
            "diameter": self.diameter,
            "clique_number": self.clique_number,
        }


def _bfs_eccentricity(adjacency, start):
    dist = {start: 0}
    queue = deque([start])
    far = 0
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                far = max(far, dist[v])
                queue.append(v)
    return far


def max_clique_size(adjacency) -> int:
    """Exact maximum clique by branch and bound with greedy bounds."""
    n = len(adjacency)
    if n == 0:
        return 0
    neighbors = [set(a) for a in adjacency]
    order = sorted(range(n), key=lambda v: len(neighbors[v]))
    best = [1]

    def expand(candidates, size):
        if size + len(candidates) <= best[0]:
            return
        if not candidates:
            best[0] = max(best[0], size)
            return
        for v in sorted(candidates, key=lambda u: -len(neighbors[u] & candidates)):
            if size + len(candidates) <= best[0]:
                return
            expand(candidates & neighbors[v], size + 1)
            candidates = candidates - {v}

    expand(set(order), 0)
    return best[0]


def graph_stats(graph: TverbergGraph) -> GraphStats:
    histogram: dict = {}
    for d in graph.degrees:
        histogram[d] = histogram.get(d, 0) + 1
    comp_ids = graph.component_ids
    comp_count = (max(comp_ids) + 1) if comp_ids else 0
    diameter = None
    if graph.vertex_count:
        sizes: dict = {}
        for cid in comp_ids:
            sizes[cid] = sizes.get(cid, 0) + 1
        largest = max(sizes, key=lambda c: (sizes[c], -c))
        members = [v for v in range(graph.vertex_count) if comp_ids[v] == largest]
        diameter = max(_bfs_eccentricity(graph.adjacency, v) for v in members)
    return GraphStats(
        vertex_count=graph.vertex_count,
        edge_count=graph.edge_count,
        degree_histogram=histogram,
        component_count=comp_count,
        diameter=diameter,
        clique_number=max_clique_size(graph.adjacency),
    )


def is_connected(graph: TverbergGraph) -> bool:
    return graph.vertex_count <= 1 or max(graph.component_ids) == 0


# -- constructive paths -------------------------------------------------------

def _signed_dependence(config, partition, side_of):
    """Dependence vector from the LP certificate: positive entries on side 0,
    negative on side 1, zero off the support."""
    cert = is_tverberg(config, partition)
    if cert is None:
        return None
    zero = config.zero_scalar()
    alpha = [zero] * config.n
    for i, c in cert.coefficients.items():
        alpha[i] = c if side_of[i] == 0 else -c
    return alpha


def _align_sides(p: Partition, q: Partition):
    """Map each partition to explicit side vectors, with q's sides oriented
    to maximize agreement with p."""
    p_side = list(p.assignment)
    q_side = list(q.assignment)
    agree = sum(1 for a, b in zip(p_side, q_side) if a == b)
    if 2 * agree < len(p_side):
        q_side = [1 - b for b in q_side]
    return p_side, q_side


def radon_path(config: PointConfig, p: Partition, q: Partition):
    """Constructive path of Radon partitions from p to q.

    Follows the convex segment between strictly signed dependence vectors;
    zero-coefficient points are handled by certificate-preserving moves at
    the two ends.  Simultaneous sign changes are serialized in index order.
    """
    for part in (p, q):
        if part.r != 2:
            raise NotRadon("radon_path requires 2-partitions")
        if part.n != config.n:
            raise NotRadon("partition size mismatch")
        if is_tverberg(config, part) is None:
            raise NotRadon(f"partition {part} is not a Radon partition")
    if p == q:
        return [p]

    p_side, q_side = _align_sides(p, q)
    alpha = _signed_dependence(config, p, p_side)
    beta = _signed_dependence(config, q, q_side)
    path = [p]
    current = list(p_side)

    def push(side_vec):
        candidate = Partition(side_vec)
        if candidate != path[-1]:
            path.append(candidate)

    # phase A: certificate-zero points of p move to their q side
    for i in range(config.n):
        if sign(alpha[i]) == 0 and current[i] != q_side[i]:
            current[i] = q_side[i]
            push(current)

    # core: follow sign changes of (1-t)*alpha + t*beta
    events = []
    for i in range(config.n):
        sa, sb = sign(alpha[i]), sign(beta[i])
        if sa != 0 and sb != 0 and sa != sb:
            t_i = alpha[i] / (alpha[i] - beta[i])
            events.append((t_i, i))
    events.sort(key=lambda ev: (_ScalarKey(ev[0]), ev[1]))
    for _, i in events:
        target = 1 - current[i]
        current[i] = target
        push(current)

    # phase C: certificate-zero points of q settle onto their q side
    for i in range(config.n):
        if current[i] != q_side[i]:
            if sign(beta[i]) != 0:
                raise NoPathFound("sign bookkeeping failed")  # cannot happen
            current[i] = q_side[i]
            push(current)

    assert path[-1] == q
    return path


class _ScalarKey:
    """Comparison adapter so exact scalars sort with tuple keys."""

    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __lt__(self, other):
        return sign(self.value - other.value) < 0

    def __eq__(self, other):
        return sign(self.value - other.value) == 0


def _por_support(config, partition):
    cert = is_tverberg(config, partition)
    if cert is None:
        raise NotTverberg(f"partition {partition} is not a Tverberg partition")
    return set(cert.support)


def _align_parts(p: Partition, q: Partition):
    """Greedy maximum-overlap matching of q's part labels onto p's."""
    overlap = [[0] * q.r for _ in range(p.r)]
    for a, b in zip(p.assignment, q.assignment):
        overlap[a][b] += 1
    remaining_p = set(range(p.r))
    remaining_q = set(range(q.r))
    mapping = {}
    pairs = sorted(
        ((overlap[a][b], a, b) for a in remaining_p for b in remaining_q),
        key=lambda t: (-t[0], t[1], t[2]),
    )
    for _, a, b in pairs:
        if a in remaining_p and b in remaining_q:
            mapping[b] = a
            remaining_p.discard(a)
            remaining_q.discard(b)
    return [mapping[b] for b in range(q.r)]


def tverberg_path(config: PointConfig, p: Partition, q: Partition, r: int, best_effort=False):
    """Constructive path of Tverberg partitions from p to q.

    Implements the support-based construction: when the two reduced supports
    are disjoint, free points migrate first and support points afterwards;
    otherwise the path detours through a partition supported outside both.
    """
    tv = tverberg_number(config.dim, r)
    if config.n < 3 * tv - 1 and not best_effort:
        raise TooFewPoints(
            f"guaranteed construction needs n >= {3 * tv - 1}; "
            "pass best_effort=True to try anyway"
        )
    for part in (p, q):
        if part.r != r or part.n != config.n:
            raise NotTverberg("partition shape mismatch")
    supp_p = _por_support(config, p)
    supp_q = _por_support(config, q)
    return _tverberg_path_inner(config, p, supp_p, q, supp_q, r)


def _tverberg_path_inner(config, p, supp_p, q, supp_q, r):
    if p == q:
        return [p]
    if supp_p & supp_q:
        detour = _detour_partition(config, supp_p, supp_q, r)
        if detour is None:
            raise NoPathFound("could not build an intermediate Tverberg partition")
        mid, supp_mid = detour
        first = _tverberg_path_inner(config, p, supp_p, mid, supp_mid, r)
        second = _tverberg_path_inner(config, mid, supp_mid, q, supp_q, r)
        return first + second[1:]

    # disjoint supports: move free points to their q-part, then support points
    q_label = _align_parts(p, q)
    target = [q_label[b] for b in q.assignment]
    current = list(p.assignment)
    path = [p]

    def push():
        candidate = Partition(current)
        if candidate != path[-1]:
            path.append(candidate)

    for i in sorted(set(range(config.n)) - supp_p):
        if current[i] != target[i]:
            current[i] = target[i]
            push()
    for i in sorted(supp_p):
        if current[i] != target[i]:
            current[i] = target[i]
            push()
    assert path[-1] == q
    return path


def _detour_partition(config, supp_p, supp_q, r):
    """A Tverberg partition whose support avoids both given supports."""
    outside = sorted(set(range(config.n)) - supp_p - supp_q)
    tv = tverberg_number(config.dim, r)
    if len(outside) < tv:
        return None
    # search r-partitions of a minimal window of outside points
    for window_end in range(tv, len(outside) + 1):
        window = outside[:window_end]
        sub_pts = [config.points[i] for i in window]
        sub_config = PointConfig(config.dim, tuple(sub_pts), config.field)
        for sub_part in enumerate_r_partitions(len(window), r):
            cert = is_tverberg(sub_config, sub_part)
            if cert is None:
                continue
            # extend: leftover points go to part 0, deterministically
            assignment = [0] * config.n
            for local, i in enumerate(window):
                assignment[i] = sub_part.assignment[local]
            mid = Partition(assignment)
            cert_support = {window[local] for local in cert.support}
            # the extension keeps the certificate valid, so mid is Tverberg
            return mid, cert_support
    return None


# -- export -------------------------------------------------------------------

def export(graph: TverbergGraph, fmt: str) -> bytes:
    """Serialize the graph: 'dot', 'json', or 'csv' (edge list).

    Output is deterministic byte-for-byte for a fixed input.
    """
    if fmt == "dot":
        return _export_dot(graph)
    if fmt == "json":
        return _export_json(graph)
    if fmt == "csv":
        return _export_csv(graph)
    raise UnsupportedFormat(f"unknown export format {fmt!r}")


def _export_dot(graph: TverbergGraph) -> bytes:
    lines = ["graph tverberg {"]
    for i, p in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{p}"];')
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            if j > i:
                lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def _export_json(graph: TverbergGraph) -> bytes:
    stats = graph_stats(graph)
    doc = {
        "format_version": FORMAT_VERSION,
        "r": graph.r,
        "config": {
            "dim": graph.config.dim,
            "scalar": graph.config.scalar_kind,
            "points": [
                [format_scalar(c) for c in pt] for pt in graph.config.points
            ],
        },
        "vertices": [str(p) for p in graph.vertices],
        "adjacency": graph.adjacency,
        "stats": stats.to_json_dict(),
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()


def _export_csv(graph: TverbergGraph) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target"])
    for i, nbrs in enumerate(graph.adjacency):
        for j in nbrs:
            if j > i:
                writer.writerow([str(graph.vertices[i]), str(graph.vertices[j])])
    return buf.getvalue().encode()
