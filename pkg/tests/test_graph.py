import json

import pytest

from tvgraph.core import is_tverberg, tverberg_degree, tverberg_number
from tvgraph.errors import TooFewPoints, TooManyPartitions, UnsupportedFormat
from tvgraph.generators import dihedral_permutations, random_uniform, regular_polygon
from tvgraph.geometry import rational_config
from tvgraph.graph import (
    TverbergGraph,
    build_graph,
    export,
    graph_stats,
    is_connected,
    radon_path,
    tverberg_path,
)
from tvgraph.partitions import (
    Partition,
    abstract_graph,
    enumerate_r_partitions,
    partition_distance,
)


def test_unique_radon_vertex():
    cfg = random_uniform(4, 2, seed=1)
    graph = build_graph(cfg, 2)
    assert graph.vertex_count == 1
    assert graph.edge_count == 0
    stats = graph_stats(graph)
    assert stats.component_count == 1
    assert stats.diameter == 0
    assert stats.clique_number == 1


def test_edge_soundness_brute_force():
    for seed in range(5):
        cfg = random_uniform(6, 2, seed=20 + seed)
        for r in (2, 3):
            graph = build_graph(cfg, r)
            verts = graph.vertices
            index = {p: i for i, p in enumerate(verts)}
            assert set(verts) == {
                p for p in enumerate_r_partitions(6, r) if is_tverberg(cfg, p) is not None
            }
            for i, p in enumerate(verts):
                expected = sorted(
                    index[q] for q in verts if partition_distance(p, q) == 1
                )
                assert graph.adjacency[i] == expected


def test_adjacency_symmetric_irreflexive():
    cfg = random_uniform(7, 2, seed=8)
    graph = build_graph(cfg, 2)
    for i, nbrs in enumerate(graph.adjacency):
        assert i not in nbrs
        for j in nbrs:
            assert i in graph.adjacency[j]


def test_degrees_match_move_table():
    cfg = random_uniform(6, 2, seed=31)
    graph = build_graph(cfg, 3)
    for i, p in enumerate(graph.vertices):
        assert graph.degrees[i] == tverberg_degree(cfg, p)


def test_partition_cap():
    cfg = random_uniform(8, 2, seed=0)
    with pytest.raises(TooManyPartitions):
        build_graph(cfg, 2, max_partitions=10)


def test_radon_connectivity_small_sample():
    for seed in range(10):
        n = 5 + seed % 5
        cfg = random_uniform(n, 2, seed=400 + seed)
        assert is_connected(build_graph(cfg, 2))


def _check_path(config, path, p, q):
    assert path[0] == p and path[-1] == q
    for step in path:
        assert is_tverberg(config, step) is not None
    for a, b in zip(path, path[1:]):
        assert partition_distance(a, b) == 1


def test_radon_path_identity():
    cfg = random_uniform(6, 2, seed=2)
    graph = build_graph(cfg, 2)
    p = graph.vertices[0]
    assert radon_path(cfg, p, p) == [p]


def test_radon_path_random_pairs():
    for seed in range(8):
        cfg = random_uniform(6, 2, seed=500 + seed)
        verts = build_graph(cfg, 2).vertices
        p, q = verts[0], verts[-1]
        _check_path(cfg, radon_path(cfg, p, q), p, q)


def test_radon_path_hexagon_main_diagonals():
    # opposite main diagonals meet the center exactly; events collide there
    hexagon = regular_polygon(6)
    p = Partition.from_blocks([[0, 3], [1, 2, 4, 5]])
    q = Partition.from_blocks([[1, 4], [0, 2, 3, 5]])
    assert is_tverberg(hexagon, p) is not None
    assert is_tverberg(hexagon, q) is not None
    _check_path(hexagon, radon_path(hexagon, p, q), p, q)


def test_tverberg_path_needs_enough_points():
    cfg = random_uniform(8, 2, seed=3)
    graph = build_graph(cfg, 2)
    p, q = graph.vertices[0], graph.vertices[-1]
    # guaranteed regime for d=2, r=2 starts at 3 * Tv(2,2) - 1 = 11 points
    with pytest.raises(TooFewPoints):
        tverberg_path(cfg, p, q, 2)


def test_tverberg_path_d1():
    cfg = random_uniform(8, 1, seed=4)
    assert 8 >= 3 * tverberg_number(1, 2) - 1
    pairs = 0
    candidates = [p for p in enumerate_r_partitions(8, 2) if is_tverberg(cfg, p) is not None]
    for p, q in [(candidates[0], candidates[-1]), (candidates[1], candidates[-2])]:
        path = tverberg_path(cfg, p, q, 2)
        _check_path(cfg, path, p, q)
        pairs += 1
    assert pairs == 2


def test_tverberg_path_d2_length_bound():
    cfg = random_uniform(11, 2, seed=6)
    found = []
    for p in enumerate_r_partitions(11, 2):
        if len(found) == 2:
            break
        if min(p.part_sizes()) >= 4 and is_tverberg(cfg, p) is not None:
            found.append(p)
    p, q = found
    path = tverberg_path(cfg, p, q, 2)
    _check_path(cfg, path, p, q)
    assert len(path) <= 2 * cfg.n


def test_export_formats():
    cfg = random_uniform(5, 2, seed=12)
    graph = build_graph(cfg, 2)
    dot = export(graph, "dot")
    js = export(graph, "json")
    csv_bytes = export(graph, "csv")
    assert dot.startswith(b"graph")
    doc = json.loads(js)
    assert doc["format_version"] == 1
    assert len(doc["vertices"]) == graph.vertex_count
    assert csv_bytes.count(b"\n") >= graph.edge_count
    # deterministic byte-for-byte
    again = build_graph(cfg, 2)
    assert export(again, "dot") == dot
    assert export(again, "json") == js
    assert export(again, "csv") == csv_bytes
    with pytest.raises(UnsupportedFormat):
        export(graph, "xml")


def test_export_empty_graph():
    # 3 far-apart planar points admit no Radon partition
    cfg = rational_config(2, [(0, 0), (10, 0), (0, 10)])
    graph = build_graph(cfg, 2)
    assert graph.vertex_count == 0
    assert json.loads(export(graph, "json"))["vertices"] == []
    assert export(graph, "dot").startswith(b"graph")


def test_export_abstract_counts():
    # packing the abstract 2-partition lattice of 4 elements into the export
    # path: 7 nodes and 12 edges
    parts, adjacency = abstract_graph(4, 2)
    cfg = random_uniform(4, 2, seed=0)
    graph = TverbergGraph(cfg, 2, list(parts), [list(a) for a in adjacency])
    dot = export(graph, "dot").decode()
    assert dot.count("--") == 12
    assert len(json.loads(export(graph, "json"))["vertices"]) == 7


def test_octagon_stats():
    octagon = regular_polygon(8)
    graph = build_graph(octagon, 3, symmetries=dihedral_permutations(8))
    stats = graph_stats(graph)
    assert graph.vertex_count == 90
    assert graph.edge_count == 272
    assert stats.degree_histogram == {5: 48, 6: 16, 8: 26}
    assert stats.diameter == 5
    assert stats.clique_number == 3
    assert stats.component_count == 1
