from hypothesis import given, settings

from conftest import complete_graph, small_graphs
from strongedge.embedding import Embedding, NonPlanar, faces, planar_embed
from strongedge.generators import cycle, path, star, wheel
from strongedge.graph import Graph


def test_c6_two_hexagonal_faces():
    emb = planar_embed(cycle(6))
    assert sorted(length for _, length in faces(emb)) == [6, 6]


def test_tree_single_face_double_length():
    for g in (path(5), star(4)):
        emb = planar_embed(g)
        assert [length for _, length in faces(emb)] == [2 * g.num_edges()]


def test_k4_four_triangles():
    emb = planar_embed(complete_graph(4))
    assert sorted(length for _, length in faces(emb)) == [3, 3, 3, 3]
    assert sum(length for _, length in faces(emb)) == 2 * 6


def test_k5_nonplanar_with_witness():
    res = planar_embed(complete_graph(5))
    assert isinstance(res, NonPlanar)
    assert len(res.witness) >= 9  # a K5 subdivision carries at least 9 edges


def test_k33_nonplanar():
    g = Graph(range(6), [(i, j) for i in range(3) for j in range(3, 6)])
    assert isinstance(planar_embed(g), NonPlanar)


def test_disconnected_euler_per_component():
    g = Graph(range(6), [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    emb = planar_embed(g)
    assert isinstance(emb, Embedding)
    # 2 faces per triangle component
    assert sorted(length for _, length in faces(emb)) == [3, 3, 3, 3]


def test_wheel_faces():
    emb = planar_embed(wheel(5))
    lengths = sorted(length for _, length in faces(emb))
    assert lengths == [3, 3, 3, 3, 3, 5]


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_vertices=8))
def test_every_directed_edge_in_exactly_one_face(g):
    res = planar_embed(g)
    if isinstance(res, NonPlanar):
        return
    visits: dict[tuple[int, int], int] = {}
    for f in res.faces:
        walk = f.walk
        for i, u in enumerate(walk):
            v = walk[(i + 1) % len(walk)]
            visits[(u, v)] = visits.get((u, v), 0) + 1
    expected = {}
    for u, v in g.edges:
        expected[(u, v)] = 1
        expected[(v, u)] = 1
    assert visits == expected


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_vertices=8))
def test_face_lengths_sum_to_twice_edges(g):
    res = planar_embed(g)
    if isinstance(res, NonPlanar):
        return
    assert sum(length for _, length in faces(res)) == 2 * g.num_edges()


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_vertices=8))
def test_euler_on_connected_planar(g):
    res = planar_embed(g)
    if isinstance(res, NonPlanar) or not g.is_connected() or g.num_edges() == 0:
        return
    assert g.num_vertices() - g.num_edges() + len(res.faces) == 2
