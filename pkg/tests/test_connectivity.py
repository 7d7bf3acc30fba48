from itertools import combinations

from abcmax.connectivity import (
    connectivity_profile,
    edge_connectivity,
    vertex_connectivity,
)
from abcmax.enumeration import connected_graph_list
from abcmax.graphs import (
    Graph,
    bridge_cliques_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    kn_k_graph,
    path_graph,
)


def brute_edge_connectivity_upto(g: Graph, max_size: int):
    """Smallest disconnecting edge set of size <= max_size, else None."""
    edges = list(g.edges())
    for size in range(0, max_size + 1):
        for subset in combinations(edges, size):
            rows = list(g.rows)
            for u, v in subset:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            if not is_connected(Graph(g.n, tuple(rows))):
                return size
    return None


def brute_vertex_connectivity(g: Graph) -> int:
    """Minimum separator by removal of every vertex subset; n-1 if none."""
    n = g.n
    for size in range(0, n - 1):
        for subset in combinations(range(n), size):
            keep = [v for v in range(n) if v not in subset]
            sub = Graph.from_edges(
                len(keep),
                [
                    (i, j)
                    for i in range(len(keep))
                    for j in range(i + 1, len(keep))
                    if g.has_edge(keep[i], keep[j])
                ],
            )
            if not is_connected(sub):
                return size
    return n - 1


class TestEdgeConnectivity:
    def test_complete(self):
        for n in range(2, 11):
            assert edge_connectivity(complete_graph(n)) == n - 1

    def test_bridge_of_cliques(self):
        assert edge_connectivity(bridge_cliques_graph(3, 3)) == 1

    def test_kn_k_example(self):
        g = kn_k_graph(6, 3)
        assert edge_connectivity(g) == 3
        assert brute_edge_connectivity_upto(g, 3) == 3

    def test_cycle(self):
        assert edge_connectivity(cycle_graph(7)) == 2

    def test_trivial_and_disconnected(self):
        assert edge_connectivity(complete_graph(1)) == 0
        assert edge_connectivity(disjoint_union(complete_graph(3), complete_graph(2))) == 0

    def test_brute_force_agreement_n_le_6(self):
        for n in range(2, 7):
            for g in connected_graph_list(n):
                brute = brute_edge_connectivity_upto(g, 3)
                lam = edge_connectivity(g)
                if brute is None:
                    assert lam >= 4
                else:
                    assert lam == brute


class TestVertexConnectivity:
    def test_complete_convention(self):
        assert vertex_connectivity(complete_graph(5)) == 4
        assert vertex_connectivity(complete_graph(1)) == 0

    def test_kn_k_example(self):
        g = kn_k_graph(6, 3)
        assert vertex_connectivity(g) == 3
        assert brute_vertex_connectivity(g) == 3

    def test_path(self):
        assert vertex_connectivity(path_graph(4)) == 1

    def test_disconnected(self):
        assert vertex_connectivity(disjoint_union(complete_graph(2), complete_graph(2))) == 0

    def test_brute_force_agreement_n_le_6(self):
        for n in range(2, 7):
            for g in connected_graph_list(n):
                assert vertex_connectivity(g) == brute_vertex_connectivity(g)


class TestStructuralProperties:
    def test_whitney_chain(self):
        # kappa <= lambda <= min degree on every enumerated graph
        for n in range(2, 8):
            for g in connected_graph_list(n):
                lam = edge_connectivity(g)
                kap = vertex_connectivity(g)
                assert kap <= lam <= min(g.degrees())

    def test_kn_k_connectivities(self):
        for n in range(6, 13):
            for k in range(1, n - 1):
                g = kn_k_graph(n, k)
                assert edge_connectivity(g) == k
                assert vertex_connectivity(g) == k


class TestWitnesses:
    def test_edge_cut_witness_disconnects(self):
        for g in (bridge_cliques_graph(3, 4), kn_k_graph(6, 2), cycle_graph(6)):
            prof = connectivity_profile(g)
            assert len(prof.min_edge_cut) == prof.edge_connectivity
            rows = list(g.rows)
            for u, v in prof.min_edge_cut:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            assert not is_connected(Graph(g.n, tuple(rows)))

    def test_vertex_cut_witness_disconnects(self):
        g = kn_k_graph(6, 3)
        prof = connectivity_profile(g)
        assert len(prof.min_vertex_cut) == 3
        keep = [v for v in range(g.n) if v not in prof.min_vertex_cut]
        sub = Graph.from_edges(
            len(keep),
            [
                (i, j)
                for i in range(len(keep))
                for j in range(i + 1, len(keep))
                if g.has_edge(keep[i], keep[j])
            ],
        )
        assert not is_connected(sub)

    def test_complete_graph_has_no_vertex_cut(self):
        prof = connectivity_profile(complete_graph(4))
        assert prof.vertex_connectivity == 3
        assert prof.min_vertex_cut is None
        assert len(prof.min_edge_cut) == 3
