import typing as t
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy import sparse

if t.TYPE_CHECKING:
    from orbitsieve_orbits.finite import FiniteGroupTable


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    """Right Cayley graph of a finite group table.

    Each vertex has one out-edge per entry of the generator multiset, so repeated generators give parallel
    edges and the identity gives loops. The graph is connected because the table is generated by its
    generators.
    """

    table: 'FiniteGroupTable'

    @property
    def size(self) -> int:
        return self.table.size

    @property
    def arity(self) -> int:
        return self.table.arity

    @property
    def action(self) -> np.ndarray:
        return self.table.action

    @property
    def weights(self) -> np.ndarray:
        return np.array(self.table.weights, dtype=np.int64)

    @property
    def total_weight(self) -> int:
        return int(sum(self.table.weights))

    @property
    def lower_spectral_edge(self) -> float:
        """Smallest possible eigenvalue of the Markov operator, ``-1 + 2·w(1)/W``."""
        identity = self.table.elements[0]
        identity_weight = sum(w for g, w in zip(self.table.generators, self.table.weights) if g == identity)
        return -1 + 2 * identity_weight / self.total_weight


def cayley_graph(table: 'FiniteGroupTable') -> CayleyGraph:
    return CayleyGraph(table)


def markov_apply(graph: CayleyGraph, f: np.ndarray) -> np.ndarray:
    """Markov averaging ``(Mf)(x) = Σ_s w_s f(x·s) / W`` over the generator multiset.

    Works for float arrays and for object arrays of exact rationals.
    """
    values = np.asarray(f)
    total = graph.total_weight
    result = values[graph.action[:, 0]] * int(graph.table.weights[0])
    for s in range(1, graph.arity):
        result = result + values[graph.action[:, s]] * int(graph.table.weights[s])
    return result / total


def markov_matrix(graph: CayleyGraph) -> sparse.csr_matrix:
    """Sparse matrix of the Markov operator; symmetric with rows summing to ``1``."""
    n = graph.size
    rows = np.repeat(np.arange(n, dtype=np.int64), graph.arity)
    cols = graph.action.reshape(-1)
    data = np.tile(graph.weights.astype(np.float64) / graph.total_weight, n)
    return sparse.csr_matrix((data, (rows, cols)), shape=(n, n))


def _distinct_steps(graph: CayleyGraph) -> t.List[int]:
    identity = graph.table.elements[0]
    columns: t.Dict[t.Tuple[int, ...], int] = {}
    for s, generator in enumerate(graph.table.generators):
        if generator != identity:
            columns.setdefault(generator, s)
    return sorted(columns.values())


def graph_diameter(graph: CayleyGraph) -> int:
    """Diameter, the eccentricity of the identity (Cayley graphs are vertex-transitive)."""
    steps = _distinct_steps(graph)
    distance = np.full(graph.size, -1, dtype=np.int64)
    distance[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in steps:
            y = int(graph.action[x, s])
            if distance[y] < 0:
                distance[y] = distance[x] + 1
                queue.append(y)
    return int(distance.max())


def girth_lower_bound(graph: CayleyGraph) -> t.Optional[int]:
    """Lower bound ``2R + 1`` on the girth of the underlying simple graph.

    ``R`` is the largest radius whose ball around the identity induces a tree. Loops and parallel edges of the
    multiset are ignored. Returns ``None`` when the whole graph is a tree.
    """
    steps = _distinct_steps(graph)
    depth = {0: 0}
    parent = {0: -1}
    level = [0]
    radius = 0
    while level:
        following: t.List[int] = []
        collision = False
        for x in level:
            for s in steps:
                y = int(graph.action[x, s])
                if y == parent[x]:
                    continue
                if depth.get(y) == radius:
                    # edge inside the sphere: the ball of this radius is not a tree
                    return 2 * (radius - 1) + 1
                if y in depth:
                    collision = True
                    continue
                depth[y] = radius + 1
                parent[y] = x
                following.append(y)

        if collision:
            return 2 * radius + 1
        level = following
        radius += 1

    return None
