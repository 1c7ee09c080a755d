"""Graph analysis of degree-2 monomial Cremona sets.

A 2-stochastic set is a multigraph on the variables: each squarefree
monomial is an edge, each pure square a loop.  The set is Cremona exactly
when the graph is connected with as many edges as vertices and its unique
cycle is odd (a loop counts as a cycle of length 1).  The root circuit,
its BFS layers and the off-circuit junction count determine the degree and
the inversion vector of the inverse map, which this module predicts
independently of the inversion engine so the two can be cross-checked.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from . import inversion
from .errors import ConsistencyError, NotCremonaError
from .monomials import (
    ExponentVector,
    Matrix,
    MonomialSet,
    check_canonical,
    log_matrix,
)


@dataclass(frozen=True)
class CremonaGraph:
    """Multigraph of a 2-stochastic set, with root-circuit data when Cremona.

    ``edges[j]`` is the endpoint pair (a, b) with a <= b of column j; loops
    have a == b and contribute 2 to their vertex degree.  The circuit,
    layers, per-layer edge counts and junction count are None unless the
    graph passes the Cremona test.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]
    connected: bool
    cremona: bool
    circuit: tuple[int, ...] | None
    layers: tuple[tuple[int, ...], ...] | None
    layer_edge_counts: tuple[int, ...] | None
    junction_count: int | None

    @property
    def circuit_length(self) -> int:
        if self.circuit is None:
            raise NotCremonaError("graph has no root circuit")
        return len(self.circuit)

    @property
    def depth(self) -> int:
        if self.layers is None:
            raise NotCremonaError("graph has no root circuit")
        return len(self.layers)

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)


@dataclass(frozen=True)
class NormalForm:
    """Reordered log-matrix: root circuit block, then one block per layer.

    ``row_order[i]`` / ``column_order[j]`` give the original variable /
    monomial index sitting at position i / j, so
    ``matrix[i][j] == original[row_order[i]][column_order[j]]``.
    ``block_sizes`` is (circuit length, layer sizes...).
    """

    matrix: Matrix
    row_order: tuple[int, ...]
    column_order: tuple[int, ...]
    block_sizes: tuple[int, ...]

    def root_block(self) -> Matrix:
        r = self.block_sizes[0]
        return tuple(row[:r] for row in self.matrix[:r])

    def connector(self, j: int) -> Matrix:
        """Block M_j linking layer j to layer j-1 (layer 0 is the circuit)."""
        if not 1 <= j < len(self.block_sizes):
            raise IndexError("no such layer")
        row_start = sum(self.block_sizes[: j - 1])
        row_end = sum(self.block_sizes[:j])
        col_start = sum(self.block_sizes[:j])
        col_end = col_start + self.block_sizes[j]
        return tuple(row[col_start:col_end] for row in self.matrix[row_start:row_end])


@dataclass(frozen=True)
class InverseEntryReport:
    """Entry-level facts about the inverse matrix, aligned to the normal form."""

    diagonal_nonzero: bool
    entries_in_range: bool
    two_placement_ok: bool
    squarefree_inverse: bool
    structural_squarefree: bool

    @property
    def consistent(self) -> bool:
        return (
            self.diagonal_nonzero
            and self.entries_in_range
            and self.two_placement_ok
            and self.squarefree_inverse == self.structural_squarefree
        )


@dataclass(frozen=True)
class Degree2Classification:
    circuit_length: int
    junction_count: int
    inverse_degree: int
    p_involution: bool
    kind: str  # "short" or "general"
    apocryphal: bool
    doubly_stochastic: bool
    inverse_linear_type: bool
    squarefree_inverse: bool


def build_graph(mset: MonomialSet) -> CremonaGraph:
    """Graph of a 2-stochastic set; Cremona fields stay unset if the test fails."""
    matrix = log_matrix(mset)
    if matrix.degree != 2:
        raise ValueError("graph construction needs a 2-stochastic set")
    n = mset.n
    edges = []
    for vec in mset.vectors:
        support = [i for i, e in enumerate(vec) if e]
        if len(support) == 1:
            edges.append((support[0], support[0]))
        else:
            edges.append((min(support), max(support)))
    edges = tuple(edges)

    degrees = [0] * n
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if a == b:
            degrees[a] += 2
        else:
            degrees[a] += 1
            degrees[b] += 1
            neighbor_sets[a].add(b)
            neighbor_sets[b].add(a)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)

    seen = [False] * n
    stack = [0]
    seen[0] = True
    while stack:
        v = stack.pop()
        for u in adjacency[v]:
            if not seen[u]:
                seen[u] = True
                stack.append(u)
    connected = all(seen)

    loops = [a for a, b in edges if a == b]
    cremona = connected and mset.q == n and len(loops) <= 1
    circuit: tuple[int, ...] | None = None
    if cremona:
        if loops:
            circuit = (loops[0],)
        else:
            core = _two_core(n, edges, degrees)
            if len(core) % 2 == 1 and len(core) >= 3:
                circuit = _cycle_order(core, edges)
            else:
                cremona = False
    layers = layer_counts = None
    junctions = None
    if cremona and circuit is not None:
        layers, layer_counts = _bfs_layers(n, circuit, adjacency, edges)
        junctions = sum(
            1 for v in range(n) if v not in circuit and degrees[v] >= 2
        )
    else:
        circuit = None
    return CremonaGraph(
        n,
        edges,
        tuple(degrees),
        adjacency,
        connected,
        cremona,
        circuit,
        layers,
        layer_counts,
        junctions,
    )


def _two_core(n: int, edges, degrees) -> list[int]:
    """Vertices surviving repeated removal of degree-1 vertices."""
    deg = list(degrees)
    alive_v = [True] * n
    alive_e = [True] * len(edges)
    incident: list[list[int]] = [[] for _ in range(n)]
    for idx, (a, b) in enumerate(edges):
        incident[a].append(idx)
        if a != b:
            incident[b].append(idx)
    queue = [v for v in range(n) if deg[v] == 1]
    while queue:
        v = queue.pop()
        if not alive_v[v] or deg[v] != 1:
            continue
        alive_v[v] = False
        for idx in incident[v]:
            if not alive_e[idx]:
                continue
            a, b = edges[idx]
            alive_e[idx] = False
            u = b if a == v else a
            deg[v] -= 1
            deg[u] -= 1
            if alive_v[u] and deg[u] == 1:
                queue.append(u)
    return [v for v in range(n) if alive_v[v] and deg[v] >= 2]


def _cycle_order(core: list[int], edges) -> tuple[int, ...]:
    """Core vertices in cyclic order, starting at the smallest index and
    moving toward its smaller neighbor."""
    core_set = set(core)
    adj: dict[int, list[int]] = {v: [] for v in core}
    for a, b in edges:
        if a != b and a in core_set and b in core_set:
            adj[a].append(b)
            adj[b].append(a)
    start = min(core)
    second = min(adj[start])
    order = [start, second]
    while len(order) < len(core):
        prev, cur = order[-2], order[-1]
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        order.append(nxt)
    return tuple(order)


def _bfs_layers(n, circuit, adjacency, edges):
    dist = [-1] * n
    dq = deque()
    for v in circuit:
        dist[v] = 0
        dq.append(v)
    while dq:
        v = dq.popleft()
        for u in adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                dq.append(u)
    depth = max(dist)
    layers = tuple(
        tuple(sorted(v for v in range(n) if dist[v] == j))
        for j in range(1, depth + 1)
    )
    counts = [0] * depth
    for a, b in edges:
        if a == b:
            continue
        lo, hi = sorted((dist[a], dist[b]))
        if hi == lo + 1:
            counts[hi - 1] += 1
        elif hi == lo and hi > 0:
            raise ConsistencyError("edge inside a layer on a Cremona graph")
    for j, layer in enumerate(layers):
        if counts[j] != len(layer):
            raise ConsistencyError("layer edge count does not match layer size")
    return layers, tuple(counts)


def is_cremona_degree2(graph: CremonaGraph) -> bool:
    """Graph-side Cremona test: unique odd circuit, or a tree plus one loop."""
    return graph.cremona


def circuit_block(r: int) -> Matrix:
    """Incidence matrix of the length-r circuit in its normal cyclic layout."""
    if r == 1:
        return ((2,),)
    block = [[0] * r for _ in range(r)]
    for k in range(r):
        block[k][k] = 1
        block[(k + 1) % r][k] = 1
    return tuple(tuple(row) for row in block)


def normal_form(mset: MonomialSet) -> NormalForm:
    """Reorder variables and monomials into the layered block layout."""
    graph = build_graph(mset)
    if not graph.cremona:
        raise NotCremonaError("normal form requires a degree-2 Cremona set")
    circuit = graph.circuit
    layers = graph.layers
    assert circuit is not None and layers is not None
    r = len(circuit)
    edge_index = {}
    for j, (a, b) in enumerate(graph.edges):
        edge_index[(a, b)] = j

    row_order = list(circuit)
    for layer in layers:
        row_order.extend(layer)

    column_order = []
    if r == 1:
        column_order.append(edge_index[(circuit[0], circuit[0])])
    else:
        for k in range(r):
            a, b = circuit[k], circuit[(k + 1) % r]
            column_order.append(edge_index[(min(a, b), max(a, b))])
    level = {v: 0 for v in circuit}
    for j, layer in enumerate(layers, start=1):
        for v in layer:
            level[v] = j
    for j, layer in enumerate(layers, start=1):
        for v in layer:
            parents = [
                u for u in graph.adjacency[v] if level.get(u, -1) == j - 1
            ]
            if len(parents) != 1:
                raise ConsistencyError("off-circuit vertex without a unique parent")
            u = parents[0]
            column_order.append(edge_index[(min(u, v), max(u, v))])

    original = log_matrix(mset).entries
    matrix = tuple(
        tuple(original[i][j] for j in column_order) for i in row_order
    )
    sizes = (r,) + tuple(len(layer) for layer in layers)
    form = NormalForm(matrix, tuple(row_order), tuple(column_order), sizes)
    _check_blocks(form)
    return form


def _check_blocks(form: NormalForm) -> None:
    sizes = form.block_sizes
    n = sum(sizes)
    if form.root_block() != circuit_block(sizes[0]):
        raise ConsistencyError("root block is not in circuit layout")
    starts = [sum(sizes[:k]) for k in range(len(sizes))]
    for k in range(1, len(sizes)):
        s = sizes[k]
        base = starts[k]
        for i in range(s):
            for j in range(s):
                expected = 1 if i == j else 0
                if form.matrix[base + i][base + j] != expected:
                    raise ConsistencyError("layer block is not the identity")
        connector = form.connector(k)
        for col in range(s):
            ones = sum(connector[i][col] for i in range(len(connector)))
            if ones != 1 or any(v not in (0, 1) for v in (row[col] for row in connector)):
                raise ConsistencyError("connector column must have exactly one 1")
    for i in range(n):
        for j in range(n):
            block_i = next(k for k in range(len(sizes)) if i < starts[k] + sizes[k])
            block_j = next(k for k in range(len(sizes)) if j < starts[k] + sizes[k])
            if block_j not in (block_i, block_i + 1) and form.matrix[i][j]:
                raise ConsistencyError("nonzero entry outside the block staircase")


def inverse_degree(graph: CremonaGraph) -> int:
    """Predicted degree of the inverse map: (r + 1)/2 + junction count."""
    if not graph.cremona:
        raise NotCremonaError("inverse degree is defined for Cremona graphs only")
    assert graph.circuit is not None and graph.junction_count is not None
    return (len(graph.circuit) + 1) // 2 + graph.junction_count


def inversion_factor_degree2(graph: CremonaGraph) -> ExponentVector:
    """Predicted inversion vector: circuit vertices plus the off-circuit
    edges whose endpoints both keep degree >= 2 after leaves are pruned."""
    if not graph.cremona:
        raise NotCremonaError("inversion factor is defined for Cremona graphs only")
    assert graph.circuit is not None
    gamma = [0] * graph.vertex_count
    on_circuit = set(graph.circuit)
    for v in graph.circuit:
        gamma[v] += 1
    for a, b in graph.edges:
        if a == b:
            continue  # the loop is the root circuit itself
        if a in on_circuit and b in on_circuit:
            continue
        if graph.degrees[a] >= 2 and graph.degrees[b] >= 2:
            gamma[a] += 1
            gamma[b] += 1
    return tuple(gamma)


def edge_graph(graph: CremonaGraph) -> dict[int, frozenset[int]]:
    """Simple graph on the columns; two are adjacent when the edges meet.

    A loop meets every edge incident to its vertex.
    """
    q = len(graph.edges)
    endpoints = [frozenset(e) for e in graph.edges]
    adjacency: dict[int, set[int]] = {j: set() for j in range(q)}
    for i in range(q):
        for j in range(i + 1, q):
            if endpoints[i] & endpoints[j]:
                adjacency[i].add(j)
                adjacency[j].add(i)
    return {j: frozenset(adjacency[j]) for j in range(q)}


def diameter(adjacency) -> int:
    """Largest BFS distance between two vertices of a connected simple graph."""
    vertices = sorted(adjacency)
    if not vertices:
        raise ValueError("empty graph")
    best = 0
    for source in vertices:
        dist = {source: 0}
        dq = deque([source])
        while dq:
            v = dq.popleft()
            for u in adjacency[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    dq.append(u)
        if len(dist) != len(vertices):
            raise ValueError("graph is disconnected")
        best = max(best, max(dist.values()))
    return best


def is_inverse_linear_type(graph: CremonaGraph) -> bool:
    """Structural test for the inverse being of linear type.

    The root-neighborhood shapes allowed are: loop with at most one
    junction and nothing past the second layer; triangle with nothing past
    the first layer; bare pentagon.  The verdict is cross-checked against
    the edge-graph diameter being at most 2.
    """
    if not graph.cremona:
        raise NotCremonaError("linear-type test requires a Cremona graph")
    r = graph.circuit_length
    p = graph.depth
    s = graph.junction_count or 0
    if r == 1:
        structural = p <= 2 and s <= 1
    elif r == 3:
        structural = p <= 1
    elif r == 5:
        structural = p == 0
    else:
        structural = False
    dia = diameter(edge_graph(graph))
    if structural != (dia <= 2):
        raise ConsistencyError(
            f"structural linear-type test ({structural}) disagrees with "
            f"edge-graph diameter {dia}"
        )
    return structural


def inverse_entry_profile(mset: MonomialSet) -> InverseEntryReport:
    """Check the entry rules of the inverse matrix against the graph.

    The inverse is aligned to the normal form first: position i then
    corresponds to the variable ``row_order[i]``, whose row must contain a
    2 exactly when that vertex is an off-circuit junction.
    """
    graph = build_graph(mset)
    if not graph.cremona:
        raise NotCremonaError("entry profile requires a degree-2 Cremona set")
    data = inversion.invert(mset)
    form = normal_form(mset)
    w = data.inverse_matrix
    n = mset.n
    aligned = tuple(
        tuple(w[form.column_order[i]][form.row_order[j]] for j in range(n))
        for i in range(n)
    )
    on_circuit = set(graph.circuit or ())
    diagonal = all(aligned[i][i] != 0 for i in range(n))
    in_range = all(v in (0, 1, 2) for row in aligned for v in row)
    placement = True
    for i in range(n):
        vertex = form.row_order[i]
        expect_two = vertex not in on_circuit and graph.degrees[vertex] >= 2
        has_two = any(v == 2 for v in aligned[i])
        if expect_two != has_two:
            placement = False
            break
    squarefree = all(v <= 1 for row in w for v in row)
    structural = graph.depth <= 1
    return InverseEntryReport(diagonal, in_range, placement, squarefree, structural)


def classify(mset: MonomialSet) -> Degree2Classification:
    """Full degree-2 classification, cross-checked against the inversion engine."""
    graph = build_graph(mset)
    if not graph.cremona:
        raise NotCremonaError("classification requires a degree-2 Cremona set")
    data = inversion.invert(mset)
    r = graph.circuit_length
    s = graph.junction_count or 0
    p = graph.depth
    if inverse_degree(graph) != data.inverse_degree:
        raise ConsistencyError("graph degree formula disagrees with the inverse")
    if inversion_factor_degree2(graph) != data.inversion_vector:
        raise ConsistencyError("graph inversion factor disagrees with the inverse")
    involution = (r == 3 and p <= 1) or (r == 1 and s == 1)
    if involution != (data.inverse_degree == 2):
        raise ConsistencyError("involution test disagrees with the inverse degree")
    apocryphal = any(v >= 2 for row in data.inverse_matrix for v in row)
    entries = log_matrix(mset).entries
    doubly = not graph.has_loop() and all(sum(row) == 2 for row in entries)
    return Degree2Classification(
        circuit_length=r,
        junction_count=s,
        inverse_degree=data.inverse_degree,
        p_involution=involution,
        kind="short" if p <= 1 else "general",
        apocryphal=apocryphal,
        doubly_stochastic=doubly,
        inverse_linear_type=is_inverse_linear_type(graph),
        squarefree_inverse=not apocryphal,
    )


def random_cremona_degree2(n: int, circuit_length: int, seed: int = 0) -> MonomialSet:
    """Seeded random degree-2 Cremona set with the prescribed root circuit.

    ``circuit_length`` must be odd; 1 asks for a loop, which needs n >= 3 so
    the canonical restrictions can hold.  The remaining vertices attach as a
    random tree.  Output is deterministic per seed and always passes both
    the graph test and the canonical restrictions.
    """
    r = circuit_length
    if r < 1 or r % 2 == 0:
        raise ValueError("circuit length must be odd")
    if r == 1 and n < 3:
        raise ValueError("a loop needs at least three variables")
    if r >= 3 and n < r:
        raise ValueError("circuit length cannot exceed the variable count")
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    edges: list[tuple[int, int]] = []
    if r == 1:
        root = labels[0]
        rest = labels[1:]
        edges.append((root, root))
        attached = [root]
        for idx, v in enumerate(rest):
            if idx == 0:
                parent = root
            elif idx == 1:
                # a vertex at depth 2 keeps the loop variable from dividing
                # every monomial
                parent = rest[0]
            else:
                parent = rng.choice(attached)
            edges.append((min(parent, v), max(parent, v)))
            attached.append(v)
    else:
        circuit = labels[:r]
        for k in range(r):
            a, b = circuit[k], circuit[(k + 1) % r]
            edges.append((min(a, b), max(a, b)))
        attached = list(circuit)
        for v in labels[r:]:
            parent = rng.choice(attached)
            edges.append((min(parent, v), max(parent, v)))
            attached.append(v)
    rng.shuffle(edges)
    vectors = []
    for a, b in edges:
        vec = [0] * n
        vec[a] += 1
        vec[b] += 1
        vectors.append(tuple(vec))
    mset = MonomialSet(tuple(f"x{i + 1}" for i in range(n)), tuple(vectors))
    graph = build_graph(mset)
    if not graph.cremona or not check_canonical(mset).ok:
        raise ConsistencyError("generator produced a non-Cremona set")
    return mset
