"""Toric degenerations of rational K*-surfaces of Picard number one.

A quasismooth rational K*-surface of Picard number one is cut out of a
three-dimensional fake weighted projective space given by a 3x4 generator
matrix built from data ``(l1, l2, d0, d1, d2)``; it degenerates into two
fake weighted projective planes, the *slices*, with 2x3 generator matrices

    P1 = [[l1, l1, -l2], [d1, d1 + l1*d0, d2]],
    P2 = [[l2, l2, -l1], [d2, d2 + l2*d0, d1]].

Two planes are *adjacent* when they arise this way from a common surface.
Given a plane whose fixed point ``z(k)`` is a T-singularity, the surface
data is reconstructed uniquely: ``l1`` is the local Gorenstein index at the
point, ``d0 = -w_k / l1**2``, and ``d1`` is pinned down by the requirement
that ``P1`` corresponds to the given degree matrix.  The partner's weight
triple is the one-step mutation of the original at that slot, so the
adjacency graphs refine the mutation trees of the squared Markov equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import abelian, markov, planes
from .planes import ClassifiedPlane, DegreeMatrix, GeneratorMatrix, SeriesId

Triple = tuple[int, int, int]


class NotDegenerableError(ValueError):
    """Raised when a fixed point does not admit the partner construction."""


@dataclass(frozen=True)
class KStarData:
    """Defining data of the ambient 3x4 generator matrix.

    ``gcd(l_i, d_i) = 1`` keeps the slice columns primitive and the slope
    inequalities ``d0 + d1/l1 + d2/l2 < 0 < d1/l1 + d2/l2`` make all four
    fake weights positive.  ``d1`` is normalized into ``[0, l1)``; it can be
    zero only in the toric case ``l1 = 1``.
    """

    l1: int
    l2: int
    d0: int
    d1: int
    d2: int

    def __post_init__(self):
        if self.l1 < 1 or self.l2 < 1:
            raise ValueError(f"isotropy orders must be positive, got {self.l1}, {self.l2}")
        if gcd(self.l1, self.d1) != 1 or gcd(self.l2, self.d2) != 1:
            raise ValueError(f"gcd(l_i, d_i) != 1 in {self}")
        if not 0 <= self.d1 <= self.l1:
            raise ValueError(f"d1={self.d1} is not normalized into [0, l1]")
        if self.d1 == 0 and self.l1 != 1:
            raise ValueError("d1 = 0 is only allowed in the toric case l1 = 1")
        upper = self.d1 * self.l2 + self.d2 * self.l1
        lower = self.d0 * self.l1 * self.l2 + upper
        if not lower < 0 < upper:
            raise ValueError(f"slope inequalities fail for {self}")

    @property
    def ordered(self) -> bool:
        return self.l1 <= self.l2

    @property
    def non_toric(self) -> bool:
        return self.l1 > 1 and self.l2 > 1

    def weight_4vector(self) -> tuple[int, int, int, int]:
        w1 = -self.l1 * self.l2 * self.d0 - self.l2 * self.d1 - self.l1 * self.d2
        w2 = self.l2 * self.d1 + self.l1 * self.d2
        return (w1, w2, -self.l2 * self.d0, -self.l1 * self.d0)

    def fixed_point_orders(self) -> tuple[int, int, int]:
        """Local class group orders at the hyperbolic and elliptic points."""
        w = self.weight_4vector()
        return (-self.d0, w[1], w[0])

    def degree(self) -> Fraction:
        """Canonical self-intersection of the K*-surface, exact."""
        w1, w2, _, _ = self.weight_4vector()
        return (Fraction(1, w1) + Fraction(1, w2)) * (
            2 + Fraction(self.l1, self.l2) + Fraction(self.l2, self.l1)
        )

    def hyperbolic_charts(self) -> tuple[tuple, tuple]:
        """2x2 generator matrices of the charts at the hyperbolic point."""
        return (
            ((self.l1, self.l1), (self.d1, self.d1 + self.d0 * self.l1)),
            ((self.l2, self.l2), (self.d2, self.d2 + self.d0 * self.l2)),
        )

    def to_json_obj(self) -> dict:
        return {"l1": self.l1, "l2": self.l2, "d0": str(self.d0), "d1": str(self.d1), "d2": str(self.d2)}


def slice_matrices(kstar: KStarData) -> tuple[GeneratorMatrix, GeneratorMatrix]:
    """Generator matrices of the two degenerate fibers."""
    p1 = GeneratorMatrix(
        (
            (kstar.l1, kstar.l1, -kstar.l2),
            (kstar.d1, kstar.d1 + kstar.l1 * kstar.d0, kstar.d2),
        )
    )
    p2 = GeneratorMatrix(
        (
            (kstar.l2, kstar.l2, -kstar.l1),
            (kstar.d2, kstar.d2 + kstar.l2 * kstar.d0, kstar.d1),
        )
    )
    return p1, p2


def assemble_3x4(kstar: KStarData) -> list[list[int]]:
    """The ambient 3x4 generator matrix of the K*-surface."""
    return [
        [-1, -1, kstar.l1, 0],
        [-1, -1, 0, kstar.l2],
        [0, kstar.d0, kstar.d1, kstar.d2],
    ]


def weights_of_3x4(p: list[list[int]]) -> tuple[int, int, int, int]:
    """Absolute 3x3 minors of a 3x4 matrix, one per omitted column."""
    out = []
    for skip in range(4):
        cols = [j for j in range(4) if j != skip]
        minor = [[p[i][j] for j in cols] for i in range(3)]
        out.append(abs(abelian.det_unimodular(minor)))
    return tuple(out)


def kstar_degree(kstar: KStarData) -> Fraction:
    return kstar.degree()


@dataclass(frozen=True)
class AdjacentPair:
    """A pair of planes degenerating from a common K*-surface.

    ``perm`` records which column of ``q1`` was moved into the last slot
    (and the weight-sorted order of the other two) before reconstructing
    the surface data; ``q1`` and ``q2`` are canonical adjusted matrices,
    ``q2_raw`` keeps the second slice's column order for per-slot checks.
    """

    q1: DegreeMatrix
    q2: DegreeMatrix
    q2_raw: DegreeMatrix
    kstar: KStarData
    perm: tuple[int, int, int]

    @property
    def ordered(self) -> bool:
        return self.kstar.ordered

    @property
    def non_toric(self) -> bool:
        return self.kstar.non_toric

    @property
    def self_adjacent(self) -> bool:
        return self.q1 == self.q2


def adjacent_partner(q: DegreeMatrix, slot: int) -> AdjacentPair:
    """Reconstruct the K*-surface over the T-singular point ``z(slot)``
    and return the adjacent pair of planes it degenerates to.

    Raises :class:`NotDegenerableError` when the point is not a
    T-singularity.  The slice data is otherwise guaranteed to exist and the
    search for ``d1`` must hit exactly once.
    """
    q_canon, _ = planes.adjust(q)
    w = planes.fake_weights_of_degree_matrix(q)
    rest = sorted((i for i in range(3) if i != slot), key=lambda i: (w[i], i))
    perm = (rest[0], rest[1], slot)
    qp = q.permuted(perm)
    wp = tuple(w[i] for i in perm)

    flag, d = planes.is_t_singular(qp, 2)
    if not flag:
        raise NotDegenerableError(f"fixed point {slot} of {q} is not a T-singularity")
    iota = planes.local_gorenstein_index(qp, 2)
    l1 = iota
    d0 = -d
    if -d0 * l1 * l1 != wp[2]:
        raise AssertionError("T-singularity data is inconsistent with the weights")
    num = l1 * (wp[0] + wp[1])
    if num % wp[2]:
        raise NotDegenerableError(f"second isotropy order of {q} at slot {slot} is not integral")
    l2 = num // wp[2]

    hits = []
    for d1 in range(l1):
        if l1 > 1 and (d1 == 0 or gcd(l1, d1) != 1):
            continue
        d2_num = d1 * (wp[0] + wp[1]) + d0 * l1 * wp[1]
        if d2_num % wp[2]:
            continue
        d2 = -(d2_num // wp[2])
        if gcd(l2, d2) != 1:
            continue
        p1_rows = ((l1, l1, -l2), (d1, d1 + l1 * d0, d2))
        if planes.annihilates(qp, p1_rows):
            hits.append((d1, d2))
    if len(hits) != 1:
        raise AssertionError(f"slice reconstruction of {q} at slot {slot} found {hits}")
    d1, d2 = hits[0]
    kstar = KStarData(l1=l1, l2=l2, d0=d0, d1=d1, d2=d2)

    p1, p2 = slice_matrices(kstar)
    if planes.fake_weights_of_generator(p1) != wp:
        raise AssertionError("first slice does not have the expected weights")
    if not planes.corresponds(qp, p1):
        raise AssertionError("first slice fails the correspondence test")
    ctx2, cols2 = abelian.cokernel_structure(p2.rows)
    q2_raw = DegreeMatrix(ctx2.mu, tuple(c.free for c in cols2), tuple(c.tors for c in cols2))
    q2_canon, _ = planes.adjust(q2_raw)
    return AdjacentPair(q1=q_canon, q2=q2_canon, q2_raw=q2_raw, kstar=kstar, perm=perm)


def can_degenerate(q: DegreeMatrix, slot: int) -> bool:
    """Whether ``z(slot)`` carries a degeneration from a non-toric surface.

    Requires a T-singularity with local Gorenstein index above one and the
    norm inequality making the second isotropy order exceed one as well.
    """
    flag, _ = planes.is_t_singular(q, slot)
    if not flag:
        return False
    iota = planes.local_gorenstein_index(q, slot)
    if iota == 1:
        return False
    w = planes.fake_weights_of_degree_matrix(q)
    return iota * sum(w) > (iota + 1) * w[slot]


def adjacency_neighbors(q: DegreeMatrix) -> tuple[list[tuple[DegreeMatrix, AdjacentPair]], list[AdjacentPair]]:
    """Adjacent partner classes over all T-singular fixed points.

    Returns ``(neighbors, self_pairs)``: partners isomorphic to ``q``
    itself are reported separately and never enter the edge set.
    Toric pairs count; adjacency does not require the common surface to be
    non-toric.
    """
    q_canon, _ = planes.adjust(q)
    neighbors: dict[DegreeMatrix, AdjacentPair] = {}
    self_pairs: list[AdjacentPair] = []
    for slot in range(3):
        flag, _ = planes.is_t_singular(q, slot)
        if not flag:
            continue
        pair = adjacent_partner(q, slot)
        if pair.q2 == q_canon:
            self_pairs.append(pair)
        else:
            neighbors.setdefault(pair.q2, pair)
    ordered = sorted(neighbors.items(), key=lambda kv: (kv[0].u, kv[0].eta))
    return ordered, self_pairs


@dataclass(frozen=True)
class GraphNode:
    plane: ClassifiedPlane
    self_adjacent: bool
    non_toric_self: bool
    all_t: bool  # every fixed point is at most a T-singularity

    @property
    def key(self) -> DegreeMatrix:
        return self.plane.matrix

    def label(self) -> str:
        u = self.plane.matrix.u
        if self.plane.matrix.mu == 1:
            return "({},{},{})".format(*u)
        return "({},{},{}; {})".format(*u, self.plane.matrix.eta[2])


@dataclass(frozen=True)
class GraphEdge:
    a: DegreeMatrix
    b: DegreeMatrix
    jump: bool


@dataclass
class AdjacencyGraph:
    """Adjacency structure on the classes of one ``(degree, mu)`` family."""

    a: int
    mu: int
    norm_bound: int
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]

    def node_by_key(self, key: DegreeMatrix) -> GraphNode:
        for node in self.nodes:
            if node.key == key:
                return node
        raise KeyError(key)

    def edge_keys(self) -> set[frozenset]:
        return {frozenset((e.a, e.b)) for e in self.edges}

    def connected_components(self) -> list[set[DegreeMatrix]]:
        remaining = {n.key for n in self.nodes}
        adj: dict[DegreeMatrix, set[DegreeMatrix]] = {n.key: set() for n in self.nodes}
        for e in self.edges:
            adj[e.a].add(e.b)
            adj[e.b].add(e.a)
        components = []
        while remaining:
            seed = remaining.pop()
            comp = {seed}
            frontier = [seed]
            while frontier:
                current = frontier.pop()
                for other in adj[current]:
                    if other not in comp:
                        comp.add(other)
                        remaining.discard(other)
                        frontier.append(other)
            components.append(comp)
        return components

    def to_json_obj(self) -> dict:
        return {
            "a": self.a,
            "mu": self.mu,
            "normBound": str(self.norm_bound),
            "nodes": [
                {
                    "label": n.label(),
                    "series": [str(s) for s in n.plane.all_series],
                    "u": [str(x) for x in n.plane.matrix.u],
                    "eta": list(n.plane.matrix.eta),
                    "selfAdjacent": n.self_adjacent,
                    "nonToricSelf": n.non_toric_self,
                    "allT": n.all_t,
                }
                for n in self.nodes
            ],
            "edges": [
                {
                    "from": self.node_by_key(e.a).label(),
                    "to": self.node_by_key(e.b).label(),
                    "jump": e.jump,
                }
                for e in self.edges
            ],
            "selfAdjacent": [n.label() for n in self.nodes if n.self_adjacent],
        }

    def to_dot(self) -> str:
        lines = [f"graph adjacency_{self.a}_{self.mu} {{"]
        for n in self.nodes:
            attrs = []
            if n.self_adjacent:
                attrs.append("peripheries=2")
            if n.non_toric_self:
                attrs.append('comment="non-toric self-adjacency"')
            attr_txt = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{n.label()}"{attr_txt};')
        for e in self.edges:
            la = self.node_by_key(e.a).label()
            lb = self.node_by_key(e.b).label()
            style = " [color=red]" if e.jump else ""
            lines.append(f'  "{la}" -- "{lb}"{style};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def adjacency_graph(a: int, mu: int, norm_bound: int) -> AdjacencyGraph:
    """Graph on the classified planes of one family, edges by adjacency.

    Nodes carry all isomorphic series labels; an edge is a *jump* when its
    endpoints share no series label.  Self-adjacency is a node attribute,
    never an edge.
    """
    if (a, mu) not in planes.SERIES_ETAS:
        raise ValueError(f"no series exists for degree {a} with torsion order {mu}")
    classified = [c for c in planes.classify(a, norm_bound) if c.matrix.mu == mu]
    by_key = {c.matrix: c for c in classified}
    nodes = []
    edges: dict[frozenset, bool] = {}
    series_of = {c.matrix: set(c.all_series) for c in classified}
    for c in classified:
        neighbor_pairs, self_pairs = adjacency_neighbors(c.matrix)
        nodes.append(
            GraphNode(
                plane=c,
                self_adjacent=bool(self_pairs),
                non_toric_self=any(p.non_toric for p in self_pairs),
                all_t=all(planes.is_t_singular(c.matrix, k)[0] for k in range(3)),
            )
        )
        for partner_key, _pair in neighbor_pairs:
            if partner_key not in by_key:
                continue  # partner lies beyond the norm bound
            key = frozenset((c.matrix, partner_key))
            jump = not (series_of[c.matrix] & series_of[partner_key])
            edges[key] = jump
    edge_list = []
    for key in edges:
        pair = sorted(key, key=lambda m: (m.u, m.eta))
        edge_list.append(GraphEdge(a=pair[0], b=pair[1], jump=edges[key]))
    edge_list.sort(key=lambda e: (e.a.u, e.a.eta, e.b.u, e.b.eta))
    return AdjacencyGraph(a=a, mu=mu, norm_bound=norm_bound, nodes=tuple(nodes), edges=tuple(edge_list))


@dataclass(frozen=True)
class CensusEntry:
    series: SeriesId
    kstar: KStarData

    @property
    def non_toric(self) -> bool:
        return self.kstar.non_toric


def self_adjacency_census() -> list[CensusEntry]:
    """Series whose smallest member is adjacent to itself.

    Scans the base node of every series family (the unique initial triple
    of the scaled equation); a class is self-adjacent exactly when the
    partner over one of its T-singular points is the class itself.
    """
    out = []
    for (a, mu) in planes.SERIES_FAMILIES:
        base_norm = min(t.norm for t in markov.initial_solutions(mu * a))
        for c in planes.classify(a, mu * base_norm):
            if c.matrix.mu != mu or c.norm != mu * base_norm:
                continue
            _, self_pairs = adjacency_neighbors(c.matrix)
            if self_pairs:
                best = min(self_pairs, key=lambda p: not p.non_toric)
                out.append(CensusEntry(series=c.series, kstar=best.kstar))
    out.sort(key=lambda e: (-e.series.a, e.series.mu, e.series.eta))
    return out
