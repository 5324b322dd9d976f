'''
Regular graphs stored as adjacency lists: an (n, k) array whose row i holds
the k neighbours of vertex i in ascending order.
'''

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from utils.matgrp import GroupEnum, IncompleteEnumerationError, ProjMatrix

from .error import DuplicateGeneratorError, InvariantViolation, NotGeneratingError

@dataclass
class CayleyGraph:
    n: int
    k: int
    neighbors: np.ndarray
    moves: List[ProjMatrix] = field(default_factory=list)
    group: Optional[GroupEnum] = None

    def matvec(self, x: np.ndarray) -> np.ndarray:
        '''Normalized adjacency applied to x (vector or column block)'''
        return x[self.neighbors].sum(axis=1) / self.k

    def adjacency(self) -> csr_matrix:
        rows = np.repeat(np.arange(self.n), self.k)
        data = np.ones(self.n * self.k)
        return csr_matrix((data, (rows, self.neighbors.ravel())), shape=(self.n, self.n))

    def dense_adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        np.add.at(A, (np.repeat(np.arange(self.n), self.k), self.neighbors.ravel()), 1.0)
        return A

    def to_networkx(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    def edges(self) -> List[Tuple[int, int]]:
        '''Each undirected edge once as (u, v) with u <= v, ascending'''
        out = []
        for u in range(self.n):
            for v in self.neighbors[u]:
                v = int(v)
                if v > u:
                    out.append((u, v))
        loops = [(u, u) for u in range(self.n) for v in self.neighbors[u] if v == u]
        return sorted(out + loops)

    def is_connected(self) -> bool:
        return self.reached_from_zero() == self.n

    def reached_from_zero(self) -> int:
        _, labels = connected_components(self.adjacency(), directed=False)
        return int((labels == labels[0]).sum())

    def check_symmetric(self):
        pairs = {}
        for u, v in zip(np.repeat(np.arange(self.n), self.k), self.neighbors.ravel()):
            pairs[(int(u), int(v))] = pairs.get((int(u), int(v)), 0) + 1
        for (u, v), count in pairs.items():
            if pairs.get((v, u), 0) != count:
                raise InvariantViolation("symmetry", "edge {}->{} has no matching reverse edge".format(u, v))


def cayley_graph(G: GroupEnum, S: List[ProjMatrix]) -> CayleyGraph:
    '''
    Edges x -- xs for s in S and S^-1. An involution contributes one edge per
    vertex, so the degree is |S u S^-1|.
    '''
    if not G.complete:
        raise IncompleteEnumerationError(len(G), G.cap)
    seen = set()
    for i, s in enumerate(S):
        if s in seen:
            raise DuplicateGeneratorError(i, s)
        seen.add(s)
    moves = list(S)
    for s in S:
        inv = s.inverse()
        if inv not in seen:
            seen.add(inv)
            moves.append(inv)
    columns = [G.right_multiply_all(m) for m in moves]
    neighbors = np.sort(np.stack(columns, axis=1), axis=1)
    graph = CayleyGraph(n=len(G), k=len(moves), neighbors=neighbors, moves=moves, group=G)
    reached = graph.reached_from_zero()
    if reached != graph.n:
        raise NotGeneratingError(reached, graph.n)
    logging.info("Cayley graph: {} vertices, degree {}".format(graph.n, graph.k))
    return graph

def graph_from_moves(G: GroupEnum, moves: List[ProjMatrix]) -> CayleyGraph:
    '''Edges x -- xm for an explicit move multiset, which must be closed under inverses'''
    if not G.complete:
        raise IncompleteEnumerationError(len(G), G.cap)
    counts = {}
    for m in moves:
        counts[m] = counts.get(m, 0) + 1
    for m, count in counts.items():
        if counts.get(m.inverse(), 0) != count:
            raise InvariantViolation("inverse-closed moves", "{} occurs {} times, its inverse {}".format(
                m, count, counts.get(m.inverse(), 0)))
    columns = [G.right_multiply_all(m) for m in moves]
    neighbors = np.sort(np.stack(columns, axis=1), axis=1)
    return CayleyGraph(n=len(G), k=len(moves), neighbors=neighbors, moves=list(moves), group=G)

def from_edges(n: int, edges: Iterable[Tuple[int, int]], k: int = None) -> CayleyGraph:
    '''Group-less graph from an undirected edge list; must be regular'''
    rows = [[] for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise InvariantViolation("vertex range", "edge ({}, {}) outside 0..{}".format(u, v, n - 1))
        rows[u].append(v)
        if u != v:
            rows[v].append(u)
    degrees = {len(r) for r in rows}
    if len(degrees) != 1 or (k is not None and degrees != {k}):
        raise InvariantViolation("regularity", "degrees {} (expected {})".format(sorted(degrees), k))
    degree = degrees.pop()
    return CayleyGraph(n=n, k=degree, neighbors=np.sort(np.array(rows, dtype=np.int64).reshape(n, degree), axis=1))

def from_networkx(G: nx.Graph) -> CayleyGraph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in G.edges()])

def write_edge_list(graph: CayleyGraph, path: str, comments: Iterable[str] = ()):
    '''Header "# n k", optional "# ..." comment lines, then one "u v" pair per edge'''
    with open(path, "w") as f:
        f.write("# {} {}\n".format(graph.n, graph.k))
        for line in comments:
            f.write("# {}\n".format(line))
        for u, v in graph.edges():
            f.write("{} {}\n".format(u, v))

def read_edge_list(path: str) -> CayleyGraph:
    with open(path) as f:
        header = f.readline().split()
        if len(header) != 3 or header[0] != "#":
            raise InvariantViolation("edge list header", "expected '# n k'")
        n, k = int(header[1]), int(header[2])
        edges = []
        for number, line in enumerate(f, start=2):
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise InvariantViolation("edge list line", "line {} is {!r}".format(number, line.strip()))
            edges.append((int(fields[0]), int(fields[1])))
    return from_edges(n, edges, k)
