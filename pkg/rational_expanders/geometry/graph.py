import itertools

from plico.utils.logger import Logger

from rational_expanders.geometry.curves import shares_component
from rational_expanders.utils.exceptions import InputException


_logger = Logger.of('graph')


class SimpleGraph(object):
    '''Undirected graph on vertices 0..n-1, no loops or parallel edges'''

    def __init__(self, vertex_count, edges=()):
        self._n = vertex_count
        self._neighbours = [set() for _ in range(vertex_count)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u, v):
        if u == v:
            raise InputException("loop at vertex %d" % u)
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise InputException("edge (%d, %d) outside %d vertices" % (
                u, v, self._n))
        self._neighbours[u].add(v)
        self._neighbours[v].add(u)

    @property
    def vertex_count(self):
        return self._n

    def edges(self):
        return sorted((u, v) for u in range(self._n)
                      for v in self._neighbours[u] if u < v)

    def neighbours(self, vertex):
        return frozenset(self._neighbours[vertex])

    def degree(self, vertex):
        return len(self._neighbours[vertex])

    def max_degree(self):
        return max((len(s) for s in self._neighbours), default=0)

    def is_independent(self, vertices):
        vertices = set(vertices)
        return all(not (self._neighbours[v] & vertices) for v in vertices)

    def __repr__(self):
        return "SimpleGraph(%d vertices, %d edges)" % (
            self._n, len(self.edges()))


def max_degree(graph):
    return graph.max_degree()


def is_independent(graph, vertices):
    return graph.is_independent(vertices)


def component_sharing_graph(curves):
    '''Edge between two curves whose defining polynomials share a factor'''
    graph = SimpleGraph(len(curves))
    for i, j in itertools.combinations(range(len(curves)), 2):
        if shares_component(curves[i], curves[j]):
            graph.add_edge(i, j)
    _logger.debug("%d curves, %d sharing pairs" % (
        len(curves), len(graph.edges())))
    return graph


def greedy_partition(graph):
    '''
    Independent classes covering the vertices, at most max degree + 1
    of them: each vertex in turn joins the first class holding none of
    its neighbours.
    '''
    classes = []
    for v in range(graph.vertex_count):
        neighbours = graph.neighbours(v)
        for members in classes:
            if not (members & neighbours):
                members.add(v)
                break
        else:
            classes.append({v})
    assert len(classes) <= graph.max_degree() + 1
    return [sorted(c) for c in classes]
