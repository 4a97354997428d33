"""State graph on Str_N with arrows Str_{N+1}, its SCCs and exact spectral data."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import networkx as nx
import numpy as np

from .errors import InternalConsistencyError, PreconditionError, ResourceLimitError
from .polynomial import IntegerPolynomial, spectral_radius
from .presentation import Presentation, window
from .strings import DEFAULT_CAP, StringWord, enumerate_strings, format_word

WALK_CAP = 10_000_000


class StateArrow(NamedTuple):
    source: int
    target: int
    label: StringWord


@dataclass(frozen=True)
class StateGraph:
    """Vertices are the strings of length N (sorted), arrows the strings of length N+1.

    The arrow labelled ``w`` runs from its right-hand length-N part ``u``
    to its left-hand length-N part ``v`` (``w = αu = vβ``).
    """
    vertices: tuple
    arrows: tuple
    window: int

    def __len__(self):
        return len(self.vertices)

    def index(self, w: StringWord) -> int:
        return self.vertices.index(w)

    def out_arrows(self, i):
        return [a for a in self.arrows if a.source == i]

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(range(len(self.vertices)))
        for a in self.arrows:
            g.add_edge(a.source, a.target, label=a.label)
        return g


def build_state_graph(p: Presentation, cap: int = DEFAULT_CAP) -> StateGraph:
    N = window(p)
    verts = tuple(enumerate_strings(p, N, cap))
    pos = {w: i for i, w in enumerate(verts)}
    arrows = []
    for w in enumerate_strings(p, N + 1, cap):
        u = StringWord(w.syllables[:N])   # right part, applied first
        v = StringWord(w.syllables[1:])   # left part
        arrows.append(StateArrow(pos[u], pos[v], w))
    return StateGraph(verts, tuple(arrows), N)


# ---------------------------------------------------------------------------
# adjacency matrices
# ---------------------------------------------------------------------------

class AdjacencyMatrix:
    """Square matrix of arrow counts; ``entries[i, j]`` counts arrows i -> j."""

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if (arr < 0).any():
            raise ValueError("adjacency entries must be non-negative")
        arr.setflags(write=False)
        self.entries = arr

    @property
    def order(self):
        return self.entries.shape[0]

    def exact(self):
        """Object-dtype copy holding Python ints (no overflow)."""
        return self.entries.astype(object)

    def submatrix(self, idx):
        idx = list(idx)
        return AdjacencyMatrix(self.entries[np.ix_(idx, idx)])

    def to_list(self):
        return self.entries.tolist()

    def __eq__(self, other):
        if isinstance(other, AdjacencyMatrix):
            return np.array_equal(self.entries, other.entries)
        return np.array_equal(self.entries, np.asarray(other))

    def __repr__(self):
        return f"AdjacencyMatrix({self.to_list()})"


def adjacency(g: StateGraph, order=None) -> AdjacencyMatrix:
    """Adjacency matrix in vertex order (or in the given order of vertex words)."""
    n = len(g.vertices)
    if order is None:
        perm = list(range(n))
    else:
        perm = [g.index(w) for w in order]
        if sorted(perm) != list(range(n)):
            raise PreconditionError("order must list every vertex exactly once")
    where = {v: i for i, v in enumerate(perm)}
    m = np.zeros((n, n), dtype=np.int64)
    for a in g.arrows:
        m[where[a.source], where[a.target]] += 1
    return AdjacencyMatrix(m)


def matrix_dump(A: AdjacencyMatrix) -> str:
    return json.dumps(A.to_list()) + "\n"


# ---------------------------------------------------------------------------
# strongly connected components
# ---------------------------------------------------------------------------

def _digraph_of(A: AdjacencyMatrix) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(A.order))
    rows, cols = np.nonzero(A.entries)
    g.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return g


def condensation_order(A: AdjacencyMatrix):
    """SCC vertex lists in topological order of the condensation (ties by least vertex)."""
    g = _digraph_of(A)
    comps = [sorted(c) for c in nx.strongly_connected_components(g)]
    cond = nx.condensation(g, scc=[set(c) for c in comps])
    order = nx.lexicographical_topological_sort(cond, key=lambda c: comps[c][0])
    return [comps[c] for c in order]


def component_period(A: AdjacencyMatrix) -> int:
    """gcd of cycle lengths of a strongly connected matrix, via BFS levels.

    Returns 1 when the component has no arrows at all.
    """
    n = A.order
    level = {0: 0}
    queue = [0]
    for u in queue:
        for v in np.nonzero(A.entries[u])[0].tolist():
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    rows, cols = np.nonzero(A.entries)
    for u, v in zip(rows.tolist(), cols.tolist()):
        g = math.gcd(g, level[u] + 1 - level[v])
    return g or 1


@dataclass(frozen=True)
class Component:
    vertices: tuple
    period: int
    is_simple_cycle: bool
    reciprocal_char_poly: IntegerPolynomial
    spectral_radius: float

    @property
    def nontrivial(self):
        """Has at least one arrow (hence at least one cycle)."""
        return self.reciprocal_char_poly != 1


@dataclass(frozen=True)
class SCCDecomposition:
    graph: StateGraph
    components: tuple  # topological order of the condensation

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def component_of(self, vertex):
        for i, c in enumerate(self.components):
            if vertex in c.vertices:
                return i
        raise KeyError(vertex)

    def internal_arrows(self, i):
        vs = set(self.components[i].vertices)
        return [a for a in self.graph.arrows if a.source in vs and a.target in vs]


def scc_decompose(g: StateGraph) -> SCCDecomposition:
    A = adjacency(g)
    comps = []
    for verts in condensation_order(A):
        sub = A.submatrix(verts)
        out_deg = sub.entries.sum(axis=1)
        simple = bool(sub.entries.any()) and bool((out_deg == 1).all())
        poly = _checked_reciprocal(sub)
        radius = 1.0 if simple else spectral_radius(poly).radius
        comps.append(Component(tuple(verts), component_period(sub), simple, poly, radius))
    return SCCDecomposition(g, tuple(comps))


# ---------------------------------------------------------------------------
# det(I - tA)
# ---------------------------------------------------------------------------

def _power_traces(A: AdjacencyMatrix, M: int):
    """Exact Tr(A^m) for m = 1..M."""
    X = A.exact()
    P = X.copy()
    out = []
    for _ in range(M):
        out.append(int(np.trace(P)) if A.order else 0)
        P = P.dot(X)
    return out


def newton_reciprocal(A: AdjacencyMatrix) -> IntegerPolynomial:
    """det(I - tA) = 1 + c_1 t + ... + c_n t^n from power sums (Newton's identities)."""
    n = A.order
    p = _power_traces(A, n)
    c = [1]
    for k in range(1, n + 1):
        s = p[k - 1] + sum(c[i] * p[k - 1 - i] for i in range(1, k))
        q, r = divmod(-s, k)
        if r:
            raise InternalConsistencyError("Newton identity produced a non-integer coefficient")
        c.append(q)
    return IntegerPolynomial(c)


def bareiss_det(M) -> int:
    """Fraction-free Gaussian elimination determinant of an integer matrix."""
    a = [list(map(int, row)) for row in M]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def interpolated_reciprocal(A: AdjacencyMatrix) -> IntegerPolynomial:
    """det(I - tA) from exact determinants at t = 0..n and Lagrange interpolation."""
    n = A.order
    X = A.to_list()
    xs = list(range(n + 1))
    ys = [bareiss_det([[(1 if i == j else 0) - t * X[i][j] for j in range(n)]
                       for i in range(n)]) for t in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += ys[i] * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise InternalConsistencyError("interpolated determinant is not integral")
    return IntegerPolynomial(int(c) for c in coeffs)


def _checked_reciprocal(A: AdjacencyMatrix) -> IntegerPolynomial:
    poly = newton_reciprocal(A)
    other = interpolated_reciprocal(A)
    if poly != other:
        raise InternalConsistencyError(
            f"det(I - tA) mismatch: Newton {poly!r} vs interpolation {other!r}")
    return poly


def reciprocal_char_poly(A: AdjacencyMatrix) -> IntegerPolynomial:
    """det(I - tA) as the product of the per-SCC factors."""
    out = IntegerPolynomial.one()
    for verts in condensation_order(A):
        out = out * _checked_reciprocal(A.submatrix(verts))
    return out


# ---------------------------------------------------------------------------
# closed-walk counts
# ---------------------------------------------------------------------------

class BigIntSequence:
    """N_1, ..., N_M; indexing is 1-based (``seq[m]`` is N_m)."""

    def __init__(self, values, source="traces", traced=None):
        self.values = tuple(int(v) for v in values)
        self.source = source
        self.traced = len(self.values) if traced is None else traced

    def __len__(self):
        return len(self.values)

    def __getitem__(self, m):
        if isinstance(m, slice):
            raise TypeError("BigIntSequence does not support slicing; use .values")
        if m < 1:
            raise IndexError("N_m is defined for m >= 1")
        return self.values[m - 1]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return tuple(self) == tuple(other)

    def __repr__(self):
        return f"BigIntSequence({list(self.values)}, source={self.source!r})"


def recurrence_extend(reciprocal: IntegerPolynomial, start, M):
    """Extend power sums with p_m = -(c_1 p_{m-1} + ... + c_n p_{m-n})."""
    c = reciprocal.coefficients
    n = len(c) - 1
    vals = list(start)
    if len(vals) < n:
        raise PreconditionError("need at least deg(reciprocal) initial values")
    while len(vals) < M:
        m = len(vals) + 1
        vals.append(-sum(c[i] * vals[m - 1 - i] for i in range(1, n + 1)))
    return vals[:M]


def trace_powers(A: AdjacencyMatrix, M: int) -> BigIntSequence:
    """N_m = Tr(A^m) for m <= M.

    Traces are computed directly for m <= 2n and the rest follows from the
    Cayley-Hamilton recurrence; the two agree on n < m <= 2n or this raises.
    """
    if M < 1:
        raise PreconditionError("M must be positive")
    n = A.order
    direct = _power_traces(A, min(M, 2 * n)) if n else [0] * M
    if M <= len(direct):
        return BigIntSequence(direct, "traces")
    recip = reciprocal_char_poly(A)
    overlap = recurrence_extend(recip, direct[:n], len(direct))
    if overlap != direct:
        raise InternalConsistencyError("recurrence disagrees with traces")
    return BigIntSequence(recurrence_extend(recip, direct, M), "recurrence", traced=len(direct))


def closed_walks_bruteforce(g: StateGraph, m: int, cap: int = WALK_CAP) -> int:
    """Count closed walks of length m by depth-first enumeration."""
    if m < 1:
        raise PreconditionError("m must be positive")
    succ = [[] for _ in g.vertices]
    for a in g.arrows:
        succ[a.source].append(a.target)
    count = 0
    visited = 0
    for start in range(len(g.vertices)):
        stack = [(start, 0)]
        while stack:
            v, depth = stack.pop()
            visited += 1
            if visited > cap:
                raise ResourceLimitError(f"closed-walk enumeration exceeded {cap} steps")
            if depth == m:
                count += v == start
                continue
            for w in succ[v]:
                stack.append((w, depth + 1))
    return count


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: StateGraph, upper=False, name="state_graph") -> str:
    """Graphviz text; node labels use power notation, edge labels spell the label string."""
    lines = [f'digraph "{_dot_escape(name)}" {{']
    for i, v in enumerate(g.vertices):
        lines.append(f'  n{i} [label="{_dot_escape(format_word(v, upper=upper, powers=True))}"];')
    for a in g.arrows:
        lines.append(f'  n{a.source} -> n{a.target} '
                     f'[label="{_dot_escape(format_word(a.label, upper=upper))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
