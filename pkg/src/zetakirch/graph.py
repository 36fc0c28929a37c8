"""Weighted simple graphs, their arc tables and the matrices W, D_w, L (and A, D, Q)."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import as_rational
from .errors import ParseError, ValidationError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"not a rational literal: {token!r}")
    value = Fraction(token)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ValueError("zero denominator")
    return value


@dataclass(frozen=True)
class WeightedGraph:
    """Connected simple graph on vertices 0..n-1 with symmetric nonzero rational weights.

    ``edges`` keeps the input order; each edge is stored with i < j.  Arc 2k is
    edge k oriented i -> j and arc 2k+1 is its inverse.
    """

    n: int
    edges: tuple[tuple[int, int, Fraction], ...]
    _adj: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("a graph needs at least 2 vertices")
        norm = []
        seen = set()
        for idx, e in enumerate(self.edges):
            i, j, w = e
            w = as_rational(w)
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValidationError(f"edge {idx}: vertex out of range")
            if i == j:
                raise ValidationError(f"edge {idx}: loop at vertex {i + 1}")
            if w == 0:
                raise ValidationError(f"edge {idx}: zero weight")
            i, j = min(i, j), max(i, j)
            if (i, j) in seen:
                raise ValidationError(f"edge {idx}: repeated edge {i + 1} {j + 1}")
            seen.add((i, j))
            norm.append((i, j, w))
        object.__setattr__(self, "edges", tuple(norm))
        adj: dict[int, dict[int, Fraction]] = {v: {} for v in range(self.n)}
        for i, j, w in norm:
            adj[i][j] = w
            adj[j][i] = w
        object.__setattr__(self, "_adj", adj)
        if not self.is_connected():
            raise ValidationError("graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> dict[int, Fraction]:
        return self._adj[v]

    def weight(self, i: int, j: int) -> Fraction:
        return self._adj[i].get(j, Fraction(0))

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for x in self._adj[v]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == self.n

    @property
    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i, j, _ in self.edges:
            out.append((i, j))
            out.append((j, i))
        return out

    @staticmethod
    def inverse_arc(e: int) -> int:
        return e ^ 1

    def arc_weight(self, e: int) -> Fraction:
        return self.edges[e >> 1][2]

    def degrees(self) -> list[int]:
        return [len(self._adj[v]) for v in range(self.n)]

    def weighted_degrees(self) -> list[Fraction]:
        return [sum(self._adj[v].values(), Fraction(0)) for v in range(self.n)]

    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def is_unweighted(self) -> bool:
        return all(w == 1 for _, _, w in self.edges)

    def all_positive(self) -> bool:
        return all(w > 0 for _, _, w in self.edges)

    def betti_number(self) -> int:
        return self.m - self.n + 1

    def with_unit_weights(self) -> "WeightedGraph":
        return WeightedGraph(self.n, tuple((i, j, Fraction(1)) for i, j, _ in self.edges))


@dataclass(frozen=True)
class MatrixBundle:
    W: list[list[Fraction]]
    D_w: list[list[Fraction]]
    L: list[list[Fraction]]
    total_weight: Fraction

    @property
    def n(self) -> int:
        return len(self.W)

    @property
    def Q(self) -> list[list[Fraction]]:
        """D_w - I."""
        return [[self.D_w[i][j] - (i == j) for j in range(self.n)] for i in range(self.n)]

    def diag(self) -> list[Fraction]:
        return [self.D_w[i][i] for i in range(self.n)]


def _bundle(n: int, edges: Iterable[tuple[int, int, Fraction]]) -> MatrixBundle:
    W = [[Fraction(0)] * n for _ in range(n)]
    total = Fraction(0)
    for i, j, w in edges:
        W[i][j] = W[j][i] = w
        total += w
    D = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = sum(W[i], Fraction(0))
    L = [[D[i][j] - W[i][j] for j in range(n)] for i in range(n)]
    return MatrixBundle(W, D, L, total)


def matrices(g: WeightedGraph) -> MatrixBundle:
    """W, D_w, L = D_w - W and w(G) for a weighted graph."""
    return _bundle(g.n, g.edges)


def unweighted_view(g: WeightedGraph) -> MatrixBundle:
    """A, D and the combinatorial Laplacian, in MatrixBundle form (W := A, D_w := D)."""
    return _bundle(g.n, ((i, j, Fraction(1)) for i, j, _ in g.edges))


# --- .wgr files -------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(text: str | bytes) -> WeightedGraph:
    """Parse the ``.wgr`` text format.  Vertices are 1-based in the file."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("graph file is not UTF-8") from exc
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("expected header 'n m'", lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 2:
        raise ValidationError("a graph needs at least 2 vertices", lineno)
    edges = []
    seen: dict[tuple[int, int], int] = {}
    last = lineno
    for lineno, line in lines:
        last = lineno
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edge lines", lineno)
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 'i j w'", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex indices must be integers", lineno) from None
        try:
            w = parse_rational(parts[2])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight {parts[2]!r}", lineno) from None
        if i == j:
            raise ValidationError(f"loop at vertex {i}", lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValidationError(f"vertex out of range 1..{n}", lineno)
        if i > j:
            raise ValidationError("edge endpoints must satisfy i < j", lineno)
        if w == 0:
            raise ValidationError("zero weight", lineno)
        if (i, j) in seen:
            raise ValidationError(f"repeated edge {i} {j} (first on line {seen[(i, j)]})", lineno)
        seen[(i, j)] = lineno
        edges.append((i - 1, j - 1, w))
    if len(edges) != m:
        raise ParseError(f"declared {m} edges, found {len(edges)}", last)
    try:
        return WeightedGraph(n, tuple(edges))
    except ValidationError as exc:
        raise ValidationError(str(exc), last) from None


def to_wgr(g: WeightedGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    out.extend(f"{i + 1} {j + 1} {w}" for i, j, w in g.edges)
    return "\n".join(out) + "\n"


# --- standard families --------------------------------------------------------


def complete_graph(n: int, weights: Sequence | None = None) -> WeightedGraph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    ws = weights or [1] * len(pairs)
    return WeightedGraph(n, tuple((i, j, Fraction(w)) for (i, j), w in zip(pairs, ws)))


def path_graph(n: int, weights: Sequence | None = None) -> WeightedGraph:
    ws = weights or [1] * (n - 1)
    return WeightedGraph(n, tuple((i, i + 1, Fraction(w)) for i, w in zip(range(n - 1), ws)))


def cycle_graph(n: int, weights: Sequence | None = None) -> WeightedGraph:
    ws = weights or [1] * n
    pairs = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return WeightedGraph(n, tuple((i, j, Fraction(w)) for (i, j), w in zip(pairs, ws)))


def complete_bipartite(a: int, b: int) -> WeightedGraph:
    return WeightedGraph(a + b, tuple((i, a + j, Fraction(1)) for i in range(a) for j in range(b)))


WEIGHT_POOL = tuple(Fraction(x) for x in ("1", "-1", "1/2", "-1/2", "2", "-2", "3", "1/3", "5"))
POSITIVE_POOL = tuple(w for w in WEIGHT_POOL if w > 0)


def random_graph(
    rng: random.Random,
    n_min: int = 2,
    n_max: int = 7,
    m_max: int | None = None,
    weights: Sequence[Fraction] = WEIGHT_POOL,
    min_extra: int = 0,
) -> WeightedGraph:
    """Random connected graph: a random spanning tree plus random extra edges.

    ``min_extra`` forces at least that many edges beyond the tree (so
    ``min_extra=1`` gives m >= n).
    """
    while True:
        n = rng.randint(n_min, n_max)
        pairs_all = [(i, j) for i in range(n) for j in range(i + 1, n)]
        cap = len(pairs_all) if m_max is None else min(m_max, len(pairs_all))
        if cap - (n - 1) >= min_extra:
            break
    order = list(range(n))
    rng.shuffle(order)
    tree = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        tree.add((min(a, b), max(a, b)))
    rest = [p for p in pairs_all if p not in tree]
    extra = rng.randint(min(min_extra, cap - (n - 1)), cap - (n - 1))
    chosen = sorted(tree) + rng.sample(rest, extra)
    rng.shuffle(chosen)
    return WeightedGraph(n, tuple((i, j, rng.choice(weights)) for i, j in chosen))
