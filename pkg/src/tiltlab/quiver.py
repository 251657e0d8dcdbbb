"""Quivers, their text format, and the standard modules of the path algebra."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import QuiverParseError
from .linalg import Matrix
from .representation import Representation

__all__ = [
    "Arrow",
    "Quiver",
    "parse_quiver",
    "serialize_quiver",
    "paths_between",
    "projective_rep",
    "injective_rep",
    "simple_rep",
    "euler_form",
    "is_representation_finite",
    "dynkin_type",
]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver with vertices 1..n and named arrows."""

    n: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        object.__setattr__(self, "arrows", tuple(self.arrows))
        names = set()
        for a in self.arrows:
            if a.name in names:
                raise QuiverParseError(f"duplicate arrow name {a.name!r}")
            names.add(a.name)
            for v in (a.source, a.target):
                if not 1 <= v <= self.n:
                    raise QuiverParseError(f"arrow {a.name!r}: vertex {v} out of range 1..{self.n}")
            if a.source == a.target:
                raise QuiverParseError(f"arrow {a.name!r} is a loop")
        if _has_cycle(self.n, self.arrows):
            raise QuiverParseError("quiver has an oriented cycle")

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], prefix: str = "a") -> Quiver:
        """Arrows named a1, a2, ... in the order given."""
        return cls(n, tuple(Arrow(f"{prefix}{k + 1}", s, t) for k, (s, t) in enumerate(edges)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def opposite(self) -> Quiver:
        return Quiver(self.n, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def __str__(self) -> str:
        body = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(n={self.n}; {body})"


def _has_cycle(n: int, arrows: Sequence[Arrow]) -> bool:
    indeg = [0] * (n + 1)
    out: dict[int, list[int]] = defaultdict(list)
    for a in arrows:
        indeg[a.target] += 1
        out[a.source].append(a.target)
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen != n


def parse_quiver(text: str) -> Quiver:
    """Parse the line-oriented quiver format.

    ``#`` starts a comment line, exactly one ``vertices N`` line is required,
    and each ``arrow NAME SRC DST`` line adds an arrow.
    """
    n: int | None = None
    arrows: list[Arrow] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "vertices":
            if len(tok) != 2:
                raise QuiverParseError("expected 'vertices N'", lineno)
            if n is not None:
                raise QuiverParseError("second 'vertices' line", lineno)
            n = _parse_int(tok[1], lineno)
            if n < 0:
                raise QuiverParseError("vertex count must be non-negative", lineno)
        elif tok[0] == "arrow":
            if len(tok) != 4:
                raise QuiverParseError("expected 'arrow NAME SRC DST'", lineno)
            if n is None:
                raise QuiverParseError("'arrow' before 'vertices'", lineno)
            name, s, t = tok[1], _parse_int(tok[2], lineno), _parse_int(tok[3], lineno)
            if name in names:
                raise QuiverParseError(f"duplicate arrow name {name!r}", lineno)
            for v in (s, t):
                if not 1 <= v <= n:
                    raise QuiverParseError(f"vertex {v} out of range 1..{n}", lineno)
            if s == t:
                raise QuiverParseError(f"arrow {name!r} is a loop", lineno)
            names.add(name)
            arrows.append(Arrow(name, s, t))
        else:
            raise QuiverParseError(f"unknown keyword {tok[0]!r}", lineno)
    if n is None:
        raise QuiverParseError("missing 'vertices' line")
    return Quiver(n, tuple(arrows))


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise QuiverParseError(f"expected an integer, got {tok!r}", lineno) from None


def serialize_quiver(q: Quiver) -> str:
    lines = [f"vertices {q.n}"]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in q.arrows]
    return "\n".join(lines) + "\n"


# -- paths --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _paths_from(q: Quiver, i: int) -> dict[int, tuple[tuple[str, ...], ...]]:
    by_target: dict[int, list[tuple[str, ...]]] = defaultdict(list)
    stack: list[tuple[int, tuple[str, ...]]] = [(i, ())]
    while stack:
        v, p = stack.pop()
        by_target[v].append(p)
        for a in q.arrows:
            if a.source == v:
                stack.append((a.target, p + (a.name,)))
    return {v: tuple(sorted(ps)) for v, ps in by_target.items()}


def paths_between(q: Quiver, i: int, j: int) -> tuple[tuple[str, ...], ...]:
    """Paths i ~> j as arrow-name tuples, sorted lexicographically (trivial path first)."""
    return _paths_from(q, i).get(j, ())


def _check_vertex(q: Quiver, i: int) -> None:
    if not 1 <= i <= q.n:
        raise ValueError(f"vertex {i} out of range 1..{q.n}")


def projective_rep(q: Quiver, i: int) -> Representation:
    """P(i): basis at j is the set of paths i ~> j, arrows act by concatenation."""
    _check_vertex(q, i)
    basis = {j: paths_between(q, i, j) for j in q.vertices}
    mats = {}
    for a in q.arrows:
        src, tgt = basis[a.source], basis[a.target]
        index = {p: k for k, p in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for c, p in enumerate(src):
            rows[index[p + (a.name,)]][c] = 1
        mats[a.name] = Matrix.from_rows(rows, cols=len(src))
    return Representation(q, tuple(len(basis[j]) for j in q.vertices), mats)


def injective_rep(q: Quiver, i: int) -> Representation:
    """I(i): at j the dual of the paths j ~> i, in the dual path basis."""
    _check_vertex(q, i)
    basis = {j: paths_between(q, j, i) for j in q.vertices}
    mats = {}
    for a in q.arrows:
        src, tgt = basis[a.source], basis[a.target]
        index = {p: k for k, p in enumerate(src)}
        rows = [[0] * len(src) for _ in tgt]
        # a functional phi on paths source ~> i goes to (q -> phi(a q))
        for r, p in enumerate(tgt):
            rows[r][index[(a.name,) + p]] = 1
        mats[a.name] = Matrix.from_rows(rows, cols=len(src))
    return Representation(q, tuple(len(basis[j]) for j in q.vertices), mats)


def simple_rep(q: Quiver, i: int) -> Representation:
    _check_vertex(q, i)
    return Representation.zero_maps(q, tuple(1 if j == i else 0 for j in q.vertices))


def euler_form(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """<d, e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j."""
    if len(d) != q.n or len(e) != q.n:
        raise ValueError(f"dimension vectors must have length {q.n}")
    return sum(x * y for x, y in zip(d, e)) - sum(d[a.source - 1] * e[a.target - 1] for a in q.arrows)


# -- Dynkin guard ---------------------------------------------------------------


def dynkin_type(q: Quiver) -> list[str] | None:
    """Dynkin labels of the connected components, or None if some component is not ADE."""
    adj: dict[int, list[int]] = defaultdict(list)
    for a in q.arrows:
        adj[a.source].append(a.target)
        adj[a.target].append(a.source)
    seen: set[int] = set()
    labels = []
    for start in q.vertices:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        label = _component_type(comp, adj)
        if label is None:
            return None
        labels.append(label)
    return labels


def _component_type(comp: list[int], adj: dict[int, list[int]]) -> str | None:
    nv = len(comp)
    ne = sum(len(adj[v]) for v in comp) // 2
    if ne != nv - 1:
        return None  # not a tree (includes multiple arrows)
    degrees = {v: len(adj[v]) for v in comp}
    branch = [v for v in comp if degrees[v] >= 3]
    if not branch:
        return f"A{nv}"
    if len(branch) > 1 or degrees[branch[0]] > 3:
        return None
    centre = branch[0]
    arms = []
    for w in adj[centre]:
        length, prev, cur = 1, centre, w
        while degrees[cur] == 2:
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            prev, cur = cur, nxt
            length += 1
        arms.append(length + 1)
    p, qq, r = sorted(arms)
    if p * qq + qq * r + r * p <= p * qq * r:  # 1/p + 1/q + 1/r <= 1
        return None
    if p == 2 and qq == 2:
        return f"D{nv}"
    return f"E{nv}"


def is_representation_finite(q: Quiver) -> bool:
    return dynkin_type(q) is not None
