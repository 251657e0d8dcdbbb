"""Basic tilting modules of a Dynkin path algebra, their order and tilting quiver.

Indecomposables get integer ids in the canonical order (total dimension, then
dimension vector).  A basic tilting module is the sorted tuple of the ids of
its n summands; over a hereditary algebra these are exactly the n-sets of
pairwise Ext-orthogonal indecomposables.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

from .ar import knit_indecomposables
from .errors import NotTilting
from .quiver import Quiver, injective_rep, projective_rep, simple_rep
from .representation import Representation, ext1_dim, hom_dim

__all__ = [
    "IndTable",
    "TiltingModule",
    "TiltingQuiver",
    "build_ind_table",
    "enumerate_tilting",
    "perp",
    "leq",
    "hasse",
    "hasse_from_perps",
    "exchange_quiver",
    "tilting_module",
]


@dataclass(frozen=True)
class IndTable:
    quiver: Quiver
    inds: tuple[Representation, ...]
    hom_dim: tuple[tuple[int, ...], ...]
    ext_dim: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.inds)

    def dims(self, k: int) -> tuple[int, ...]:
        return self.inds[k].dims

    def id_of(self, M: Representation | Sequence[int]) -> int:
        """Id of the indecomposable with this dimension vector (M must be indecomposable)."""
        dims = tuple(M.dims if isinstance(M, Representation) else M)
        for k, ind in enumerate(self.inds):
            if ind.dims == dims:
                return k
        raise KeyError(f"no indecomposable with dimension vector {dims}")

    def projective_id(self, i: int) -> int:
        return self.id_of(projective_rep(self.quiver, i))

    def injective_id(self, i: int) -> int:
        return self.id_of(injective_rep(self.quiver, i))

    def simple_id(self, i: int) -> int:
        return self.id_of(simple_rep(self.quiver, i))


def build_ind_table(q: Quiver) -> IndTable:
    inds = tuple(knit_indecomposables(q))
    hom = tuple(tuple(hom_dim(a, b) for b in inds) for a in inds)
    ext = tuple(tuple(ext1_dim(a, b) for b in inds) for a in inds)
    return IndTable(q, inds, hom, ext)


@dataclass(frozen=True, order=True)
class TiltingModule:
    ids: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ids", tuple(sorted(self.ids)))

    def __iter__(self):
        return iter(self.ids)

    def __len__(self) -> int:
        return len(self.ids)


def tilting_module(tbl: IndTable, ids: Iterable[int]) -> TiltingModule:
    """Validated constructor: n distinct, pairwise Ext-orthogonal summands."""
    ids = list(ids)
    n = tbl.quiver.n
    if len(set(ids)) != len(ids):
        raise NotTilting(f"repeated summand in {ids}")
    if len(ids) != n:
        raise NotTilting(f"{len(ids)} summands, a tilting module needs {n}")
    for i in ids:
        if not 0 <= i < len(tbl):
            raise NotTilting(f"unknown indecomposable id {i}")
    for i in ids:
        for j in ids:
            if tbl.ext_dim[i][j]:
                raise NotTilting(f"Ext^1({i}, {j}) != 0")
    return TiltingModule(tuple(ids))


@dataclass(frozen=True)
class TiltingQuiver:
    """Vertices, arrows (index pairs, larger -> smaller) and the order table.

    ``leq`` is None for quivers assembled without an order (transported ones).
    ``tags`` optionally labels each vertex.
    """

    vertices: tuple[Hashable, ...]
    arrows: tuple[tuple[int, int], ...]
    leq: tuple[tuple[bool, ...], ...] | None = None
    tags: tuple[str, ...] | None = None

    def edge_set(self) -> frozenset[tuple[Hashable, Hashable]]:
        return frozenset((self.vertices[u], self.vertices[v]) for u, v in self.arrows)

    def same_graph(self, other: TiltingQuiver) -> bool:
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def index(self, vertex: Hashable) -> int:
        return self.vertices.index(vertex)

    def sources(self) -> list[int]:
        targets = {v for _, v in self.arrows}
        return [k for k in range(len(self.vertices)) if k not in targets]

    def sinks(self) -> list[int]:
        origins = {u for u, _ in self.arrows}
        return [k for k in range(len(self.vertices)) if k not in origins]


def enumerate_tilting(tbl: IndTable) -> list[TiltingModule]:
    """All n-cliques of the Ext-compatibility relation, lexicographically sorted."""
    n, m = tbl.quiver.n, len(tbl)
    ext = tbl.ext_dim
    usable = [ext[k][k] == 0 for k in range(m)]
    compat = [[ext[a][b] == 0 and ext[b][a] == 0 for b in range(m)] for a in range(m)]
    out: list[TiltingModule] = []

    def extend(chosen: list[int], start: int) -> None:
        if len(chosen) == n:
            out.append(TiltingModule(tuple(chosen)))
            return
        for k in range(start, m - (n - len(chosen)) + 1):
            if usable[k] and all(compat[k][c] for c in chosen):
                chosen.append(k)
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    return sorted(out)


def perp(tbl: IndTable, T: TiltingModule) -> frozenset[int]:
    """Indecomposables Z with Ext^1(t, Z) = 0 for every summand t."""
    return frozenset(z for z in range(len(tbl)) if all(tbl.ext_dim[t][z] == 0 for t in T))


def leq(tbl: IndTable, T1: TiltingModule, T2: TiltingModule) -> bool:
    return perp(tbl, T1) <= perp(tbl, T2)


def hasse_from_perps(
    vertices: Sequence[Hashable], perps: Sequence[frozenset], tags: Sequence[str] | None = None
) -> TiltingQuiver:
    """Covering relation of u <= v iff perps[u] is a subset of perps[v].

    Arrow u -> v when v < u with nothing strictly between.
    """
    N = len(vertices)
    le = [[perps[u] <= perps[v] for v in range(N)] for u in range(N)]
    lt = [[le[u][v] and u != v for v in range(N)] for u in range(N)]
    arrows = []
    for u in range(N):
        for v in range(N):
            if lt[v][u] and not any(lt[v][w] and lt[w][u] for w in range(N)):
                arrows.append((u, v))
    return TiltingQuiver(
        tuple(vertices),
        tuple(arrows),
        tuple(tuple(r) for r in le),
        tuple(tags) if tags is not None else None,
    )


def hasse(tbl: IndTable, tilts: Sequence[TiltingModule]) -> TiltingQuiver:
    return hasse_from_perps(tilts, [perp(tbl, T) for T in tilts])


def exchange_quiver(tbl: IndTable, tilts: Sequence[TiltingModule]) -> TiltingQuiver:
    """Arrows T1 -> T2 between neighbours T1 = M + X, T2 = M + Y with Ext^1(Y, X) != 0."""
    arrows = []
    for a, b in combinations(range(len(tilts)), 2):
        s1, s2 = set(tilts[a].ids), set(tilts[b].ids)
        if len(s1 & s2) != len(s1) - 1:
            continue
        (x,), (y,) = s1 - s2, s2 - s1
        if tbl.ext_dim[y][x]:
            arrows.append((a, b))
        elif tbl.ext_dim[x][y]:
            arrows.append((b, a))
    return TiltingQuiver(tuple(tilts), tuple(sorted(arrows)))


def reachability(n: int, arrows: Iterable[tuple[int, int]]) -> list[set[int]]:
    """reach[u] = vertices reachable from u by a path of length >= 1."""
    out: dict[int, list[int]] = {u: [] for u in range(n)}
    for u, v in arrows:
        out[u].append(v)
    reach = []
    for u in range(n):
        seen: set[int] = set()
        stack = list(out[u])
        while stack:
            v = stack.pop()
            if v not in seen:
                seen.add(v)
                stack.extend(out[v])
        reach.append(seen)
    return reach


def is_convex(n: int, arrows: Iterable[tuple[int, int]], subset: Iterable[int]) -> tuple[bool, int | None]:
    """Every path between members of ``subset`` stays inside it; else a witness outside."""
    subset = set(subset)
    reach = reachability(n, arrows)
    for v in range(n):
        if v in subset:
            continue
        if any(v in reach[c] for c in subset) and any(c in reach[v] for c in subset):
            return False, v
    return True, None


def relabel(K: TiltingQuiver, keep: Callable[[int], bool], name: Callable[[int], Hashable]) -> set:
    """Arrows of K between kept vertices, renamed."""
    return {(name(u), name(v)) for u, v in K.arrows if keep(u) and keep(v)}
