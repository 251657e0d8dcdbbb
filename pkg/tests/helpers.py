"""Shared quivers, cached tables and the reference data for the A4 example."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from tiltlab.quiver import Quiver
from tiltlab.tilting import build_ind_table, enumerate_tilting, hasse


def linear(n: int) -> Quiver:
    """1 -> 2 -> ... -> n."""
    return Quiver.from_edges(n, [(i, i + 1) for i in range(1, n)])


def d4_subspace() -> Quiver:
    """Three outer vertices pointing at the centre 4."""
    return Quiver.from_edges(4, [(1, 4), (2, 4), (3, 4)])


def d4_orientations() -> list[Quiver]:
    out = []
    for flips in product((False, True), repeat=3):
        edges = [(4, v) if f else (v, 4) for v, f in zip((1, 2, 3), flips)]
        out.append(Quiver.from_edges(4, edges))
    return out


def kronecker() -> Quiver:
    return Quiver.from_edges(2, [(1, 2), (1, 2)])


QUIVERS = {
    "A1": lambda: linear(1),
    "A2": lambda: linear(2),
    "A3": lambda: linear(3),
    "A4": lambda: linear(4),
    "A5": lambda: linear(5),
    "D4": d4_subspace,
}

# the matrix of BB cases used throughout
MATRIX = ("A2", "A3", "A4", "A5", "D4")


@lru_cache(maxsize=None)
def table(name: str):
    return build_ind_table(QUIVERS[name]())


@lru_cache(maxsize=None)
def tilts(name: str):
    return enumerate_tilting(table(name))


@lru_cache(maxsize=None)
def lambda_quiver(name: str):
    return hasse(table(name), tilts(name))


# Tilting quiver of 1->2->3->4 as drawn, vertices numbered T0..T13.
A4_DRAWN_ARROWS = [
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 8), (2, 5), (2, 6), (3, 7), (3, 8), (4, 5), (4, 9),
    (5, 10), (6, 7), (6, 11), (7, 12), (8, 13), (9, 10), (9, 13), (10, 11), (11, 12), (13, 12),
]
# BB tilt at vertex 2
BB2_TT = {3, 7, 8, 12, 13}
BB2_TTF = {6, 11}
BB2_B0_ARROWS = {(3, 7), (3, 8), (7, 12), (8, 13), (13, 12), (6, 11), (7, 6), (12, 11)}
# T0 = P(1) + P(4) + I(1) + I(2)
EX2_TT = {7, 12}
EX2_TTF = {6, 9, 10, 11, 13}
EX2_B0_ARROWS = {(12, 13), (12, 11), (13, 9), (9, 10), (11, 10), (7, 6), (7, 12), (6, 11)}


@lru_cache(maxsize=None)
def a4_numbering() -> tuple[int, ...]:
    """numbering[k] = index in tilts("A4") of the drawn vertex T_k.

    Found as a directed-graph isomorphism from the drawn quiver to the computed
    Hasse diagram; it must be unique for the identification to mean anything.
    """
    drawn = nx.DiGraph(A4_DRAWN_ARROWS)
    K = lambda_quiver("A4")
    computed = nx.DiGraph()
    computed.add_nodes_from(range(len(K.vertices)))
    computed.add_edges_from(K.arrows)
    isos = list(DiGraphMatcher(drawn, computed).isomorphisms_iter())
    assert len(isos) == 1, f"{len(isos)} identifications"
    return tuple(isos[0][k] for k in range(14))


def drawn(k: int):
    """The computed tilting module that the drawing calls T_k."""
    return tilts("A4")[a4_numbering()[k]]


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}
