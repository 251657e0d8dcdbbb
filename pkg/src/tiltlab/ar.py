"""Duality, transpose and the Auslander-Reiten translates tau = D Tr, tau^- = Tr D.

The transpose is computed from a minimal projective presentation
P1 --p--> P0 --> M --> 0: P0 is the projective cover of M (generators read off
the top of M) and P1 the projective cover of ker(P0 -> M).  Over a path
algebra Hom(P(u), Lambda) is the projective of the opposite quiver at u,
spanned at x by the paths x ~> u, and Hom(p, Lambda) acts by appending the
path components of p.  Tr M is its cokernel, a representation of Q^op.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import IterationCapExceeded, NotRepresentationFinite
from .linalg import Matrix, column_space, hstack, kernel_basis, rank
from .quiver import Quiver, is_representation_finite, paths_between, projective_rep
from .representation import Representation, Subrep, direct_sum, quotient

__all__ = ["dual", "transpose", "tau", "tau_inv", "knit_indecomposables", "ITERATION_CAP"]

ITERATION_CAP = 10_000


def dual(M: Representation) -> Representation:
    """D M = Hom_k(M, k) over the opposite quiver: same dims, transposed matrices."""
    return Representation(M.quiver.opposite(), M.dims, tuple(m.T for m in M.mats))


def _path_matrix(M: Representation, path: tuple[str, ...], start: int) -> Matrix:
    out = Matrix.identity(M.dim(start))
    for name in path:
        out = M.mat(name) @ out
    return out


def _top_generators(M: Representation, sub: tuple[Matrix, ...] | None = None) -> list[tuple[int, Matrix]]:
    """Elements (vertex, column vector) whose classes form a basis of the top.

    With ``sub`` given, works inside the subrepresentation spanned by those
    columns (coordinates stay those of M).
    """
    q = M.quiver
    if sub is None:
        sub = tuple(Matrix.identity(d) for d in M.dims)
    gens = []
    for v in q.vertices:
        incoming = [m @ sub[a.source - 1] for a, m in zip(q.arrows, M.mats) if a.target == v]
        chosen = column_space(hstack(incoming, rows=M.dim(v)))
        basis = sub[v - 1]
        for j in range(basis.cols):
            col = basis.select_columns([j])
            cand = hstack([chosen, col])
            if rank(cand) > chosen.cols:
                chosen = cand
                gens.append((v, col))
    return gens


def _cover_map(M: Representation, gens: list[tuple[int, Matrix]]) -> tuple[Representation, list[Matrix]]:
    """P0 = (+) P(v) over the generators and the vertexwise matrices of P0 -> M."""
    q = M.quiver
    P0 = direct_sum([projective_rep(q, v) for v, _ in gens], quiver=q)
    comps = []
    for w in q.vertices:
        cols = []
        for v, m in gens:
            for p in paths_between(q, v, w):
                cols.append(_path_matrix(M, p, v) @ m)
        comps.append(hstack(cols, rows=M.dim(w)))
    return P0, comps


def transpose(M: Representation) -> Representation:
    """Tr M, a representation of the opposite quiver; zero for projective M."""
    q = M.quiver
    qop = q.opposite()
    gens0 = _top_generators(M)
    P0, pi = _cover_map(M, gens0)
    kernel = tuple(kernel_basis(c) for c in pi)
    gens1 = _top_generators(P0, kernel)

    # block offsets of the generators of P0 inside (P0)_v
    def block(v: int) -> list[tuple[int, int, tuple[tuple[str, ...], ...]]]:
        out, off = [], 0
        for g, (u, _) in enumerate(gens0):
            ps = paths_between(q, u, v)
            out.append((g, off, ps))
            off += len(ps)
        return out

    # components c(g0, g1) of p: P1 -> P0 as {path u0 ~> v1: coefficient}
    coeff: list[list[dict[tuple[str, ...], Fraction]]] = []
    for v1, k in gens1:
        row = []
        for _, off, ps in block(v1):
            row.append({p: k[off + t, 0] for t, p in enumerate(ps) if k[off + t, 0]})
        coeff.append(row)

    def space(targets: list[int], x: int) -> list[tuple[int, tuple[str, ...]]]:
        return [(g, p) for g, u in enumerate(targets) for p in paths_between(q, x, u)]

    t1 = [v for v, _ in gens1]
    F1_basis = {x: space(t1, x) for x in q.vertices}
    F1_index = {x: {b: k for k, b in enumerate(F1_basis[x])} for x in q.vertices}

    mats = []
    for a in qop.arrows:  # a: w -> x in Q^op, a: x -> w in Q; q |-> a q
        w, x = a.source, a.target
        src, tgt = F1_basis[w], F1_index[x]
        rows = [[0] * len(src) for _ in range(len(tgt))]
        for c, (g, p) in enumerate(src):
            rows[tgt[(g, (a.name,) + p)]][c] = 1
        mats.append(Matrix.from_rows(rows, cols=len(src)))
    F1 = Representation(qop, tuple(len(F1_basis[x]) for x in q.vertices), tuple(mats))

    image = []
    for x in q.vertices:
        cols = []
        for g0, (u0, _) in enumerate(gens0):
            for path in paths_between(q, x, u0):
                col = [Fraction(0)] * F1.dim(x)
                for g1 in range(len(gens1)):
                    for p, c in coeff[g1][g0].items():
                        col[F1_index[x][(g1, path + p)]] += c
                cols.append(col)
        image.append(column_space(Matrix.from_columns(cols, F1.dim(x))) if cols else Matrix.zeros(F1.dim(x), 0))
    trM, _ = quotient(F1, Subrep(F1, tuple(image)))
    return trM


def tau(M: Representation) -> Representation:
    return dual(transpose(M))


def tau_inv(M: Representation) -> Representation:
    return transpose(dual(M))


def knit_indecomposables(q: Quiver) -> list[Representation]:
    """All indecomposables up to isomorphism, as tau^{-k} P(i), canonically sorted.

    Breadth first over k.  Each representative is the one first reached, so
    the matrices are deterministic.
    """
    if not is_representation_finite(q):
        raise NotRepresentationFinite(f"{q} is not of Dynkin type")
    seen: dict[tuple[int, ...], Representation] = {}
    level = [projective_rep(q, i) for i in q.vertices]
    for P in level:
        seen.setdefault(P.dims, P)
    while level:
        nxt = []
        for M in level:
            N = tau_inv(M)
            if N.is_zero() or N.dims in seen:
                continue
            seen[N.dims] = N
            nxt.append(N)
            if len(seen) > ITERATION_CAP:
                raise IterationCapExceeded(f"more than {ITERATION_CAP} indecomposables")
        level = nxt
    return sorted(seen.values(), key=lambda M: (M.total_dim, M.dims))
