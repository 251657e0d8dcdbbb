"""Representations of a quiver and the linear algebra of their morphisms.

A representation assigns a Q-vector space of dimension ``dims[v-1]`` to every
vertex v and a matrix of shape ``dim(target) x dim(source)`` to every arrow.
Hom and Ext^1 come from the same linear map

    d: (+)_v Hom(M_v, N_v) --> (+)_{a: i->j} Hom(M_i, N_j),   (f_v) |-> N_a f_i - f_j M_a

whose kernel is Hom(M, N) and whose cokernel is Ext^1(M, N) (it is Hom(-, N)
applied to the standard projective resolution of M over the path algebra).
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING

from .errors import DecompositionError, QuiverMismatch
from .linalg import (
    Matrix,
    block_diag,
    column_space,
    hstack,
    image_complement_change_of_basis,
    kernel_basis,
    rank,
    solve,
    vstack,
)

if TYPE_CHECKING:
    from .quiver import Quiver

__all__ = [
    "Representation",
    "Morphism",
    "Subrep",
    "Ext1",
    "hom_basis",
    "hom_dim",
    "ext1",
    "ext1_dim",
    "extension_from_cocycle",
    "is_iso",
    "decompose",
    "trace",
    "reject",
    "quotient",
    "direct_sum",
    "is_generated_by",
    "universal_extension",
    "trace_sequence",
    "reject_sequence",
]


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    mats: tuple[Matrix, ...]

    def __init__(self, quiver: Quiver, dims: Sequence[int], mats: Mapping[str, Matrix] | Sequence[Matrix]):
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.n:
            raise ValueError(f"{len(dims)} dimensions for a quiver with {quiver.n} vertices")
        if any(d < 0 for d in dims):
            raise ValueError("negative dimension")
        if isinstance(mats, Mapping):
            missing = [a.name for a in quiver.arrows if a.name not in mats]
            if missing:
                raise ValueError(f"no matrix for arrows {missing}")
            mats = tuple(mats[a.name] for a in quiver.arrows)
        else:
            mats = tuple(mats)
        if len(mats) != len(quiver.arrows):
            raise ValueError("one matrix per arrow is required")
        for a, m in zip(quiver.arrows, mats):
            want = (dims[a.target - 1], dims[a.source - 1])
            if m.shape != want:
                raise ValueError(f"arrow {a.name}: matrix is {m.shape}, expected {want}")
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mats", mats)

    @classmethod
    def zero_maps(cls, quiver: Quiver, dims: Sequence[int]) -> Representation:
        return cls(
            quiver,
            dims,
            tuple(Matrix.zeros(dims[a.target - 1], dims[a.source - 1]) for a in quiver.arrows),
        )

    @classmethod
    def zero(cls, quiver: Quiver) -> Representation:
        return cls.zero_maps(quiver, (0,) * quiver.n)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def mat(self, name: str) -> Matrix:
        for a, m in zip(self.quiver.arrows, self.mats):
            if a.name == name:
                return m
        raise KeyError(name)

    def identity(self) -> Morphism:
        return Morphism(self, self, tuple(Matrix.identity(d) for d in self.dims))

    def __repr__(self) -> str:
        return f"Representation(dims={self.dims})"


@dataclass(frozen=True)
class Morphism:
    """Vertexwise matrices commuting with every arrow."""

    source: Representation
    target: Representation
    comps: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        src, tgt = self.source, self.target
        if src.quiver != tgt.quiver:
            raise QuiverMismatch("morphism between representations of different quivers")
        object.__setattr__(self, "comps", tuple(self.comps))
        for v, c in zip(src.quiver.vertices, self.comps):
            if c.shape != (tgt.dim(v), src.dim(v)):
                raise ValueError(f"component at vertex {v} has shape {c.shape}")
        for a, ms, mt in zip(src.quiver.arrows, src.mats, tgt.mats):
            if mt @ self.comps[a.source - 1] != self.comps[a.target - 1] @ ms:
                raise ValueError(f"square for arrow {a.name} does not commute")

    def __matmul__(self, other: Morphism) -> Morphism:
        """Composition ``self o other``."""
        return Morphism(other.source, self.target, tuple(g @ f for g, f in zip(self.comps, other.comps)))

    def __add__(self, other: Morphism) -> Morphism:
        return Morphism(self.source, self.target, tuple(f + g for f, g in zip(self.comps, other.comps)))

    def scale(self, c: object) -> Morphism:
        return Morphism(self.source, self.target, tuple(f.scale(c) for f in self.comps))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and all(rank(c) == c.rows for c in self.comps)

    def is_nilpotent(self) -> bool:
        d = self.source.total_dim
        return all(c.power(d).is_zero() for c in self.comps)

    def image(self) -> Subrep:
        return Subrep(self.target, tuple(column_space(c) for c in self.comps))

    def kernel(self) -> Subrep:
        return Subrep(self.source, tuple(kernel_basis(c) for c in self.comps))


@dataclass(frozen=True)
class Subrep:
    """Subrepresentation given by a spanning set of columns at each vertex."""

    ambient: Representation
    bases: tuple[Matrix, ...]

    def __post_init__(self) -> None:
        amb = self.ambient
        bases = tuple(column_space(b) if b.cols else b for b in self.bases)
        object.__setattr__(self, "bases", bases)
        for v, b in zip(amb.quiver.vertices, bases):
            if b.rows != amb.dim(v):
                raise ValueError(f"basis at vertex {v} lives in the wrong dimension")
        for a, m in zip(amb.quiver.arrows, amb.mats):
            img = m @ bases[a.source - 1]
            if img.cols and solve(bases[a.target - 1], img) is None:
                raise ValueError(f"subspace is not stable under arrow {a.name}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(b.cols for b in self.bases)

    def is_zero(self) -> bool:
        return sum(self.dims) == 0

    def is_full(self) -> bool:
        return self.dims == self.ambient.dims

    def as_representation(self) -> Representation:
        amb = self.ambient
        mats = []
        for a, m in zip(amb.quiver.arrows, amb.mats):
            bs, bt = self.bases[a.source - 1], self.bases[a.target - 1]
            x = solve(bt, m @ bs)
            assert x is not None
            mats.append(x)
        return Representation(amb.quiver, self.dims, tuple(mats))

    def inclusion(self) -> Morphism:
        return Morphism(self.as_representation(), self.ambient, self.bases)


# -- Hom and Ext ----------------------------------------------------------------


def _check_same_quiver(M: Representation, N: Representation) -> None:
    if M.quiver != N.quiver:
        raise QuiverMismatch("representations live over different quivers")


def _hom_system(M: Representation, N: Representation) -> Matrix:
    """Matrix of d (see module docstring); columns = unknown entries of (f_v)."""
    q = M.quiver
    offsets = []
    off = 0
    for v in q.vertices:
        offsets.append(off)
        off += N.dim(v) * M.dim(v)
    ncols = off
    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for a, ma, na in zip(q.arrows, M.mats, N.mats):
        s, t = a.source, a.target
        ms, mt = M.dim(s), M.dim(t)
        ns, nt = N.dim(s), N.dim(t)
        os_, ot = offsets[s - 1], offsets[t - 1]
        for r in range(nt):
            for c in range(ms):
                row = [zero] * ncols
                # (N_a f_s)[r, c] = sum_k N_a[r, k] f_s[k, c]
                for k in range(ns):
                    x = na[r, k]
                    if x:
                        row[os_ + k * ms + c] += x
                # (f_t M_a)[r, c] = sum_k f_t[r, k] M_a[k, c]
                for k in range(mt):
                    x = ma[k, c]
                    if x:
                        row[ot + r * mt + k] -= x
                rows.append(row)
    return Matrix.from_rows(rows, cols=ncols) if rows else Matrix.zeros(0, ncols)


def _unflatten(M: Representation, N: Representation, vec: Sequence[Fraction]) -> tuple[Matrix, ...]:
    comps = []
    off = 0
    for v in M.quiver.vertices:
        r, c = N.dim(v), M.dim(v)
        comps.append(Matrix(r, c, tuple(vec[off:off + r * c])))
        off += r * c
    return tuple(comps)


def hom_basis(M: Representation, N: Representation) -> list[Morphism]:
    """Basis of Hom(M, N): the kernel basis of the commuting-square system."""
    _check_same_quiver(M, N)
    ker = kernel_basis(_hom_system(M, N))
    return [Morphism(M, N, _unflatten(M, N, ker.column(j))) for j in range(ker.cols)]


def hom_dim(M: Representation, N: Representation) -> int:
    _check_same_quiver(M, N)
    sysm = _hom_system(M, N)
    return sysm.cols - rank(sysm)


@dataclass(frozen=True)
class Ext1:
    """dim Ext^1(M, N) and cocycle representatives of a basis.

    Each cocycle is a tuple of matrices ``eta_a`` (one per arrow a: i->j,
    shape dim N_j x dim M_i); the extension it classifies has middle term
    ``N_v (+) M_v`` with arrow matrices ``[[N_a, eta_a], [0, M_a]]``.
    """

    dim: int
    cocycles: tuple[tuple[Matrix, ...], ...]
    source: Representation
    target: Representation


def ext1(M: Representation, N: Representation) -> Ext1:
    _check_same_quiver(M, N)
    q = M.quiver
    sysm = _hom_system(M, N)
    _, inclusion = image_complement_change_of_basis(sysm, sysm.rows)
    cocycles = []
    for j in range(inclusion.cols):
        col = inclusion.column(j)
        etas = []
        off = 0
        for a in q.arrows:
            r, c = N.dim(a.target), M.dim(a.source)
            etas.append(Matrix(r, c, tuple(col[off:off + r * c])))
            off += r * c
        cocycles.append(tuple(etas))
    return Ext1(inclusion.cols, tuple(cocycles), M, N)


def ext1_dim(M: Representation, N: Representation) -> int:
    _check_same_quiver(M, N)
    sysm = _hom_system(M, N)
    return sysm.rows - rank(sysm)


def extension_from_cocycle(M: Representation, N: Representation, eta: Sequence[Matrix]) -> Representation:
    """Middle term E of 0 -> N -> E -> M -> 0 classified by the cocycle eta."""
    q = M.quiver
    mats = []
    for a, ma, na, e in zip(q.arrows, M.mats, N.mats, eta):
        top = hstack([na, e])
        bottom = hstack([Matrix.zeros(ma.rows, na.cols), ma])
        mats.append(vstack([top, bottom]))
    return Representation(q, tuple(x + y for x, y in zip(N.dims, M.dims)), tuple(mats))


# -- sums, traces, rejects, quotients ------------------------------------------------


def direct_sum(parts: Sequence[Representation], quiver: Quiver | None = None) -> Representation:
    if not parts:
        if quiver is None:
            raise ValueError("direct sum of nothing needs the quiver")
        return Representation.zero(quiver)
    q = parts[0].quiver
    for p in parts[1:]:
        _check_same_quiver(parts[0], p)
    dims = tuple(sum(p.dims[k] for p in parts) for k in range(q.n))
    mats = tuple(block_diag([p.mats[k] for p in parts]) for k in range(len(q.arrows)))
    return Representation(q, dims, mats)


def trace(U: Representation, M: Representation) -> Subrep:
    """Tr_M(U): the sum of the images of all maps U -> M."""
    homs = hom_basis(U, M)
    bases = []
    for k, v in enumerate(M.quiver.vertices):
        cols = hstack([f.comps[k] for f in homs], rows=M.dim(v))
        bases.append(column_space(cols))
    return Subrep(M, tuple(bases))


def reject(U: Representation, M: Representation) -> Subrep:
    """Rej_M(U): the intersection of the kernels of all maps M -> U."""
    homs = hom_basis(M, U)
    bases = []
    for k, v in enumerate(M.quiver.vertices):
        stacked = vstack([f.comps[k] for f in homs], cols=M.dim(v))
        bases.append(kernel_basis(stacked))
    return Subrep(M, tuple(bases))


def quotient(M: Representation, W: Subrep) -> tuple[Representation, Morphism]:
    """M / W together with the canonical projection M -> M / W."""
    if W.ambient != M:
        raise ValueError("subrepresentation of a different module")
    q = M.quiver
    projs, incls = [], []
    for v, b in zip(q.vertices, W.bases):
        p, i = image_complement_change_of_basis(b, M.dim(v))
        projs.append(p)
        incls.append(i)
    mats = tuple(projs[a.target - 1] @ m @ incls[a.source - 1] for a, m in zip(q.arrows, M.mats))
    Q = Representation(q, tuple(p.rows for p in projs), mats)
    return Q, Morphism(M, Q, tuple(projs))


def is_generated_by(M: Representation, X: Representation) -> bool:
    """True iff M is a quotient of a sum of copies of X (Tr_M X = M)."""
    return trace(X, M).is_full()


def trace_sequence(X: Representation, Y: Representation) -> tuple[Representation, Representation, Morphism]:
    """0 -> Tr_Y X -> Y -> Y / Tr_Y X -> 0, returned as (Tr_Y X, Y / Tr_Y X, projection)."""
    w = trace(X, Y)
    quo, proj = quotient(Y, w)
    return w.as_representation(), quo, proj


def reject_sequence(Y: Representation, X: Representation) -> tuple[Representation, Representation, Morphism]:
    """0 -> Rej_X Y -> X -> X / Rej_X Y -> 0, returned as (Rej_X Y, X / Rej_X Y, projection)."""
    w = reject(Y, X)
    quo, proj = quotient(X, w)
    return w.as_representation(), quo, proj


def universal_extension(N: Representation, U: Representation) -> tuple[Representation, int]:
    """Middle term M of 0 -> U^r -> M -> N -> 0 with r = dim Ext^1(N, U).

    The class of the sequence is the tuple of a cocycle basis of Ext^1(N, U),
    so the connecting map Hom(U^r, U) -> Ext^1(N, U) sends the k-th
    projection to the k-th basis class and is surjective.  This is the pushout
    of the standard presentation of N along the r cocycles.
    """
    _check_same_quiver(N, U)
    e = ext1(N, U)
    r = e.dim
    if r == 0:
        return N, 0
    Ur = direct_sum([U] * r)
    eta = []
    for k in range(len(N.quiver.arrows)):
        eta.append(vstack([c[k] for c in e.cocycles]))
    return extension_from_cocycle(N, Ur, eta), r


# -- Krull-Schmidt ----------------------------------------------------------------


def _fitting_split(M: Representation, phi: Morphism) -> tuple[Representation, Representation] | None:
    """M = Im(phi^d) (+) Ker(phi^d) when both are nonzero, else None."""
    d = M.total_dim
    powers = [c.power(d) for c in phi.comps]
    images = tuple(column_space(p) for p in powers)
    kernels = tuple(kernel_basis(p) for p in powers)
    k = sum(b.cols for b in kernels)
    if k == 0 or k == d:
        return None
    return Subrep(M, images).as_representation(), Subrep(M, kernels).as_representation()


def _candidates(basis: list[Morphism], ident: Morphism, bound: int) -> Iterator[Morphism]:
    yield from basis
    coeffs = [c for k in range(1, bound + 1) for c in (k, -k)]
    for phi in basis:
        for c in coeffs:
            yield phi + ident.scale(-c)
    for f, g in combinations(basis, 2):
        for a in coeffs:
            for b in coeffs:
                yield f.scale(a) + g.scale(b)


def _split(M: Representation) -> list[Representation]:
    from .quiver import is_representation_finite

    if M.is_zero():
        return []
    end = hom_basis(M, M)
    if len(end) == 1:
        return [M]
    for phi in _candidates(end, M.identity(), M.total_dim + 1):
        parts = _fitting_split(M, phi)
        if parts is not None:
            return _split(parts[0]) + _split(parts[1])
    if is_representation_finite(M.quiver):
        # over a Dynkin quiver dim End > 1 forces a proper summand
        raise DecompositionError(f"no splitting endomorphism found for {M!r}")
    return [M]


def _indecomposables_iso(A: Representation, B: Representation) -> bool:
    from .quiver import is_representation_finite

    if A.dims != B.dims:
        return False
    if is_representation_finite(A.quiver):
        return True  # one indecomposable per positive root
    # End(A) is local: A ~ B iff some g o f is invertible for basis maps f, g
    fs, gs = hom_basis(A, B), hom_basis(B, A)
    return any(not (g @ f).is_nilpotent() for f in fs for g in gs)


def decompose(M: Representation) -> list[tuple[Representation, int]]:
    """Indecomposable summands of M with multiplicities (Fitting decomposition)."""
    groups: list[list[Representation]] = []
    for part in _split(M):
        for g in groups:
            if _indecomposables_iso(g[0], part):
                g.append(part)
                break
        else:
            groups.append([part])
    return [(g[0], len(g)) for g in groups]


def is_iso(M: Representation, N: Representation) -> bool:
    if M.quiver != N.quiver or M.dims != N.dims:
        return False
    if M == N:
        return True
    left, right = decompose(M), decompose(N)
    if len(left) != len(right):
        return False
    unmatched = list(right)
    for A, m in left:
        for idx, (B, k) in enumerate(unmatched):
            if k == m and _indecomposables_iso(A, B):
                del unmatched[idx]
                break
        else:
            return False
    return True
