"""Tilting over an algebra tilted from a Dynkin path algebra.

Fix a tilting module T0 over Lambda and let B0 = End(T0).  Over a hereditary
Lambda the torsion pair (T(T0), F(T0)) splits: every indecomposable lies in
T = {Ext^1(T0, -) = 0} or in F = {Hom(T0, -) = 0}.  The indecomposable
B0-modules are then H(M) = Hom(T0, M) for M in T and E(X) = Ext^1(T0, X) for X
in F, and their Hom/Ext groups are Lambda-side groups (see ``b_ext_dim``).
B0-modules are kept in this symbolic form throughout.

The map ``phi`` sends a Lambda tilting module T = Y0 + X0 (Y0 in T, X0 in F) to
the B0 tilting module H(Y0 / Tr_{Y0} X0) + E(X0).  When T0 = P[i] + tau^- S(i)
(all projectives but P(i), plus the inverse translate of a non-injective simple)
``transport_construct`` builds the B0 tilting quiver from the Lambda one, and
``b_hasse`` computes the same quiver directly from the order on B0 tilting
modules, so the two can be compared.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .ar import tau_inv
from .errors import (
    AdmissibilityViolation,
    CogenerationViolation,
    NotBB,
    NotInScope,
    NotTilting,
    SimpleIsInjective,
    TransportError,
)
from .quiver import injective_rep, projective_rep, simple_rep
from .representation import (
    Representation,
    decompose,
    direct_sum,
    is_generated_by,
    quotient,
    reject,
    trace,
    universal_extension,
)
from .tilting import (
    IndTable,
    TiltingModule,
    TiltingQuiver,
    enumerate_tilting,
    hasse,
    hasse_from_perps,
    is_convex,
    tilting_module,
)

__all__ = [
    "GeneralTiltData",
    "BBTiltData",
    "BModule",
    "Symbol",
    "make_bb_tilt",
    "make_general_tilt",
    "is_apr",
    "classify_torsion",
    "partition_tilting",
    "is_admissible",
    "phi",
    "phi_reject",
    "phi_both",
    "phi_inverse",
    "b_symbols",
    "b_ext_dim",
    "b_is_tilting",
    "b_enumerate_tilting",
    "b_hasse",
    "transport_construct",
    "PropertyCheck",
    "verify_tilt_properties",
    "BBReport",
    "run_bb",
    "TiltedReport",
    "run_tilted",
]

TORSION, TORSIONFREE, NEITHER = "T", "F", "N"

# ("H", id) stands for Hom(T0, M_id), ("E", id) for Ext^1(T0, X_id)
Symbol = tuple[str, int]


# -- tilt data ----------------------------------------------------------------


@dataclass(frozen=True)
class GeneralTiltData:
    table: IndTable
    t0: TiltingModule
    torsion_class: tuple[str, ...]

    @property
    def t0_ids(self) -> tuple[int, ...]:
        return self.t0.ids

    @property
    def n(self) -> int:
        return self.table.quiver.n

    def ids_of(self, cls: str) -> list[int]:
        return [k for k, c in enumerate(self.torsion_class) if c == cls]


@dataclass(frozen=True)
class BBTiltData(GeneralTiltData):
    vertex: int = 0
    s_id: int = -1


def classify_torsion(tbl: IndTable, t0: TiltingModule) -> tuple[str, ...]:
    out = []
    for j in range(len(tbl)):
        if sum(tbl.ext_dim[t][j] for t in t0) == 0:
            out.append(TORSION)
        elif sum(tbl.hom_dim[t][j] for t in t0) == 0:
            out.append(TORSIONFREE)
        else:
            out.append(NEITHER)
    return tuple(out)


def make_general_tilt(tbl: IndTable, ids: Sequence[int]) -> GeneralTiltData:
    t0 = tilting_module(tbl, ids)
    return GeneralTiltData(tbl, t0, classify_torsion(tbl, t0))


def make_bb_tilt(tbl: IndTable, i: int) -> BBTiltData:
    q = tbl.quiver
    if not 1 <= i <= q.n:
        raise ValueError(f"vertex {i} out of range 1..{q.n}")
    S = simple_rep(q, i)
    if injective_rep(q, i).dims == S.dims:
        raise SimpleIsInjective(f"S({i}) is injective; no BB tilt at vertex {i}")
    s_id = tbl.id_of(S)
    if tbl.ext_dim[s_id][s_id]:
        raise SimpleIsInjective(f"Ext^1(S({i}), S({i})) != 0")
    ids = [tbl.projective_id(j) for j in q.vertices if j != i]
    ids.append(tbl.id_of(tau_inv(S)))
    t0 = tilting_module(tbl, ids)
    torsion = classify_torsion(tbl, t0)
    return BBTiltData(tbl, t0, torsion, vertex=i, s_id=s_id)


def is_apr(d: BBTiltData) -> bool:
    """The simple at the tilting vertex is projective (the vertex is a sink)."""
    q = d.table.quiver
    return projective_rep(q, d.vertex).dims == simple_rep(q, d.vertex).dims


# -- partition of the Lambda tilting modules -------------------------------------------


def partition_tilting(tbl: IndTable, tilts: Sequence[TiltingModule], torsion_class: Sequence[str]) -> list[str]:
    tags = []
    for T in tilts:
        classes = {torsion_class[k] for k in T}
        if NEITHER in classes:
            tags.append("Other")
        elif classes == {TORSION}:
            tags.append("TT")
        elif classes == {TORSIONFREE}:
            tags.append("TF")
        else:
            tags.append("TTF")
    return tags


def _split_parts(d: GeneralTiltData, T: TiltingModule) -> tuple[list[int], list[int]]:
    ys = [k for k in T if d.torsion_class[k] == TORSION]
    xs = [k for k in T if d.torsion_class[k] == TORSIONFREE]
    if len(ys) + len(xs) != len(T):
        raise NotInScope(f"{T} has a summand outside T and F")
    return ys, xs


def _sum(d: GeneralTiltData, ids: Sequence[int]) -> Representation:
    return direct_sum([d.table.inds[k] for k in ids], quiver=d.table.quiver)


def is_admissible(
    tbl: IndTable, tilts: Sequence[TiltingModule], torsion_class: Sequence[str]
) -> tuple[bool, tuple[TiltingModule, int] | None]:
    """No T-summand of a TT/TTF tilting module is generated by its F-part.

    Returns (True, None) or (False, (tilting module, offending summand id)).
    """
    for T, tag in zip(tilts, partition_tilting(tbl, tilts, torsion_class)):
        if tag not in ("TT", "TTF"):
            continue
        xs = [k for k in T if torsion_class[k] == TORSIONFREE]
        if not xs:
            continue
        X0 = direct_sum([tbl.inds[k] for k in xs])
        for k in T:
            if torsion_class[k] == TORSION and is_generated_by(tbl.inds[k], X0):
                return False, (T, k)
    return True, None


# -- symbolic B0-modules ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class BModule:
    """H(y_part) + E(x_part); both parts are sorted id tuples (multisets)."""

    y_part: tuple[int, ...] = ()
    x_part: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "y_part", tuple(sorted(self.y_part)))
        object.__setattr__(self, "x_part", tuple(sorted(self.x_part)))

    def summands(self) -> list[Symbol]:
        return [("H", k) for k in self.y_part] + [("E", k) for k in self.x_part]

    @classmethod
    def from_symbols(cls, symbols: Sequence[Symbol]) -> BModule:
        return cls(
            tuple(k for kind, k in symbols if kind == "H"),
            tuple(k for kind, k in symbols if kind == "E"),
        )

    def __len__(self) -> int:
        return len(self.y_part) + len(self.x_part)


def b_symbols(d: GeneralTiltData) -> list[Symbol]:
    """All indecomposable B0-modules: H(M) for M in T, then E(X) for X in F."""
    return [("H", k) for k in d.ids_of(TORSION)] + [("E", k) for k in d.ids_of(TORSIONFREE)]


def _check_symbol(d: GeneralTiltData, s: Symbol) -> None:
    kind, k = s
    want = {"H": TORSION, "E": TORSIONFREE}.get(kind)
    if want is None or not 0 <= k < len(d.torsion_class) or d.torsion_class[k] != want:
        raise NotInScope(f"{s} is not an indecomposable B0-module")


def b_ext_dim(d: GeneralTiltData, j: int, A: Symbol, B: Symbol) -> int:
    """dim Ext^j_{B0}(A, B) for j = 0 (Hom), 1, 2 via the Lambda side."""
    if j not in (0, 1, 2):
        raise ValueError("j must be 0, 1 or 2")
    _check_symbol(d, A)
    _check_symbol(d, B)
    (ka, a), (kb, b) = A, B
    hom, ext = d.table.hom_dim, d.table.ext_dim
    if ka == kb:
        return (hom[a][b], ext[a][b], 0)[j]
    if ka == "H":  # H(M), E(X)
        return (ext[a][b], 0, 0)[j]
    return (0, hom[a][b], ext[a][b])[j]  # E(X), H(M)


def b_is_tilting(d: GeneralTiltData, B: BModule) -> bool:
    syms = B.summands()
    if len(syms) != d.n or len(set(syms)) != len(syms):
        return False
    try:
        for s in syms:
            _check_symbol(d, s)
    except NotInScope:
        return False
    return all(b_ext_dim(d, j, s, t) == 0 for s in syms for t in syms for j in (1, 2))


def b_enumerate_tilting(d: GeneralTiltData) -> list[BModule]:
    """All n-sets of pairwise (and self) Ext^1/Ext^2-orthogonal symbols."""
    syms = b_symbols(d)
    m, n = len(syms), d.n

    def orth(s: Symbol, t: Symbol) -> bool:
        return all(b_ext_dim(d, j, s, t) == 0 for j in (1, 2))

    usable = [orth(s, s) for s in syms]
    compat = [[orth(s, t) and orth(t, s) for t in syms] for s in syms]
    out: list[BModule] = []

    def extend(chosen: list[int], start: int) -> None:
        if len(chosen) == n:
            out.append(BModule.from_symbols([syms[k] for k in chosen]))
            return
        for k in range(start, m - (n - len(chosen)) + 1):
            if usable[k] and all(compat[k][c] for c in chosen):
                chosen.append(k)
                extend(chosen, k + 1)
                chosen.pop()

    extend([], 0)
    return sorted(out)


def _b_tag(B: BModule) -> str:
    return "Y" if not B.x_part else "XY"


def b_hasse(d: GeneralTiltData, tilts: Sequence[BModule] | None = None) -> TiltingQuiver:
    """Hasse diagram of B0 tilting modules ordered by inclusion of perpendicular classes."""
    if tilts is None:
        tilts = b_enumerate_tilting(d)
    syms = b_symbols(d)
    perps = [
        frozenset(z for z in syms if all(b_ext_dim(d, j, s, z) == 0 for s in B.summands() for j in (1, 2)))
        for B in tilts
    ]
    return hasse_from_perps(tilts, perps, [_b_tag(B) for B in tilts])


# -- the map phi and its inverse ----------------------------------------------------


def _ids_of_decomposition(d: GeneralTiltData, M: Representation) -> list[int]:
    out = []
    for part, mult in decompose(M):
        out.extend([d.table.id_of(part)] * mult)
    return out


def _quotient_ids(d: GeneralTiltData, T: TiltingModule, ys: list[int], xs: list[int]) -> list[int]:
    if not xs:
        return list(ys)
    X0 = _sum(d, xs)
    out = []
    for k in ys:
        Y = d.table.inds[k]
        Q, _ = quotient(Y, trace(X0, Y))
        if Q.is_zero():
            raise AdmissibilityViolation(f"summand {k} of {T.ids} is generated by its F-part", witness=(T, k))
        out.extend(_ids_of_decomposition(d, Q))
    return out


def _reject_ids(d: GeneralTiltData, T: TiltingModule, ys: list[int], xs: list[int]) -> list[int]:
    if not xs:
        return []
    Y0 = _sum(d, ys)
    out = []
    for k in xs:
        X = d.table.inds[k]
        R = reject(Y0, X).as_representation()
        if R.is_zero():
            raise CogenerationViolation(f"summand {k} of {T.ids} is cogenerated by its T-part", witness=(T, k))
        out.extend(_ids_of_decomposition(d, R))
    return out


def phi(d: GeneralTiltData, T: TiltingModule) -> BModule:
    """H(Y0 / Tr_{Y0} X0) + E(X0)."""
    ys, xs = _split_parts(d, T)
    return BModule(tuple(_quotient_ids(d, T, ys, xs)), tuple(xs))


def phi_reject(d: GeneralTiltData, T: TiltingModule) -> BModule:
    """H(Y0) + E(Rej_{X0} Y0)."""
    ys, xs = _split_parts(d, T)
    return BModule(tuple(ys), tuple(_reject_ids(d, T, ys, xs)))


def phi_both(d: GeneralTiltData, T: TiltingModule) -> BModule:
    """H(Y0 / Tr_{Y0} X0) + E(Rej_{X0} Y0)."""
    ys, xs = _split_parts(d, T)
    return BModule(tuple(_quotient_ids(d, T, ys, xs)), tuple(_reject_ids(d, T, ys, xs)))


def phi_inverse(d: BBTiltData, B: BModule) -> TiltingModule:
    """Preimage of a B0 tilting module under phi.

    Without an E-part the ids are taken as they are.  Otherwise the E-part is
    E(S) and each H(N) lifts to the universal extension 0 -> S^r -> M -> N -> 0.
    """
    if not isinstance(d, BBTiltData):
        raise NotBB("phi_inverse needs BB tilt data")
    if not b_is_tilting(d, B):
        raise NotTilting(f"{B} is not a tilting B0-module")
    if not B.x_part:
        ids = list(B.y_part)
    else:
        if B.x_part != (d.s_id,):
            raise NotTilting(f"E-part {B.x_part} is not E(S)")
        S = d.table.inds[d.s_id]
        ids = [d.s_id]
        for k in B.y_part:
            M, _ = universal_extension(d.table.inds[k], S)
            ids.extend(_ids_of_decomposition(d, M))
    T = tilting_module(d.table, sorted(set(ids)))
    if len(set(ids)) != len(ids) or phi(d, T) != B:
        raise TransportError(f"phi_inverse({B}) = {T.ids} does not map back")
    return T


# -- transported construction ------------------------------------------------------


def transport_construct(d: BBTiltData, K: TiltingQuiver) -> TiltingQuiver:
    """The B0 tilting quiver assembled from the Lambda tilting quiver K.

    Internal arrows of both blocks are copied from K.  A cross arrow into
    phi(E2 + S) comes from the Y-block tilting module containing
    E1 = E2 / Tr_{E2} S: the unique one if E1 has one complement in T, the
    lower end of the K-arrow between the two if it has two.
    """
    if not isinstance(d, BBTiltData):
        raise NotBB("transport needs BB tilt data")
    tbl = d.table
    tilts: list[TiltingModule] = list(K.vertices)
    tags = partition_tilting(tbl, tilts, d.torsion_class)
    y_block = [k for k, t in enumerate(tags) if t == "TT"]
    xy_block = [k for k, t in enumerate(tags) if t in ("TTF", "TF")]
    images = {k: phi(d, tilts[k]) for k in y_block + xy_block}

    vertices = sorted(images.values())
    index = {B: v for v, B in enumerate(vertices)}
    arrows: set[tuple[int, int]] = set()
    kept = set(y_block) | set(xy_block)
    for u, v in K.arrows:
        if u in kept and v in kept and (tags[u] == "TT") == (tags[v] == "TT"):
            arrows.add((index[images[u]], index[images[v]]))

    k_arrows = set(K.arrows)
    cross: set[tuple[int, int]] = set()
    for k2 in xy_block:
        B2 = images[k2]
        e1 = set(B2.y_part)
        hosts = [k for k in y_block if e1 <= set(tilts[k].ids)]
        if len(hosts) == 1:
            src = hosts[0]
        elif len(hosts) == 2:
            z, w = hosts
            if (z, w) in k_arrows:
                src = w
            elif (w, z) in k_arrows:
                src = z
            else:
                raise TransportError(f"complements of {sorted(e1)} are not joined by an arrow")
        elif not hosts:
            continue
        else:
            raise TransportError(f"{sorted(e1)} has {len(hosts)} complements in T")
        cross.add((index[images[src]], index[B2]))

    # a Lambda arrow T2 = M + S -> T1 = M + Y predicts the cross arrow iff Ext^1(N, M) = 0
    for u, v in K.arrows:
        if tags[u] in ("TTF", "TF") and tags[v] == "TT":
            M = [k for k in tilts[u] if k != d.s_id]
            N = images[u].y_part
            predicted = sum(tbl.ext_dim[a][b] for a in N for b in M) == 0
            present = (index[images[v]], index[images[u]]) in cross
            if predicted != present:
                raise TransportError(
                    f"cross arrow {tilts[v].ids} -> {tilts[u].ids}: Ext criterion says {predicted}, rule says {present}"
                )

    arrows |= cross
    return TiltingQuiver(tuple(vertices), tuple(sorted(arrows)), None, tuple(_b_tag(B) for B in vertices))


# -- structural checks ---------------------------------------------------------------


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    witness: object = None


def verify_tilt_properties(d: GeneralTiltData, K: TiltingQuiver, BK: TiltingQuiver) -> list[PropertyCheck]:
    tbl = d.table
    tags = partition_tilting(tbl, list(K.vertices), d.torsion_class)
    checks = []

    ttf = [k for k, t in enumerate(tags) if t == "TTF"]
    ok, w = is_convex(len(K.vertices), K.arrows, ttf)
    checks.append(PropertyCheck("TTF convex in Lambda quiver", ok, None if ok else K.vertices[w]))

    xy = [k for k, B in enumerate(BK.vertices) if B.x_part]
    ok, w = is_convex(len(BK.vertices), BK.arrows, xy)
    checks.append(PropertyCheck("XY convex in B0 quiver", ok, None if ok else BK.vertices[w]))

    bad = [(BK.vertices[u], BK.vertices[v]) for u, v in BK.arrows if BK.vertices[u].x_part and not BK.vertices[v].x_part]
    checks.append(PropertyCheck("no arrows XY -> Y in B0 quiver", not bad, bad or None))

    bad = [(K.vertices[u], K.vertices[v]) for u, v in K.arrows if tags[u] == "TT" and tags[v] == "TTF"]
    checks.append(PropertyCheck("no arrows TT -> TTF in Lambda quiver", not bad, bad or None))

    counts: Counter = Counter()
    for B in BK.vertices:
        syms = B.summands()
        for part in combinations(syms, len(syms) - 1):
            counts[frozenset(part)] += 1
    over = [(sorted(p), c) for p, c in counts.items() if c > 3 and all(kind == "H" for kind, _ in p)]
    checks.append(PropertyCheck("Y-side almost complete modules have <= 3 complements", not over, over or None))

    if isinstance(d, BBTiltData):
        s = ("E", d.s_id)
        pd2 = [k for k in d.ids_of(TORSION) if b_ext_dim(d, 2, s, ("H", k))]
        ok = is_apr(d) == (not pd2)
        checks.append(PropertyCheck("APR iff pd E(S) <= 1", ok, None if ok else pd2))
    return checks


# -- pipelines -------------------------------------------------------------------


def _block_isomorphism(K: TiltingQuiver, BK: TiltingQuiver, image: dict[int, BModule], block: list[int]) -> bool:
    inside = set(block)
    lifted = {(image[u], image[v]) for u, v in K.arrows if u in inside and v in inside}
    targets = {image[k] for k in block}
    own = {(a, b) for a, b in BK.edge_set() if a in targets and b in targets}
    return lifted == own


@dataclass
class BBReport:
    data: BBTiltData
    tilts: list[TiltingModule]
    K: TiltingQuiver
    tags: list[str]
    images: dict[TiltingModule, BModule]
    oracle: TiltingQuiver
    transported: TiltingQuiver | None
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def run_bb(tbl: IndTable, vertex: int, transport: bool = True) -> BBReport:
    """Everything for the BB tilt at ``vertex``: phi, oracle, transport and all checks."""
    d = make_bb_tilt(tbl, vertex)
    tilts = enumerate_tilting(tbl)
    K = hasse(tbl, tilts)
    tags = partition_tilting(tbl, tilts, d.torsion_class)
    in_scope = [k for k, t in enumerate(tags) if t != "Other"]
    images = {tilts[k]: phi(d, tilts[k]) for k in in_scope}
    oracle = b_hasse(d)
    checks: list[PropertyCheck] = []

    transported = None
    if transport:
        try:
            transported = transport_construct(d, K)
            ok = transported.same_graph(oracle)
            checks.append(PropertyCheck("transported quiver equals Hasse oracle", ok, None if ok else transported))
        except TransportError as exc:
            checks.append(PropertyCheck("transported quiver equals Hasse oracle", False, str(exc)))

    image_set = set(images.values())
    ok = len(image_set) == len(images) and image_set == set(oracle.vertices)
    checks.append(PropertyCheck("phi is a bijection onto B0 tilting modules", ok))

    bad = []
    for T, B in images.items():
        try:
            if phi_inverse(d, B) != T:
                bad.append(T)
        except (NotTilting, TransportError):
            bad.append(T)
    checks.append(PropertyCheck("phi_inverse o phi is the identity", not bad, bad or None))

    bad = [T for T, B in images.items() if not b_is_tilting(d, B)]
    checks.append(PropertyCheck("phi images are tilting", not bad, bad or None))

    image_by_index = {k: images[tilts[k]] for k in in_scope}
    for name, block_tags in (("TT ~ Y", ("TT",)), ("TTF ~ XY", ("TTF", "TF"))):
        block = [k for k in in_scope if tags[k] in block_tags]
        ok = _block_isomorphism(K, oracle, image_by_index, block)
        checks.append(PropertyCheck(f"block isomorphism {name}", ok))

    checks.extend(verify_tilt_properties(d, K, oracle))
    return BBReport(d, tilts, K, tags, images, oracle, transported, checks)


@dataclass
class TiltedReport:
    data: GeneralTiltData
    tilts: list[TiltingModule]
    tags: list[str]
    admissible: bool
    witness: object
    images: dict[TiltingModule, BModule]
    oracle: TiltingQuiver
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.admissible and all(c.passed for c in self.checks)


def run_tilted(tbl: IndTable, t0_ids: Sequence[int]) -> TiltedReport:
    """phi and the B0 Hasse oracle for an arbitrary tilting module T0."""
    d = make_general_tilt(tbl, t0_ids)
    tilts = enumerate_tilting(tbl)
    tags = partition_tilting(tbl, tilts, d.torsion_class)
    admissible, witness = is_admissible(tbl, tilts, d.torsion_class)
    oracle = b_hasse(d)
    images: dict[TiltingModule, BModule] = {}
    checks = []
    if admissible:
        images = {T: phi(d, T) for T, t in zip(tilts, tags) if t != "Other"}
        bad = [T for T, B in images.items() if not b_is_tilting(d, B)]
        checks.append(PropertyCheck("phi images are tilting", not bad, bad or None))
        image_set = set(images.values())
        ok = len(image_set) == len(images) and image_set <= set(oracle.vertices)
        checks.append(PropertyCheck("phi is injective into B0 tilting modules", ok))
    return TiltedReport(d, tilts, tags, admissible, witness, images, oracle, checks)

