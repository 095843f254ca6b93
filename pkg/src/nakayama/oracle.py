"""Independent matrix-level oracle for the combinatorial homological calculus.

Modules are realized as quiver representations over the rationals
(vertex-indexed coordinate spaces plus one matrix per arrow, all exact
``Fraction`` arithmetic).  Hom spaces are intertwiner nullspaces,
Ext^1 comes from the syzygy sequence, and the Auslander-Reiten translate
is computed as D Tr from a minimal projective presentation.  Nothing here
reuses the closed forms from `homology`; agreement between the two is a
test target, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, IndecModule
from . import linalg
from .linalg import Matrix, QuotientSpace, mat_mul, mat_vec

_cover_cache: dict = {}
_hom_basis_cache: dict = {}


class OracleError(RuntimeError):
    """Internal inconsistency in a matrix-level computation."""


class Representation:
    """Right-module representation: dims[v-1] per vertex, one matrix per arrow.

    The arrow at source v points to A.down(v); its matrix has shape
    dims[down(v)] x dims[v] and acts on column vectors.
    """

    __slots__ = ("dims", "maps")

    def __init__(self, dims: list[int], maps: dict[int, Matrix]):
        self.dims = list(dims)
        self.maps = maps

    def total_dim(self) -> int:
        return sum(self.dims)


class LeftRep:
    """Left-module representation: the arrow at v maps V_{down(v)} into V_v."""

    __slots__ = ("dims", "maps")

    def __init__(self, dims: list[int], maps: dict[int, Matrix]):
        self.dims = list(dims)
        self.maps = maps


def arrow_sources(A: Algebra) -> list[int]:
    """Vertices with an outgoing arrow (Kupisch entry at least 2)."""
    return [v for v in A.vertices if A.kupisch(v) >= 2]


def incoming_source(A: Algebra, v: int) -> int | None:
    """Source of the arrow into v, or None if there is none."""
    if A.kind == "linear":
        if v == A.n:
            return None
        u = v + 1
    else:
        u = A.up(v)
    return u if A.kupisch(u) >= 2 else None


def to_representation(A: Algebra, M: IndecModule) -> Representation:
    """Representation of the uniserial module M, one basis vector per layer."""
    layers = A.layers(M)
    positions: dict[int, dict[int, int]] = {v: {} for v in A.vertices}
    for k, v in enumerate(layers):
        positions[v][k] = len(positions[v])
    dims = [len(positions[v]) for v in A.vertices]
    maps: dict[int, Matrix] = {}
    for src in arrow_sources(A):
        tgt = A.down(src)
        mat = linalg.zero_matrix(dims[tgt - 1], dims[src - 1])
        for k in positions[src]:
            if k + 1 < M.length:
                mat[positions[tgt][k + 1]][positions[src][k]] = 1
        maps[src] = mat
    return Representation(dims, maps)


def check_relations(A: Algebra, rep: Representation) -> bool:
    """True iff every path the algebra kills acts as zero.

    The defining relations are the paths of length c[v] starting at each
    vertex v, whenever the quiver contains such a path.
    """
    sources = set(arrow_sources(A))
    for v in A.vertices:
        comp = linalg.identity(rep.dims[v - 1])
        cur = v
        exists = True
        for _ in range(A.kupisch(v)):
            if cur not in sources:
                exists = False
                break
            comp = mat_mul(rep.maps[cur], comp)
            cur = A.down(cur)
        if exists and not linalg.is_zero_matrix(comp):
            return False
    return True


# -- Hom as an intertwiner nullspace ------------------------------------------


def _hom_system(A: Algebra, X: Representation, Y: Representation):
    """Linear system whose kernel is Hom(X, Y); returns (rows, total, offsets)."""
    n = A.n
    offsets = [0] * n
    total = 0
    for v in range(n):
        offsets[v] = total
        total += Y.dims[v] * X.dims[v]
    rows = []
    for src in arrow_sources(A):
        tgt = A.down(src)
        Xa, Ya = X.maps[src], Y.maps[src]
        dXs, dXt = X.dims[src - 1], X.dims[tgt - 1]
        dYs, dYt = Y.dims[src - 1], Y.dims[tgt - 1]
        for i in range(dYt):
            for j in range(dXs):
                row = [0] * total
                for k in range(dXt):
                    if Xa[k][j]:
                        row[offsets[tgt - 1] + i * dXt + k] += Xa[k][j]
                for k in range(dYs):
                    if Ya[i][k]:
                        row[offsets[src - 1] + k * dXs + j] -= Ya[i][k]
                if any(row):
                    rows.append(row)
    return rows, total, offsets


def rep_hom_dim(A: Algebra, X: Representation, Y: Representation) -> int:
    rows, total, _ = _hom_system(A, X, Y)
    if total == 0:
        return 0
    return total - linalg.rank(rows)


def rep_hom_basis(A: Algebra, X: Representation, Y: Representation) -> list[list[Matrix]]:
    """Basis of Hom(X, Y), each element a list of per-vertex matrices."""
    rows, total, offsets = _hom_system(A, X, Y)
    if total == 0:
        return []
    vectors = linalg.nullspace(rows, total)
    basis = []
    for vec in vectors:
        mats = []
        for v in range(A.n):
            r, c = Y.dims[v], X.dims[v]
            block = vec[offsets[v]: offsets[v] + r * c]
            mats.append([list(block[i * c:(i + 1) * c]) for i in range(r)])
        basis.append(mats)
    return basis


@dataclass(frozen=True)
class HomSpace:
    dim: int
    basis: tuple  # tuple of per-vertex matrix lists


def hom_space(A: Algebra, M: IndecModule, N: IndecModule) -> HomSpace:
    key = (A, M, N)
    cached = _hom_basis_cache.get(key)
    if cached is None:
        basis = rep_hom_basis(A, to_representation(A, M), to_representation(A, N))
        cached = HomSpace(len(basis), tuple(basis))
        _hom_basis_cache[key] = cached
    return cached


def hom_space_dim(A: Algebra, M: IndecModule, N: IndecModule) -> int:
    return rep_hom_dim(A, to_representation(A, M), to_representation(A, N))


# -- projective covers and syzygies -------------------------------------------


@dataclass
class CoverData:
    """Minimal projective cover P(top M) -> M with its kernel.

    `incl` holds per-vertex inclusion matrices of the kernel into the
    cover (columns form a kernel basis).
    """

    cover_module: IndecModule
    cover_rep: Representation
    kernel_rep: Representation
    incl: list[Matrix]


def cover_data(A: Algebra, M: IndecModule) -> CoverData:
    key = (A, M)
    cached = _cover_cache.get(key)
    if cached is not None:
        return cached
    P0 = A.projective(M.top)
    Prep = to_representation(A, P0)
    # Cover map: layer k of P0 goes to layer k of M for k < len(M), else to 0.
    p_positions: dict[int, list[int]] = {v: [] for v in A.vertices}
    for k, v in enumerate(A.layers(P0)):
        p_positions[v].append(k)
    g = []
    for v in A.vertices:
        ks = p_positions[v]
        m_count = sum(1 for k in ks if k < M.length)
        mat = linalg.zero_matrix(m_count, len(ks))
        row = 0
        for col, k in enumerate(ks):
            if k < M.length:
                mat[row][col] = 1
                row += 1
        g.append(mat)
    incl = []
    kdims = []
    for v in A.vertices:
        cols = len(g[v - 1][0]) if g[v - 1] else Prep.dims[v - 1]
        if not g[v - 1]:
            basis = [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
        else:
            basis = linalg.nullspace(g[v - 1], cols)
        incl.append(linalg.transpose(basis) if basis else [[] for _ in range(cols)])
        kdims.append(len(basis))
    kmaps: dict[int, Matrix] = {}
    for src in arrow_sources(A):
        tgt = A.down(src)
        image = mat_mul(Prep.maps[src], incl[src - 1])
        tgt_cols = linalg.transpose(incl[tgt - 1])
        mat = linalg.zero_matrix(kdims[tgt - 1], kdims[src - 1])
        for j, col in enumerate(linalg.transpose(image)):
            coords = linalg.coords_in_span(tgt_cols, col)
            if coords is None:
                raise OracleError("cover kernel is not arrow-stable")
            for i, x in enumerate(coords):
                mat[i][j] = x
        kmaps[src] = mat
    data = CoverData(P0, Prep, Representation(kdims, kmaps), incl)
    _cover_cache[key] = data
    return data


def identify_module(A: Algebra, rep) -> IndecModule | None:
    """Match a representation with the uniserial module it must be.

    Uses the total dimension and the unique top; raises OracleError if the
    representation is not a valid uniserial module (e.g. decomposable).
    """
    total = sum(rep.dims)
    if total == 0:
        return None
    tops = []
    for v in A.vertices:
        d = rep.dims[v - 1]
        if d == 0:
            continue
        u = incoming_source(A, v)
        rad = linalg.rank(rep.maps[u]) if u is not None and rep.maps[u] else 0
        t = d - rad
        if t < 0:
            raise OracleError("radical rank exceeds the fiber dimension")
        if t > 0:
            tops.append((v, t))
    if len(tops) != 1 or tops[0][1] != 1:
        raise OracleError(f"representation is not uniserial: tops {tops}")
    top = tops[0][0]
    candidate = IndecModule(top, total)
    if not A.valid_module(candidate):
        raise OracleError(f"dimensions do not fit any uniserial module: {candidate}")
    expected = to_representation(A, candidate)
    if expected.dims != list(rep.dims):
        raise OracleError(f"dimension vector does not match {candidate}")
    return candidate


def syzygy_oracle(A: Algebra, M: IndecModule) -> IndecModule | None:
    """Kernel of the projective cover, identified as a module (None if zero)."""
    data = cover_data(A, M)
    if data.kernel_rep.total_dim() == 0:
        return None
    return identify_module(A, data.kernel_rep)


def ext1_space_dim(A: Algebra, M: IndecModule, N: IndecModule) -> int:
    """dim Ext^1(M, N) from 0 -> K -> P0 -> M -> 0.

    Hom(-, N) is left exact, so Ext^1 = Hom(K, N) / image of Hom(P0, N);
    the dimension is dim Hom(K, N) minus the rank of the restrictions of a
    basis of Hom(P0, N) to K.
    """
    data = cover_data(A, M)
    if data.kernel_rep.total_dim() == 0:
        return 0
    Nrep = to_representation(A, N)
    hom_k = rep_hom_dim(A, data.kernel_rep, Nrep)
    if hom_k == 0:
        return 0
    basis = hom_space(A, data.cover_module, N).basis
    restricted = []
    for h in basis:
        flat = []
        for v in range(A.n):
            prod = mat_mul(h[v], data.incl[v])
            for row in prod:
                flat.extend(row)
        restricted.append(flat)
    rk = linalg.rank(restricted) if restricted and restricted[0] else 0
    return hom_k - rk


# -- the Auslander-Reiten translate as D Tr -----------------------------------


def left_projective(A: Algebra, j: int) -> tuple[LeftRep, dict[int, dict[int, int]]]:
    """The left module A e_j, with per-vertex positions of its path basis.

    The basis consists of the nonzero paths ending at j; the path of
    length t starts at the vertex t arrows above j and survives iff
    t < c at its start.  Positions map vertex -> {t: index}.
    """
    positions: dict[int, dict[int, int]] = {v: {} for v in A.vertices}
    t = 0
    while True:
        if A.kind == "linear" and j + t > A.n:
            break
        s = A.up(j, t) if t else j
        if t >= A.kupisch(s):
            break
        positions[s][t] = len(positions[s])
        t += 1
    dims = [len(positions[v]) for v in A.vertices]
    maps: dict[int, Matrix] = {}
    for src in arrow_sources(A):
        tgt = A.down(src)
        mat = linalg.zero_matrix(dims[src - 1], dims[tgt - 1])
        for t_val, col in positions[tgt].items():
            dest = positions[src].get(t_val + 1)
            if dest is not None:
                mat[dest][col] = 1
        maps[src] = mat
    return LeftRep(dims, maps), positions


def _direct_sum_left(A: Algebra, parts: list[tuple[LeftRep, dict]]) -> tuple[LeftRep, list[list[int]]]:
    """Direct sum of left modules; returns the sum and per-part vertex offsets."""
    n = A.n
    offsets = []
    dims = [0] * n
    for rep, _ in parts:
        offsets.append(dims[:])
        dims = [a + b for a, b in zip(dims, rep.dims)]
    maps: dict[int, Matrix] = {}
    for src in arrow_sources(A):
        tgt = A.down(src)
        mat = linalg.zero_matrix(dims[src - 1], dims[tgt - 1])
        for p, (rep, _) in enumerate(parts):
            block = rep.maps[src]
            ro, co = offsets[p][src - 1], offsets[p][tgt - 1]
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    if x:
                        mat[ro + i][co + j] = x
        maps[src] = mat
    return LeftRep(dims, maps), offsets


def tau_via_dtr(A: Algebra, M: IndecModule) -> IndecModule | None:
    """Auslander-Reiten translate computed as D Tr.

    Takes the minimal projective presentation P1 -> P0 -> M -> 0, applies
    Hom(-, A) (turning right projectives into left projectives and the map
    into right multiplication by the presentation matrix), takes the
    cokernel, and dualizes vertex-wise back to a right module.
    """
    A.check_module(M)
    if A.is_projective(M):
        return None
    data = cover_data(A, M)
    K, incl = data.kernel_rep, data.incl

    # Generators of K: per vertex, kernel basis columns spanning the top.
    gens: list[tuple[int, list]] = []
    for v in A.vertices:
        kd = K.dims[v - 1]
        if kd == 0:
            continue
        u = incoming_source(A, v)
        rad_vectors = linalg.transpose(K.maps[u]) if u is not None else []
        for idx in linalg.extend_basis_indices(rad_vectors, kd):
            gens.append((v, [row[idx] for row in incl[v - 1]]))
    if not gens:
        raise OracleError("non-projective module with trivial syzygy top")

    # Hom(-, A): P(i) becomes A e_i; the presentation becomes right
    # multiplication A e_i -> sum of A e_{v_b} by the generator paths.
    i = M.top
    F, F_pos = left_projective(A, i)
    parts = [left_projective(A, v) for v, _ in gens]
    G, offsets = _direct_sum_left(A, parts)

    # P0 layer positions at each vertex give the path-length coordinates.
    p_layers: dict[int, list[int]] = {v: [] for v in A.vertices}
    for k, v in enumerate(A.layers(data.cover_module)):
        p_layers[v].append(k)

    f_mats: list[Matrix] = []
    for s in A.vertices:
        mat = linalg.zero_matrix(G.dims[s - 1], F.dims[s - 1])
        for t_val, col in F_pos[s].items():
            for b, (v_b, coeffs) in enumerate(gens):
                _, b_pos = parts[b]
                for pos, k in enumerate(p_layers[v_b]):
                    coeff = coeffs[pos]
                    if not coeff:
                        continue
                    dest = b_pos[s].get(t_val + k)
                    if dest is not None:
                        mat[offsets[b][s - 1] + dest][col] += coeff
        f_mats.append(mat)

    # Tr M = cokernel of the transposed presentation, still a left module.
    quotients = [QuotientSpace(linalg.transpose(f_mats[s - 1]), G.dims[s - 1]) for s in A.vertices]
    coker_dims = [q.quotient_dim for q in quotients]
    coker_maps: dict[int, Matrix] = {}
    for src in arrow_sources(A):
        tgt = A.down(src)
        q_src, q_tgt = quotients[src - 1], quotients[tgt - 1]
        mat = linalg.zero_matrix(coker_dims[src - 1], coker_dims[tgt - 1])
        for k in range(q_tgt.quotient_dim):
            image = mat_vec(G.maps[src], q_tgt.lift(k))
            for r, x in enumerate(q_src.project(image)):
                mat[r][k] = x
        coker_maps[src] = mat

    # D: vertex-wise dual turns the left module into a right module.
    dual_maps = {src: linalg.transpose(coker_maps[src]) for src in arrow_sources(A)}
    dual = Representation(coker_dims, dual_maps)
    result = identify_module(A, dual)
    if result is None:
        raise OracleError("D Tr of a non-projective module vanished")
    return result


# -- endomorphism algebras ----------------------------------------------------


@dataclass
class EndTable:
    """Endomorphism algebra of a direct sum, with its multiplication table.

    `basis_index[g] = (a, b, k)`: global basis element g is the k-th basis
    vector of Hom(M_a, M_b) (objects 0-indexed).  `mult[(f, g)]` holds the
    coordinates of "f then g" over the basis of the target block; it is
    present exactly for composable pairs.
    """

    objects: tuple[IndecModule, ...]
    block_dims: dict[tuple[int, int], int]
    block_offsets: dict[tuple[int, int], int]
    basis_index: tuple[tuple[int, int, int], ...]
    bases: dict[tuple[int, int], list]
    mult: dict[tuple[int, int], list]
    total_dim: int
    top_scalars: dict[int, Fraction]

    def block_of(self, g: int) -> tuple[int, int]:
        a, b, _ = self.basis_index[g]
        return (a, b)


def _flatten_maps(mats: list[Matrix]) -> list:
    flat = []
    for mat in mats:
        for row in mat:
            flat.extend(row)
    return flat


def end_algebra(A: Algebra, modules) -> EndTable:
    """Multiplication table of End(M_1 + ... + M_r) for pairwise distinct M_i."""
    objects = tuple(modules)
    if len(set(objects)) != len(objects):
        raise OracleError("end_algebra needs pairwise non-isomorphic summands")
    for m in objects:
        A.check_module(m)
    reps = [to_representation(A, m) for m in objects]
    r = len(objects)
    bases: dict[tuple[int, int], list] = {}
    block_dims: dict[tuple[int, int], int] = {}
    for a in range(r):
        for b in range(r):
            basis = rep_hom_basis(A, reps[a], reps[b])
            bases[(a, b)] = basis
            block_dims[(a, b)] = len(basis)
    basis_index: list[tuple[int, int, int]] = []
    block_offsets: dict[tuple[int, int], int] = {}
    for a in range(r):
        for b in range(r):
            block_offsets[(a, b)] = len(basis_index)
            for k in range(block_dims[(a, b)]):
                basis_index.append((a, b, k))
    total = len(basis_index)

    flat_bases = {key: [_flatten_maps(h) for h in val] for key, val in bases.items()}

    mult: dict[tuple[int, int], list] = {}
    for f_g, (a, b, i) in enumerate(basis_index):
        f = bases[(a, b)][i]
        for g_g, (b2, c, j) in enumerate(basis_index):
            if b2 != b:
                continue
            g = bases[(b, c)][j]
            # Composition through a zero-dimensional fiber loses the shape
            # under plain list multiplication, so force it explicitly.
            comp = []
            for v in range(A.n):
                if reps[a].dims[v] and reps[b].dims[v] and reps[c].dims[v]:
                    comp.append(mat_mul(g[v], f[v]))
                else:
                    comp.append(linalg.zero_matrix(reps[c].dims[v], reps[a].dims[v]))
            flat = _flatten_maps(comp)
            if not any(flat):
                mult[(f_g, g_g)] = [Fraction(0)] * block_dims[(a, c)]
                continue
            coords = linalg.coords_in_span(flat_bases[(a, c)], flat)
            if coords is None:
                raise OracleError("composite outside the hom space span")
            mult[(f_g, g_g)] = list(coords)

    top_scalars: dict[int, Fraction] = {}
    for g, (a, b, k) in enumerate(basis_index):
        if a != b:
            continue
        # The induced scalar on the top: entry at the (layer 0, layer 0)
        # position of the top vertex; layer 0 is the first basis vector there.
        topv = objects[a].top
        mat = bases[(a, b)][k][topv - 1]
        top_scalars[g] = Fraction(mat[0][0])

    return EndTable(
        objects=objects,
        block_dims=block_dims,
        block_offsets=block_offsets,
        basis_index=tuple(basis_index),
        bases=bases,
        mult=mult,
        total_dim=total,
        top_scalars=top_scalars,
    )


def identity_coords(table: EndTable, a: int) -> list:
    """Coordinates of id_{M_a} over the basis of End(M_a)."""
    block = table.bases[(a, a)]
    dims = [len(mat) for mat in block[0]] if block else []
    ident = [linalg.identity(d) for d in dims]
    coords = linalg.coords_in_span([_flatten_maps(h) for h in block], _flatten_maps(ident))
    if coords is None:
        raise OracleError("identity not in the span of its own hom basis")
    return list(coords)


@dataclass
class QuiverData:
    """Gabriel quiver data of a basic endomorphism algebra.

    Arrow counts are keyed by 1-based object indices; an arrow p -> q
    counts an irreducible map M_q -> M_p (projectives are Hom(M, M_p)).
    """

    num_vertices: int
    arrow_counts: dict[tuple[int, int], int]
    total_dim: int
    block_dims: dict[tuple[int, int], int]
    rad_dims: dict[tuple[int, int], int]
    rad_square_dims: dict[tuple[int, int], int]


def _multiply_block_vectors(table: EndTable, a: int, b: int, c: int, alpha: list, beta: list) -> list:
    """Coordinates of (alpha in Hom(a,b)) followed by (beta in Hom(b,c))."""
    out = [Fraction(0)] * table.block_dims[(a, c)]
    for i, x in enumerate(alpha):
        if not x:
            continue
        f_g = table.block_offsets[(a, b)] + i
        for j, y in enumerate(beta):
            if not y:
                continue
            g_g = table.block_offsets[(b, c)] + j
            for k, z in enumerate(table.mult[(f_g, g_g)]):
                if z:
                    out[k] += x * y * z
    return out


def quiver_of(table: EndTable) -> QuiverData:
    """Arrow counts dim(rad/rad^2) between the objects of an EndTable."""
    r = len(table.objects)
    rad: dict[tuple[int, int], list] = {}
    for a in range(r):
        for b in range(r):
            d = table.block_dims[(a, b)]
            if a != b:
                rad[(a, b)] = [
                    [Fraction(int(i == j)) for j in range(d)] for i in range(d)
                ]
                continue
            scalars = [table.top_scalars[table.block_offsets[(a, a)] + k] for k in range(d)]
            pivot = next((k for k, s in enumerate(scalars) if s), None)
            if pivot is None:
                raise OracleError("endomorphism block without identity component")
            vecs = []
            for k in range(d):
                if k == pivot:
                    continue
                v = [Fraction(0)] * d
                v[k] = Fraction(1)
                v[pivot] = -scalars[k] / scalars[pivot]
                vecs.append(v)
            rad[(a, b)] = vecs

    rad_dims = {key: len(vecs) for key, vecs in rad.items()}
    rad_square_dims: dict[tuple[int, int], int] = {}
    arrow_counts: dict[tuple[int, int], int] = {}
    for a in range(r):
        for c in range(r):
            products = []
            for b in range(r):
                for alpha in rad[(a, b)]:
                    for beta in rad[(b, c)]:
                        products.append(_multiply_block_vectors(table, a, b, c, alpha, beta))
            rk = linalg.rank(products) if products and products[0] else 0
            rad_square_dims[(a, c)] = rk
            count = rad_dims[(a, c)] - rk
            if count:
                # Irreducible maps M_a -> M_c are arrows (c+1) -> (a+1).
                arrow_counts[(c + 1, a + 1)] = count
    return QuiverData(
        num_vertices=r,
        arrow_counts=arrow_counts,
        total_dim=table.total_dim,
        block_dims={(a + 1, b + 1): d for (a, b), d in table.block_dims.items()},
        rad_dims={(a + 1, b + 1): d for (a, b), d in rad_dims.items()},
        rad_square_dims={(a + 1, b + 1): d for (a, b), d in rad_square_dims.items()},
    )


def clear_caches() -> None:
    _cover_cache.clear()
    _hom_basis_cache.clear()
