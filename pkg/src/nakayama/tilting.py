"""Classical tilting modules: enumeration, Gen order, mutation, exchange graph.

A tilting module here is basic, has projective dimension at most one,
no self-extensions, and as many indecomposable summands as the algebra
has simples (for Nakayama algebras that pin down all classical tilting
modules).  Enumeration is exact: candidates are the indecomposables of
projective dimension <= 1 without self-extensions, compatibility is
Ext^1-vanishing in both directions, and tilting modules are the
n-cliques of the compatibility graph, re-verified one by one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, AlgebraError, IndecModule, ModuleSet
from .homology import (
    cosyzygy,
    ext1_dim,
    gorenstein_profile,
    proj_dim,
    regular_i0,
    regular_module,
)


class TiltingError(RuntimeError):
    """A structural fact about tilting modules failed to hold."""


@dataclass(frozen=True)
class SummandFlags:
    """Shape classification of one tilting summand."""

    projective: bool
    simple_socle_of_projinj: bool


@dataclass(frozen=True)
class TiltingRecord:
    """A tilting module with per-summand shape flags (aligned with modules)."""

    modules: ModuleSet
    flags: tuple[SummandFlags, ...]


def is_tilting(A: Algebra, ms: ModuleSet) -> tuple[bool, str | None]:
    """Check the tilting conditions; returns (ok, first violation or None)."""
    for m in ms:
        pd = proj_dim(A, m)
        if pd > 1:
            return False, f"pd({m}) = {pd} > 1"
    for x in ms:
        for y in ms:
            d = ext1_dim(A, x, y)
            if d:
                return False, f"ext1_dim({x},{y}) = {d} != 0"
    if len(ms) != A.n:
        return False, f"|T| = {len(ms)} != {A.n}"
    return True, None


def projective_injective_socles(A: Algebra) -> frozenset[int]:
    """Socle vertices of the projective-injective indecomposables."""
    return frozenset(
        A.socle_vertex(A.projective(v)) for v in A.projective_injective_vertices()
    )


def tilting_record(A: Algebra, ms: ModuleSet) -> TiltingRecord:
    ok, why = is_tilting(A, ms)
    if not ok:
        raise TiltingError(f"not a tilting module: {why}")
    socles = projective_injective_socles(A)
    flags = tuple(
        SummandFlags(
            projective=A.is_projective(m),
            simple_socle_of_projinj=(m.length == 1 and m.top in socles),
        )
        for m in ms
    )
    return TiltingRecord(ms, flags)


def summand_shape_check(A: Algebra, ms: ModuleSet) -> list[IndecModule]:
    """Summands that are neither projective nor the simple socle of a
    projective-injective; empty means the shape claim holds."""
    socles = projective_injective_socles(A)
    return [
        m
        for m in ms
        if not A.is_projective(m) and not (m.length == 1 and m.top in socles)
    ]


def enumerate_tilting(A: Algebra) -> list[TiltingRecord]:
    """All basic tilting modules, sorted by their canonical summand tuples."""
    cands = [
        m
        for m in A.indecomposables()
        if proj_dim(A, m) <= 1 and ext1_dim(A, m, m) == 0
    ]
    k = len(cands)
    n = A.n
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if ext1_dim(A, cands[i], cands[j]) == 0 and ext1_dim(A, cands[j], cands[i]) == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    found: list[ModuleSet] = []

    def extend(start: int, chosen: list[int], allowed: int) -> None:
        if len(chosen) == n:
            found.append(ModuleSet.of(cands[i] for i in chosen))
            return
        need = n - len(chosen)
        for i in range(start, k):
            if k - i < need:
                break
            if allowed >> i & 1:
                chosen.append(i)
                extend(i + 1, chosen, allowed & adj[i])
                chosen.pop()

    extend(0, [], (1 << k) - 1)
    records = []
    for ms in sorted(found, key=lambda s: s.modules):
        records.append(tilting_record(A, ms))  # re-verifies every clique
    return records


# -- the generation order ------------------------------------------------------


def generates(A: Algebra, T: ModuleSet, X: IndecModule) -> bool:
    """X lies in Gen(T): for uniserial modules, X is a quotient of a summand."""
    A.check_module(X)
    return any(s.top == X.top and s.length >= X.length for s in T)


def leq_gen(A: Algebra, T1: ModuleSet, T2: ModuleSet) -> bool:
    """Gen(T1) contained in Gen(T2), tested on the summands of T1."""
    return all(generates(A, T2, s) for s in T1)


# -- mutation ------------------------------------------------------------------


def mutation_at(A: Algebra, T: ModuleSet, X: IndecModule) -> TiltingRecord | None:
    """Exchange X for the second complement of T/X, if one exists.

    Returns the mutated tilting module, or None when X has no exchange
    partner.  More than one partner would contradict the tilting exchange
    theory, so that raises TiltingError.
    """
    if X not in T:
        raise AlgebraError(f"{X} is not a summand of the given tilting module")
    rest = T.minus(X)
    partners = []
    for y in A.indecomposables():
        if y == X or y in rest:
            continue
        if proj_dim(A, y) > 1:
            continue
        ok, _ = is_tilting(A, rest.plus(y))
        if ok:
            partners.append(y)
    if not partners:
        return None
    if len(partners) > 1:
        raise TiltingError(f"multiple exchange partners for {X}: {partners}")
    return tilting_record(A, rest.plus(partners[0]))


@dataclass(frozen=True)
class ProjMutation:
    """Mutation data at a projective non-injective summand P.

    The short exact sequence 0 -> P -> envelope -> cokernel -> 0 is the
    injective envelope of P; when the mutation exists it must exchange P
    for exactly that cokernel.
    """

    removed: IndecModule
    envelope: IndecModule
    cokernel: IndecModule
    mutated: TiltingRecord | None


def proj_mutation_sequence(A: Algebra, T: ModuleSet, P: IndecModule) -> ProjMutation:
    if P not in T:
        raise AlgebraError(f"{P} is not a summand of the given tilting module")
    if not A.is_projective(P):
        raise AlgebraError(f"{P} is not projective")
    if A.is_injective(P):
        raise AlgebraError(f"{P} is injective; the envelope sequence is trivial")
    envelope = A.injective_env_vertex(A.socle_vertex(P))
    coker = cosyzygy(A, P)
    mutated = mutation_at(A, T, P)
    if mutated is not None:
        added = next(m for m in mutated.modules if m not in T)
        if added != coker:
            raise TiltingError(
                f"mutation at {P} produced {added}, not the envelope cokernel {coker}"
            )
    return ProjMutation(removed=P, envelope=envelope, cokernel=coker, mutated=mutated)


def minimal_tilting(A: Algebra, check: bool = True) -> TiltingRecord:
    """The Gen-minimal tilting module I0 + cosyzygy(A) of a 1-Gorenstein algebra.

    With check=True the full enumeration is compared: the result must be
    the unique Gen-minimum.
    """
    profile = gorenstein_profile(A)
    if not profile.is_1_gorenstein:
        raise AlgebraError("minimal tilting formula needs a 1-Gorenstein algebra")
    parts = list(regular_i0(A))
    for i in A.vertices:
        cos = cosyzygy(A, A.projective(i))
        if cos is not None:
            parts.append(cos)
    ms = ModuleSet.of(parts)
    ok, why = is_tilting(A, ms)
    if not ok:
        raise TiltingError(f"minimal tilting candidate fails: {why}")
    record = tilting_record(A, ms)
    if check:
        records = enumerate_tilting(A)
        minima = [
            r
            for r in records
            if all(leq_gen(A, r.modules, other.modules) for other in records)
        ]
        if len(minima) != 1 or minima[0].modules != ms:
            raise TiltingError(
                f"Gen-minimum mismatch: formula gave {ms}, enumeration gave "
                f"{[str(r.modules) for r in minima]}"
            )
    return record


# -- exchange graph and Hasse diagram ------------------------------------------


@dataclass(frozen=True)
class ExchangeGraph:
    """Tilting exchange graph plus the Hasse diagram of the Gen order.

    `edges[(i, j)]` (i < j) are exchange pairs sharing all but one summand;
    `hasse[(i, j)]` means nodes[j] covers nodes[i] in the Gen order.
    """

    nodes: tuple[TiltingRecord, ...]
    edges: tuple[tuple[int, int], ...]
    hasse: tuple[tuple[int, int], ...]


def exchange_graph(A: Algebra) -> ExchangeGraph:
    records = enumerate_tilting(A)
    n = A.n
    k = len(records)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            if records[i].modules.intersection_size(records[j].modules) == n - 1:
                edges.append((i, j))
    less = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and leq_gen(A, records[i].modules, records[j].modules):
                less[i][j] = True
    hasse = []
    for i in range(k):
        for j in range(k):
            if not less[i][j]:
                continue
            if any(less[i][m] and less[m][j] for m in range(k)):
                continue
            hasse.append((i, j))
    return ExchangeGraph(tuple(records), tuple(edges), tuple(sorted(hasse)))


def exchange_graph_dot(graph: ExchangeGraph) -> str:
    """DOT digraph: solid undirected exchange edges, dashed Hasse covers.

    Hasse arrows point from the Gen-larger module to the one it covers.
    """
    lines = ["digraph exchange {", "  rankdir=BT;"]
    for i, rec in enumerate(graph.nodes):
        lines.append(f'  t{i} [label="{rec.modules}"];')
    for i, j in graph.edges:
        lines.append(f"  t{i} -> t{j} [dir=none];")
    for i, j in graph.hasse:
        lines.append(f"  t{j} -> t{i} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def mutation_closure(A: Algebra) -> list[TiltingRecord]:
    """All tilting modules reachable from the regular module by mutation.

    Independent cross-check for enumerate_tilting: starts at A itself and
    mutates at every summand until closure.
    """
    start_ms = regular_module(A)
    ok, why = is_tilting(A, start_ms)
    if not ok:
        raise TiltingError(f"the regular module is not tilting: {why}")
    start = tilting_record(A, start_ms)
    seen = {start.modules: start}
    stack = [start]
    while stack:
        rec = stack.pop()
        for x in rec.modules:
            nxt = mutation_at(A, rec.modules, x)
            if nxt is not None and nxt.modules not in seen:
                seen[nxt.modules] = nxt
                stack.append(nxt)
    return [seen[key] for key in sorted(seen, key=lambda s: s.modules)]
