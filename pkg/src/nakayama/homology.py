"""Closed-form homological calculus for uniserial modules.

Everything here reduces to counting congruences of layer indices, so all
functions run in time linear in the module lengths.  Infinite projective
or injective dimension is reported as ``math.inf`` (the syzygy orbit of a
uniserial module is eventually periodic, so a revisited module proves
infinitude).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import Algebra, AlgebraError, IndecModule, ModuleSet

INFINITE = math.inf


def hom_dim(A: Algebra, M: IndecModule, N: IndecModule) -> int:
    """dim Hom(M, N).

    A homomorphism sends the top of M onto layer k of N (1-based from the
    top) and is determined by that image; it exists iff the layer vertices
    match and the remaining tail of N is short enough, which reduces to
    counting k <= min(len M, len N) with top(M) = top(N) - (len N) + k as
    vertices (mod N in the cyclic case).
    """
    A.check_module(M)
    A.check_module(N)
    total = 0
    for k in range(1, min(M.length, N.length) + 1):
        diff = N.top - N.length + k - M.top
        if (diff % A.n == 0) if A.kind == "cyclic" else (diff == 0):
            total += 1
    return total


def syzygy(A: Algebra, M: IndecModule) -> IndecModule | None:
    """Kernel of the projective cover P(top M) -> M; None for projective M."""
    A.check_module(M)
    if A.is_projective(M):
        return None
    return IndecModule(A.down(M.top, M.length), A.kupisch(M.top) - M.length)


def cosyzygy(A: Algebra, M: IndecModule) -> IndecModule | None:
    """Cokernel of the injective envelope M -> I(socle M); None for injective M."""
    A.check_module(M)
    env = A.injective_env_vertex(A.socle_vertex(M))
    if env == M:
        return None
    return IndecModule(env.top, env.length - M.length)


def proj_dim(A: Algebra, M: IndecModule) -> int | float:
    """Projective dimension, math.inf if the syzygy orbit cycles."""
    A.check_module(M)
    seen = set()
    d = 0
    cur = M
    while not A.is_projective(cur):
        if cur in seen:
            return INFINITE
        seen.add(cur)
        cur = syzygy(A, cur)
        d += 1
    return d


def inj_dim(A: Algebra, M: IndecModule) -> int | float:
    A.check_module(M)
    seen = set()
    d = 0
    cur = M
    while not A.is_injective(cur):
        if cur in seen:
            return INFINITE
        seen.add(cur)
        cur = cosyzygy(A, cur)
        d += 1
    return d


def tau(A: Algebra, M: IndecModule) -> IndecModule | None:
    """Auslander-Reiten translate; zero (None) exactly for projectives.

    For Nakayama algebras tau shifts the top one arrow down, keeping the
    length.
    """
    A.check_module(M)
    if A.is_projective(M):
        return None
    return IndecModule(A.down(M.top), M.length)


def tau_inv(A: Algebra, M: IndecModule) -> IndecModule | None:
    A.check_module(M)
    if A.is_injective(M):
        return None
    return IndecModule(A.up(M.top), M.length)


def ext1_dim(A: Algebra, M: IndecModule, N: IndecModule) -> int:
    """dim Ext^1(M, N) from 0 -> Omega M -> P(top M) -> M -> 0.

    Applying Hom(-, N) gives dim Ext^1 = hom(Omega M, N) - hom(P, N) + hom(M, N).
    """
    A.check_module(M)
    A.check_module(N)
    if A.is_projective(M):
        return 0
    omega = syzygy(A, M)
    cover = A.projective(M.top)
    return hom_dim(A, omega, N) - hom_dim(A, cover, N) + hom_dim(A, M, N)


def ext_dim(A: Algebra, M: IndecModule, N: IndecModule, i: int = 1) -> int:
    """dim Ext^i for i >= 1, by dimension shift along the syzygy chain."""
    if i < 1:
        raise AlgebraError(f"ext_dim needs i >= 1, got {i}")
    cur: IndecModule | None = M
    for _ in range(i - 1):
        cur = syzygy(A, cur)
        if cur is None:
            return 0
    return ext1_dim(A, cur, N)


def ext1_total(A: Algebra, S: ModuleSet, T: ModuleSet) -> int:
    """Sum of dim Ext^1(X, Y) over summands X of S and Y of T."""
    return sum(ext1_dim(A, X, Y) for X in S for Y in T)


def global_dimension(A: Algebra) -> int | float:
    dims = [proj_dim(A, A.simple(i)) for i in A.vertices]
    return max(dims)


def regular_module(A: Algebra) -> ModuleSet:
    return ModuleSet.of(A.projective(i) for i in A.vertices)


def regular_i0(A: Algebra) -> ModuleSet:
    """I0 = basic version of the injective envelope of the regular module."""
    return ModuleSet.of(A.injective_env_vertex(A.socle_vertex(A.projective(i))) for i in A.vertices)


def regular_i1(A: Algebra) -> ModuleSet:
    """I1 = basic version of the next term in the minimal injective resolution of A."""
    mods = []
    for i in A.vertices:
        cos = cosyzygy(A, A.projective(i))
        if cos is not None:
            mods.append(A.injective_env_vertex(A.socle_vertex(cos)))
    return ModuleSet.of(mods)


@dataclass(frozen=True)
class GorensteinProfile:
    """Shape of the start of the minimal injective coresolution of the algebra."""

    gldim: int | float
    i0: ModuleSet
    i1: ModuleSet
    i0_projective: bool
    i1_projective: bool
    is_1_gorenstein: bool
    is_auslander: bool


def gorenstein_profile(A: Algebra) -> GorensteinProfile:
    """Global dimension plus projectivity of I0 and I1.

    `is_1_gorenstein` means I0 is projective; `is_auslander` additionally
    needs I1 projective and global dimension <= 2.
    """
    gldim = global_dimension(A)
    i0 = regular_i0(A)
    i1 = regular_i1(A)
    i0_proj = all(A.is_projective(m) for m in i0)
    i1_proj = all(A.is_projective(m) for m in i1)
    return GorensteinProfile(
        gldim=gldim,
        i0=i0,
        i1=i1,
        i0_projective=i0_proj,
        i1_projective=i1_proj,
        is_1_gorenstein=i0_proj,
        is_auslander=bool(gldim <= 2 and i0_proj and i1_proj),
    )
