"""Auslander algebras of radical-square-zero Nakayama algebras.

For a connected radical-square-zero Nakayama algebra L with n simples the
Auslander algebra G = End(sum of all indecomposables) is again Nakayama,
and its Kupisch series has a closed form:

* L linear, n >= 2: G is linear on 2n-1 vertices with series
  (1, 2, 2, 3, 2, 3, ..., 2, 3, 2) -- after the leading (1, 2), entry j
  is 2 for odd j and 3 for even j.  Vertex 2k-1 carries S(k), vertex 2k
  carries P(k+1).
* L cyclic: G is cyclic on 2n vertices with series (3, 2, 3, 2, ...).
  Vertex 2k-1 carries P(k), vertex 2k carries S(k).

The closed form is asserted against the matrix oracle (`end_algebra` /
`quiver_of`) in the test suite, not trusted blindly.  Everything
downstream (the bijection onto support tau-tilting pairs of the quotient
by the projective-injectives, and the tilting counts) is computed from
the Kupisch model.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    Algebra,
    AlgebraError,
    IndecModule,
    ModuleSet,
)
from .homology import gorenstein_profile
from .tau_tilting import SupportPair, enumerate_sttilt_over
from .tilting import (
    TiltingRecord,
    enumerate_tilting,
    is_tilting,
    minimal_tilting,
    summand_shape_check,
)


@dataclass(frozen=True)
class AuslanderResult:
    """The Auslander algebra of L with its module dictionary.

    `dictionary[v]` is the L-module whose Hom-functor is the projective of
    gamma at vertex v; `projinj` are the gamma-vertices whose projective
    is also injective (computed intrinsically from the Kupisch model).
    """

    lam: Algebra
    gamma: Algebra
    dictionary: dict[int, IndecModule]
    projinj: frozenset[int]


def auslander_algebra(lam: Algebra) -> AuslanderResult:
    """Kupisch model of the Auslander algebra of a connected rsz Nakayama algebra."""
    n = lam.n
    if lam.kind == "linear":
        expected = (1,) + (2,) * (n - 1)
        if lam.c != expected:
            raise AlgebraError(
                f"unsupported input: need the connected radical-square-zero series {expected}"
            )
        if n == 1:
            gamma = Algebra("linear", (1,))
            dictionary = {1: lam.simple(1)}
        else:
            series = [1, 2] + [2 if j % 2 else 3 for j in range(3, 2 * n)]
            gamma = Algebra("linear", tuple(series))
            dictionary = {}
            for k in range(1, n + 1):
                dictionary[2 * k - 1] = lam.simple(k)
                if k < n:
                    dictionary[2 * k] = lam.projective(k + 1)
    elif lam.kind == "cyclic":
        if any(ci != 2 for ci in lam.c):
            raise AlgebraError("unsupported input: need the radical-square-zero series (2, ..., 2)")
        series = [3 if j % 2 else 2 for j in range(1, 2 * n + 1)]
        gamma = Algebra("cyclic", tuple(series))
        dictionary = {}
        for k in range(1, n + 1):
            dictionary[2 * k - 1] = lam.projective(k)
            dictionary[2 * k] = lam.simple(k)
    else:
        raise AlgebraError(f"unknown kind {lam.kind!r}")
    projinj = gamma.projective_injective_vertices()
    return AuslanderResult(lam=lam, gamma=gamma, dictionary=dictionary, projinj=projinj)


def thm25_map(res: AuslanderResult, ms: ModuleSet) -> SupportPair:
    """Image of a tilting module under the bijection onto support pairs.

    Each summand maps to its largest quotient with no composition factor
    at a projective-injective vertex (possibly zero); the kill set is the
    complement of the surviving tops, i.e. the projective-injective
    vertices together with the unused surviving vertices.
    """
    gamma = res.gamma
    ok, why = is_tilting(gamma, ms)
    if not ok:
        raise AlgebraError(f"not a tilting module: {why}")
    images = []
    for m in ms:
        layers = gamma.layers(m)
        k = 0
        while k < len(layers) and layers[k] not in res.projinj:
            k += 1
        if k:
            images.append(IndecModule(m.top, k))
    modules = ModuleSet.of(images)
    used_tops = {m.top for m in modules}
    killed = frozenset(v for v in gamma.vertices if v not in used_tops)
    return SupportPair(modules, killed)


@dataclass(frozen=True)
class BijectionReport:
    """Outcome of matching tilting modules against support pairs."""

    tilting_count: int
    sttilt_count: int
    injective: bool
    surjective: bool
    passed: bool
    matching: tuple[tuple[ModuleSet, SupportPair], ...]
    missing: tuple[SupportPair, ...]
    extra: tuple[SupportPair, ...]


def verify_bijection(res: AuslanderResult) -> BijectionReport:
    """Match tilt(gamma) against sttilt(gamma / projective-injectives).

    Images are normalized to kill sets relative to the quotient, then
    compared as sets against the independent support-pair enumeration.
    """
    gamma = res.gamma
    profile = gorenstein_profile(gamma)
    if not (profile.is_auslander and profile.is_1_gorenstein):
        raise AlgebraError("the bijection needs an Auslander 1-Gorenstein algebra")
    records = enumerate_tilting(gamma)
    targets = enumerate_sttilt_over(gamma, res.projinj)
    matching = []
    images = []
    for rec in records:
        pair = thm25_map(res, rec.modules)
        relative = SupportPair(pair.modules, frozenset(pair.killed - res.projinj))
        matching.append((rec.modules, relative))
        images.append(relative)
    image_set = set(images)
    target_set = set(targets)
    injective = len(image_set) == len(images)
    surjective = image_set == target_set
    missing = tuple(sorted(target_set - image_set, key=SupportPair.sort_key))
    extra = tuple(sorted(image_set - target_set, key=SupportPair.sort_key))
    return BijectionReport(
        tilting_count=len(records),
        sttilt_count=len(targets),
        injective=injective,
        surjective=surjective,
        passed=injective and surjective and len(records) == len(targets),
        matching=tuple(matching),
        missing=missing,
        extra=extra,
    )


@dataclass(frozen=True)
class CountReport:
    """Tilting count of one Auslander algebra against the closed form 2^n / 2^(n-1)."""

    n: int
    kind: str
    count: int
    expected: int
    shape_ok: bool
    minimal_ok: bool
    passed: bool
    records: tuple[TiltingRecord, ...]


def verify_counts(n: int, kind: str, bound: int = 10) -> CountReport:
    """Count tilting modules over the Auslander algebra of the rsz algebra.

    Expected counts: 2^(n-1) for linear, 2^n for cyclic.  Also re-checks
    the summand shapes and the minimal tilting module.  `bound` caps n
    (the enumeration is exponential).
    """
    if n < 1:
        raise AlgebraError(f"need n >= 1, got {n}")
    if n > bound:
        raise AlgebraError(f"n = {n} exceeds the configured bound {bound}")
    from .algebra import make_rsz_nakayama

    lam = make_rsz_nakayama(n, kind)
    res = auslander_algebra(lam)
    records = enumerate_tilting(res.gamma)
    expected = 2 ** (n - 1) if kind == "linear" else 2 ** n
    shape_ok = all(not summand_shape_check(res.gamma, rec.modules) for rec in records)
    try:
        minimal_tilting(res.gamma, check=True)
        minimal_ok = True
    except Exception:
        minimal_ok = False
    return CountReport(
        n=n,
        kind=kind,
        count=len(records),
        expected=expected,
        shape_ok=shape_ok,
        minimal_ok=minimal_ok,
        passed=(len(records) == expected) and shape_ok and minimal_ok,
        records=tuple(records),
    )
