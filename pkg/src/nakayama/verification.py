"""Named verification assertions covering the headline claims.

Each function returns a list of dicts with keys "name", "passed" and
"detail", so the CLI can emit one JSON record per claim.  The sweeps are
sized for interactive use; the test suite re-runs them at the full
acceptance bounds.
"""

from __future__ import annotations

import itertools

from .algebra import IndecModule, iter_algebras, make_rsz_nakayama
from . import homology as H
from . import oracle as O
from .auslander import auslander_algebra, verify_bijection, verify_counts
from .tau_tilting import enumerate_sttilt
from .tilting import enumerate_tilting, proj_mutation_sequence


def _assertion(name: str, passed: bool, detail: str) -> dict:
    return {"name": name, "passed": bool(passed), "detail": detail}


def construction_assertions(max_n: int) -> list[dict]:
    """Auslander algebra construction: dictionary, projective-injectives, quotient."""
    from .algebra import quotient_algebra

    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            lam = make_rsz_nakayama(n, kind)
            res = auslander_algebra(lam)
            gamma = res.gamma
            problems = []
            if sorted(res.dictionary) != list(gamma.vertices):
                problems.append("dictionary does not cover the vertices")
            images = list(res.dictionary.values())
            if sorted(set(images)) != sorted(lam.indecomposables()):
                problems.append("dictionary is not a bijection onto ind(Lambda)")
            for v in gamma.vertices:
                if (v in res.projinj) != lam.is_injective(res.dictionary[v]):
                    problems.append(f"projective-injective flag wrong at vertex {v}")
                    break
            q = quotient_algebra(gamma, res.projinj)
            simples = sum(comp.n for comp in q.components)
            expected_simples = n if kind == "cyclic" else n - 1
            if simples != expected_simples:
                problems.append(f"quotient has {simples} simples, expected {expected_simples}")
            if any(comp.c != (1,) * comp.n for comp in q.components):
                problems.append("quotient by the projective-injectives is not semisimple")
            out.append(
                _assertion(
                    f"auslander_construction_{kind}_n{n}",
                    not problems,
                    problems[0] if problems else f"gamma={gamma} projinj={sorted(res.projinj)}",
                )
            )
    return out


def shape_assertions(max_n: int) -> list[dict]:
    """Every tilting summand is projective or the simple socle of a projective-injective."""
    from .tilting import summand_shape_check

    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            gamma = auslander_algebra(make_rsz_nakayama(n, kind)).gamma
            offenders = []
            checked = 0
            for rec in enumerate_tilting(gamma):
                checked += 1
                bad = summand_shape_check(gamma, rec.modules)
                if bad:
                    offenders.append(f"{rec.modules}: {bad[0]}")
            out.append(
                _assertion(
                    f"tilting_summand_shape_{kind}_n{n}",
                    not offenders,
                    f"checked {checked} tilting modules"
                    + (f"; first offender {offenders[0]}" if offenders else ""),
                )
            )
    return out


def count_assertions(max_n: int) -> list[dict]:
    """Tilting counts over the Auslander algebras: 2^(n-1) linear, 2^n cyclic."""
    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            rep = verify_counts(n, kind, bound=max(10, max_n))
            out.append(
                _assertion(
                    f"tilting_count_{kind}_n{n}",
                    rep.passed,
                    f"count={rep.count} expected={rep.expected} "
                    f"shapes={'ok' if rep.shape_ok else 'bad'} "
                    f"minimal={'ok' if rep.minimal_ok else 'bad'}",
                )
            )
    return out


def golden_list_assertions() -> list[dict]:
    """The two n=3 Auslander algebras have exactly the published tilting lists."""
    M = IndecModule
    golden = {
        "linear": [
            {M(1, 1), M(2, 2), M(3, 2), M(4, 3), M(5, 2)},
            {M(1, 1), M(2, 2), M(4, 1), M(4, 3), M(5, 2)},
            {M(2, 1), M(2, 2), M(3, 2), M(4, 3), M(5, 2)},
            {M(2, 1), M(2, 2), M(4, 1), M(4, 3), M(5, 2)},
        ],
        "cyclic": [
            {M(1, 3), M(2, 2), M(3, 3), M(4, 2), M(5, 3), M(6, 2)},
            {M(1, 1), M(1, 3), M(2, 2), M(3, 3), M(4, 2), M(5, 3)},
            {M(1, 3), M(2, 2), M(3, 3), M(5, 1), M(5, 3), M(6, 2)},
            {M(1, 3), M(3, 1), M(3, 3), M(4, 2), M(5, 3), M(6, 2)},
            {M(1, 1), M(1, 3), M(2, 2), M(3, 3), M(5, 1), M(5, 3)},
            {M(1, 3), M(3, 1), M(3, 3), M(5, 1), M(5, 3), M(6, 2)},
            {M(1, 1), M(1, 3), M(3, 1), M(3, 3), M(4, 2), M(5, 3)},
            {M(1, 1), M(1, 3), M(3, 1), M(3, 3), M(5, 1), M(5, 3)},
        ],
    }
    out = []
    for kind, expected in golden.items():
        res = auslander_algebra(make_rsz_nakayama(3, kind))
        got = [set(rec.modules) for rec in enumerate_tilting(res.gamma)]
        ok = len(got) == len(expected) and all(e in got for e in expected)
        out.append(
            _assertion(
                f"golden_tilting_list_{kind}_n3",
                ok,
                f"enumerated {len(got)} tilting modules over {res.gamma}",
            )
        )
    # The Auslander algebra of K[x]/(x^2) has exactly two tilting modules.
    res1 = auslander_algebra(make_rsz_nakayama(1, "cyclic"))
    recs = enumerate_tilting(res1.gamma)
    sets = [set(rec.modules) for rec in recs]
    ok = len(recs) == 2 and {M(1, 1), M(1, 3)} in sets and {M(1, 3), M(2, 2)} in sets
    out.append(_assertion("dual_numbers_two_tilting", ok, f"count={len(recs)} over {res1.gamma}"))
    return out


def mutation_shape_assertions(max_n: int) -> list[dict]:
    """Projective non-injective summands mutate to the envelope cokernel, a simple."""
    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            gamma = auslander_algebra(make_rsz_nakayama(n, kind)).gamma
            violations = []
            checked = 0
            for rec in enumerate_tilting(gamma):
                for p in rec.modules:
                    if not gamma.is_projective(p) or gamma.is_injective(p):
                        continue
                    checked += 1
                    try:
                        seq = proj_mutation_sequence(gamma, rec.modules, p)
                    except Exception as exc:  # structural failure
                        violations.append(f"{rec.modules} at {p}: {exc}")
                        continue
                    if seq.mutated is not None and not gamma.is_simple(seq.cokernel):
                        violations.append(f"{rec.modules} at {p}: cokernel {seq.cokernel} not simple")
            out.append(
                _assertion(
                    f"proj_mutation_shape_{kind}_n{n}",
                    not violations,
                    f"checked {checked} projective summand mutations"
                    + (f"; first violation: {violations[0]}" if violations else ""),
                )
            )
    return out


def minimal_tilting_assertions(max_n: int) -> list[dict]:
    """The formula I0 + cosyzygy(A) is the unique Gen-minimal tilting module."""
    from .tilting import minimal_tilting

    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            gamma = auslander_algebra(make_rsz_nakayama(n, kind)).gamma
            try:
                rec = minimal_tilting(gamma, check=True)
                out.append(
                    _assertion(
                        f"minimal_tilting_{kind}_n{n}", True, f"minimum is {rec.modules}"
                    )
                )
            except Exception as exc:
                out.append(_assertion(f"minimal_tilting_{kind}_n{n}", False, str(exc)))
    return out


def semisimple_sttilt_assertions(max_n: int = 10) -> list[dict]:
    """A semisimple algebra with n simples has exactly 2^n support pairs."""
    from .algebra import Algebra

    out = []
    for n in range(1, max_n + 1):
        A = Algebra("linear", (1,) * n)
        pairs = enumerate_sttilt(A)
        expected = 2 ** n
        zero_ok = any(len(p.modules) == 0 and len(p.killed) == n for p in pairs)
        out.append(
            _assertion(
                f"semisimple_sttilt_n{n}",
                len(pairs) == expected and zero_ok,
                f"count={len(pairs)} expected={expected} zero_pair={'yes' if zero_ok else 'missing'}",
            )
        )
    return out


def bijection_assertions(max_n: int) -> list[dict]:
    """Tilting modules biject onto support pairs of the projective-injective quotient."""
    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            res = auslander_algebra(make_rsz_nakayama(n, kind))
            rep = verify_bijection(res)
            out.append(
                _assertion(
                    f"tilting_sttilt_bijection_{kind}_n{n}",
                    rep.passed,
                    f"tilting={rep.tilting_count} sttilt={rep.sttilt_count} "
                    f"injective={rep.injective} surjective={rep.surjective}",
                )
            )
    return out


def profile_assertions(max_n: int) -> list[dict]:
    """Auslander algebras are Auslander 1-Gorenstein; cyclic rsz algebras are
    1-Gorenstein of infinite global dimension (n >= 1)."""
    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            gamma = auslander_algebra(make_rsz_nakayama(n, kind)).gamma
            prof = H.gorenstein_profile(gamma)
            out.append(
                _assertion(
                    f"gamma_profile_{kind}_n{n}",
                    prof.is_auslander and prof.is_1_gorenstein and prof.gldim <= 2,
                    f"gldim={prof.gldim} auslander={prof.is_auslander}",
                )
            )
    for n in range(1, max_n + 1):
        lam = make_rsz_nakayama(n, "cyclic")
        prof = H.gorenstein_profile(lam)
        out.append(
            _assertion(
                f"cyclic_rsz_profile_n{n}",
                prof.is_1_gorenstein and prof.gldim == H.INFINITE,
                f"gldim={prof.gldim} 1-gorenstein={prof.is_1_gorenstein}",
            )
        )
    return out


def oracle_sweep_assertions(max_n: int, max_entry: int = 4) -> list[dict]:
    """Closed forms vs the matrix oracle, exhaustively over small Kupisch series."""
    algebras = 0
    pairs = 0
    first_fail = None
    for A in iter_algebras(max_n, max_entry):
        algebras += 1
        indecs = list(A.indecomposables())
        for m in indecs:
            if H.syzygy(A, m) != O.syzygy_oracle(A, m):
                first_fail = first_fail or f"syzygy {A} {m}"
            if H.tau(A, m) != O.tau_via_dtr(A, m):
                first_fail = first_fail or f"tau {A} {m}"
        for m, nn in itertools.product(indecs, repeat=2):
            pairs += 1
            if H.hom_dim(A, m, nn) != O.hom_space_dim(A, m, nn):
                first_fail = first_fail or f"hom {A} {m} {nn}"
            if H.ext1_dim(A, m, nn) != O.ext1_space_dim(A, m, nn):
                first_fail = first_fail or f"ext1 {A} {m} {nn}"
    detail = f"algebras={algebras} ordered_pairs={pairs}"
    if first_fail:
        detail += f"; first failure: {first_fail}"
    return [_assertion(f"oracle_equivalence_N{max_n}_entries{max_entry}", first_fail is None, detail)]


def end_algebra_assertions(max_n: int) -> list[dict]:
    """The Kupisch model of the Auslander algebra matches End-algebra matrices."""
    out = []
    for kind in ("linear", "cyclic"):
        for n in range(1, max_n + 1):
            lam = make_rsz_nakayama(n, kind)
            res = auslander_algebra(lam)
            gamma = res.gamma
            objects = [res.dictionary[v] for v in gamma.vertices]
            table = O.end_algebra(lam, objects)
            q = O.quiver_of(table)
            model_arrows = {
                (v, gamma.down(v)): 1 for v in gamma.vertices if gamma.kupisch(v) >= 2
            }
            blocks_ok = all(
                q.block_dims[(a, b)] == gamma.path_count(b, a)
                for a in gamma.vertices
                for b in gamma.vertices
            )
            ok = (
                q.total_dim == gamma.dimension()
                and q.arrow_counts == model_arrows
                and blocks_ok
            )
            out.append(
                _assertion(
                    f"auslander_end_algebra_{kind}_n{n}",
                    ok,
                    f"total_dim={q.total_dim} model_dim={gamma.dimension()} arrows={'ok' if q.arrow_counts == model_arrows else 'bad'}",
                )
            )
    return out


def paper_report(max_n: int = 4, with_oracle: bool = False) -> list[dict]:
    """The full battery of named assertions, bounded by max_n.

    Order: construction checks, tilting shape and mutation suites, the
    minimal tilting module, semisimple support counts, the bijection,
    the tilting counts with the published n=3 lists and the base case,
    Gorenstein profiles, and optionally the exhaustive oracle sweep.
    """
    out = []
    out += construction_assertions(min(max_n, 6))
    out += shape_assertions(min(max_n, 6))
    out += mutation_shape_assertions(min(max_n, 6))
    out += minimal_tilting_assertions(min(max_n, 5))
    out += semisimple_sttilt_assertions(10)
    out += bijection_assertions(min(max_n, 6))
    out += count_assertions(max_n)
    out += golden_list_assertions()
    out += profile_assertions(min(max_n, 6))
    if with_oracle:
        out += oracle_sweep_assertions(min(max_n, 6))
        out += end_algebra_assertions(min(max_n, 5))
    return out
