"""
Homological calculus over a Nakayama algebra
============================================

Hom and Ext dimensions, syzygies, the Auslander-Reiten translate and
(co)syzygy walks all have closed forms for uniserial modules; this demo
prints the small worked examples the test suite freezes.
"""

from nakayama import (
    Algebra,
    IndecModule,
    INFINITE,
    ext1_dim,
    ext_dim,
    cosyzygy,
    global_dimension,
    gorenstein_profile,
    hom_dim,
    inj_dim,
    make_rsz_nakayama,
    proj_dim,
    syzygy,
    tau,
    tau_inv,
)

M = IndecModule
gamma = Algebra("linear", (1, 2, 2, 3, 2))

print("over", gamma)
print("hom(M(4,3), M(5,2)) =", hom_dim(gamma, M(4, 3), M(5, 2)))
print("hom(M(5,2), M(4,3)) =", hom_dim(gamma, M(5, 2), M(4, 3)))
print("ext1(M(4,1), M(3,2)) =", ext1_dim(gamma, M(4, 1), M(3, 2)))
print("ext2(M(3,1), M(1,1)) =", ext_dim(gamma, M(3, 1), M(1, 1), 2))

# Syzygy: kernel of the projective cover P(top) ->> M.
print("\nsyzygy(M(3,1)) =", syzygy(gamma, M(3, 1)))
print("syzygy(M(4,3)) =", syzygy(gamma, M(4, 3)), "(projective)")
print("cosyzygy(M(1,1)) =", cosyzygy(gamma, M(1, 1)))

# Projective and injective dimensions by walking the (co)syzygy orbit.
print("\npd M(4,1) =", proj_dim(gamma, M(4, 1)))
print("pd M(3,1) =", proj_dim(gamma, M(3, 1)))
print("id M(1,1) =", inj_dim(gamma, M(1, 1)))
print("gldim =", global_dimension(gamma))

# Over a self-injective cyclic algebra the orbits never terminate.
cyc = make_rsz_nakayama(3, "cyclic")
print("\nover", cyc, ": pd S(1) =", proj_dim(cyc, cyc.simple(1)),
      "(INFINITE is", INFINITE, ")")

# The AR translate shifts the top one step along the arrows; tau_inv undoes it.
dn = Algebra("cyclic", (3, 2))
print("\nover", dn)
for m in dn.indecomposables():
    t = tau(dn, m)
    back = "" if t is None else f"  tau_inv({t}) = {tau_inv(dn, t)}"
    print(f"tau({m}) = {t}{back}")

# Gorenstein profile: envelopes I0, I1 of the regular module and the flags
# built from them.  gamma is an Auslander algebra; the cyclic rsz is
# 1-Gorenstein with infinite global dimension.
for A in (gamma, cyc):
    prof = gorenstein_profile(A)
    print(f"\nprofile of {A}: gldim={prof.gldim} I0={prof.i0} I1={prof.i1}")
    print("  1-Gorenstein:", prof.is_1_gorenstein, " Auslander:", prof.is_auslander)
