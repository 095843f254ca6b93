"""
Nakayama algebras from Kupisch series
=====================================

An algebra is a pair (kind, c): kind is "linear" or "cyclic" and c is the
Kupisch series, the list of lengths of the indecomposable projectives.
Every indecomposable module is uniserial and written M(top, length).
"""

import json

from nakayama import (
    Algebra,
    AlgebraError,
    IndecModule,
    algebra_from_json,
    algebra_to_json,
    make_rsz_nakayama,
    quotient_algebra,
)

# The two radical-square-zero families the rest of the demos build on.
lam_lin = make_rsz_nakayama(3, "linear")   # linear(1, 2, 2)
lam_cyc = make_rsz_nakayama(3, "cyclic")   # cyclic(2, 2, 2)
print("linear rsz n=3:", lam_lin, " dimension", lam_lin.dimension())
print("cyclic rsz n=3:", lam_cyc, " dimension", lam_cyc.dimension())

# The Kupisch condition c[i-1] >= c[i] - 1 is enforced on construction.
try:
    Algebra("linear", (1, 3, 2))
except AlgebraError as exc:
    print("rejected series:", exc)

# A richer algebra: the Kupisch model that demo 05 derives from lam_lin.
gamma = Algebra("linear", (1, 2, 2, 3, 2))
print("\ngamma =", gamma)
print("indecomposables:", " ".join(str(m) for m in gamma.indecomposables()))

# Uniserial structure of one module: composition layers top to socle.
m = IndecModule(4, 3)
print("\nlayers of", m, "=", gamma.layers(m))
print("radical:", gamma.radical(m))
print("socle vertex:", gamma.socle_vertex(m))
print("length-2 submodule:", gamma.submodule(m, 2))
print("length-1 quotient:", gamma.quotient_top(m, 1))

# Projectives, injectives and the modules that are both.
for v in gamma.vertices:
    tags = []
    p = gamma.projective(v)
    if gamma.is_injective(p):
        tags.append("projective-injective")
    print(f"P({v}) = {p}  injective envelope of {v}: {gamma.injective_env_vertex(v)}",
          " ".join(tags))

# Killing vertices gives a product of smaller linear Nakayama algebras.
q = quotient_algebra(gamma, {2, 4, 5})
print("\ngamma / (2,4,5) components:", [str(c) for c in q.components],
      "embedded at", q.embeds)

# Algebras serialize to a stable JSON shape, round-tripping exactly.
blob = json.dumps(algebra_to_json(gamma), sort_keys=True)
print("\nJSON:", blob)
print("round trip ok:", algebra_from_json(json.loads(blob)) == gamma)
