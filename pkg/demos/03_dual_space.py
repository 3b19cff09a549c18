"""The dual poset X(H), the embedding phi and the relation of a morphism."""

from hilbert_ext import Morphism, g4, h3
from hilbert_ext import _bits
from hilbert_ext.duality import (
    epsilon,
    functional_check,
    h_space_check,
    implies,
    phi,
    relation_of,
    upset_algebra,
)

H, G = h3(), g4()

X, images = phi(G)
print("points of X(G4):")
for i in range(len(X)):
    print(f"  P{i} = {X.show(i)}")
for a in G.elements:
    print(f"  phi({G.label(a)}) = {X.show_points(images[a])}")

ups = upset_algebra(X)
print("\nX(G4) has", len(ups.members), "upsets")
Pa, Pb = images[G.element("a")], images[G.element("b")]
print("{Pa} => empty =", X.show_points(implies(X, Pa, 0)))

for alg in (H, G):
    print(f"\n{alg.name}: dual space checks", h_space_check(alg).ok, "| round trip", epsilon(alg).ok)

# R_f relates points of the codomain to points of the domain
f = Morphism(H, G, (G.element("1"), G.element("a"), G.element("b")))
R = relation_of(f)
print("\nR_f:")
for i, j in R.pairs():
    print(f"  {R.source.show(i)} -> {R.target.show(j)}")
print("R_f is functional:", functional_check(R))

# f(a) in P exactly when R_f(P) sits inside phi(a)
XH, imH = phi(H)
for i, P in enumerate(R.source):
    row = [H.label(a) for a in H.elements if _bits.is_subset(R.image[i], imH[a])]
    print(f"  R_f({G.show(P)}) inside phi of {row}")
