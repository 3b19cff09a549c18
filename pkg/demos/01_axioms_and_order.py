"""Hilbert algebras as tables: validation, natural order, derived joins."""

import numpy as np

from hilbert_ext import chain, enrich, g4, h3, validate
from hilbert_ext.algebra import FiniteAlgebra, natural_order

# Two small fixtures. H3 is 1 with two incomparable elements below it;
# G4 is a "V" (a, b) under c under 1. Both use a->b = 1 if a<=b else b.
H, G = h3(), g4()
for alg in (H, G):
    print(alg.name, "arrow table (rows a, columns b, entries a->b):")
    print(np.array(alg.arrow))
    print("  valid Hilbert algebra:", validate(alg).ok)

# The order a <= b iff a->b = 1, as a boolean matrix
print("\nnatural order of G4 (row <= column):")
print(natural_order(G).astype(int))

# G4 has every binary join, so it can be read as a Hilbert algebra with supremum
G_join = enrich(G, "hils")
print("\nG4 joins:\n", np.array(G_join.join))
print("G4 as hils:", validate(G_join, "hils").ok)

# Breaking antisymmetry gets reported as a named axiom failure
rows = [list(r) for r in H.arrow]
x, y = H.element("x"), H.element("y")
rows[x][y] = rows[y][x] = H.one
broken = FiniteAlgebra(size=3, arrow=rows, one=H.one, labels=H.labels)
for failure in validate(broken).failures[:3]:
    print("  ", failure.describe(broken))

# Chains carry every structure at once
for variety in ("hil", "is", "ghey", "hey"):
    print(f"chain(4) as {variety}:", validate(chain(4, variety), variety).ok)
