"""Counting small algebras up to isomorphism and cross-checking by brute force."""

import time

from hilbert_ext import Variety
from hilbert_ext.enumeration import canonical_form, enumerate_algebras, naive_catalog

for variety in Variety:
    cat = enumerate_algebras(variety, 5)
    print(f"{variety.value:6s}", [cat.counts[n] for n in range(1, 6)])

start = time.perf_counter()
agree = all(
    [canonical_form(a) for a in enumerate_algebras(v, 4)] == [canonical_form(a) for a in naive_catalog(v, 4)]
    for v in Variety
)
print(f"\nagrees with brute force up to size 4: {agree} ({time.perf_counter() - start:.1f}s)")

# a catalog of 6-element Hilbert algebras takes a few seconds
start = time.perf_counter()
six = enumerate_algebras("hil", 6).of_size(6)
print(f"{len(six)} Hilbert algebras of size 6 ({time.perf_counter() - start:.1f}s)")
