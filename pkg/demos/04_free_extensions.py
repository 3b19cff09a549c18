"""The IS, gH, Heyting and dagger extensions of small Hilbert algebras."""

from hilbert_ext import chain, enrich, g4, h3, validate
from hilbert_ext.extensions import extend_dagger, extend_ghey, extend_hey, extend_is, fc, is_envelope, x_star

H, G = h3(), g4()

ext = extend_is(H)
print("H3^IS has", len(ext), "elements:", ext.presented.labels)
print("  equal to FC(H3):", ext.members == fc(H), "| envelope:", is_envelope(ext))
print("  embedding:", {H.label(a): ext.presented.label(k) for a, k in enumerate(ext.embedding)})

Gs = enrich(G, "hils")
ext = extend_ghey(Gs)
print("\nG4^GHey has", len(ext), "elements; valid gH algebra:", validate(ext.presented, "ghey").ok)

ext = extend_hey(chain(3, "hils0"))
print("chain3^Hey has", len(ext), "elements")

for alg in (H, G):
    Xs = x_star(alg)
    ext = extend_dagger(alg)
    print(f"\n{alg.name}: X* = {[alg.show(F) for F in Xs]}")
    print(f"  dagger extension has {len(ext)} elements")
