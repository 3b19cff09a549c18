"""A Hilbert morphism whose upset map does not preserve unions."""

from hilbert_ext import Morphism, g4, h3, validate_morphism
from hilbert_ext.morphisms import hat_g

H, G = h3(), g4()
f = Morphism(H, G, (G.element("1"), G.element("a"), G.element("b")))
print("f: x -> a, y -> b, 1 -> 1 is a Hilbert morphism:", validate_morphism(f))

g = hat_g(f)
S, T = g.source, g.target
for U, V in g.failures("join")[:1]:
    print("U =", S.points.show_points(U), " V =", S.points.show_points(V))
    print("g(U | V)     =", T.points.show_points(g(U | V)))
    print("g(U) | g(V)  =", T.points.show_points(g(U) | g(V)))

for op in ("top", "meet", "arrow", "join"):
    print(f"preserves {op}:", g.preserves(op))
