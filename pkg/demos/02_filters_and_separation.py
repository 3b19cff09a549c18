"""Implicative filters, irreducible filters and separation witnesses."""

from hilbert_ext import Morphism, g4, h3
from hilbert_ext.filters import (
    all_filters,
    extend_along,
    extend_along_star,
    generated_filter,
    irreducible_filters,
    separate,
    separate_arrow,
)

H, G = h3(), g4()

print("filters of G4:", [G.show(F) for F in all_filters(G)])
print("irreducible:  ", [G.show(F) for F in irreducible_filters(G)])
print("irreducible filters of H3:", [H.show(F) for F in irreducible_filters(H)])
# {1} is a filter of H3 but it is the meet of {1,x} and {1,y}

print("\nfilter generated by a in G4:", G.show(generated_filter(G, G.mask("a"))))

# an irreducible filter containing {1} and missing the ideal {x}
print("separate {1} from {x} in H3:", H.show(separate(H, H.mask("1"), H.mask("x"))))
print("separate {1} from {a,b,c} in G4:", G.show(separate(G, G.mask("1"), G.mask("abc"))))

# c -> a is not in {1}, so some irreducible filter holds c and misses a
c, a = G.element("c"), G.element("a")
print("witness for c -> a outside {1}:", G.show(separate_arrow(G, G.mask("1"), c, a)))

# pushing an irreducible filter of the domain along a morphism
f = Morphism(H, G, (G.element("1"), G.element("a"), G.element("b")))
K = extend_along(f, G.mask("1"), H.mask("1x"))
print("\nK over {1,x} along f:", G.show(K), "with f^-1(K) =", H.show(f.preimage(K)))
K = extend_along_star(f, G.mask("1"), H.mask("1"))
print("K over {1} = {1,x} & {1,y}:", G.show(K), "with f^-1(K) =", H.show(f.preimage(K)))
