"""Lifting morphisms to the extensions and checking the functor laws."""

from hilbert_ext import Morphism, chain, g4, h3, identity
from hilbert_ext.enumeration import enumerate_algebras
from hilbert_ext.extensions import extend_is
from hilbert_ext.morphisms import compose, lift, verify_functor_laws, verify_universal_property

H, G = h3(), g4()
f = Morphism(H, G, (G.element("1"), G.element("a"), G.element("b")))

for tag in ("is", "dagger"):
    L = lift(f, tag)
    print(f"f^{tag}: {len(L.source_ext)} -> {len(L.target_ext)} elements, map {L.map}, commutes: {L.intertwines()}")

# identity and composition instances
print("lift(id) is id:", lift(identity(H), "is").map == tuple(range(4)))
print("(id o f)^IS = f^IS:", lift(compose(identity(G), f), "is").map == lift(f, "is").map)

small = list(enumerate_algebras("hil", 3))
for tag in ("is", "dagger"):
    report = verify_functor_laws(small, tag)
    print(f"functor laws ({tag}) over {report.checked} cases:", report.ok)

# every morphism into an implicative semilattice factors uniquely through H3^IS
targets = [extend_is(H).presented, chain(2, "is"), chain(3, "is")]
report = verify_universal_property(H, targets, "is")
print(f"universal property over {report.checked} morphisms:", report.ok)
