"""From a shape to its initial ideal and facet complex, step by step."""

from polyrings.fixtures import load
from polyrings.polyomino import serialize
from polyrings.srcomplex import build_complex, f_vector, facets, hilbert_numerator
from polyrings.toric import initial_ideal, inner_minors, mono_str, variable_order

p = load("ex1")
print(serialize(p))

order = variable_order(p)
print("variable order:", order)
print("smallest variable:", order.smallest())
print()

print("inner 2-minors:")
for mn in inner_minors(p):
    print(" ", mn)

ii = initial_ideal(p)
print("lead terms under the order:", sorted(mono_str(g) for g in ii.generators))
print()

c = build_complex(p)
print("complex on", len(c.vertices), "vertices, facet dimension forces d =", c.d)
for f in facets(c):
    print(" ", sorted(f))
print("f-vector:", f_vector(c))
print("numerator of the Hilbert series:", hilbert_numerator(c))
print("its degree gives the regularity; its value at 1 the multiplicity.")
