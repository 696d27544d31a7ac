"""Tour of the presentation families.

Builds each family at small parameters, prints the text form, and shows a
round trip through the file format plus a Tietze simplification.
"""

from toricgroups import presentations as pres
from toricgroups.presentations import parse_presentation, serialize, tietze_simplify

print("Torus knot group G(2,3), three presentations of the same group:\n")
print("standard:")
print(serialize(pres.torus_standard(2, 3)))
print("classical (generators are meridians):")
print(serialize(pres.torus_classical(2, 3)))
print("dual:")
print(serialize(pres.torus_dual(2, 3)))

print("Toric reflection group W(2,3,4): kill the squares of the meridians.")
print(serialize(pres.toric(2, 3, 4)))

print("Parent J-group on s, t, u with the central chain s t u = t u s = u s t:")
print(serialize(pres.j_parent(2, 3, 4)))

print("Triangle Coxeter group and the two-generator form of its alternating subgroup:")
print(serialize(pres.coxeter_triangle(2, 3, 4)))
print(serialize(pres.alt_plus(2, 3, 4)))

print("The file format round-trips bit-exactly:")
text = serialize(pres.toric(3, 2, 3))
assert parse_presentation(text) == pres.toric(3, 2, 3)
print("  parse(serialize(p)) == p  for W(3,2,3)")

print("\nTietze simplification eliminates redundant generators:")
p = parse_presentation("gens: x y z\nrel: z y^-1 x\nrel: y x^-2\nrel: x^6")
q = tietze_simplify(p)
print(f"  {p.gens} with 3 relators  ->  {q.gens} with {[str(r) for r in q.relators]}")
