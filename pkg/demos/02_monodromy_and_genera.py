"""Monodromy data, induced covers, ramification, and closed-form predictions.

A datum lists the branch-point monodromies as signed permutations; inducing
along a weight orbit gives a concrete cover of the line. Everything here is
combinatorial: ramification comes from cycle types and the genus from the
usual Euler-characteristic count.
"""

from prymlab import cover, weyl
from prymlab.cover import induce, predict, ramification, random_simple
from prymlab.weyl import OrbitKind

# a seeded random tower: degree-2 over degree-3, four short and six long points
datum = random_simple(3, 4, 6, seed=1)
print("generators (images of 1..n):")
for g in datum.gens:
    kind = weyl.reflection_kind(g)
    print("  ", g.to_list(), "->", kind[0] if kind else "not a reflection")

print()
print("== induced covers ==")
for kind in OrbitKind:
    cm = induce(datum, kind)
    comps = cover.components(cm)
    if len(comps) == 1:
        print(f"{kind.value:>12}: degree {cm.degree:>2}, genus {cover.genus(cm)}")
    else:
        sizes = [len(c) for c in comps]
        print(f"{kind.value:>12}: degree {cm.degree:>2}, splits {sizes}")

print()
print("== ramification of the degree-8 cover ==")
rep = ramification(induce(datum, OrbitKind.SPINOR))
for i, (kind, ct) in enumerate(zip(rep.reflection_kinds, rep.cycle_types)):
    twos = sum(1 for c in ct if c == 2)
    print(f"branch point {i}: {kind:>5} reflection, {twos} transpositions upstairs")

print()
print("== closed-form predictions ==")
pred = predict(3, 4, 6, 0)
print("genera:", pred.genera)
print("dims:  ", pred.dims)
for name, chain in pred.types.items():
    print(f"type {name}: {chain}")

print()
print("same counts over a genus-2 base (formula evaluation only):")
pred2 = predict(3, 4, 6, 2)
for name, chain in pred2.types.items():
    print(f"type {name}: {chain}")
for note in pred2.notes:
    print("note:", note)
