"""Fundamental weights as curve classes, and the dualities between them.

Run as: python3 demos/weights_and_dualities.py
"""

from delpezzo import (
    adjoint_weight_system,
    apply_word,
    central_character,
    coplanar_triples,
    cubic_form_support,
    degree,
    dual_partner,
    format_word,
    fundamental_weight_lift,
    is_minuscule,
    make_marked_lattice,
    orbit,
)

M = make_marked_lattice(6)

print("fundamental weight lifts for r=6:")
for i in range(1, 7):
    lift = fundamental_weight_lift(M, i)
    tags = []
    if is_minuscule(lift, M):
        tags.append(f"minuscule, orbit size {len(orbit(lift.vector, M))}")
    print(f"  w{i} -> {str(lift.vector):24} degree {degree(lift.vector, M)}  "
          f"center {central_character(lift, M)}  {' '.join(tags)}")

# the adjoint system sits at kappa - (highest root)
system = adjoint_weight_system(M)
print(f"\nadjoint dimension {system.dimension}, highest weight lift {system.highest}")
for r in range(4, 9):
    print(f"  r={r}: adjoint dimension {adjoint_weight_system(make_marked_lattice(r)).dimension}")

# w1 and w5 are exchanged by duality; the witness is an exact identity
witness = dual_partner(1, M)
w1 = fundamental_weight_lift(M, 1).vector
w5 = fundamental_weight_lift(M, witness.partner).vector
moved = apply_word(witness.word, w5, M)
print(f"\nw1 is dual to w{witness.partner}:")
print(f"  {w1} + {moved} = {witness.multiple} * kappa")
assert w1 + moved == witness.multiple * M.kappa
print(f"  witness word: '{format_word(witness.word)}'")

print("\nduality table for r=6:", {i: dual_partner(i, M).partner for i in range(1, 7)})

# the 45 weight triples of the 27-dimensional system match the coplanar triples
support = cubic_form_support(M)
assert set(support) == set(coplanar_triples(M))
print(f"\ncubic form support: {len(support)} weight triples, "
      "equal to the coplanar line triples")
