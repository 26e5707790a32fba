"""A walk through the line geometry of the rank-6 marked lattice.

Run as: python3 demos/tour_of_the_27_lines.py
"""

from delpezzo import (
    blowdown_basis,
    coplanar_triples,
    disjoint_line_sets,
    double_sixes,
    euler_char,
    inner,
    lines,
    make_marked_lattice,
    root_from_six,
)

M = make_marked_lattice(6)

all_lines = lines(M)
print(f"line classes on the degree-3 lattice: {len(all_lines)}")
print("first few:", ", ".join(str(c.vector) for c in all_lines[:5]), "...")

# every line is rational: euler characteristic 1
assert all(euler_char(c.vector, M) == 1 for c in all_lines)

triples = coplanar_triples(M)
print(f"\ncoplanar triples (three mutually meeting lines summing to kappa): {len(triples)}")
sample = sorted(triples[0])
print("sample triple:", ", ".join(str(v) for v in sample))
print("pairwise meetings:", [inner(a, b) for a in sample for b in sample if a < b])

counts = {}
for t in triples:
    for v in t:
        counts[v] = counts.get(v, 0) + 1
print("each line lies in", set(counts.values()), "triples")

sixes = disjoint_line_sets(M, 6)
print(f"\nsixes of pairwise disjoint lines: {len(sixes)}")

pairs = double_sixes(M)
print(f"double sixes: {len(pairs)}")
first, second = pairs[0]
rho = root_from_six(first, M)
print("a double six and its root:", str(rho.vector))
print("partner six carries the opposite root:", str(root_from_six(second, M).vector))

# any six contracts to a plane marking: gamma plays the role of a line class
basis = blowdown_basis([M.e(i) for i in range(1, 7)], M)
print("\ncontracting e1..e6 gives gamma =", basis.gamma)

other = next(s for s in sixes if M.e(1) not in s)
alt = blowdown_basis(other, M)
print("a different six contracts with gamma =", alt.gamma)
print("gamma^2 =", inner(alt.gamma, alt.gamma), " gamma.eps =",
      {inner(alt.gamma, e) for e in alt.epsilons})
