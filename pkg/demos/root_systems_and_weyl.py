"""Root systems of kappa-perp and the reflection group that acts on them.

Run as: python3 demos/root_systems_and_weyl.py
"""

from delpezzo import (
    connect_markings,
    dominant_representative,
    format_word,
    highest_root,
    make_marked_lattice,
    orbit,
    root_system,
    word_matrix,
)

for r in range(3, 9):
    M = make_marked_lattice(r)
    data = root_system(M)
    line = f"r={r}  type {str(data.dynkin):>5}  roots {len(data.all_roots):>3}"
    if data.highest is not None:
        line += f"  highest root {data.highest.vector}"
    print(line)

M = make_marked_lattice(6)
print("\nCartan matrix for r=6:")
for row in root_system(M).cartan:
    print("  ", row)

# one orbit sweeps out all 72 roots
alpha = M.simple_coroots[0]
print("\norbit of", alpha, "has", len(orbit(alpha, M)), "elements")

# descend a vector into the dominant chamber, remembering the path
v = M.e(1) - M.e(4)
rep, word = dominant_representative(v, M)
print(f"dominant representative of {v}: {rep} via word '{format_word(word)}'")

top = highest_root(M)
rep, _ = dominant_representative(top.vector, M)
assert rep == -top.vector
print("the dominant root representative is the lowest root:", rep)

# heights of the positive roots pile up into the usual staircase
from delpezzo import root_height

heights = {}
for x in root_system(M).positive:
    hgt = root_height(x, M)
    heights[hgt] = heights.get(hgt, 0) + 1
print("positive roots by height:", dict(sorted(heights.items())))

# an isometry given as a matrix factors back into simple reflections
word = (3, 1, 6, 2)
mat = word_matrix(word, M)
recovered = connect_markings(mat, M)
print(f"\nmatrix of '{format_word(word)}' factors as '{format_word(recovered)}'")
assert word_matrix(recovered, M) == mat
