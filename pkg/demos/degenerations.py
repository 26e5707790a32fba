"""How rational double point configurations regroup the 27 lines.

Run as: python3 demos/degenerations.py
"""

from collections import Counter

from delpezzo import (
    incident_lines,
    lines,
    make_configuration,
    make_marked_lattice,
    orbit_decomposition,
    parse_vector,
)

M = make_marked_lattice(6)
line_vectors = [c.vector for c in lines(M)]


def show(curve_texts):
    curves = [parse_vector(t, 6) for t in curve_texts]
    config = make_configuration(curves, M)
    parts = orbit_decomposition(config, line_vectors, M)
    moved = incident_lines(config, M)
    print(f"configuration {curve_texts} -> gauge type {config.dynkin}")
    print(f"  {len(parts)} classes, sizes {dict(Counter(p.size for p in parts))}, "
          f"{len(moved)} lines moved")
    for p in parts:
        if p.label != "singleton":
            members = ", ".join(str(m) for m in p.members)
            print(f"  {p.label:>14}: {members}")
    print()


# one (-2)-curve: six pairs of lines collide
show(["e1-e2"])

# a chain of two: orbits of three
show(["e1-e2", "e2-e3"])

# two disjoint curves
show(["e1-e2", "e3-e4"])

# the no-curve case keeps all 27 classes separate
empty = make_configuration([], M)
parts = orbit_decomposition(empty, line_vectors, M)
print(f"empty configuration -> gauge type {empty.dynkin}; "
      f"{len(parts)} classes, all singletons")
