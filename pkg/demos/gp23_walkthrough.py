"""
Strings, bands and the state graph of GP(2,3)
=============================================

One vertex, two loops a and b, with a² = b³ = ab = ba = 0.
"""

from stringzeta import (
    adjacency, build_state_graph, enumerate_bands, enumerate_strings, format_word, load_corpus,
    prepare, reciprocal_char_poly, scc_decompose, trace_powers,
)
from stringzeta.analytics import counting_report, zeta_coefficients

p = prepare(load_corpus("gp23"), require_string_algebra=True)

# Strings are written right to left; A stands for the inverse of a.
for k in (1, 2, 3):
    print(k, [format_word(w, upper=True, powers=True) for w in enumerate_strings(p, k)])

# The state graph has the strings of length 2 as vertices and those of
# length 3 as arrows.
g = build_state_graph(p)
for a in g.arrows:
    print(format_word(g.vertices[a.source], upper=True), "->",
          format_word(g.vertices[a.target], upper=True), " via", format_word(a.label, upper=True))

A = adjacency(g)
print(A.entries)

# Two strongly connected pieces, each contributing a factor 1 - t² - t³.
for c in scc_decompose(g):
    print([format_word(g.vertices[v], upper=True) for v in c.vertices], c.reciprocal_char_poly)
print("det(I - tA) =", reciprocal_char_poly(A))

# Closed walks of length m count rotations of band powers; Möbius
# inversion turns them into band counts.
N = trace_powers(A, 12)
counts = counting_report(N)
print("N  ", list(N))
print("pi ", list(counts.pi))
print("mu ", list(counts.mu))

# The band classes themselves, found by brute force, agree with pi.
for b in enumerate_bands(p, 8):
    print(b.length, format_word(b.representative, upper=True, powers=True))

print("zeta", zeta_coefficients(reciprocal_char_poly(A), 12))
