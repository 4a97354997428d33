"""
A domestic algebra: the Kronecker quiver
========================================

Two arrows a, b from vertex 1 to vertex 2 and no relations.  The state
graph is a pair of 2-cycles, so there is exactly one band up to inversion
and the μ-series is rational.
"""

from stringzeta import (
    adjacency, build_state_graph, classify, load_corpus, prepare, reciprocal_char_poly,
    scc_decompose, trace_powers,
)
from stringzeta.analytics import counting_report, mu_series_coefficients

p = prepare(load_corpus("kronecker2"), require_string_algebra=True)
g = build_state_graph(p)
scc = scc_decompose(g)

c = classify(scc)
print(c.verdict, [str(b) for b in c.bands])
print("mu(t) =", c.closed_form())

# Every component is a simple cycle, so R = 1 and det(I - tA) = (1 - t²)².
print(reciprocal_char_poly(adjacency(g)), [comp.period for comp in scc])

# The closed form reproduces the μ values computed from closed walks.
mu = counting_report(trace_powers(adjacency(g), 20)).mu
print(list(mu))
print(mu_series_coefficients(c.mu_series, 20))
