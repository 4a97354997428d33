"""
Special biserial input
======================

The algebra with ab = ba = 0 and a² = λb² is not given by monomials.
Killing both sides of the binomial gives a monomial presentation with the
same bands, and all invariants are computed there.
"""

from stringzeta import analyze, load_corpus, tilde_presentation
from stringzeta.presentation import format_path, normalize_relations

raw = load_corpus("sb1")
reduced = tilde_presentation(normalize_relations(raw))
print("relations:", [format_path(r) for r in reduced.relations])

a, b = analyze(raw, terms=12), analyze(reduced, terms=12)
print(a.verdict, a.closed_form)
print("mu  ", a.mu)
print("same", a.mu == b.mu and a.zeta == b.zeta)
