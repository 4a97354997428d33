"""The full analytics pipeline and its JSON serialisation.

Big integers are written as decimal strings so that no consumer has to
care about overflow.  ``to_json`` is canonical (sorted keys, fixed
indentation), so reading a report back and writing it again gives the
same bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .analytics import (
    classify, counting_report, pnt_constants, pnt_ratio_table, zeta_coefficients,
)
from .polynomial import spectral_radius
from .presentation import Presentation, prepare, validate_string_algebra
from .state_graph import adjacency, build_state_graph, reciprocal_char_poly, scc_decompose, trace_powers
from .strings import format_word

FORMAT = "stringzeta-report/1"


def _ints(xs):
    return None if xs is None else [str(int(x)) for x in xs]


def _from_ints(xs):
    return None if xs is None else [int(x) for x in xs]


def _float(x):
    return "inf" if x == math.inf else x


def _from_float(x):
    return math.inf if x == "inf" else float(x)


@dataclass
class AnalyticsReport:
    name: Optional[str]
    window_N: int
    string_algebra: bool
    vertices: int
    arrows: int
    reciprocal: list            # coefficients of det(I - tA), constant term first
    N: list
    pi: list
    mu: Optional[list]          # None unless the input is a string algebra
    zeta: list
    R: float
    R_error: float
    C: int
    L: int
    pnt_applicable: bool
    verdict: Optional[str] = None
    evidence: dict = field(default_factory=dict)
    closed_form_terms: Optional[list] = None   # [[length, band classes], ...]
    closed_form: Optional[str] = None
    pnt_table: list = field(default_factory=list)   # [[m, π(mL), ratio], ...]

    def to_dict(self) -> dict:
        return {
            "format": FORMAT,
            "name": self.name,
            "window_N": self.window_N,
            "string_algebra": self.string_algebra,
            "state_graph": {"vertices": self.vertices, "arrows": self.arrows},
            "reciprocal_char_poly": _ints(self.reciprocal),
            "N": _ints(self.N),
            "pi": _ints(self.pi),
            "mu": _ints(self.mu),
            "zeta": _ints(self.zeta),
            "spectral_radius": {"R": _float(self.R), "error_bound": self.R_error},
            "pnt": {
                "C": self.C, "L": self.L, "applicable": self.pnt_applicable,
                "table": [{"m": m, "pi": str(v), "ratio": r} for m, v, r in self.pnt_table],
            },
            "classification": None if self.verdict is None else {
                "verdict": self.verdict,
                "evidence": self.evidence,
                "closed_form_terms": self.closed_form_terms,
                "closed_form": self.closed_form,
            },
        }

    @classmethod
    def from_dict(cls, d) -> "AnalyticsReport":
        if d.get("format") != FORMAT:
            raise ValueError(f"not a {FORMAT} document")
        c = d["classification"] or {}
        return cls(
            name=d["name"],
            window_N=d["window_N"],
            string_algebra=d["string_algebra"],
            vertices=d["state_graph"]["vertices"],
            arrows=d["state_graph"]["arrows"],
            reciprocal=_from_ints(d["reciprocal_char_poly"]),
            N=_from_ints(d["N"]),
            pi=_from_ints(d["pi"]),
            mu=_from_ints(d["mu"]),
            zeta=_from_ints(d["zeta"]),
            R=_from_float(d["spectral_radius"]["R"]),
            R_error=d["spectral_radius"]["error_bound"],
            C=d["pnt"]["C"],
            L=d["pnt"]["L"],
            pnt_applicable=d["pnt"]["applicable"],
            verdict=c.get("verdict"),
            evidence=c.get("evidence", {}),
            closed_form_terms=c.get("closed_form_terms"),
            closed_form=c.get("closed_form"),
            pnt_table=[[r["m"], int(r["pi"]), r["ratio"]] for r in d["pnt"]["table"]],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalyticsReport":
        return cls.from_dict(json.loads(text))


def analyze(p: Presentation, terms=20, pnt_range=None) -> AnalyticsReport:
    """Run every stage on ``p``.

    ``terms`` bounds the N, π, μ and ζ tables.  ``pnt_range`` is an
    inclusive ``(first, last)`` range of m for the ratio table, which is
    only produced when the asymptotic applies (R > 1).
    """
    q = prepare(p)
    is_sa = validate_string_algebra(q).string_algebra
    g = build_state_graph(q)
    A = adjacency(g)
    scc = scc_decompose(g)
    recip = reciprocal_char_poly(A)
    consts = pnt_constants(scc)

    depth = terms
    if pnt_range is not None and consts.applicable:
        depth = max(depth, pnt_range[1] * consts.L)
    N = trace_powers(A, depth)
    counts = counting_report(N, is_sa)
    zeta = zeta_coefficients(recip, terms, N)
    radius = spectral_radius(recip)

    rows = []
    if pnt_range is not None and consts.applicable:
        rows = [list(r) for r in pnt_ratio_table(counts.pi, consts, range(pnt_range[0], pnt_range[1] + 1))]

    rep = AnalyticsReport(
        name=p.name, window_N=g.window, string_algebra=is_sa,
        vertices=len(g.vertices), arrows=len(g.arrows),
        reciprocal=recip.to_list(),
        N=list(N.values[:terms]), pi=list(counts.pi.values[:terms]),
        mu=None if counts.mu is None else list(counts.mu.values[:terms]),
        zeta=zeta, R=radius.radius, R_error=radius.error_bound,
        C=consts.C, L=consts.L, pnt_applicable=consts.applicable, pnt_table=rows,
    )
    if is_sa:
        cls_ = classify(scc)
        rep.verdict = cls_.verdict
        rep.evidence = {k: (format_word(v) if not isinstance(v, (int, bool, str)) else v)
                        for k, v in cls_.evidence.items()}
        if cls_.domestic:
            rep.closed_form_terms = [list(t) for t in cls_.mu_series]
            rep.closed_form = cls_.closed_form()
    return rep
