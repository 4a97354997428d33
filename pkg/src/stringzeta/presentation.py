"""Bound-quiver presentations: parsing, normalisation and validation.

A presentation is a quiver together with a finite set of monomial
relations (paths) and, for special biserial input, a list of binomial
relations ``lhs - c * rhs``.

Paths are stored source-to-target: ``("b", "a")`` is the path that runs
along ``b`` first and then ``a``.  On screen the same path is written
right-to-left, function-composition style, as ``ab``.

On-disk format (JSON)::

    {
      "name": "GP(2,3)",                       # optional
      "vertices": ["v"],
      "arrows": [{"name": "a", "source": "v", "target": "v"}, ...],
      "relations": [["a", "a"], ["b", "a"], ...],   # source-to-target
      "binomial_relations": [                  # optional
        {"lhs": ["a", "a"], "rhs": ["b", "b"], "coefficient": "lambda"}
      ]
    }

Binomial coefficients are kept as opaque strings; they never influence
any computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import NamedTuple, Optional

import networkx as nx

from .errors import (
    DuplicateNameError,
    EndpointError,
    ParseError,
    UnknownNameError,
    ValidationError,
)

Path = tuple  # tuple[str, ...] of arrow names, source-to-target

_TOP_LEVEL_KEYS = {"name", "vertices", "arrows", "relations", "binomial_relations"}


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


class BinomialRelation(NamedTuple):
    lhs: Path
    rhs: Path
    coefficient: str


class Diagnostic(NamedTuple):
    code: str
    message: str
    subject: object = None


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        if not self.vertices:
            raise ParseError("a quiver needs at least one vertex", "vertices")
        if len(set(self.vertices)) != len(self.vertices):
            dup = _first_duplicate(self.vertices)
            raise DuplicateNameError(f"duplicate vertex {dup!r}", "vertices")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise DuplicateNameError(f"duplicate arrow {_first_duplicate(names)!r}", "arrows")
        vset = set(self.vertices)
        for i, a in enumerate(self.arrows):
            for end in ("source", "target"):
                if getattr(a, end) not in vset:
                    raise UnknownNameError(
                        f"unknown vertex {getattr(a, end)!r}", f"arrows[{i}].{end}")

    @cached_property
    def _by_name(self):
        return {a.name: a for a in self.arrows}

    def arrow(self, name) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownNameError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name) -> bool:
        return name in self._by_name

    def path_source(self, path):
        return self.arrow(path[0]).source

    def path_target(self, path):
        return self.arrow(path[-1]).target

    def is_path(self, path) -> bool:
        """True if consecutive arrows compose (target of one is source of the next)."""
        return len(path) > 0 and all(
            self.arrow(x).target == self.arrow(y).source for x, y in zip(path, path[1:]))


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple = ()
    binomial_relations: tuple = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        rels = tuple(sorted(set(tuple(r) for r in self.relations)))
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "binomial_relations", tuple(
            BinomialRelation(tuple(b.lhs), tuple(b.rhs), str(b.coefficient))
            for b in self.binomial_relations))

    @property
    def arrows(self):
        return self.quiver.arrows

    def to_dict(self) -> dict:
        out = {}
        if self.name:
            out["name"] = self.name
        out["vertices"] = list(self.quiver.vertices)
        out["arrows"] = [{"name": a.name, "source": a.source, "target": a.target}
                         for a in self.quiver.arrows]
        out["relations"] = [list(r) for r in self.relations]
        if self.binomial_relations:
            out["binomial_relations"] = [
                {"lhs": list(b.lhs), "rhs": list(b.rhs), "coefficient": b.coefficient}
                for b in self.binomial_relations]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class ValidationReport:
    admissible: bool
    string_algebra: bool
    window_N: Optional[int]
    diagnostics: tuple = ()

    def codes(self):
        return [d.code for d in self.diagnostics]

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "string_algebra": self.string_algebra,
            "window_N": self.window_N,
            "diagnostics": [{"code": d.code, "message": d.message, "subject": _jsonable(d.subject)}
                            for d in self.diagnostics],
        }


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    return obj


def _first_duplicate(items):
    seen = set()
    for x in items:
        if x in seen:
            return x
        seen.add(x)


def format_path(path) -> str:
    """Right-to-left display of a source-to-target path: ``("b", "a") -> "ab"``."""
    sep = "" if all(len(x) == 1 for x in path) else "·"
    return sep.join(reversed(path))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_presentation(text: str) -> Presentation:
    """Parse the JSON presentation format documented at module level."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    return presentation_from_dict(obj)


def presentation_from_dict(obj) -> Presentation:
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object", "$")
    extra = set(obj) - _TOP_LEVEL_KEYS
    if extra:
        raise ParseError(f"unexpected key(s) {sorted(extra)}", "$")
    for key in ("vertices", "arrows", "relations"):
        if key not in obj:
            raise ParseError(f"missing key {key!r}", "$")

    vertices = _string_list(obj["vertices"], "vertices")
    raw_arrows = obj["arrows"]
    if not isinstance(raw_arrows, list):
        raise ParseError("expected an array", "arrows")
    arrows = []
    for i, a in enumerate(raw_arrows):
        loc = f"arrows[{i}]"
        if not isinstance(a, dict) or set(a) != {"name", "source", "target"}:
            raise ParseError('expected {"name", "source", "target"}', loc)
        for k in ("name", "source", "target"):
            if not isinstance(a[k], str) or not a[k]:
                raise ParseError("expected a non-empty string", f"{loc}.{k}")
        arrows.append(Arrow(a["name"], a["source"], a["target"]))
    quiver = Quiver(tuple(vertices), tuple(arrows))

    if not isinstance(obj["relations"], list):
        raise ParseError("expected an array", "relations")
    relations = [_parse_path(quiver, r, f"relations[{i}]")
                 for i, r in enumerate(obj["relations"])]

    binomials = []
    raw_binomials = obj.get("binomial_relations", [])
    if not isinstance(raw_binomials, list):
        raise ParseError("expected an array", "binomial_relations")
    for i, b in enumerate(raw_binomials):
        loc = f"binomial_relations[{i}]"
        if not isinstance(b, dict) or set(b) != {"lhs", "rhs", "coefficient"}:
            raise ParseError('expected {"lhs", "rhs", "coefficient"}', loc)
        lhs = _parse_path(quiver, b["lhs"], f"{loc}.lhs")
        rhs = _parse_path(quiver, b["rhs"], f"{loc}.rhs")
        coeff = b["coefficient"]
        if isinstance(coeff, bool) or not isinstance(coeff, (str, int, float)):
            raise ParseError("coefficient must be a string or number literal", f"{loc}.coefficient")
        coeff = str(coeff)
        if coeff.strip() in ("", "0", "0.0", "-0", "-0.0"):
            raise ParseError("coefficient must be non-zero", f"{loc}.coefficient")
        binomials.append(BinomialRelation(lhs, rhs, coeff))

    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ParseError("expected a string", "name")
    return Presentation(quiver, tuple(relations), tuple(binomials), name=name)


def _string_list(value, loc):
    if not isinstance(value, list) or not all(isinstance(v, str) and v for v in value):
        raise ParseError("expected an array of non-empty strings", loc)
    return value


def _parse_path(quiver, value, loc) -> Path:
    if not isinstance(value, list) or not value:
        raise ParseError("a path is a non-empty array of arrow names", loc)
    for j, name in enumerate(value):
        if not isinstance(name, str):
            raise ParseError("expected an arrow name", f"{loc}[{j}]")
        if not quiver.has_arrow(name):
            raise UnknownNameError(f"unknown arrow {name!r}", f"{loc}[{j}]")
    path = tuple(value)
    for j, (x, y) in enumerate(zip(path, path[1:])):
        if quiver.arrow(x).target != quiver.arrow(y).source:
            raise ParseError(f"arrows {x!r} and {y!r} do not compose", f"{loc}[{j + 1}]")
    return path


# ---------------------------------------------------------------------------
# normalisation
# ---------------------------------------------------------------------------

def contains_subpath(path, sub) -> bool:
    k = len(sub)
    return any(path[i:i + k] == sub for i in range(len(path) - k + 1))


def normalize_relations(p: Presentation) -> Presentation:
    """Drop every relation that contains another relation as a contiguous subpath."""
    rels = p.relations  # already deduplicated and sorted
    keep = tuple(r for r in rels
                 if not any(s != r and contains_subpath(r, s) for s in rels))
    if keep == rels:
        return p
    return Presentation(p.quiver, keep, p.binomial_relations, name=p.name)


def tilde_presentation(p: Presentation) -> Presentation:
    """Zero-relation presentation obtained by killing both sides of each binomial."""
    if not p.binomial_relations:
        return p
    q = p.quiver
    rels = list(p.relations)
    for i, b in enumerate(p.binomial_relations):
        if (q.path_source(b.lhs) != q.path_source(b.rhs)
                or q.path_target(b.lhs) != q.path_target(b.rhs)):
            raise EndpointError(
                f"{format_path(b.lhs)} and {format_path(b.rhs)} do not share endpoints",
                f"binomial_relations[{i}]")
        rels.extend((b.lhs, b.rhs))
    return normalize_relations(Presentation(q, tuple(rels), (), name=p.name))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _relation_free_paths(p: Presentation, length):
    """All paths of the given length containing no relation (levelwise extension)."""
    rels = p.relations
    lengths = sorted({len(r) for r in rels})
    rset = set(rels)
    out_arrows = {}
    for a in p.arrows:
        out_arrows.setdefault(a.source, []).append(a.name)
    level = [(a.name,) for a in p.arrows if (a.name,) not in rset]
    for k in range(2, length + 1):
        nxt = []
        for path in level:
            for name in out_arrows.get(p.quiver.arrow(path[-1]).target, ()):
                cand = path + (name,)
                if not any(L <= k and cand[k - L:] in rset for L in lengths):
                    nxt.append(cand)
        level = nxt
    return level


def longest_direct_string(p: Presentation) -> Optional[int]:
    """Length of the longest path avoiding every relation, or None if unbounded.

    Relation-free paths of length >= K (K = longest relation, at least 2)
    are exactly the walks in the graph whose vertices are relation-free
    paths of length K-1 and whose edges are those of length K, so the set
    is finite iff that graph is acyclic.
    """
    K = max([2] + [len(r) for r in p.relations])
    short = [len(x) for k in range(1, K - 1) for x in _relation_free_paths(p, k)[:1]]
    states = _relation_free_paths(p, K - 1)
    if not states:
        return max(short, default=0)
    g = nx.DiGraph()
    g.add_nodes_from(states)
    for path in _relation_free_paths(p, K):
        g.add_edge(path[:-1], path[1:])
    if not nx.is_directed_acyclic_graph(g):
        return None
    return K - 1 + nx.dag_longest_path_length(g)


@lru_cache(maxsize=256)
def validate_zero_relation(p: Presentation) -> ValidationReport:
    diags = []
    if p.binomial_relations:
        diags.append(Diagnostic(
            "binomial-relations-present",
            "binomial relations present; apply tilde_presentation first",
            len(p.binomial_relations)))
    for r in p.relations:
        if len(r) < 2:
            diags.append(Diagnostic(
                "relation-too-short",
                f"relation {format_path(r)} has length {len(r)} < 2", r))
    longest = longest_direct_string(p)
    if longest is None:
        diags.append(Diagnostic(
            "infinite-direct-strings",
            "infinitely many paths avoid the relations (ideal is not admissible)", None))
    if diags:
        return ValidationReport(False, False, None, tuple(diags))
    max_rel = max((len(r) for r in p.relations), default=0)
    window = max(1, max_rel - 1, longest)
    return ValidationReport(True, False, window, ())


def _nonzero_compositions(p: Presentation):
    """Pairs (first, second) of arrows whose composite path is not in the ideal."""
    rset = set(p.relations)
    pairs = []
    for x in p.arrows:
        for y in p.arrows:
            if x.target == y.source and (x.name,) not in rset and (y.name,) not in rset \
                    and (x.name, y.name) not in rset:
                pairs.append((x.name, y.name))
    return pairs


@lru_cache(maxsize=256)
def validate_string_algebra(p: Presentation) -> ValidationReport:
    """Check the four local conditions defining a string algebra.

    Membership ``ab in I`` for arrows is decided on the monomial ideal: the
    length-2 path lies in I iff it (or one of its arrows) is a relation.
    """
    base = validate_zero_relation(p)
    diags = list(base.diagnostics)
    q = p.quiver
    for v in q.vertices:
        out = [a.name for a in q.arrows if a.source == v]
        inc = [a.name for a in q.arrows if a.target == v]
        if len(out) > 2:
            diags.append(Diagnostic(
                "too-many-out-arrows", f"{len(out)} arrows start at vertex {v}: {out}", v))
        if len(inc) > 2:
            diags.append(Diagnostic(
                "too-many-in-arrows", f"{len(inc)} arrows end at vertex {v}: {inc}", v))
    pairs = _nonzero_compositions(p)
    for a in q.arrows:
        after = [y for x, y in pairs if x == a.name]
        before = [x for x, y in pairs if y == a.name]
        if len(after) > 1:
            diags.append(Diagnostic(
                "ambiguous-successor",
                f"arrows {after} all compose non-trivially after {a.name}", a.name))
        if len(before) > 1:
            diags.append(Diagnostic(
                "ambiguous-predecessor",
                f"arrows {before} all compose non-trivially before {a.name}", a.name))
    ok = base.admissible and len(diags) == 0
    return ValidationReport(base.admissible, ok, base.window_N, tuple(diags))


def window(p: Presentation) -> int:
    """The window size N used for strings and the state graph; raises if not admissible."""
    report = validate_zero_relation(p)
    if not report.admissible:
        raise ValidationError(
            "presentation is not admissible: "
            + "; ".join(d.message for d in report.diagnostics), report)
    return report.window_N


def prepare(p: Presentation, require_string_algebra=False) -> Presentation:
    """Normalise, reduce binomials and validate; return the zero-relation presentation."""
    p = tilde_presentation(normalize_relations(p))
    report = validate_string_algebra(p) if require_string_algebra else validate_zero_relation(p)
    if not report.admissible or (require_string_algebra and not report.string_algebra):
        what = "a string algebra" if require_string_algebra else "admissible"
        raise ValidationError(
            f"presentation is not {what}: "
            + "; ".join(d.message for d in report.diagnostics), report)
    return p
