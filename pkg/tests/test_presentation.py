import json

import pytest

from stringzeta.corpus import CORPUS, load_corpus, load_presentation
from stringzeta.errors import (
    DuplicateNameError, EndpointError, ParseError, UnknownNameError, ValidationError,
)
from stringzeta.presentation import (
    format_path, longest_direct_string, normalize_relations, parse_presentation, prepare,
    tilde_presentation, validate_string_algebra, validate_zero_relation, window,
)


def make(vertices, arrows, relations, **extra):
    d = {"vertices": vertices,
         "arrows": [{"name": n, "source": s, "target": t} for n, s, t in arrows],
         "relations": relations}
    d.update(extra)
    return parse_presentation(json.dumps(d))


LOOPS = [("a", "v", "v"), ("b", "v", "v")]


def test_corpus_round_trips_through_json():
    for name in CORPUS:
        p = load_corpus(name)
        assert parse_presentation(p.to_json()) == p


def test_load_presentation_from_path(tmp_path):
    f = tmp_path / "g.json"
    f.write_text(load_corpus("gp23").to_json())
    assert load_presentation(f) == load_corpus("gp23")
    with pytest.raises(FileNotFoundError):
        load_presentation(tmp_path / "missing.json")


def test_format_path_reads_right_to_left():
    assert format_path(("b", "a")) == "ab"
    assert format_path(("x1", "y")) == "y·x1"


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError, match="line 1"):
        parse_presentation("{")


def test_unknown_arrow_in_relation():
    with pytest.raises(UnknownNameError, match=r"relations\[0\]\[1\]"):
        make(["v"], LOOPS, [["a", "z"]])


def test_unknown_vertex():
    with pytest.raises(UnknownNameError):
        make(["v"], [("a", "v", "w")], [])


def test_duplicate_names():
    with pytest.raises(DuplicateNameError):
        make(["v", "v"], [], [])
    with pytest.raises(DuplicateNameError):
        make(["v"], [("a", "v", "v"), ("a", "v", "v")], [])


def test_non_composable_relation():
    with pytest.raises(ParseError, match="do not compose"):
        make(["1", "2"], [("a", "1", "2"), ("b", "1", "2")], [["a", "b"]])


def test_unexpected_key():
    with pytest.raises(ParseError, match="unexpected"):
        parse_presentation('{"vertices": ["v"], "arrows": [], "relations": [], "extra": 1}')


def test_zero_coefficient_rejected():
    with pytest.raises(ParseError, match="non-zero"):
        make(["v"], LOOPS, [], binomial_relations=[{"lhs": ["a"], "rhs": ["b"], "coefficient": 0}])


def test_relations_are_sorted_and_deduplicated():
    p = make(["v"], LOOPS, [["b", "a"], ["a", "a"], ["b", "a"]])
    assert p.relations == (("a", "a"), ("b", "a"))


def test_normalize_drops_relations_containing_others():
    p = make(["v"], LOOPS, [["a", "a"], ["a", "a", "b"], ["b", "b"]])
    assert normalize_relations(p).relations == (("a", "a"), ("b", "b"))


def test_tilde_turns_binomials_into_monomials():
    t = tilde_presentation(load_corpus("sb1"))
    assert set(t.relations) == {("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")}
    assert t.binomial_relations == ()


def test_tilde_needs_matching_endpoints():
    p = make(["1", "2"], [("a", "1", "2"), ("b", "2", "1")], [["a", "b"], ["b", "a"]],
             binomial_relations=[{"lhs": ["a"], "rhs": ["b"], "coefficient": "2"}])
    with pytest.raises(EndpointError):
        tilde_presentation(p)


def test_gp23_window():
    p = load_corpus("gp23")
    assert longest_direct_string(p) == 2
    assert window(p) == 2
    assert validate_string_algebra(p).string_algebra


def test_kronecker_window():
    assert window(load_corpus("kronecker2")) == 1


def test_non_admissible_loop():
    p = make(["v"], [("a", "v", "v")], [])
    r = validate_zero_relation(p)
    assert not r.admissible and r.codes() == ["infinite-direct-strings"]
    with pytest.raises(ValidationError):
        window(p)


def test_squares_only_is_not_admissible():
    # ab, aba, ... all avoid a², b²: the ideal does not contain a power of the arrow ideal
    p = make(["v"], LOOPS, [["a", "a"], ["b", "b"]])
    assert validate_zero_relation(p).codes() == ["infinite-direct-strings"]


def test_relation_too_short():
    p = make(["v"], LOOPS, [["a"], ["b", "b"], ["b", "a"]])
    assert "relation-too-short" in validate_zero_relation(p).codes()


def test_binomials_must_be_reduced_first():
    r = validate_zero_relation(load_corpus("sb1"))
    assert "binomial-relations-present" in r.codes()
    assert prepare(load_corpus("sb1"), require_string_algebra=True).binomial_relations == ()


def test_too_many_arrows_at_a_vertex():
    arrows = [(x, "1", "2") for x in "abc"]
    r = validate_string_algebra(make(["1", "2"], arrows, []))
    assert r.admissible and not r.string_algebra
    assert {"too-many-out-arrows", "too-many-in-arrows"} <= set(r.codes())


def test_ambiguous_successor_and_predecessor():
    # a: 1->2 followed by either b or c: 2->3
    p = make(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3")], [])
    r = validate_string_algebra(p)
    assert r.admissible and "ambiguous-successor" in r.codes()
    q = make(["1", "2", "3"], [("b", "1", "2"), ("c", "1", "2"), ("a", "2", "3")], [])
    assert "ambiguous-predecessor" in validate_string_algebra(q).codes()
    with pytest.raises(ValidationError):
        prepare(q, require_string_algebra=True)


def test_report_is_jsonable():
    r = validate_string_algebra(make(["v"], [("a", "v", "v")], []))
    assert json.loads(json.dumps(r.to_dict()))["admissible"] is False
