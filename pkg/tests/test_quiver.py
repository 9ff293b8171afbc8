import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlehh.generators import corpus, random_gentle, relabel
from gentlehh.quiver import (
    PresentationError,
    assign_signs,
    euler_characteristic,
    nonzero_paths,
    parse_presentation,
    serialize,
    successors,
    validate_gentle,
)


def test_parse_loop(loop):
    assert loop.vertices == ("1",)
    assert [a.name for a in loop.arrows] == ["a"]
    assert loop.relations == (("a", "a"),)


def test_parse_comments_and_blank_lines():
    p = parse_presentation("# dual numbers\n\nvertices: 1   # one vertex\narrow a: 1 -> 1\nrelation a a\n")
    assert len(p.arrows) == 1


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("arrow a: 1 -> 2", "unknown vertex", 1),
        ("vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 1\nrelation a b", "not composable", 4),
        ("vertices: 1 1", "duplicate vertex", 1),
        ("vertices: 1 2\narrow a: 1 -> 2\narrow a: 2 -> 1", "duplicate arrow", 3),
        ("vertices: 1\nrelation a a", "unknown arrow", 2),
        ("vertices: 1\nfoo bar", "unrecognised", 2),
        ("vertices: 1\narrow a 1 -> 1", "cannot parse", 2),
    ],
)
def test_parse_errors(text, fragment, line):
    with pytest.raises(PresentationError, match=fragment) as info:
        parse_presentation(text)
    assert info.value.line == line


def test_serialize_round_trip_corpus():
    for entry in corpus():
        text = serialize(entry.presentation)
        assert serialize(parse_presentation(text)) == text
        assert parse_presentation(text) == entry.presentation


def test_validate_loop_passes(loop):
    assert validate_gentle(loop).ok


def test_validate_relation_free_loop_fails_g4():
    report = validate_gentle(parse_presentation("vertices: 1\narrow a: 1 -> 1"))
    assert set(report.failures) == {"G4"}
    assert "a" in report.failures["G4"][0]


def test_validate_three_outgoing_fails_g1():
    p = parse_presentation("vertices: 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\narrow c: 1 -> 2")
    assert "G1" in validate_gentle(p).failures


def test_validate_g2_two_relation_successors():
    p = parse_presentation(
        "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 3\nrelation a b\nrelation a c")
    report = validate_gentle(p)
    assert "G2" in report.failures


def test_validate_g3_two_nonzero_predecessors():
    p = parse_presentation("vertices: 1 2 3\narrow a: 1 -> 3\narrow b: 2 -> 3\narrow c: 3 -> 1")
    report = validate_gentle(p)
    assert "G3" in report.failures


def test_validate_disconnected_fails_g5():
    report = validate_gentle(parse_presentation("vertices: 1 2"))
    assert set(report.failures) == {"G5"}


def test_single_vertex_is_gentle():
    assert validate_gentle(parse_presentation("vertices: x")).ok


def test_report_lists_every_axiom(kronecker):
    lines = list(validate_gentle(kronecker).lines())
    assert [ln.split(":")[0] for ln in lines] == ["G1", "G2", "G3", "G4", "G5"]


def test_signs_a2(a2):
    s = assign_signs(a2)
    assert s.sigma == {"a": 1} and s.epsilon == {"a": 1}


def test_signs_loop_forced_equal(loop):
    s = assign_signs(loop)
    assert s.sigma["a"] == s.epsilon["a"]


def test_signs_kronecker(kronecker):
    s = assign_signs(kronecker)
    assert s.sigma["a"] == -s.sigma["b"]
    assert s.epsilon["a"] == -s.epsilon["b"]


def _check_sign_constraints(pres, s):
    q = pres.quiver
    for a, b in itertools.combinations(q.arrows, 2):
        if a.source == b.source:
            assert s.sigma[a.name] != s.sigma[b.name]
        if a.target == b.target:
            assert s.epsilon[a.name] != s.epsilon[b.name]
    for a in q.arrows:
        for b in q.arrows:
            if a.target == b.source:
                if (a.name, b.name) in pres.relation_set:
                    assert s.sigma[b.name] == s.epsilon[a.name]
                else:
                    assert s.sigma[b.name] == -s.epsilon[a.name]


def test_signs_satisfy_constraints_on_corpus():
    for entry in corpus():
        _check_sign_constraints(entry.presentation, assign_signs(entry.presentation))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_signs_satisfy_constraints_random(seed):
    pres = random_gentle(8, 16, seed)
    _check_sign_constraints(pres, assign_signs(pres))


def test_signs_deterministic(z2):
    assert assign_signs(z2) == assign_signs(z2)


@pytest.mark.parametrize(
    "fixture, expected",
    [("a2", ["e_1", "e_2", "a"]), ("loop", ["e_1", "a"]), ("z2", ["e_1", "e_2", "a", "b"])],
)
def test_nonzero_paths(fixture, expected, request):
    pres = request.getfixturevalue(fixture)
    assert [str(p) for p in nonzero_paths(pres)] == expected


def _brute_force_path_count(pres):
    # all paths up to length |arrows| * |vertices|, filtered by relations
    q = pres.quiver
    bound = max(1, len(q.arrows) * len(q.vertices))
    count = len(q.vertices)
    frontier = [(a.name,) for a in q.arrows]
    for _ in range(bound):
        keep = [w for w in frontier if pres.is_nonzero(w)]
        count += len(keep)
        frontier = [w + (b.name,) for w in keep for b in q.arrows if q.arrow[w[-1]].target == b.source]
        if not frontier:
            break
    return count


def test_nonzero_paths_brute_force_corpus():
    for entry in corpus():
        assert len(nonzero_paths(entry.presentation)) == _brute_force_path_count(entry.presentation)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_nonzero_paths_brute_force_random(seed):
    pres = random_gentle(5, 8, seed)
    assert len(nonzero_paths(pres)) == _brute_force_path_count(pres)


@pytest.mark.parametrize("fixture, chi", [("a2", 1), ("loop", 0), ("kronecker", 0)])
def test_euler_characteristic(fixture, chi, request):
    assert euler_characteristic(request.getfixturevalue(fixture).quiver) == chi


def test_euler_relabel_invariant():
    for entry in corpus():
        for s in range(5):
            assert euler_characteristic(relabel(entry.presentation, s)) == euler_characteristic(entry.presentation)


def test_successors(loop, a2, a3):
    assert successors(loop, "a") == ("a", None)
    assert successors(a2, "a") == (None, None)
    assert successors(a3, "a") == (None, "b")


def test_sign_rule_reconstructs_relations():
    for entry in corpus():
        p = entry.presentation
        s = assign_signs(p)
        rebuilt = {(a.name, b.name) for a in p.arrows for b in p.arrows
                   if a.target == b.source and s.sigma[b.name] == s.epsilon[a.name]}
        assert rebuilt == set(p.relations)
