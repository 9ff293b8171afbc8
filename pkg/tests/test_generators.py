import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentlehh.ag import phi
from gentlehh.generators import GenerationError, corpus, random_gentle, relabel
from gentlehh.oracle import hh_dims_oracle
from gentlehh.quiver import euler_characteristic, serialize, validate_gentle


def test_corpus_names():
    names = {e.name for e in corpus()}
    required = {"dual_numbers", "kronecker"} | {f"linear_A_{n}" for n in range(1, 7)} | {
        f"cycle_Z_{n}" for n in range(1, 5)}
    assert required <= names
    assert len(names) == len(corpus())


def test_corpus_all_gentle():
    for e in corpus():
        assert validate_gentle(e.presentation).ok, e.name


def test_corpus_has_mixed_examples():
    from gentlehh.ag import critical_cycles, nontrivial_permitted_threads

    mixed = [e for e in corpus()
             if critical_cycles(e.presentation)
             and any(len(t) > 1 for t in nontrivial_permitted_threads(e.presentation))]
    assert mixed


def test_corpus_expected_dims():
    for e in corpus():
        for c, dims in e.expected_dims.items():
            got = hh_dims_oracle(e.presentation, c, len(dims) - 1).dims
            assert got == tuple(dims), (e.name, c)


def test_random_deterministic():
    assert serialize(random_gentle(4, 6, 7)) == serialize(random_gentle(4, 6, 7))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8), st.integers(1, 16), st.integers(0, 10**7))
def test_random_always_gentle(nv, na, seed):
    p = random_gentle(nv, na, seed)
    assert validate_gentle(p).ok
    assert len(p.vertices) <= nv and len(p.arrows) <= na


def test_smallest_bounds():
    seen = set()
    for seed in range(40):
        p = random_gentle(1, 1, seed)
        seen.add(serialize(p))
    assert seen == {"vertices: 1\n", "vertices: 1\narrow a0: 1 -> 1\nrelation a0 a0\n"}


def test_bad_bounds():
    with pytest.raises(ValueError):
        random_gentle(0, 3, 1)


def test_retry_cap():
    with pytest.raises(GenerationError):
        random_gentle(8, 16, 1, max_tries=0)


def test_relabel_a2(named):
    p = relabel(named("linear_A_2"), 3)
    assert len(p.vertices) == 2 and len(p.arrows) == 1
    (a,) = p.arrows
    assert a.source != a.target


@pytest.mark.parametrize("seed", range(5))
def test_relabel_invariants(seed):
    for e in corpus():
        q = relabel(e.presentation, seed)
        assert validate_gentle(q).ok
        assert phi(q) == phi(e.presentation)
        assert euler_characteristic(q) == euler_characteristic(e.presentation)
