"""Construction, classification, scaling, and bounded enumeration."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quantoid.errors import (
    DuplicateLabel,
    GroundSetTooLarge,
    MalformedRational,
    MissingSubset,
    NonpositiveScale,
    UnknownSubsetKey,
)
from quantoid.setfn import (
    GroundSet,
    build,
    classify,
    enumerate_rank_functions,
    from_table,
    scale,
)

from helpers import bell, ghz3, labels_for, uniform, zero_fn


# -- build -------------------------------------------------------------------

def test_build_empty_ground_set():
    f = build([], {"": 0})
    assert f.n == 0
    assert f.values == (Fraction(0),)


def test_build_bell_from_keys():
    f = build([1, 2], {"": "0", "1": "1", "2": "1", "1,2": "0"})
    assert f == bell()
    assert classify(f).polyquantoid


def test_build_missing_subset():
    with pytest.raises(MissingSubset, match="1,2"):
        build([1, 2], {"": 0, "1": 1, "2": 1})


def test_build_duplicate_label():
    with pytest.raises(DuplicateLabel):
        build(["a", "a"], {"": 0, "a": 0, "a,a": 0})


def test_build_too_large():
    labels = [str(i) for i in range(17)]
    with pytest.raises(GroundSetTooLarge):
        build(labels, {})


def test_build_malformed_rational():
    with pytest.raises(MalformedRational):
        build(["1"], {"": 0, "1": "x"})
    with pytest.raises(MalformedRational):
        build(["1"], {"": 0, "1": 0.5})


def test_build_rejects_unknown_key():
    with pytest.raises(UnknownSubsetKey):
        build(["1"], {"": 0, "1": 1, "2": 1})


def test_build_accepts_fraction_strings():
    f = build(["1"], {"": "0", "1": "2/4"})
    assert f.value(["1"]) == Fraction(1, 2)


# -- subset keys ---------------------------------------------------------------

def test_key_mask_round_trip():
    g = GroundSet(("a", "b", "c"))
    for mask in g.subsets():
        key = g.key_of(mask)
        assert g.mask_of_key(key) == mask
        assert g.key_of(g.mask_of_key(key)) == key


def test_empty_key_is_empty_set():
    g = GroundSet(("x",))
    assert g.key_of(0) == ""
    assert g.mask_of_key("") == 0


# -- classify ------------------------------------------------------------------

def test_classify_u24():
    c = classify(uniform(2, 4))
    assert c.matroid and c.polymatroid and c.integer
    assert c.tight and c.selfdual
    assert not c.complementary and not c.quantoid


def test_classify_ghz3():
    c = classify(ghz3())
    assert c.polyquantoid and c.quantoid
    assert not c.nondecreasing and not c.polymatroid


def test_classify_not_normalized():
    f = from_table(["1"], [1, 1])
    c = classify(f)
    assert not c.normalized and not c.polymatroid and not c.polyquantoid


@pytest.mark.parametrize("fn", [uniform(2, 4), uniform(1, 3), bell(), ghz3(),
                                from_table(["1", "2"], [0, 2, 1, 2])])
def test_classify_local_equals_exhaustive(fn):
    assert classify(fn) == classify(fn, exhaustive=True)


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=6),
                min_size=8, max_size=8))
def test_classify_local_equals_exhaustive_random(vals):
    f = from_table(labels_for(3), vals)
    assert classify(f).submodular == classify(f, exhaustive=True).submodular


# -- scale ---------------------------------------------------------------------

def test_scale_identity():
    u = uniform(2, 4)
    assert scale(u, 1) == u


def test_scale_double():
    doubled = scale(uniform(2, 4), 2)
    assert doubled.values == tuple(2 * min(m.bit_count(), 2) for m in range(16))


def test_scale_rejects_nonpositive():
    with pytest.raises(NonpositiveScale):
        scale(uniform(2, 4), 0)
    with pytest.raises(NonpositiveScale):
        scale(uniform(2, 4), Fraction(-1, 2))


CONE_FLAGS = ["normalized", "nondecreasing", "submodular", "complementary",
              "tight", "selfdual", "polymatroid", "polyquantoid"]


@pytest.mark.parametrize("t", [2, Fraction(1, 2), Fraction(3, 7)])
@pytest.mark.parametrize("fn", [uniform(2, 4), bell(), ghz3(),
                                from_table(["1", "2"], [0, 2, 1, 2])])
def test_axiom_flags_are_cone_conditions(fn, t):
    # integrality flags are deliberately excluded: scaling by 1/2 breaks them
    before = classify(fn).as_dict()
    after = classify(scale(fn, t)).as_dict()
    for flag in CONE_FLAGS:
        assert before[flag] == after[flag], flag


# -- enumeration -----------------------------------------------------------------

def test_enumerate_examples():
    assert len(list(enumerate_rank_functions("polymatroid", 1, 1))) == 2
    # complementarity forces e(1) = e(empty) = 0: only the zero function
    only = list(enumerate_rank_functions("polyquantoid", 1, 1))
    assert [f.values for f in only] == [(Fraction(0), Fraction(0))]
    pq2 = list(enumerate_rank_functions("polyquantoid", 2, 1))
    assert [f.values for f in pq2] == [
        (Fraction(0),) * 4,
        (Fraction(0), Fraction(1), Fraction(1), Fraction(0)),
    ]


def test_enumerate_unknown_kind():
    with pytest.raises(ValueError):
        list(enumerate_rank_functions("matroid", 1, 1))


def _brute_force(kind, n, cap):
    """Independent oracle: filter every value table with the exhaustive classifier."""
    out = []
    for tail in itertools.product(range(cap + 1), repeat=(1 << n) - 1):
        f = from_table(labels_for(n), (0,) + tail)
        c = classify(f, exhaustive=True)
        if (kind == "polymatroid" and c.polymatroid) or \
           (kind == "polyquantoid" and c.polyquantoid):
            out.append(f.values)
    return out


@pytest.mark.parametrize("kind", ["polymatroid", "polyquantoid"])
@pytest.mark.parametrize("n,cap", [(0, 2), (1, 2), (2, 2), (3, 2)])
def test_enumerate_matches_brute_force(kind, n, cap):
    got = [f.values for f in enumerate_rank_functions(kind, n, cap)]
    assert got == _brute_force(kind, n, cap)  # same set, same lexicographic order


def test_enumerate_output_passes_classify():
    for kind, flag in [("polymatroid", "polymatroid"), ("polyquantoid", "polyquantoid")]:
        for f in enumerate_rank_functions(kind, 3, 2):
            c = classify(f)
            assert c.as_dict()[flag] and c.integer


def test_classification_implications_on_corpus():
    for f in enumerate_rank_functions("polyquantoid", 3, 2):
        c = classify(f)
        if c.quantoid:
            assert c.polyquantoid
        if c.polyquantoid:
            assert c.submodular
    for f in enumerate_rank_functions("polymatroid", 3, 2):
        c = classify(f)
        if c.matroid:
            assert c.polymatroid


def test_zero_function_is_everything():
    c = classify(zero_fn(2))
    assert c.polymatroid and c.polyquantoid and c.matroid and c.quantoid
