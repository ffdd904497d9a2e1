"""Generic dimensions, splitting types, the semistability gate, detection."""

import random

import pytest

from fatpoints import (
    GeneralPointStrategy,
    PointConfiguration,
    QQ,
    apply_transform,
    detect_unexpected,
    dual_fermat,
    example_quartic_config,
    family,
    fermat_unexpected_range,
    is_semistable_gate,
    multiplicity_dim,
    random_config,
    splitting_type,
)
from fatpoints.geom import mat3_det


def test_multiplicity_dim_examples():
    W5 = family("w5", {"a": 2})
    assert multiplicity_dim(W5, 1) == 0
    assert multiplicity_dim(W5, 2) == 2
    # three non-collinear points admit no common line
    Z = PointConfiguration(QQ, [(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert multiplicity_dim(Z, 0) == 0
    assert multiplicity_dim(example_quartic_config(), 3) == 1


def test_splitting_type_examples():
    st = splitting_type(family("w5", {"a": 2}))
    assert (st.a, st.b) == (2, 2)
    assert st.balanced
    st = splitting_type(example_quartic_config())
    assert (st.a, st.b) == (3, 5)
    assert not st.balanced
    assert st.m_values[3] == 1
    four = PointConfiguration(QQ, [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 2, 1)])
    st = splitting_type(four)
    assert st.a + st.b == 3


def test_splitting_trace_length_and_sum():
    rng = random.Random("split")
    for t in range(4):
        Z = random_config(rng.randint(3, 6), 20, ("split", t))
        st = splitting_type(Z)
        assert len(st.m_values) == len(Z)
        assert st.a + st.b == len(Z) - 1
        assert st.a <= st.b


def test_semistable_gate():
    assert is_semistable_gate(family("w5", {"a": 2})) == "balanced"
    assert is_semistable_gate(example_quartic_config()) == "unbalanced"
    assert is_semistable_gate(dual_fermat(3)) == "balanced"


def test_gate_soundness_on_corpus():
    # balanced configurations admit no unexpected curve in 2 <= d <= |Z|-2
    corpus = [family("w5", {"a": a}) for a in (2, 3, -1)]
    corpus.append(dual_fermat(3))
    for Z in corpus:
        if is_semistable_gate(Z) != "balanced":
            continue
        for d in range(2, len(Z) - 1):
            assert not detect_unexpected(Z, d).unexpected, (len(Z), d)


def test_detect_unexpected_example():
    rep = detect_unexpected(example_quartic_config(), 4)
    assert rep.unexpected
    assert rep.generic_dim == 1
    assert rep.threshold == 0
    assert rep.dim_z == 6
    assert rep.witness is not None
    assert not rep.certified


def test_witness_satisfies_all_vanishing_conditions():
    from fatpoints import evaluate, partial_derivative

    Z = example_quartic_config()
    rep = detect_unexpected(Z, 4)
    w = rep.witness
    # simple vanishing on Z
    for p in Z.points:
        assert evaluate(w, p.coeffs).is_zero()
    # triple-point conditions at the sample attaining the generic dimension
    P = next(p for p, dim in rep.samples if dim == rep.generic_dim)
    for au in range(3):
        for av in range(3 - au):
            g = w
            for _ in range(au):
                g = partial_derivative(g, "x")
            for _ in range(av):
                g = partial_derivative(g, "y")
            assert evaluate(g, P.coeffs).is_zero()


def test_detect_unexpected_random_and_fermat():
    for i in range(5):
        Z = random_config(9, 500, ("detect", i))
        assert not detect_unexpected(Z, 4).unexpected
    assert not detect_unexpected(dual_fermat(3), 4).unexpected
    with pytest.raises(ValueError):
        detect_unexpected(example_quartic_config(), 1)


def test_semicontinuity_of_samples():
    Z = example_quartic_config()
    rep = detect_unexpected(Z, 4, GeneralPointStrategy(seed=5))
    assert all(dim >= rep.generic_dim for _, dim in rep.samples)
    assert any(dim == rep.generic_dim for _, dim in rep.samples)


def test_certified_matches_sampled_on_example():
    Z = example_quartic_config()
    sampled = detect_unexpected(Z, 4, GeneralPointStrategy(seed=1))
    certified = detect_unexpected(Z, 4, GeneralPointStrategy(mode="certified"))
    assert sampled.generic_dim == certified.generic_dim == 1
    assert certified.certified


def test_detection_invariant_under_transform():
    rng = random.Random("detinv")
    Z = example_quartic_config()
    for _ in range(3):
        T = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        Tm = tuple(tuple(QQ.scalar(e) for e in row) for row in T)
        if mat3_det(Tm).is_zero():
            continue
        image = apply_transform(T, Z)
        assert detect_unexpected(image, 4).unexpected
    W = random_config(9, 40, "detinv2")
    image = apply_transform([[1, 2, 3], [0, 1, 4], [0, 0, 1]], W)
    assert detect_unexpected(W, 4).unexpected == detect_unexpected(image, 4).unexpected


def test_strategy_determinism():
    Z = example_quartic_config()
    a = detect_unexpected(Z, 4, GeneralPointStrategy(seed=9))
    b = detect_unexpected(Z, 4, GeneralPointStrategy(seed=9))
    assert a.to_dict() == b.to_dict()
    c = detect_unexpected(Z, 4, GeneralPointStrategy(seed=10))
    assert [s["point"] for s in a.to_dict()["samples"]] != [
        s["point"] for s in c.to_dict()["samples"]
    ]


def test_sample_points_avoid_configuration():
    Z = example_quartic_config()
    strat = GeneralPointStrategy(height=2, seed=0)
    P = strat.sample_point(QQ, 0, set(Z.points))
    assert P not in Z.points


def test_fermat_range_small():
    assert fermat_unexpected_range(3) == []
    assert fermat_unexpected_range(4) == []
    with pytest.raises(ValueError):
        fermat_unexpected_range(2)


def test_strategy_validation():
    with pytest.raises(ValueError):
        GeneralPointStrategy(mode="magic")
    with pytest.raises(ValueError):
        GeneralPointStrategy(samples=0)
    with pytest.raises(ValueError):
        GeneralPointStrategy(height=1)


def test_report_json_shape():
    rep = detect_unexpected(example_quartic_config(), 4)
    d = rep.to_dict()
    assert set(d) >= {"degree", "dimZ", "genericDim", "threshold", "unexpected", "certified", "samples"}
    assert "witness" in d
    assert all(set(s) == {"point", "dim"} for s in d["samples"])
