"""Quiver Grassmannians: point counts, strata, component labels."""

import numpy as np
import pytest

from quiverlab import (
    CapExceeded,
    PartitionError,
    a2_component_range,
    build,
    ext_ger,
    generic_pairs,
    kp_format,
    kp_parse,
    point_count,
    realized_pairs,
    strata,
    stratum_dim,
    subreps,
)
from quiverlab.linalg import rank, row_space_contains


def pair_names(pairs):
    return sorted((kp_format(m), kp_format(n)) for m, n in pairs)


# --------------------------------------------------- the P^1 workhorse

def test_projective_line_point_counts(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    assert point_count(lam, (0, 1, 1), 2) == 3
    assert point_count(lam, (0, 1, 1), 3) == 4


def test_strata_report(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    rep = strata(lam, (0, 1, 1), 2)
    rows = [(kp_format(e.mu), kp_format(e.nu), e.count, e.dim) for e in rep.entries]
    assert rows == [
        ("[1,2]", "[2,3]", 2, 1),
        ("[1,1]+[2,2]", "[2,2]+[3,3]", 1, 0),
    ]
    assert rep.total == 3
    assert rep.count_of(kp_parse(t3, "[1,2]"), kp_parse(t3, "[2,3]")) == 2
    # the open stratum grows with the field, the closed one does not
    rep3 = strata(lam, (0, 1, 1), 3)
    assert rep3.count_of(kp_parse(t3, "[1,2]"), kp_parse(t3, "[2,3]")) == 3
    assert rep3.count_of(kp_parse(t3, "[1,1]+[2,2]"), kp_parse(t3, "[2,2]+[3,3]")) == 1


def test_strata_json_schema(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    payload = strata(lam, (0, 1, 1), 2).to_json_dict()
    assert payload["lambda"] == "[1,2]+[2,3]"
    assert payload["beta"] == "0,1,1"
    assert payload["q"] == 2
    assert payload["total"] == 3
    assert payload["strata"] == [
        {"mu": "[1,2]", "nu": "[2,3]", "count": 2, "dim": 1},
        {"mu": "[1,1]+[2,2]", "nu": "[2,2]+[3,3]", "count": 1, "dim": 0},
    ]


def test_single_point_grassmannian(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    for q in (2, 3):
        assert point_count(lam, (1, 1, 0), q) == 1


def test_realized_generic_and_component_pairs(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    assert pair_names(realized_pairs(lam, (0, 1, 1), 2)) == [
        ("[1,1]+[2,2]", "[2,2]+[3,3]"),
        ("[1,2]", "[2,3]"),
    ]
    assert pair_names(generic_pairs(lam, (1, 1, 0), (0, 1, 1))) == [
        ("[1,1]+[2,2]", "[2,2]+[3,3]"),
        ("[1,2]", "[2,3]"),
    ]
    # the semisimple pair fails [nu,lam] = [nu,nu] + [nu,mu]  (2 < 2+1)
    assert pair_names(ext_ger(lam, (1, 1, 0), (0, 1, 1))) == [("[1,2]", "[2,3]")]


# --------------------------------------------------- subspace scans

def test_subreps_yields_exactly_the_stable_subspaces(t4):
    kp = kp_parse(t4, "0,1,1,1 + 1,1,0,0")
    m = build(kp, 2)
    beta = (1, 1, 1, 0)
    seen = 0
    for bases in subreps(m, beta):
        seen += 1
        for v, basis in enumerate(bases, start=1):
            assert basis.shape == (beta[v - 1], m.dims[v - 1])
            assert rank(basis, 2) == beta[v - 1]
        # stability: each arrow maps the chosen rows into the target rows
        for k, (s, t) in enumerate(m.quiver.arrows):
            img = (bases[s - 1] @ m.mats[k].T) % 2
            assert row_space_contains(bases[t - 1], img, 2)
    assert seen == point_count(kp, beta, 2)


def test_subreps_empty_when_beta_exceeds_dims(t2):
    m = build(kp_parse(t2, "[1,2]"), 2)
    assert list(subreps(m, (2, 0))) == []


def test_subreps_cap(t3):
    m = build(kp_parse(t3, "[1,1]+[1,1]+[2,2]+[2,2]"), 3)
    with pytest.raises(CapExceeded):
        list(subreps(m, (1, 1, 0), cap=2))


def test_stratum_dim_checks_realization(t3):
    lam = kp_parse(t3, "[1,2]+[2,3]")
    assert stratum_dim(lam, kp_parse(t3, "[2,3]")) == 1
    assert stratum_dim(lam, kp_parse(t3, "[2,2]+[3,3]")) == 0
    # S1 never embeds in [1,3]+[2,2]: the first arrow is injective on it
    with pytest.raises(PartitionError):
        stratum_dim(kp_parse(t3, "[1,3]+[2,2]"), kp_parse(t3, "[1,1]"))


# --------------------------------------------------- the A2 family

def test_a2_component_labels_match_brute_force(t2):
    assert a2_component_range((2, 2), (1, 1), 1) == frozenset({0, 1})
    # brute force on M = [1,2] + [1,1] + [2,2] over both fields
    lam = kp_parse(t2, "[1,2]+[1,1]+[2,2]")
    labels = {
        sum(1 for i in nu.parts if nu.table.roots[i] == (1, 1))
        for _, nu in ext_ger(lam, (1, 1), (1, 1))
    }
    assert labels == {0, 1}


def test_a2_component_range_edge_cases():
    # r = 0: the representation is semisimple, single label a = 0
    assert a2_component_range((2, 2), (1, 1), 0) == frozenset({0})
    # zero subspace dimension
    assert a2_component_range((2, 2), (0, 0), 0) == frozenset({0})
    # in-regime instance whose label window is empty
    assert a2_component_range((2, 2), (2, 1), 2) == frozenset()


def test_a2_component_range_preconditions():
    with pytest.raises(PartitionError):
        a2_component_range((2, 2), (1, 1), 3)  # rank too large
    with pytest.raises(PartitionError):
        a2_component_range((2, 2), (3, 1), 1)  # e exceeds d
    with pytest.raises(PartitionError):
        a2_component_range((2, 1), (1, 1), 1)  # outside the covered regime
