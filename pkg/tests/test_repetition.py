"""The repetition quiver: labeling, q-Cartan operator, pairing exponents.

Sign and shift conventions are easy to get wrong, so the hand-checked
rank-2 values are frozen in full detail here; the acceptance suite
re-checks the structural properties exhaustively in rank 3.
"""

import itertools

import pytest

from quiverlab import (
    GradedDimVector,
    RepetitionError,
    V_COORDINATE_SHIFT,
    build_repetition,
    cartan_q,
    ck_dims,
    coxeter_tau,
    coxeter_tau_inv,
    d_value,
    epsilon,
    kp_enumerate,
    kp_parse,
    pairing,
    v_lambda,
    w_gamma,
)


@pytest.fixture(scope="module")
def rq2(a2):
    return build_repetition(a2)


@pytest.fixture(scope="module")
def rq3(a3):
    return build_repetition(a3)


# ------------------------------------------------------------ vectors

def test_graded_vector_basics():
    d = GradedDimVector.from_dict({(1, 0): 2, (2, 1): -1, (3, 3): 0})
    assert d.entries == ((1, 0, 2), (2, 1, -1))  # zeros dropped, sorted
    assert d.value(1, 0) == 2 and d.value(9, 9) == 0
    assert d.support == frozenset({(1, 0), (2, 1)})
    assert (-d).entries == ((1, 0, -2), (2, 1, 1))
    assert (d - d) == GradedDimVector.zero()
    assert d.total() == 1
    assert not d.is_nonnegative()
    assert d.shift(1).as_dict() == {(1, 1): 2, (2, 2): -1}  # q^{-1} direction
    assert d.shift(-1).as_dict() == {(1, -1): 2, (2, 0): -1}
    assert GradedDimVector.from_dict(d.as_dict()) == d


def test_pairing():
    a = GradedDimVector.from_dict({(1, 0): 2, (2, 1): 3})
    b = GradedDimVector.from_dict({(1, 0): 5, (2, 1): 1, (1, 4): 9})
    assert pairing(a, b) == 10 + 3


# ------------------------------------------------------------ tau

def test_coxeter_tau_a2(a2):
    assert coxeter_tau(a2, (1, 0)) == (0, 1)
    assert coxeter_tau(a2, (1, 1)) == (-1, 0)  # the projective dies
    assert coxeter_tau_inv(a2, (0, 1)) == (1, 0)


def test_coxeter_tau_shifts_segments(a3):
    # on the linear quiver tau moves M[a,b] to M[a+1,b+1]
    assert coxeter_tau(a3, (1, 0, 0)) == (0, 1, 0)
    assert coxeter_tau(a3, (1, 1, 0)) == (0, 1, 1)
    assert coxeter_tau(a3, (0, 1, 0)) == (0, 0, 1)
    assert coxeter_tau(a3, (1, 1, 1))[0] < 0  # projective [1,3] dies
    # inverses, where defined
    assert coxeter_tau_inv(a3, (0, 0, 1)) == (0, 1, 0)
    assert coxeter_tau_inv(a3, (0, 1, 1)) == (1, 1, 0)


# ------------------------------------------------------------ labeling

def test_a2_window_and_heights(rq2):
    assert rq2.window == (-6, 3)
    assert rq2.xi == (1, 0)


def test_a2_zero_slice(rq2):
    zero = {k: v[0] for k, v in rq2.phi.items() if v[1] == 0}
    assert zero == {(1, 1): (1, 0), (1, -1): (0, 1), (2, 0): (1, 1)}
    assert rq2.vertex_of_root((1, 1)) == (2, 0)


def test_a2_windings(rq2):
    assert rq2.phi[(1, 3)] == ((1, 1), 1)
    assert rq2.phi[(1, -3)] == ((1, 1), -1)
    assert rq2.phi[(1, -5)] == ((1, 0), -2)


def test_a3_zero_slice(rq3):
    assert rq3.window == (-8, 4)
    assert rq3.xi == (2, 1, 0)
    zero = {k: v[0] for k, v in rq3.phi.items() if v[1] == 0}
    assert zero == {
        (1, 2): (1, 0, 0),
        (1, 0): (0, 1, 0),
        (1, -2): (0, 0, 1),
        (2, 1): (1, 1, 0),
        (2, -1): (0, 1, 1),
        (3, 0): (1, 1, 1),
    }


def test_labeling_is_bijective_on_the_window(rq3):
    labels = list(rq3.phi.values())
    assert len(labels) == len(set(labels)) == len(rq3.vertices)


def test_window_too_small_is_an_error(a2):
    with pytest.raises(RepetitionError):
        build_repetition(a2, (0, 1))


# ------------------------------------------------------------ operators

def test_cartan_q_on_a_delta(rq2):
    c = cartan_q(rq2, GradedDimVector.from_dict({(1, 0): 1}))
    assert c.as_dict() == {(1, -1): 1, (1, 1): 1, (2, 0): -1}


def test_cartan_q_checks_the_window(a2):
    rq = build_repetition(a2, (-6, 3))
    edge = GradedDimVector.from_dict({(1, 3): 1})  # p+1 leaves the window
    with pytest.raises(RepetitionError):
        cartan_q(rq, edge)


def test_w_gamma_sits_on_simple_root_vertices(rq2, rq3):
    # gamma_i lands on the zero-winding vertex labeled by the i-th simple root
    assert w_gamma(rq2, (1, 1)).as_dict() == {(1, -1): 1, (1, 1): 1}
    assert w_gamma(rq3, (1, 0, 2)).as_dict() == {(1, 2): 1, (1, -2): 2}


def test_v_lambda_values(rq2, t2):
    assert V_COORDINATE_SHIFT == -1
    v12 = v_lambda(rq2, kp_parse(t2, "[1,2]"))
    assert v12.as_dict() == {(1, 0): 1}
    assert v_lambda(rq2, kp_parse(t2, "[1,1]")) == GradedDimVector.zero()
    assert v_lambda(rq2, kp_parse(t2, "[1,1]+[2,2]")) == GradedDimVector.zero()


def test_v_lambda_additivity(rq3, t3):
    x = kp_parse(t3, "[1,2]+[2,3]")
    y = kp_parse(t3, "[1,1]+[2,2]")
    assert v_lambda(rq3, x + y) == v_lambda(rq3, x) + v_lambda(rq3, y)


def test_v_lambda_injective_per_dimension_vector(rq3, t3):
    for gamma in ((1, 1, 0), (1, 1, 1), (1, 2, 1)):
        kps = kp_enumerate(t3, gamma)
        images = {v_lambda(rq3, kp).entries for kp in kps}
        assert len(images) == len(kps)


def test_dominance_golden(rq2, t2):
    w = w_gamma(rq2, (1, 1))
    v = v_lambda(rq2, kp_parse(t2, "[1,2]"))
    assert (w - cartan_q(rq2, v)).as_dict() == {(2, 0): 1}


def test_ck_dims(t2):
    # only the non-projective root (1,0) contributes a coordinate
    split = kp_parse(t2, "[1,1]+[2,2]")
    assert ck_dims(split) == {(1, 0): 1}
    assert ck_dims(kp_parse(t2, "[1,2]")) == {(1, 0): 0}


# ------------------------------------------------------------ epsilon

def test_epsilon_simples(rq2, t2):
    v1 = v_lambda(rq2, kp_parse(t2, "[1,1]"))
    v2 = v_lambda(rq2, kp_parse(t2, "[2,2]"))
    assert epsilon(rq2, v1, w_gamma(rq2, (1, 0)), v2, w_gamma(rq2, (0, 1))) == 0


def test_epsilon_segment_against_simple(rq2, t2):
    v12 = v_lambda(rq2, kp_parse(t2, "[1,2]"))
    v1 = v_lambda(rq2, kp_parse(t2, "[1,1]"))
    w12, w1 = w_gamma(rq2, (1, 1)), w_gamma(rq2, (1, 0))
    assert d_value(rq2, v12, w12, v1, w1) == 0
    assert d_value(rq2, v1, w1, v12, w12) == 1
    assert epsilon(rq2, v12, w12, v1, w1) == -1
    assert epsilon(rq2, v1, w1, v12, w12) == 1  # antisymmetry


def test_epsilon_antisymmetric_on_samples(rq3, t3):
    import random

    rng = random.Random(11)
    gammas = [g for g in itertools.product(range(3), repeat=3) if 0 < sum(g) <= 3]
    for _ in range(25):
        g1, g2 = rng.choice(gammas), rng.choice(gammas)
        l1 = rng.choice(kp_enumerate(t3, g1))
        l2 = rng.choice(kp_enumerate(t3, g2))
        a = (v_lambda(rq3, l1), w_gamma(rq3, g1))
        b = (v_lambda(rq3, l2), w_gamma(rq3, g2))
        assert epsilon(rq3, *a, *b) == -epsilon(rq3, *b, *a)
