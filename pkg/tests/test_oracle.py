import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gitfan.actions import (
    ActionSpec,
    completion_witnesses,
    git_fan,
    weight_cone,
    witnesses,
)
from gitfan.arrangement import class_histogram
from gitfan.configs import PointConfig
from gitfan.errors import DimensionMismatch, InsufficientWitnessSet
from gitfan.exact import ONE, ZERO, GaussRat, I
from gitfan.geometry import cone_from_rays, contains, intersect, zero_cone
from gitfan.oracle import (
    eval_sl_invariants,
    eval_so_invariants,
    git_cone,
    orbit_cone,
    random_configs,
    so_graph,
    so_stabilizer_dim,
    verify_fan,
)
from oracles import gadd, gdet, gmul

ISO_PLUS = (ONE, I, ZERO)
ISO_MINUS = (ONE, -I, ZERO)
E1, E2, E3 = (ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)
QUADRANT = cone_from_rays(2, [(1, 0), (0, 1)])


def _id(spec):
    return f"{spec.group}-{spec.n}-{spec.m1}-{spec.m2}"


def by_label(values):
    return {(d.kind, d.indices): v for d, v in values.items()}


def pair(x):
    """GaussRat with integer parts as a (re, im) pair."""
    assert x.re.denominator == 1 and x.im.denominator == 1
    return (int(x.re), int(x.im))


# invariant evaluation

def test_so_evaluation_examples():
    vals = {d.indices: v for d, v in eval_so_invariants(PointConfig(3, (ISO_PLUS, ISO_MINUS))).items()}
    assert vals == {(1, 1): 0, (2, 2): 0, (1, 2): 2}
    vals = {d.indices: v for d, v in eval_so_invariants(PointConfig(3, (E1, E2))).items()}
    assert vals == {(1, 1): 1, (2, 2): 1, (1, 2): 0}
    (only,) = eval_so_invariants(PointConfig(3, (ISO_PLUS,))).values()
    assert only == 0


def test_so_evaluation_rejects_covectors():
    with pytest.raises(DimensionMismatch):
        eval_so_invariants(PointConfig(3, (E1,), (E1,)))


def test_sl_evaluation_examples():
    e = lambda c, n: tuple(ONE if i == c else ZERO for i in range(n))
    vals = by_label(eval_sl_invariants(PointConfig(2, (e(0, 2), e(1, 2)))))
    assert vals[("det-v", (1, 2))] == 1
    vals = by_label(eval_sl_invariants(PointConfig(2, (e(0, 2),) * 2, (e(0, 2),) * 2)))
    assert vals[("det-v", (1, 2))] == 0 and vals[("det-l", (1, 2))] == 0
    assert [v for (k, _), v in vals.items() if k == "pair"] == [1, 1, 1, 1]
    vals = by_label(eval_sl_invariants(PointConfig(3, (e(0, 3), e(1, 3)), (e(0, 3), e(1, 3)))))
    assert not any(k.startswith("det") for k, _ in vals)
    # pair labels are (vector index, covector index)
    assert vals[("pair", (1, 1))] == 1 and vals[("pair", (2, 1))] == 0
    assert vals[("pair", (1, 2))] == 0 and vals[("pair", (2, 2))] == 1


gauss_int = st.builds(GaussRat, st.integers(-3, 3), st.integers(-3, 3))


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(gauss_int, min_size=n, max_size=n), min_size=n, max_size=n + 1),
    st.lists(st.lists(gauss_int, min_size=n, max_size=n), min_size=0, max_size=n + 1))))
def test_sl_evaluation_matches_reference(data):
    n, vecs, covs = data
    p = PointConfig(n, tuple(map(tuple, vecs)), tuple(map(tuple, covs)))
    for d, v in eval_sl_invariants(p).items():
        if d.kind == "pair":
            i, j = d.indices
            ref = (0, 0)
            for a, b in zip(covs[j - 1], vecs[i - 1]):
                ref = gadd(ref, gmul(pair(a), pair(b)))
        else:
            src = vecs if d.kind == "det-v" else covs
            ref = gdet([[pair(x) for x in src[k - 1]] for k in d.indices])
        assert pair(v) == ref


@given(st.lists(st.lists(gauss_int, min_size=3, max_size=3), min_size=1, max_size=4))
def test_so_evaluation_matches_reference(vecs):
    p = PointConfig(3, tuple(map(tuple, vecs)))
    for d, v in eval_so_invariants(p).items():
        i, j = d.indices
        ref = (0, 0)
        for a, b in zip(vecs[i - 1], vecs[j - 1]):
            ref = gadd(ref, gmul(pair(a), pair(b)))
        assert pair(v) == ref


# orbit cones

def test_orbit_cone_examples():
    so2 = ActionSpec.so(3, 2)
    assert orbit_cone(so2, PointConfig(3, (ISO_PLUS, ISO_MINUS))) == cone_from_rays(2, [(1, 1)])
    assert orbit_cone(so2, PointConfig(3, (E1, E2))) == QUADRANT
    assert orbit_cone(ActionSpec.so(3, 1), PointConfig(3, ((ZERO,) * 3,))) == zero_cone(1)


def test_orbit_cone_checks_shape():
    with pytest.raises(DimensionMismatch):
        orbit_cone(ActionSpec.so(3, 2), PointConfig(3, (E1,)))


# git cones

SO2_WITNESS_CONES = [QUADRANT, cone_from_rays(2, [(1, 1)]), cone_from_rays(2, [(2, 0), (1, 1)]),
                     cone_from_rays(2, [(0, 2), (1, 1)]), cone_from_rays(2, [(2, 0)]),
                     cone_from_rays(2, [(0, 2)])]


def brute_git_cone(a, cones):
    hit = [c for c in cones if contains(c, a)]
    out = hit[0]
    for c in hit[1:]:
        out = intersect(out, c)
    return out


def test_git_cone_examples():
    assert git_cone((1, 1), SO2_WITNESS_CONES) == cone_from_rays(2, [(1, 1)])
    assert git_cone((2, 0), SO2_WITNESS_CONES) == cone_from_rays(2, [(1, 0)])
    assert git_cone((1, 2), [QUADRANT]) == QUADRANT
    for a in [(1, 1), (2, 0), (1, 2), (3, 1), (0, 5)]:
        assert git_cone(a, SO2_WITNESS_CONES) == brute_git_cone(a, SO2_WITNESS_CONES)


def test_git_cone_without_containing_cone():
    with pytest.raises(InsufficientWitnessSet):
        git_cone((1, 2), [cone_from_rays(2, [(1, 0)])])


@given(st.lists(st.sampled_from(SO2_WITNESS_CONES), min_size=1), st.lists(st.sampled_from(SO2_WITNESS_CONES)),
       st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(any))
def test_git_cone_monotone_in_witness_set(small, extra, a):
    small = small + [QUADRANT]
    tau = git_cone(a, small)
    assert contains(tau, a)
    big = git_cone(a, small + extra)
    assert all(contains(tau, r) for r in big.rays)


# stabilizer dimension

def test_stabilizer_examples():
    assert so_stabilizer_dim(PointConfig(3, (ISO_PLUS, ISO_MINUS))) == 1
    assert so_stabilizer_dim(PointConfig(3, (E1, E2))) == 0
    assert so_stabilizer_dim(PointConfig(3, (ISO_PLUS, (ZERO,) * 3))) == 2


def test_graph_classification():
    # a triangle of pairwise non-orthogonal isotropic vectors is an odd cycle
    g = so_graph(PointConfig(3, (ISO_PLUS, ISO_MINUS, (ONE, ZERO, I))))
    (comp, kind), = g.components()
    assert not g.loops and kind == "A" and comp == {0, 1, 2}


def test_stabilizer_relation_50_seeds():
    for seed in range(50):
        rng = random.Random(seed)
        spec = ActionSpec.so(rng.randint(3, 4), rng.randint(1, 4))
        (p,) = random_configs(spec, 1, seed)
        assert orbit_cone(spec, p).dim + so_stabilizer_dim(p) == spec.m1, (seed, p.describe())


@given(st.integers(1, 4), st.integers(0, 10_000))
def test_stabilizer_relation_property(m, seed):
    spec = ActionSpec.so(3, m)
    for p in random_configs(spec, 3, seed):
        assert orbit_cone(spec, p).dim + so_stabilizer_dim(p) == m


# orbit cones against the weight cone and under degeneration

SAMPLE_SPECS = [ActionSpec.so(3, 3), ActionSpec.so(4, 4), ActionSpec.sl(2, 2, 2),
                ActionSpec.sl(3, 2, 2), ActionSpec.sl(3, 3, 1), ActionSpec.sl(2, 3, 0)]


@pytest.mark.parametrize("spec", SAMPLE_SPECS, ids=_id)
def test_orbit_cones_lie_in_weight_cone(spec):
    om = weight_cone(spec)
    for p in random_configs(spec, 40, 11):
        assert all(contains(om, r) for r in orbit_cone(spec, p).rays)


@pytest.mark.parametrize("spec", SAMPLE_SPECS, ids=_id)
def test_zeroing_a_slot_shrinks_the_orbit_cone(spec):
    zero = (ZERO,) * spec.n
    for p in random_configs(spec, 15, 5):
        big = orbit_cone(spec, p)
        for k in range(spec.m1 + spec.m2):
            vecs, covs = list(p.vectors), list(p.covectors)
            if k < spec.m1:
                vecs[k] = zero
            else:
                covs[k - spec.m1] = zero
            small = orbit_cone(spec, PointConfig(spec.n, tuple(vecs), tuple(covs)))
            assert all(contains(big, r) for r in small.rays)


# fan verification

def test_verify_so_3_3():
    spec = ActionSpec.so(3, 3)
    fan = git_fan(spec)
    rep = verify_fan(spec, fan, witnesses(spec) + completion_witnesses(spec))
    assert rep.passed and len(rep.results) == class_histogram(fan).total == 43


def test_verify_so_3_2():
    spec = ActionSpec.so(3, 2)
    rep = verify_fan(spec, git_fan(spec), witnesses(spec) + completion_witnesses(spec))
    assert rep.passed
    assert sorted(r.face.dim for r in rep.results) == [1, 1, 1, 2, 2]


def test_verify_single_ray():
    spec = ActionSpec.sl(2, 1, 1)
    rep = verify_fan(spec, git_fan(spec), witnesses(spec))
    assert rep.passed and len(rep.results) == 1


def test_verify_reports_missing_witnesses():
    spec = ActionSpec.so(3, 2)
    rep = verify_fan(spec, git_fan(spec), [])
    assert not rep.passed and {r.status for r in rep.results} == {"insufficient"}


def test_verify_reports_coarse_witness_set():
    spec = ActionSpec.so(3, 3)
    generic = [w for w in witnesses(spec) if w.role == "generic"]
    rep = verify_fan(spec, git_fan(spec), generic)
    assert not rep.passed and {r.status for r in rep.results} == {"coarser"}


@pytest.mark.parametrize("spec", [ActionSpec.sl(2, 3, 1), ActionSpec.sl(3, 4, 0), ActionSpec.sl(3, 0, 4),
                                  ActionSpec.sl(3, 3, 1)], ids=_id)
def test_completion_witnesses_certify_cut_fans(spec):
    rep = verify_fan(spec, git_fan(spec), witnesses(spec) + completion_witnesses(spec))
    assert rep.passed, [r.face.rays for r in rep.failures()][:3]


@pytest.mark.parametrize("spec", [SAMPLE_SPECS[0]] + SAMPLE_SPECS[2:], ids=_id)
def test_random_configs_never_contradict_the_fan(spec):
    # extra orbit cones may refine nothing: chambers are already GIT-cones
    ws = witnesses(spec) + completion_witnesses(spec)
    rep = verify_fan(spec, git_fan(spec), ws, random_configs(spec, 60, 1), seed=1)
    assert rep.passed and rep.random_count == 60 and rep.seed == 1
