"""Claw detection, the per-edge clause suite, bounds, and the construction test."""
import math
import random
from fractions import Fraction

import pytest

from gtough import (
    CLAUSE_IDS,
    Graph,
    ceil_fraction,
    certificate_clauses,
    check_degree_bound,
    check_endpoint_cuts,
    check_half_tough_construction,
    check_matthews_sumner,
    find_claw,
    invert_half_tough,
    is_claw_free,
    make_complete,
    make_cycle,
    make_net,
    make_path,
    make_petersen,
    make_star,
)
from gtough.common import ClauseVerdict
from gtough.structure import _merge_verdicts

from .test_certificates import WIDE

TWO_TRIANGLES = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
SPIDER = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def _by_id(verdicts):
    assert [v.clause for v in verdicts] == list(CLAUSE_IDS)
    return {v.clause: v for v in verdicts}


def test_find_claw():
    claw = find_claw(make_star(3))
    assert claw.center == 0 and claw.leaves == (1, 2, 3)
    assert find_claw(make_star(4)).leaves == (1, 2, 3)
    assert find_claw(make_cycle(5)) is None
    assert find_claw(make_net()) is None
    assert find_claw(Graph(2, [(0, 1)])) is None
    assert not is_claw_free(make_petersen())
    assert is_claw_free(TWO_TRIANGLES)


def test_matthews_sumner_verdicts():
    v = check_matthews_sumner(make_cycle(4))
    assert v.applicable and v.holds
    assert v.witness == {"tau": "1/1", "kappa": 2}

    v = check_matthews_sumner(make_complete(4))
    assert not v.applicable and v.witness["reason"] == "complete"

    v = check_matthews_sumner(make_star(3))
    assert not v.applicable
    assert v.witness["claw"] == {"center": 0, "leaves": [1, 2, 3]}

    v = check_matthews_sumner(Graph(4, [(0, 1), (2, 3)]))
    assert v.applicable and v.holds  # both sides are zero
    assert v.witness == {"tau": "0/1", "kappa": 0}


def test_endpoint_cuts_verdicts():
    v = check_endpoint_cuts(make_cycle(4), (0, 1), 1)
    assert v.applicable and v.holds and v.evaluable
    assert v.witness == {"delta": 2, "two_t": "2/1"}

    # nonempty detached part: the hypothesis fails
    v = check_endpoint_cuts(make_net(), (0, 1), Fraction(1, 2))
    assert not v.applicable and v.holds

    # bridge endpoints of the two-triangle graph both sit in 1-cuts
    v = check_endpoint_cuts(TWO_TRIANGLES, (2, 3), Fraction(1, 2))
    assert v.applicable and v.holds
    assert v.witness["u_in_cut"] and v.witness["v_in_cut"]

    # 2t = 2/3 cannot index a cut size
    v = check_endpoint_cuts(make_star(3), (0, 1), Fraction(1, 3))
    assert v.applicable and not v.evaluable and v.holds
    assert v.witness["two_t"] == "2/3"

    with pytest.raises(ValueError):
        check_endpoint_cuts(Graph(4, [(0, 1), (2, 3)]), (0, 1), 1)


def test_clauses_vacuous_without_detached_part():
    for g, edge in ((make_cycle(4), (0, 1)), (make_cycle(5), (1, 2))):
        verdicts = _by_id(certificate_clauses(g, edge, 1))
        for v in verdicts.values():
            assert not v.applicable and v.holds
            assert v.witness["reason"] == "detached part empty"


def test_clauses_net():
    verdicts = _by_id(certificate_clauses(make_net(), (0, 1), Fraction(1, 2)))

    assert not verdicts["attachment-overlap"].applicable

    rng = verdicts["attachment-range"]
    assert rng.applicable and rng.holds
    assert rng.witness["contacts"] == [2] and rng.witness["exclusive"] == []
    assert rng.witness["tight"] and rng.witness["in_cut"] == [True]

    sat = verdicts["saturated-attachment"]
    assert sat.applicable and sat.holds and sat.witness["in_cut"] == [True]

    assert not verdicts["near-saturated-attachment"].applicable

    split = verdicts["split-endpoints"]
    assert split.applicable and split.holds
    assert split.witness["mode"] == "shared-neighbor"
    assert split.witness["endpoints_in_cut"] == [True, True]

    assert not verdicts["pendant-endpoint"].applicable


def test_clauses_wide_fixture():
    verdicts = _by_id(certificate_clauses(WIDE, (0, 1), 1))

    assert not verdicts["attachment-overlap"].applicable
    assert not verdicts["saturated-attachment"].applicable
    assert not verdicts["pendant-endpoint"].applicable

    # vertex 7 touches only the edge component, breaking the exclusive bound
    rng = verdicts["attachment-range"]
    assert rng.failed
    assert rng.witness["contacts"] == [6, 7] and rng.witness["exclusive"] == [7]

    near = verdicts["near-saturated-attachment"]
    assert near.applicable and near.holds
    assert near.witness["attachment_sizes"] == [1]
    assert near.witness["deep_part"] == "skipped"

    split = verdicts["split-endpoints"]
    assert split.applicable and split.holds
    assert split.witness["mode"] == "one-sided"


def test_clauses_wide_exhaustive_deep_part():
    verdicts = _by_id(certificate_clauses(WIDE, (0, 1), 1, exhaustive=True))
    near = verdicts["near-saturated-attachment"]
    assert near.applicable and near.holds
    assert near.witness["contacts_in_cut"] == [True, True]


def test_clauses_non_integer_two_t():
    verdicts = _by_id(certificate_clauses(WIDE, (0, 1), Fraction(3, 4)))
    sat = verdicts["saturated-attachment"]
    assert sat.applicable and not sat.evaluable and sat.holds
    assert sat.witness["reason"] == "2t is not an integer"
    assert sat.witness["two_t"] == "3/2"
    split = verdicts["split-endpoints"]
    assert split.applicable and not split.evaluable


def test_clauses_exhaustive_merges_vacuous():
    verdicts = certificate_clauses(make_cycle(5), (0, 1), 1, exhaustive=True)
    for v in verdicts:
        assert not v.applicable and v.holds
        assert v.witness == {"certificates": 3}


def test_clauses_input_validation():
    with pytest.raises(ValueError):
        certificate_clauses(make_cycle(4), (0, 1), 0)
    with pytest.raises(ValueError):
        certificate_clauses(Graph(4, [(0, 1), (2, 3)]), (0, 1), 1)


def test_merge_verdicts_priorities():
    clean = [ClauseVerdict(c, applicable=True, holds=True) for c in CLAUSE_IDS]
    mixed = []
    for i, c in enumerate(CLAUSE_IDS):
        if i == 0:
            mixed.append(ClauseVerdict(c, applicable=True, holds=False,
                                       witness={"bad": 1}))
        elif i == 1:
            mixed.append(ClauseVerdict(c, applicable=True, holds=True,
                                       evaluable=False))
        elif i == 2:
            mixed.append(ClauseVerdict(c, applicable=False, holds=True))
        else:
            mixed.append(ClauseVerdict(c, applicable=True, holds=True))
    clean[5] = ClauseVerdict(CLAUSE_IDS[5], applicable=False, holds=True)
    mixed[5] = ClauseVerdict(CLAUSE_IDS[5], applicable=False, holds=True)

    merged = _merge_verdicts([clean, mixed], 2)

    assert merged[0].failed and merged[0].witness == {"bad": 1}
    assert merged[1].applicable and not merged[1].evaluable and merged[1].holds
    assert merged[2].applicable and merged[2].holds
    assert merged[2].witness["applicable_instances"] == 1
    assert merged[3].witness["applicable_instances"] == 2
    assert not merged[5].applicable
    assert merged[5].witness == {"certificates": 2}


def test_verdict_invariants():
    with pytest.raises(ValueError):
        ClauseVerdict("x", applicable=False, holds=False)
    with pytest.raises(ValueError):
        ClauseVerdict("x", applicable=True, holds=False, evaluable=False)
    v = ClauseVerdict("x", applicable=True, holds=False)
    assert v.failed
    assert not ClauseVerdict("x", applicable=True, holds=True).failed


def test_ceiling_fixture_values():
    assert ceil_fraction(Fraction(15, 3)) == 5
    assert ceil_fraction(Fraction(25, 3)) == 9
    assert ceil_fraction(Fraction(-1, 2)) == 0
    assert ceil_fraction(Fraction(7, 1)) == 7
    assert ceil_fraction(3) == 3


def test_ceiling_random_against_independent_arithmetic():
    rng = random.Random(61)
    for _ in range(1000):
        num = rng.randrange(-10 ** 9, 10 ** 9)
        den = rng.randrange(1, 10 ** 6)
        frac = Fraction(num, den)
        q, r = divmod(frac.numerator, frac.denominator)
        assert ceil_fraction(frac) == q + (1 if r else 0) == math.ceil(frac)


def test_degree_bound_report():
    rep = check_degree_bound(make_cycle(4), 1)
    assert rep.delta == 2 and rep.bound == 2 and rep.satisfied
    assert rep.conjecture_bound == 2 and rep.conjecture_satisfied

    rep = check_degree_bound(make_petersen(), 2)
    assert rep.bound == 5 and rep.conjecture_bound == 4
    assert rep.delta == 3 and rep.satisfied and rep.conjecture_satisfied

    rep = check_degree_bound(make_complete(8), 3)
    assert rep.bound == 9 and rep.conjecture_bound == 6
    assert rep.delta == 7 and rep.satisfied and not rep.conjecture_satisfied

    rep = check_degree_bound(make_cycle(5), Fraction(3, 2))
    assert rep.bound == 3 == rep.conjecture_bound

    rep = check_degree_bound(make_cycle(5), Fraction(5, 2))
    assert rep.bound == 7 and rep.conjecture_bound == 5

    with pytest.raises(ValueError):
        check_degree_bound(make_cycle(4), 0)


def test_invert_half_tough():
    spec, reason = invert_half_tough(make_net())
    assert reason is None
    assert spec.tree.n == 7 and spec.valid

    spec, reason = invert_half_tough(make_path(4))
    assert reason is None and spec.tree == make_path(4)

    spec, reason = invert_half_tough(make_complete(4))
    assert spec is None and reason == "two triangles share an edge"

    spec, reason = invert_half_tough(make_cycle(4))
    assert spec is None
    assert reason == "inverted graph is not a valid input: not a tree"

    # a bare spider is not an output: rebuilding contracts its center
    spec, reason = invert_half_tough(SPIDER)
    assert spec is None and reason == "rebuild does not reproduce the graph"


def test_construction_verdicts():
    v = check_half_tough_construction(make_path(3))
    assert v.applicable and v.holds
    assert v.witness["triangles"] == 0
    assert v.witness["tree_edges"] == [[0, 1], [1, 2]]

    v = check_half_tough_construction(make_net())
    assert v.applicable and v.holds and v.witness["triangles"] == 1

    # 1-tough, so the 1/2-tough hypothesis fails
    v = check_half_tough_construction(make_cycle(4))
    assert not v.applicable and v.holds

    # tau = 1/2 but not minimally so: edges inside a triangle survive deletion
    v = check_half_tough_construction(TWO_TRIANGLES)
    assert not v.applicable and v.holds

    v = check_half_tough_construction(make_complete(1))
    assert not v.applicable
