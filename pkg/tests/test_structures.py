from dataclasses import replace
from fractions import Fraction

import pytest

from conftest import entry, report
from vncore import catalog
from vncore.errors import MissingMap, ShapeError
from vncore.field import QQ
from vncore.linmap import LinMap, compose, identity
from vncore.structures import (AXIOM_IDS, build_structure, check_axiom,
                               compute_r, compute_t)

GROUPS = ("trivial", "z2", "z3", "s3", "klein4")


def test_build_structure_wrong_rank():
    s = entry("z2")
    with pytest.raises(ShapeError):
        build_structure(QQ, 2, mu=s.delta, delta=s.delta)


def test_build_structure_missing_s_skips():
    s = entry("z2")
    bare = build_structure(QQ, 2, mu=s.mu, delta=s.delta, name="z2-noS")
    res = check_axiom(bare, "vn_core")
    assert res.verdict == "SKIP"
    assert "S" in res.reason


def test_z2_vn_core_passes(z2):
    # hand check: x * S(x) * x = x * x^-1 * x = x on both basis elements
    assert check_axiom(z2, "vn_core").verdict == "PASS"


def test_z3_identity_s_fails_with_witness():
    res = check_axiom(entry("z3_bad_s"), "vn_core")
    assert res.verdict == "FAIL"
    w = res.witness
    # witness column is g (index 1): g*g*g = e, not g
    assert w.input_index == 1
    assert list(w.lhs) == [1, 0, 0]
    assert list(w.rhs) == [0, 1, 0]


def test_witness_reproducible():
    s = entry("z3_bad_s")
    w = check_axiom(s, "vn_core").witness
    from vncore.structures import delta3, mu3
    from vncore.linmap import chain, tensor
    lhs = chain(mu3(s), tensor(identity(QQ, 3, 1),
                               tensor(s.S, identity(QQ, 3, 1))), delta3(s))
    assert tuple(lhs.column(w.input_index)) == w.lhs
    assert tuple(identity(QQ, 3, 1).column(w.input_index)) == w.rhs


def test_compute_t_groupoid2_is_identity(groupoid2):
    # t(e_j) = sum_i e_i eps(e_j e_i) = e_j
    assert compute_t(groupoid2) == identity(QQ, 2, 1)
    assert compute_r(groupoid2) == identity(QQ, 2, 1)


def test_compute_t_grouplike_unit(z2):
    # delta.eta = eta (x) eta here, so t = r = eta.eps
    eta_eps = compose(z2.eta, z2.eps)
    assert compute_t(z2) == eta_eps
    assert compute_r(z2) == eta_eps


def test_compute_t_missing_map(z2):
    bare = replace(z2, eps=None)
    with pytest.raises(MissingMap):
        compute_t(bare)
    bare = replace(z2, eta=None)
    with pytest.raises(MissingMap):
        compute_r(bare)


def test_group_algebra_axioms_all_pass():
    for name in GROUPS:
        checks = report(name).checks
        for a in ("assoc", "coassoc", "compat", "unit", "counit", "vn_core",
                  "unital_core", "antipode", "antihom"):
            assert checks[a].verdict == "PASS", (name, a)


def test_classify_z2_labels():
    labels = report("z2").labels
    assert set(labels) == {"semibialgebra", "vn_core", "unital_vn_core",
                           "very_weak_bialgebra", "very_weak_hopf", "hopf"}


def test_classify_leftzero2_labels():
    labels = report("leftzero2").labels
    assert labels == ["semibialgebra", "vn_core"]


def test_classify_sweedler():
    rep = report("sweedler")
    assert "hopf" in rep.labels
    assert rep.checks["s_squared"].verdict == "FAIL"
    # S^2(x) = -x, so the witness column is x (index 2)
    assert rep.checks["s_squared"].witness.input_index == 2


def test_sweedler_s_squared_matrix(sweedler):
    s2 = compose(sweedler.S, sweedler.S)
    assert s2.column(2) == [0, 0, Fraction(-1), 0]
    assert s2.column(3) == [0, 0, 0, Fraction(-1)]


def test_groupoid2_antipode_fails(groupoid2):
    res = check_axiom(groupoid2, "antipode")
    assert res.verdict == "FAIL"
    # S * 1 = id, not eta.eps
    assert check_axiom(groupoid2, "vwh_left").verdict == "PASS"


def test_no_skip_when_all_maps_present():
    for name in ("z2", "sweedler", "groupoid2"):
        s = entry(name)
        for a in AXIOM_IDS:
            if "alpha" in a or "beta" in a or "drinfeld" in a:
                continue  # alpha, beta genuinely absent on catalog entries
            assert check_axiom(s, a).verdict != "SKIP", (name, a)


def test_alpha_invertibility():
    s = entry("z2")
    # alpha = e + g is not invertible in k[Z/2] (it is 2 * idempotent ... no:
    # (e+g)/2 is idempotent, so e+g squares to 2(e+g); inverse would need
    # the character sum e-g direction, where alpha vanishes)
    bad = replace(s, alpha=LinMap.from_entries(QQ, 2, 0, 1, [1, 1]))
    # e + g has character values (2, 0) -> not invertible
    assert check_axiom(bad, "alpha_invertible").verdict == "FAIL"
    good = replace(s, alpha=LinMap.from_entries(QQ, 2, 0, 1, [1, 2]))
    # e + 2g has character values (3, -1) -> invertible
    assert check_axiom(good, "alpha_invertible").verdict == "PASS"
    assert check_axiom(s, "alpha_invertible").verdict == "SKIP"


def test_semibialgebra_implies_fusion_eq():
    from vncore.fusion import check_identity
    for name in catalog.CATALOG_NAMES:
        rep = report(name)
        if "semibialgebra" in rep.labels:
            assert check_identity(entry(name), "fusion_eq").verdict == "PASS"


def test_unknown_axiom_rejected(z2):
    with pytest.raises(KeyError):
        check_axiom(z2, "nonsense")
