"""m-cluster category layer: orbit Homs, cluster endo algebras, extensions."""

import pytest

from mcluster.algebras import (
    cartan_matrix,
    dual_regular_module,
    ext_dim_oracle,
    global_dimension,
    present_algebra,
    quiver_of,
    regular_module,
)
from mcluster.cluster import (
    canonical_rep,
    cluster_endo,
    cluster_hom,
    fundamental_domain_objects,
    grade_support,
    is_m_cluster_tilting,
    positive_square_zero,
    relation_extension,
)
from mcluster.derived import DerivedObject, DerivedSum, apply_F, endo_algebra, shift
from mcluster.presentations import (
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    Presentation,
    Quiver,
    Relation,
    presentation_iso,
)
from mcluster.reps import Interval, linear

from test_derived import A7, T7_SUMMANDS, T_A7, T_A7_ROLLED


def DO(r, a, b):
    return DerivedObject(r, Interval(a, b))


def test_canonical_rep_examples():
    orient = linear(3)
    m = 2
    X = DO(1, 2, 2)
    rep = canonical_rep(orient, X, m)
    assert rep.representative == X and rep.power == 0
    # (-1, I_i) -> (m, P_i) in one forward application
    rep = canonical_rep(orient, DO(-1, 1, 2), m)  # I_2 = [1,2]
    assert rep.representative == DO(m, 2, 3)
    assert rep.power == 1


def test_canonical_rep_respects_rolling():
    rolled_reps = sorted(canonical_rep(A7, s, 2).representative for s in T_A7_ROLLED.summands)
    original_reps = sorted(canonical_rep(A7, s, 2).representative for s in T_A7.summands)
    assert rolled_reps == original_reps


def test_cluster_hom_between_fundamental_objects():
    orient = linear(4)
    for m in (1, 2):
        pool = fundamental_domain_objects(orient, m)
        for X in pool[::3]:
            for Y in pool[::4]:
                space = cluster_hom(orient, X, Y, m)
                assert set(space.components) <= {0, 1}


def test_cluster_hom_identity_component():
    orient = linear(3)
    X = DO(0, 1, 2)
    space = cluster_hom(orient, X, X, 2)
    assert len(space.components.get(0, ())) == 1


def test_cluster_hom_a7_grade_two_component():
    # the pair realizing the nonzero mu beta composite
    space = cluster_hom(A7, T7_SUMMANDS[7], T7_SUMMANDS[1], 2)
    assert 2 in space.components


def test_is_m_cluster_tilting_from_tilting():
    ok, cert = is_m_cluster_tilting(T_A7, 2)
    assert ok, cert


def test_is_m_cluster_tilting_count_violation():
    T = DerivedSum(A7, list(T7_SUMMANDS.values())[:6])
    ok, cert = is_m_cluster_tilting(T, 2)
    assert not ok


def test_is_m_cluster_tilting_ext_violation():
    orient = linear(2)
    T = DerivedSum(orient, [DO(0, 1, 1), DO(0, 2, 2)])
    ok, cert = is_m_cluster_tilting(T, 1)
    assert not ok
    assert any(v[0] == 1 for v in cert)


def test_cluster_endo_projectives_a2_m1():
    orient = linear(2)
    T = DerivedSum(orient, [DO(0, 1, 2), DO(0, 2, 2)])
    C = cluster_endo(T, 1)
    assert C.dim == 3
    assert grade_support(C) == {0}


def test_cluster_endo_inside_fundamental_domain_is_trivial_extension():
    orient = linear(2)
    T = DerivedSum(orient, [DO(0, 1, 1), DO(1, 2, 2)])
    for m in (2, 3):
        C = cluster_endo(T, m)
        assert grade_support(C) <= {0, 1}
        assert positive_square_zero(T, m)


def test_a7_cluster_endo_dimension_and_grades():
    C = cluster_endo(T_A7, 2)
    # dim B + two grade-1 arrows + one grade-2 composite
    assert C.dim == 17
    assert grade_support(C) == {0, 1, 2}


def test_a7_positive_square_not_zero():
    assert positive_square_zero(T_A7, 2) is False


def test_a7_relation_extension_dimension():
    R = relation_extension(T_A7, 2)
    assert R.dim == 16
    assert grade_support(R) == {0, 1}


def test_a7_relation_extension_grade1_matches_algebra_side_oracle():
    # dim Hom(T, F_2 T) = dim Ext^3_B(DB, B) over the presented B
    R = relation_extension(T_A7, 2)
    grade1 = sum(1 for g in R.grading if g == 1)
    B = endo_algebra(T_A7)
    oracle = ext_dim_oracle(B, dual_regular_module(B), regular_module(B), 3)
    assert grade1 == oracle == 2


def test_a7_same_quiver_for_cluster_and_relation_extension():
    C = cluster_endo(T_A7, 2)
    R = relation_extension(T_A7, 2)
    qc, _, gc = quiver_of(C)
    qr, _, gr = quiver_of(R)
    assert qc.arrow_counts() == qr.arrow_counts()
    # and the graded arrow content agrees as well
    assert sorted(gc.values()) == sorted(gr.values())


def two_cycle_expected_presentation():
    """The cluster-side quiver as drawn: the linear chain 1..7 plus arrows
    closing the two 4-cycles (4 -> 1 and 7 -> 4), with full relations."""
    arrows = [(f"x{i}", i, i + 1) for i in range(1, 7)] + [("b", 4, 1), ("mu", 7, 4)]
    q = Quiver(range(1, 8), arrows)
    cycle1 = ["x1", "x2", "x3", "b"]
    cycle2 = ["x4", "x5", "x6", "mu"]
    rels = []
    for cyc in (cycle1, cycle2):
        for i in range(4):
            rels.append(Relation([(1, (cyc[i], cyc[(i + 1) % 4]))]))
    return Presentation(q, rels)


def test_a7_cluster_presentation_matches_the_paper_figure():
    C = cluster_endo(T_A7, 2)
    pres = present_algebra(C)
    assert len(pres.quiver.arrows) == 8
    assert len(pres.relations) == 8
    verdict, _ = presentation_iso(pres, two_cycle_expected_presentation())
    assert verdict == ISOMORPHIC


def test_a7_cluster_vs_relation_extension_not_isomorphic():
    C = present_algebra(cluster_endo(T_A7, 2))
    R = present_algebra(relation_extension(T_A7, 2))
    verdict, _ = presentation_iso(C, R)
    assert verdict == NOT_ISOMORPHIC


def test_a7_pipeline_isomorphism():
    # C_2(B) = R_2(B') = C_2(B') through the rolled complex
    C = present_algebra(cluster_endo(T_A7, 2))
    Rp = present_algebra(relation_extension(T_A7_ROLLED, 2))
    Cp = present_algebra(cluster_endo(T_A7_ROLLED, 2))
    verdict, mapping = presentation_iso(C, Rp)
    assert verdict == ISOMORPHIC
    verdict, _ = presentation_iso(C, Cp)
    assert verdict == ISOMORPHIC
    assert positive_square_zero(T_A7_ROLLED, 2) is True


def test_relation_extension_requires_small_gldim():
    with pytest.raises(Exception):
        relation_extension(T_A7, 1)


def test_fundamental_domain_object_count():
    for n in (2, 3, 5):
        orient = linear(n)
        for m in (1, 2, 3):
            assert len(fundamental_domain_objects(orient, m)) == m * n * (n + 1) // 2 + n
