"""Projector decompositions: construction, orthogonalization, verification."""

from fractions import Fraction

import pytest

from chowkunneth import spaces
from chowkunneth.correspondences import (
    CorrespondenceClass,
    act,
    compose,
    diagonal,
    from_pair,
    transpose,
    zero_correspondence,
)
from chowkunneth.errors import (
    IncompleteInput,
    NotIdempotent,
    OddRankObstruction,
    PreconditionViolated,
)
from chowkunneth.graded_ring import tensor_ring
from chowkunneth.kunneth import (
    MotiveObject,
    ProjectorSet,
    algebraic_projectors,
    coevaluation_projector,
    failing_checks,
    full_projectors,
    gram_schmidt_orthogonalize,
    hypersurface_projectors,
    is_morphism,
    lefschetz_motive,
    motive_of_space,
    product_projectors,
    remainder_projector,
    report_passes,
    tate_twist,
    tensor_motives,
    unit_motive,
    verify_ck,
)


def cubic_curve():
    return spaces.ci_model(spaces.projective_space(2), {"h": 3}, 2)


def rank_one(ring, w, v):
    """The correspondence w x v; idempotent exactly when <v, w> = 1."""
    terms = {}
    for i, cw in w.coeffs.items():
        for j, cv in v.coeffs.items():
            terms[(i, j)] = cw * cv
    return CorrespondenceClass(ring, ring, 0, terms)


# -- single-degree projectors ---------------------------------------------------


def test_coevaluation_projectors_on_plane_pinned():
    P2 = spaces.projective_space(2)
    assert coevaluation_projector(P2, 0).label_terms() == [
        ("h^2", "1", Fraction(1))
    ]
    assert coevaluation_projector(P2, 2).label_terms() == [
        ("h", "h", Fraction(1))
    ]
    assert coevaluation_projector(P2, 4).label_terms() == [
        ("1", "h^2", Fraction(1))
    ]


def test_coevaluation_projector_graded_action():
    G = spaces.grassmannian(2, 4)
    pi4 = coevaluation_projector(G, 4)
    assert pi4.label_terms() == [
        ("s[2]", "s[2]", Fraction(1)),
        ("s[1,1]", "s[1,1]", Fraction(1)),
    ]
    for label, deg in G.basis:
        v = G.basis_class(label)
        want = v if deg == 4 else G.zero(deg)
        assert act(pi4, v) == want


# -- full decompositions -----------------------------------------------------------


def test_point_ring_projector_set():
    pt = spaces.projective_space(0)
    P = full_projectors(pt)
    assert P.indices() == (0,)
    assert P.member(0).label_terms() == [("1", "1", Fraction(1))]
    assert report_passes(verify_ck(P))


def test_full_projectors_shape():
    P3 = spaces.projective_space(3)
    P = full_projectors(P3)
    # rank-0 degrees away from the middle carry no member
    assert P.indices() == (0, 2, 3, 4, 6)
    assert P.complete and P.remainder_indices == frozenset({3})
    assert P.member(3).is_zero()  # stored even though the middle is empty
    assert report_passes(verify_ck(P))


def test_full_projectors_middle_member_always_stored():
    P2 = spaces.projective_space(2)
    P = full_projectors(P2)
    assert 2 in P.projectors
    assert P.member(2) == coevaluation_projector(P2, 2)
    P1 = full_projectors(spaces.projective_space(1))
    assert 1 in P1.projectors and P1.member(1).is_zero()


def test_full_projectors_handle_odd_middle():
    E = cubic_curve()
    P = full_projectors(E)
    assert P.indices() == (0, 1, 2)
    assert P.member(1).label_terms() == [
        ("m1", "m2", Fraction(-1)),
        ("m2", "m1", Fraction(1)),
    ]
    assert report_passes(verify_ck(P))


def test_full_projectors_verify_on_corpus():
    rings = [
        spaces.projective_space(4),
        spaces.grassmannian(2, 4),
        spaces.product_space(
            spaces.projective_space(1), spaces.projective_space(2)
        ),
        spaces.hypersurface_model(3, 3, 7),
        spaces.plane_curve_family(1),
    ]
    for X in rings:
        report = verify_ck(full_projectors(X))
        assert report_passes(report), X


def test_algebraic_projectors_default_cutoff_completes_even_rings():
    G = spaces.grassmannian(2, 4)
    P = algebraic_projectors(G)
    assert P.indices() == (0, 2, 4, 6, 8)
    assert P.complete
    assert P.member(4).label_terms() == [
        ("s[2]", "s[2]", Fraction(1)),
        ("s[1,1]", "s[1,1]", Fraction(1)),
    ]
    assert report_passes(verify_ck(P))


def test_algebraic_projectors_partial_request():
    P3 = spaces.projective_space(3)
    P = algebraic_projectors(P3, algebraic_degrees=[0])
    assert P.indices() == (0, 6)
    assert not P.complete
    rem = remainder_projector(P3, P)
    assert rem == coevaluation_projector(P3, 2) + coevaluation_projector(P3, 4)


def test_algebraic_projectors_odd_rank_obstruction():
    E = cubic_curve()
    with pytest.raises(OddRankObstruction):
        algebraic_projectors(E)  # default cutoff reaches the odd middle
    P = algebraic_projectors(E, m=0)  # below the odd degree: allowed
    assert P.indices() == (0, 2) and not P.complete


def test_projector_set_validation():
    P2 = spaces.projective_space(2)
    with pytest.raises(ValueError):
        ProjectorSet(P2, {7: coevaluation_projector(P2, 0)})
    with pytest.raises(ValueError):
        ProjectorSet(P2, {0: from_pair(P2.point(), P2.basis_class("h"))})


# -- remainder ----------------------------------------------------------------------


def test_remainder_of_empty_set_is_diagonal():
    P2 = spaces.projective_space(2)
    assert remainder_projector(P2, ProjectorSet(P2, {})) == diagonal(P2)


def test_remainder_of_full_set_is_zero():
    P2 = spaces.projective_space(2)
    assert remainder_projector(P2, full_projectors(P2)).is_zero()


def test_remainder_requires_idempotents():
    P2 = spaces.projective_space(2)
    bad = ProjectorSet(P2, {0: coevaluation_projector(P2, 0).scale(2)})
    with pytest.raises(PreconditionViolated):
        remainder_projector(P2, bad)


def test_remainder_requires_orthogonality():
    P2 = spaces.projective_space(2)
    pi0 = coevaluation_projector(P2, 0)
    bad = ProjectorSet(P2, {0: pi0, 2: pi0})
    with pytest.raises(PreconditionViolated):
        remainder_projector(P2, bad)


def test_cubic_surface_middle_projector_action():
    X = spaces.hypersurface_model(3, 3, 7)
    P = full_projectors(X)
    rem = P.member(2)
    assert X.rank(2) == 8
    for label, deg in X.basis:
        v = X.basis_class(label)
        want = v if deg == 2 else X.zero(deg)
        assert act(rem, v) == want


# -- closed-form hypersurface sets ------------------------------------------------------


def test_hypersurface_projectors_match_generic_construction():
    for n, d, r in [(3, 1, 0), (3, 2, 1), (3, 3, 7), (4, 2, 0)]:
        X = spaces.hypersurface_model(n, d, r)
        assert hypersurface_projectors(n, d, r) == full_projectors(X), (n, d, r)


def test_hypersurface_projectors_closed_form_pinned():
    P = hypersurface_projectors(3, 3, 7)
    X = P.ring
    # degree-0 projector: (1/3) H^2 x 1, with H^2 = 3 * point
    assert P.member(0).label_terms() == [("1*", "1", Fraction(1))]
    assert act(P.member(0), X.unit()) == X.unit()
    assert P.remainder_indices == frozenset({2})
    report = verify_ck(P)
    assert report_passes(report)


def test_hypersurface_remainder_orthogonal_and_idempotent():
    for n, d, r in [(3, 2, 1), (3, 3, 7), (4, 2, 0)]:
        P = hypersurface_projectors(n, d, r)
        mid = P.ring.dim
        rem = P.member(mid)
        assert compose(rem, rem) == rem, (n, d, r)
        for i in P.indices():
            if i != mid:
                assert compose(rem, P.member(i)).is_zero()
                assert compose(P.member(i), rem).is_zero()


def test_quadric_threefold_middle_is_zero_but_stored():
    P = hypersurface_projectors(4, 2, 0)
    assert 3 in P.projectors and P.member(3).is_zero()
    assert P.complete and report_passes(verify_ck(P))


# -- products ----------------------------------------------------------------------------


def test_product_projectors_require_complete_factors():
    P1, P2 = spaces.projective_space(1), spaces.projective_space(2)
    partial = algebraic_projectors(P2, algebraic_degrees=[0])
    with pytest.raises(IncompleteInput):
        product_projectors(partial, full_projectors(P1))
    with pytest.raises(IncompleteInput):
        product_projectors(full_projectors(P1), partial)


def test_product_with_point_recovers_factor():
    P1 = spaces.projective_space(1)
    pt = spaces.projective_space(0)
    PP = product_projectors(full_projectors(P1), full_projectors(pt))
    base = full_projectors(P1)
    # zero middle sums are omitted from the product set
    assert PP.indices() == (0, 2)
    for i in PP.indices():
        assert PP.member(i).terms == base.member(i).terms


def test_product_of_lines_pinned():
    P1 = spaces.projective_space(1)
    PP = product_projectors(full_projectors(P1), full_projectors(P1))
    assert PP.complete
    assert PP.member(2).label_terms() == [
        ("1 # h", "h # 1", Fraction(1)),
        ("h # 1", "1 # h", Fraction(1)),
    ]
    assert report_passes(verify_ck(PP))


def test_product_agrees_with_direct_construction():
    P1, P2 = spaces.projective_space(1), spaces.projective_space(2)
    T = spaces.product_space(P1, P2)
    PP = product_projectors(full_projectors(P1), full_projectors(P2), T)
    direct = algebraic_projectors(T)
    assert report_passes(verify_ck(PP))
    assert report_passes(verify_ck(direct))
    for i in direct.indices():
        for label, _ in T.basis:
            v = T.basis_class(label)
            got = act(PP.member(i), v) if i in PP.projectors else T.zero(v.degree)
            assert got == act(direct.member(i), v), (i, label)


# -- orthogonalization --------------------------------------------------------------------


def synthetic_families():
    """Non-orthogonal idempotent families on rings of dimension <= 4."""
    P1 = spaces.projective_space(1)
    fam1 = [coevaluation_projector(P1, 0), diagonal(P1)]

    P2 = spaces.projective_space(2)
    u0, u1, u2 = (coevaluation_projector(P2, t) for t in (0, 2, 4))
    fam2 = [u0 + u1, u1 + u2]

    G = spaces.grassmannian(2, 4)
    s2, s11 = G.basis_class("s[2]"), G.basis_class("s[1,1]")
    fam3 = [rank_one(G, s2, s2), rank_one(G, s11, s2 + s11)]

    Q = spaces.hypersurface_model(3, 2, 1)
    h, m1 = Q.basis_class("h"), Q.basis_class("m1")
    fam4 = [rank_one(Q, h, h).scale(Fraction(1, 2)), rank_one(Q, m1, h + m1)]

    E = cubic_curve()
    em1, em2 = E.basis_class("m1"), E.basis_class("m2")
    fam5 = [rank_one(E, em2, em1), rank_one(E, em2, em1 + em2)]

    B = spaces.blowup(
        spaces.projective_space(2),
        spaces.projective_space(0),
        2,
        {"1": {"h^2": 1}},
        normal_chern={1: {}},
    )
    bh, bE = B.basis_class("h"), B.basis_class("1 E")
    fam6 = [rank_one(B, bh, bh), rank_one(B, bh, bh + bE)]
    return [fam1, fam2, fam3, fam4, fam5, fam6]


def test_orthogonalization_on_synthetic_families():
    families = synthetic_families()
    assert len(families) >= 5
    for fam in families:
        for p in fam:
            assert compose(p, p) == p  # inputs are idempotent
        assert any(
            not compose(fam[i], fam[j]).is_zero()
            for i in range(len(fam))
            for j in range(len(fam))
            if i != j
        )  # and genuinely non-orthogonal
        out = gram_schmidt_orthogonalize(fam)
        assert len(out) == len(fam)
        for q in out:
            assert compose(q, q) == q
        for i, qi in enumerate(out):
            for j, qj in enumerate(out):
                if i != j:
                    assert compose(qi, qj).is_zero(), (fam, i, j)


def test_orthogonalization_fixes_orthogonal_families():
    for X in (spaces.projective_space(3), spaces.grassmannian(2, 4), cubic_curve()):
        P = full_projectors(X)
        members = [P.member(i) for i in P.indices()]
        assert gram_schmidt_orthogonalize(members) == members
    single = [coevaluation_projector(spaces.projective_space(2), 2)]
    assert gram_schmidt_orthogonalize(single) == single
    assert gram_schmidt_orthogonalize([]) == []


def test_orthogonalization_rejects_non_idempotents():
    P2 = spaces.projective_space(2)
    with pytest.raises(NotIdempotent):
        gram_schmidt_orthogonalize([diagonal(P2).scale(2)])


def test_orthogonalization_preserves_graded_image_rank():
    G = spaces.grassmannian(2, 4)
    s2, s11 = G.basis_class("s[2]"), G.basis_class("s[1,1]")
    fam = [rank_one(G, s2, s2), rank_one(G, s11, s2 + s11)]
    out = gram_schmidt_orthogonalize(fam)
    # both corrected members still project degree 4 onto a line
    for q in out:
        images = [act(q, v) for v in (s2, s11)]
        assert any(not v.is_zero() for v in images)


# -- verification reports --------------------------------------------------------------


def test_report_schema_and_order():
    P1 = spaces.projective_space(1)
    report = verify_ck(full_projectors(P1))
    checks = [e["check"] for e in report]
    n = 3  # indices 0, 1, 2
    assert checks[:n] == ["idempotence"] * n
    assert checks[n : n + n * (n - 1)] == ["orthogonality"] * n * (n - 1)
    assert checks[n + n * (n - 1)] == "completeness"
    assert checks[n + n * (n - 1) + 1 :] == ["graded_action"] * (n * 2)
    for entry in report:
        assert entry["pass"] is True
        assert "residual_class" not in entry
        if entry["check"] == "graded_action":
            assert entry["basis_class"] in ("1", "h")


def test_report_stored_on_set():
    P = full_projectors(spaces.projective_space(2))
    assert P.report is None
    report = verify_ck(P)
    assert P.report is report


def test_scaled_member_fails_idempotence():
    P3 = spaces.projective_space(3)
    P = full_projectors(P3)
    broken = dict(P.projectors)
    broken[0] = broken[0].scale(2)
    bad = ProjectorSet(P3, broken, complete=True, remainder_indices={3})
    report = verify_ck(bad)
    assert failing_checks(report) == ["idempotence", "completeness", "graded_action"]
    entry = next(e for e in report if e["check"] == "idempotence" and not e["pass"])
    assert entry["indices"] == [0]
    assert entry["residual_class"] == [["h^3", "1", "2"]]


def test_missing_member_fails_completeness_only():
    P3 = spaces.projective_space(3)
    P = full_projectors(P3)
    kept = {i: p for i, p in P.projectors.items() if i != 6}
    bad = ProjectorSet(P3, kept, complete=True, remainder_indices={3})
    report = verify_ck(bad)
    assert failing_checks(report) == ["completeness"]
    entry = next(e for e in report if e["check"] == "completeness")
    assert entry["residual_class"] == [["1", "h^3", "-1"]]


def test_orthogonality_failure_lists_ordered_pair():
    P2 = spaces.projective_space(2)
    pi0 = coevaluation_projector(P2, 0)
    bad = ProjectorSet(P2, {0: pi0, 2: pi0})
    report = verify_ck(bad)
    failing = [e for e in report if not e["pass"] and e["check"] == "orthogonality"]
    assert [e["indices"] for e in failing] == [[0, 2], [2, 0]]


def test_parallel_verification_is_identical():
    P = full_projectors(spaces.grassmannian(2, 4))
    assert verify_ck(P) == verify_ck(P, jobs=4)


# -- motives ------------------------------------------------------------------------------


def test_motive_requires_idempotent():
    P2 = spaces.projective_space(2)
    with pytest.raises(NotIdempotent):
        MotiveObject(P2, diagonal(P2).scale(2))


def test_unit_and_lefschetz_motives():
    one = unit_motive()
    L = lefschetz_motive()
    assert one.twist == 0 and L.twist == -1
    assert one.ring is L.ring
    assert tate_twist(one, -1) == L
    assert tate_twist(L, 0) == L


def test_tensor_motives_adds_twists():
    M = motive_of_space(spaces.projective_space(1), twist=2)
    N = motive_of_space(spaces.projective_space(2), twist=-1)
    MN = tensor_motives(M, N)
    assert MN.twist == 1
    assert MN.ring.tensor_factors == (M.ring, N.ring)
    assert MN.projector == diagonal(MN.ring)


def test_projector_is_endomorphism_of_its_own_motive():
    P1 = spaces.projective_space(1)
    p = coevaluation_projector(P1, 0)
    M = MotiveObject(P1, p)
    assert is_morphism(p, M, M)
    q = coevaluation_projector(P1, 2)
    assert not is_morphism(q, M, M)  # p absorbs itself, not q


def test_twist_shift_matching():
    P1 = spaces.projective_space(1)
    M = motive_of_space(P1)
    N = motive_of_space(P1, twist=1)
    f = from_pair(P1.point(), P1.point())  # degree shift 1
    assert is_morphism(f, M, N)
    assert not is_morphism(diagonal(P1), M, N)  # shift 0 != twist gap 1
    assert is_morphism(diagonal(P1), M, M)
