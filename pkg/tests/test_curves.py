import pytest
from hypothesis import given
from hypothesis import strategies as st

from viilattice import (
    DEFINITE,
    ELLIPTIC,
    ENOKI_CLASS,
    INOUE_HIRZEBRUCH,
    INTERMEDIATE,
    NEITHER,
    NODAL_RATIONAL,
    OUT_OF_RANGE,
    SEMIDEFINITE,
    SMOOTH_RATIONAL,
    Curve,
    CurveConfig,
    DomainError,
    InvalidConfigError,
    StructureError,
    adjunction_degree,
    enoki_cycle_config,
    find_cycles,
    intersection_matrix,
    is_negative_definite,
    partition_curves,
    require_valid,
    sigma_classify,
    singrat_config,
    validate,
)


def ring(selfs, b2=None, kind=SMOOTH_RATIONAL):
    r = len(selfs)
    curves = tuple(Curve(i, kind, s) for i, s in enumerate(selfs))
    pairs = tuple((i, (i + 1) % r, 1) for i in range(r))
    return CurveConfig(b2 or r, curves, pairs)


# --- construction and validation -------------------------------------------


def test_duplicate_ids_rejected():
    with pytest.raises(InvalidConfigError):
        CurveConfig(2, (Curve(0, SMOOTH_RATIONAL, -2), Curve(0, SMOOTH_RATIONAL, -2)), ())


def test_self_pairing_rejected():
    with pytest.raises(InvalidConfigError):
        CurveConfig(1, (Curve(0, NODAL_RATIONAL, -1),), ((0, 0, 1),))


def test_unknown_pair_ids_rejected():
    with pytest.raises(InvalidConfigError):
        CurveConfig(1, (Curve(0, NODAL_RATIONAL, -1),), ((0, 3, 1),))


def test_negative_multiplicity_rejected():
    with pytest.raises(InvalidConfigError):
        CurveConfig(
            2,
            (Curve(0, SMOOTH_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -2)),
            ((0, 1, -1),),
        )


def test_duplicate_pair_rejected():
    with pytest.raises(InvalidConfigError):
        CurveConfig(
            2,
            (Curve(0, SMOOTH_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -2)),
            ((0, 1, 1), (1, 0, 1)),
        )


def test_zero_multiplicity_dropped():
    config = CurveConfig(
        2,
        (Curve(0, SMOOTH_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -2)),
        ((0, 1, 0),),
    )
    assert config.intersections == ()
    assert config.mult(0, 1) == 0


def test_validate_kind_bounds():
    report = validate(
        CurveConfig(
            3,
            (
                Curve(0, SMOOTH_RATIONAL, -1),
                Curve(1, NODAL_RATIONAL, 1),
                Curve(2, ELLIPTIC, 2),
            ),
            (),
        )
    )
    assert not report.valid
    assert len(report.issues) == 3
    assert {i.curve_id for i in report.issues} == {0, 1, 2}


def test_validate_counting_bounds():
    report = validate(
        CurveConfig(
            1,
            (Curve(0, SMOOTH_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -2)),
            ((0, 1, 1),),
        )
    )
    assert not report.valid
    assert any("b2" in i.message for i in report.issues)

    two_elliptic = CurveConfig(
        2, (Curve(0, ELLIPTIC, -1), Curve(1, ELLIPTIC, -1)), ()
    )
    assert not validate(two_elliptic).valid
    with pytest.raises(InvalidConfigError):
        require_valid(two_elliptic)


def test_neighbors_and_mult():
    config = singrat_config(4, 3)
    assert config.mult(0, 1) == 1
    assert config.mult(1, 0) == 1
    assert config.mult(0, 3) == 0
    assert config.neighbors(1) == [(0, 1), (2, 1)]


# --- intersection matrix and definiteness -----------------------------------


def test_matrix_shape():
    m = intersection_matrix(singrat_config(3, 2))
    assert m == [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]


def test_definiteness_fixed_points():
    assert is_negative_definite([[-1]]) == DEFINITE
    assert is_negative_definite([[0]]) == SEMIDEFINITE
    assert is_negative_definite([[1]]) == NEITHER
    assert is_negative_definite([[-2, 1], [1, -2]]) == DEFINITE
    assert is_negative_definite([[-2, 2], [2, -2]]) == SEMIDEFINITE
    assert is_negative_definite([[-1, 2], [2, -1]]) == NEITHER
    # semidefinite with a zero leading block in front: leading minors alone
    # would pass a sign test that the full scan must refute
    assert is_negative_definite([[0, 0], [0, -1]]) == SEMIDEFINITE
    assert is_negative_definite([[0, 1], [1, 0]]) == NEITHER


def test_definiteness_requires_symmetric_square():
    with pytest.raises(DomainError):
        is_negative_definite([[1, 2], [3, 4]])
    with pytest.raises(DomainError):
        is_negative_definite([[1, 2, 3], [4, 5, 6]])


def test_enoki_matrices_semidefinite():
    for n in range(1, 7):
        m = intersection_matrix(enoki_cycle_config(n))
        assert is_negative_definite(m) == SEMIDEFINITE


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=7))
def test_singrat_matrices_definite(n, p):
    if p > n - 1:
        p = n - 1
    m = intersection_matrix(singrat_config(n, p))
    assert is_negative_definite(m) == DEFINITE


# --- cycle decomposition ----------------------------------------------------


def test_singrat_cycle_and_branch():
    cycles = find_cycles(singrat_config(4, 3))
    assert len(cycles) == 1
    rec = cycles[0]
    assert rec.member_ids == (0,)
    assert rec.length == 1
    assert len(rec.branches) == 1
    assert rec.branches[0].root_id == 0
    assert rec.branches[0].member_ids == (1, 2, 3)


def test_ring_cycle():
    cycles = find_cycles(ring([-2, -2, -2, -2]))
    assert len(cycles) == 1
    assert cycles[0].length == 4
    assert set(cycles[0].member_ids) == {0, 1, 2, 3}
    assert cycles[0].branches == ()


def test_double_edge_is_a_two_cycle():
    config = enoki_cycle_config(2)
    cycles = find_cycles(config)
    assert cycles[0].member_ids == (0, 1)
    assert cycles[0].length == 2


def test_elliptic_is_a_zero_cycle():
    config = enoki_cycle_config(3, with_elliptic=True)
    cycles = find_cycles(config)
    lengths = sorted(rec.length for rec in cycles)
    assert lengths == [0, 3]


def test_isolated_tree_reported_by_partition():
    # a nodal loop plus a smooth curve touching nothing
    config = CurveConfig(
        2, (Curve(0, NODAL_RATIONAL, -1), Curve(5, SMOOTH_RATIONAL, -2)), ()
    )
    cycles = find_cycles(config)
    cycle_ids, branch_ids, isolated = partition_curves(config, cycles)
    assert cycle_ids == (0,)
    assert branch_ids == ()
    assert isolated == (5,)


def test_two_cycles_sharing_a_curve_rejected():
    # two triangles glued at curve 0: its pruned degree is 4
    curves = tuple(Curve(i, SMOOTH_RATIONAL, -4) for i in range(5))
    pairs = (
        (0, 1, 1),
        (1, 2, 1),
        (2, 0, 1),
        (0, 3, 1),
        (3, 4, 1),
        (4, 0, 1),
    )
    with pytest.raises(StructureError):
        find_cycles(CurveConfig(5, curves, pairs))


def test_touching_cycles_rejected():
    config = CurveConfig(
        2,
        (Curve(0, NODAL_RATIONAL, -1), Curve(1, NODAL_RATIONAL, -1)),
        ((0, 1, 1),),
    )
    with pytest.raises(StructureError):
        find_cycles(config)


def test_tree_with_two_attachments_rejected():
    # a chain joining two members of the same ring closes a second cycle
    curves = tuple(Curve(i, SMOOTH_RATIONAL, -3) for i in range(5))
    pairs = (
        (0, 1, 1),
        (1, 2, 1),
        (2, 3, 1),
        (3, 0, 1),
        (0, 4, 1),
        (2, 4, 1),
    )
    with pytest.raises(StructureError):
        find_cycles(CurveConfig(5, curves, pairs))


def test_tree_attached_with_multiplicity_two_rejected():
    config = CurveConfig(
        2,
        (Curve(0, NODAL_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -4)),
        ((0, 1, 2),),
    )
    with pytest.raises(StructureError):
        find_cycles(config)


# --- sigma classification ---------------------------------------------------


def test_sigma_singrat_intermediate():
    cls = sigma_classify(singrat_config(3, 2))
    assert cls.sigma == 8
    assert cls.verdict == INTERMEDIATE
    assert cls.torsion_crosscheck is False


def test_sigma_enoki():
    for n in range(1, 7):
        cls = sigma_classify(enoki_cycle_config(n))
        assert cls.sigma == 2 * n
        assert cls.verdict == ENOKI_CLASS


def test_sigma_enoki_with_elliptic_unchanged():
    # the elliptic curve is not rational and contributes nothing to sigma
    cls = sigma_classify(enoki_cycle_config(3, with_elliptic=True))
    assert cls.sigma == 6
    assert cls.verdict == ENOKI_CLASS


def test_sigma_odd_inoue_hirzebruch():
    cls = sigma_classify(CurveConfig(1, (Curve(0, NODAL_RATIONAL, -1),), ()))
    assert cls.sigma == 3
    assert cls.verdict == INOUE_HIRZEBRUCH
    assert cls.ih_parity == "odd"
    assert cls.torsion_crosscheck is True


def test_sigma_even_inoue_hirzebruch():
    config = CurveConfig(
        2, (Curve(0, NODAL_RATIONAL, -1), Curve(1, NODAL_RATIONAL, -1)), ()
    )
    cls = sigma_classify(config)
    assert cls.sigma == 6
    assert cls.verdict == INOUE_HIRZEBRUCH
    assert cls.ih_parity == "even"
    assert cls.torsion_crosscheck is None


def test_sigma_out_of_range():
    cls = sigma_classify(CurveConfig(1, (Curve(0, NODAL_RATIONAL, -3),), ()))
    assert cls.sigma == 5
    assert cls.verdict == OUT_OF_RANGE
    assert cls.torsion_crosscheck is False


def test_sigma_needs_full_curve_count():
    # a lone (-2)-curve on a b2=2 surface says nothing about sigma
    config = CurveConfig(2, (Curve(0, SMOOTH_RATIONAL, -2),), ())
    with pytest.raises(DomainError, match="insufficient"):
        sigma_classify(config)


def test_sigma_range_bounds():
    # a ring of (-2)s with one (-3) lands strictly between 2n and 3n
    config = ring([-3, -2, -2])
    cls = sigma_classify(config)
    assert cls.sigma == 7
    assert cls.verdict == INTERMEDIATE


def test_adjunction_degree():
    assert adjunction_degree(Curve(0, SMOOTH_RATIONAL, -2)) == 0
    assert adjunction_degree(Curve(0, SMOOTH_RATIONAL, -5)) == 3
    assert adjunction_degree(Curve(0, NODAL_RATIONAL, -1)) == 1
    assert adjunction_degree(Curve(0, NODAL_RATIONAL, 0)) == 0
    assert adjunction_degree(Curve(0, ELLIPTIC, -3)) == 3
