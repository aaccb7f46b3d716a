from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from viilattice import (
    Curve,
    CurveConfig,
    DomainError,
    ELLIPTIC,
    NODAL_RATIONAL,
    NacSolution,
    NoSolution,
    SMOOTH_RATIONAL,
    determinant,
    enoki_cycle_config,
    index_of,
    intersection_matrix,
    leading_principal_minors,
    nac_structure_report,
    singrat_closed_form,
    singrat_config,
    solve_exact,
    solve_nac,
    verify_star_recurrence,
)


# --- exact linear algebra ---------------------------------------------------


def test_determinant_knowns():
    assert determinant([]) == 1
    assert determinant([[7]]) == 7
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert determinant([[1, 2], [2, 4]]) == 0


def test_determinant_row_swap_sign():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_solve_exact_roundtrip():
    m = [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]
    rhs = [-1, 0, -3]
    x = solve_exact(m, rhs)
    assert x is not None
    for i in range(3):
        assert sum(m[i][j] * x[j] for j in range(3)) == rhs[i]


def test_solve_exact_singular_is_none():
    assert solve_exact([[1, 2], [2, 4]], [1, 1]) is None


def test_solve_exact_rhs_length_checked():
    with pytest.raises(DomainError):
        solve_exact([[1]], [1, 2])


def test_leading_principal_minors():
    assert leading_principal_minors([[-2, 1], [1, -2]]) == [-2, 3]
    assert leading_principal_minors([[1]]) == [1]


@given(
    st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_determinant_matches_sarrus(rows):
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    expected = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    assert determinant(rows) == expected


# --- the anticanonical solver -----------------------------------------------


def test_worked_instance():
    config = singrat_config(3, 2)
    sol = solve_nac(config, 1)
    assert isinstance(sol, NacSolution)
    assert sol.coeffs == (Fraction(3, 2), Fraction(1), Fraction(1, 2))
    assert sol.index == 2
    assert sol.self_int_check == -3
    assert not sol.parabolic

    at_index = solve_nac(config, 2)
    assert at_index.coeffs == (Fraction(3), Fraction(2), Fraction(1))
    assert at_index.index == 2
    assert at_index.self_int_check == -12

    assert determinant(intersection_matrix(config)) == -4


def test_index_of():
    assert index_of(singrat_config(3, 2)) == 2
    assert index_of(CurveConfig(1, (), ())) is None


@given(st.integers(min_value=2, max_value=7), st.integers(min_value=1, max_value=5))
def test_solution_scales_linearly_in_m(n, m):
    config = singrat_config(n, n - 1)
    base = solve_nac(config, 1)
    scaled = solve_nac(config, m)
    assert scaled.coeffs == tuple(m * k for k in base.coeffs)
    assert scaled.index == base.index
    assert scaled.self_int_check == m * m * base.self_int_check


def test_level_must_be_positive():
    with pytest.raises(DomainError):
        solve_nac(singrat_config(3, 2), 0)
    with pytest.raises(DomainError):
        solve_nac(singrat_config(3, 2), -1)


def test_empty_config_has_no_solution():
    out = solve_nac(CurveConfig(1, (), ()), 1)
    assert isinstance(out, NoSolution)
    assert "no curves" in out.reason


def test_square_defect_rejected():
    # definite chain on a surface whose b2 exceeds what the curves span
    config = CurveConfig(
        3,
        (Curve(0, NODAL_RATIONAL, -2), Curve(1, SMOOTH_RATIONAL, -2)),
        ((0, 1, 1),),
    )
    out = solve_nac(config, 1)
    assert isinstance(out, NoSolution)
    assert "self-intersection defect" in out.reason


def test_indefinite_rejected():
    # double edge between (-1)s: det of [[-1,2],[2,-1]] is -3
    config = CurveConfig(
        2,
        (Curve(0, NODAL_RATIONAL, -1), Curve(1, NODAL_RATIONAL, -1)),
        ((0, 1, 2),),
    )
    out = solve_nac(config, 1)
    assert isinstance(out, NoSolution)
    assert "not negative" in out.reason


def test_degenerate_without_elliptic_rejected():
    out = solve_nac(enoki_cycle_config(3), 1)
    assert isinstance(out, NoSolution)
    assert "parabolic" in out.reason


def test_parabolic_route():
    config = enoki_cycle_config(3, with_elliptic=True)
    sol = solve_nac(config, 2)
    assert isinstance(sol, NacSolution)
    assert sol.parabolic
    assert sol.coeffs == (Fraction(2),) * 4
    assert sol.index == 1
    assert sol.self_int_check == -2 * 2 * config.b2


def test_degenerate_with_elliptic_but_wrong_pairing():
    # square-zero elliptic plus a disjoint (-2): semidefinite, but the
    # all-m candidate leaves a residual of -2m on the smooth row
    config = CurveConfig(
        1, (Curve(0, ELLIPTIC, 0), Curve(1, SMOOTH_RATIONAL, -2)), ()
    )
    out = solve_nac(config, 1)
    assert isinstance(out, NoSolution)
    assert "does not solve" in out.reason


# --- closed form on the nodal-plus-chain family ------------------------------


def test_closed_form_matches_solver():
    for n in range(2, 8):
        config = singrat_config(n, n - 1)
        form = singrat_closed_form(n, n - 1, 1)
        sol = solve_nac(config, 1)
        assert form.consistent
        assert form.coeffs == sol.coeffs
        assert form.det == determinant(intersection_matrix(config))


def test_closed_form_denominator():
    form = singrat_closed_form(5, 2, 1)
    assert form.det == -(4 * 3 - 2)
    assert form.coeffs[0] == Fraction(4 * 3, 10)
    assert not form.consistent


def test_closed_form_p0_never_consistent():
    for n in range(2, 11):
        form = singrat_closed_form(n, 0, 1)
        assert not form.consistent
        assert "impossible" in form.detail


def test_closed_form_argument_bounds():
    with pytest.raises(DomainError):
        singrat_closed_form(1, 0, 1)
    with pytest.raises(DomainError):
        singrat_closed_form(3, 3, 1)
    with pytest.raises(DomainError):
        singrat_closed_form(3, 2, 0)


# --- star recurrence ---------------------------------------------------------


def test_star_recurrence_on_worked_instance():
    config = singrat_config(3, 2)
    sol = solve_nac(config, 1)
    report = verify_star_recurrence(config, sol)
    assert report.ok
    # curve 1 is the interior chain curve: neighbors 0 and 2
    by_id = {c.curve_id: c for c in report.checks}
    assert 1 in by_id
    assert by_id[1].lhs == Fraction(1, 2) + Fraction(-1, 2)
    assert by_id[1].rhs == 0


def test_star_recurrence_rejects_perturbed_solution():
    config = singrat_config(4, 3)
    sol = solve_nac(config, 1)
    bad = NacSolution(
        m=sol.m,
        coeffs=sol.coeffs[:-1] + (sol.coeffs[-1] + 1,),
        index=sol.index,
        effective=sol.effective,
        self_int_check=sol.self_int_check,
    )
    report = verify_star_recurrence(config, bad)
    assert not report.ok


def test_star_recurrence_counts_double_edges_twice():
    config = enoki_cycle_config(2, with_elliptic=True)
    sol = solve_nac(config, 1)
    report = verify_star_recurrence(config, sol)
    # both cycle curves have one neighbor of multiplicity 2
    assert len(report.checks) == 2
    assert report.ok


def test_star_recurrence_length_mismatch():
    config = singrat_config(3, 2)
    sol = solve_nac(config, 1)
    short = NacSolution(1, sol.coeffs[:2], sol.index, True, -3)
    with pytest.raises(DomainError):
        verify_star_recurrence(config, short)


# --- coefficient structure on cycles -----------------------------------------


def test_structure_singrat_max_at_root():
    config = singrat_config(4, 3)
    sol = solve_nac(config, 1)
    report = nac_structure_report(config, sol)
    assert report.ok
    assert len(report.cycles) == 1
    entry = report.cycles[0]
    assert entry.member_ids == (0,)
    assert entry.min_coeff == entry.max_coeff == Fraction(4, 3)
    assert entry.max_at_branch_root is True
    assert not entry.unit_cycle
    assert not report.inoue_ih_signature


def test_structure_unit_cycle():
    config = CurveConfig(
        3,
        tuple(Curve(i, SMOOTH_RATIONAL, -3) for i in range(3)),
        ((0, 1, 1), (1, 2, 1), (2, 0, 1)),
    )
    sol = solve_nac(config, 1)
    assert sol.coeffs == (Fraction(1),) * 3
    report = nac_structure_report(config, sol)
    assert report.ok
    assert report.cycles[0].unit_cycle
    assert report.inoue_ih_signature


def test_structure_flags_fabricated_violations():
    config = singrat_config(3, 2)
    # all-unit vector on a cycle that carries a branch
    fake = NacSolution(1, (Fraction(1),) * 3, 1, True, -3)
    report = nac_structure_report(config, fake)
    assert not report.ok
    assert any("branch" in v for v in report.cycles[0].violations)

    # coefficient below the unit
    low = NacSolution(1, (Fraction(1, 2), Fraction(1), Fraction(1)), 2, True, -3)
    report = nac_structure_report(config, low)
    assert any("below" in v for v in report.cycles[0].violations)


def test_structure_skips_elliptic_zero_cycles():
    config = enoki_cycle_config(2, with_elliptic=True)
    sol = solve_nac(config, 1)
    report = nac_structure_report(config, sol)
    assert len(report.cycles) == 1
    assert report.cycles[0].member_ids == (0, 1)
    assert report.cycles[0].unit_cycle
