"""Numerically anticanonical divisors supported on a curve configuration.

A divisor D_m = sum(k_i D_i) with m K + D_m numerically trivial must pair
against every curve the way -m K does, which pins the coefficient vector to
the exact linear system

    M k = rhs,    rhs_i = -m * (K . D_i),

where M is the intersection matrix and K . D_i comes from adjunction.  The
solution is accepted only when its square agrees with (m K)^2 = -m^2 b2;
a configuration that solves the system but misses that square cannot span
the anticanonical class and is rejected.

Degenerate (negative semidefinite) forms belong to the square-zero-cycle
surfaces, where such a divisor exists precisely in the parabolic case with
the elliptic curve present, at level m = 1 with every coefficient 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    DEFINITE,
    ELLIPTIC,
    SEMIDEFINITE,
    SMOOTH_RATIONAL,
    CurveConfig,
    CycleRecord,
    adjunction_degree,
    find_cycles,
    intersection_matrix,
    is_negative_definite,
    require_valid,
)
from .errors import DomainError
from .linalg import solve_exact


@dataclass(frozen=True)
class NacSolution:
    """Accepted coefficient vector for D_m, in curve listing order."""

    m: int
    coeffs: tuple[Fraction, ...]
    index: int
    effective: bool
    self_int_check: int
    parabolic: bool = False


@dataclass(frozen=True)
class NoSolution:
    reason: str


def solve_nac(config: CurveConfig, m: int) -> NacSolution | NoSolution:
    """Solve for the level-m numerically anticanonical divisor, exactly."""
    require_valid(config)
    if m < 1:
        raise DomainError(f"level m must be a positive integer, got {m}")
    if not config.curves:
        return NoSolution("no curves: nothing can support an anticanonical divisor")
    matrix = intersection_matrix(config)
    rhs = [-m * adjunction_degree(c) for c in config.curves]
    verdict = is_negative_definite(matrix)

    if verdict == DEFINITE:
        k = solve_exact(matrix, rhs)
        # a definite form is invertible, so the solve cannot fail
        square = sum(ki * ri for ki, ri in zip(k, rhs))  # k^T M k = k^T rhs
        return _accept(config, m, tuple(k), square)

    if verdict == SEMIDEFINITE:
        if not any(c.kind == ELLIPTIC for c in config.curves):
            return NoSolution(
                "degenerate form without an elliptic curve: on the square-zero-cycle "
                "surfaces no numerically anticanonical divisor exists outside the "
                "parabolic case"
            )
        # parabolic candidate: every coefficient equal to m, index 1
        k = tuple(Fraction(m) for _ in config.curves)
        residual_ok = all(
            sum(matrix[i][j] * k[j] for j in range(len(k))) == rhs[i]
            for i in range(len(k))
        )
        if not residual_ok:
            return NoSolution(
                "degenerate form: the parabolic coefficient vector does not solve "
                "the pairing system"
            )
        square = sum(
            k[i] * matrix[i][j] * k[j]
            for i in range(len(k))
            for j in range(len(k))
        )
        return _accept(config, m, k, square, parabolic=True)

    return NoSolution("intersection form is not negative (semi)definite")


def _accept(config, m, coeffs, square, parabolic=False) -> NacSolution | NoSolution:
    expected = -m * m * config.b2
    if square != expected:
        return NoSolution(
            f"self-intersection defect: divisor square {square} != {expected} "
            f"(= -m^2 b2), so the curves cannot span the anticanonical class"
        )
    index = math.lcm(*((ki / m).denominator for ki in coeffs))
    effective = all(ki > 0 for ki in coeffs)
    return NacSolution(m, coeffs, index, effective, int(square), parabolic)


def index_of(config: CurveConfig) -> int | None:
    """Smallest level at which the coefficients clear denominators.

    Computed as the lcm of the denominators of the level-1 solution; None
    when no solution exists at level 1.
    """
    sol = solve_nac(config, 1)
    if isinstance(sol, NoSolution):
        return None
    return sol.index


# --- the singular-rational-curve family in closed form ----------------------


@dataclass(frozen=True)
class SingratClosedForm:
    coeffs: tuple[Fraction, ...]
    det: int
    consistent: bool
    detail: str


def singrat_closed_form(n: int, p: int, m: int) -> SingratClosedForm:
    """Closed-form solution on the nodal-curve-plus-chain family.

    The (p+1) x (p+1) intersection matrix (corner -(n-1), chain of -2) has

        det = (-1)^(p+1) * ((n-1)(p+1) - p)

    and the pairing system at level m is solved by

        k_i = m (n-1) (p+1-i) / ((n-1)(p+1) - p).

    The candidate divisor squares to -m^2 n only when p = n - 1; in
    particular for p = 0 the requirement m^2 n = k_0^2 (n-1) has no integer
    solution since n(n-1) is never a perfect square.
    """
    if n < 2:
        raise DomainError(f"family needs n >= 2, got {n}")
    if not 0 <= p <= n - 1:
        raise DomainError(f"p must lie in [0, {n - 1}], got {p}")
    if m < 1:
        raise DomainError(f"level m must be a positive integer, got {m}")
    denom = (n - 1) * (p + 1) - p
    det = (-1) ** (p + 1) * denom
    coeffs = tuple(Fraction(m * (n - 1) * (p + 1 - i), denom) for i in range(p + 1))
    # only the nodal curve has a non-zero right-hand side, so the square is
    # k_0 * rhs_0 with rhs_0 = -m (n-1)
    square = coeffs[0] * (-m * (n - 1))
    consistent = square == -m * m * n
    if p == 0:
        detail = (
            f"single nodal curve: needs m^2 n = k_0^2 (n-1), i.e. {m * m * n} = "
            f"k_0^2 * {n - 1}, impossible in integers because n(n-1) is not a square"
        )
    elif consistent:
        detail = f"divisor square {square} matches -m^2 n"
    else:
        detail = f"divisor square {square} != {-m * m * n}; the family is consistent only at p = n-1"
    return SingratClosedForm(coeffs, det, consistent, detail)


# --- structural checks on an accepted solution ------------------------------


@dataclass(frozen=True)
class StarCheck:
    curve_id: int
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass(frozen=True)
class StarRecurrenceReport:
    checks: tuple[StarCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def verify_star_recurrence(config: CurveConfig, sol: NacSolution) -> StarRecurrenceReport:
    """Chain recurrence satisfied by anticanonical coefficients.

    At any smooth rational curve whose total neighbor multiplicity is
    exactly 2 (a cycle curve without branches, or an interior curve of a
    branch chain), row i of the pairing system rearranges to

        (k_left - 1) + (k_right - 1) = (k_i - 1) * (-D_i^2)

    for the normalized coefficients k/m; a curve met twice by a single
    neighbor counts that neighbor on both sides.  A violation falsifies
    the solution.
    """
    require_valid(config)
    khat = _normalized(config, sol)
    checks = []
    for c in config.curves:
        if c.kind != SMOOTH_RATIONAL:
            continue
        slots: list[int] = []
        for u, mult in config.neighbors(c.id):
            slots.extend([u] * mult)
        if len(slots) != 2:
            continue
        lhs = sum(khat[u] - 1 for u in slots)
        rhs = (khat[c.id] - 1) * (-c.self_int)
        checks.append(StarCheck(c.id, Fraction(lhs), Fraction(rhs), lhs == rhs))
    return StarRecurrenceReport(tuple(checks))


@dataclass(frozen=True)
class CycleStructure:
    member_ids: tuple[int, ...]
    min_coeff: Fraction  # normalized by m
    max_coeff: Fraction
    unit_cycle: bool
    max_at_branch_root: bool | None
    violations: tuple[str, ...]


@dataclass(frozen=True)
class NacStructureReport:
    cycles: tuple[CycleStructure, ...]

    @property
    def ok(self) -> bool:
        return all(not c.violations for c in self.cycles)

    @property
    def inoue_ih_signature(self) -> bool:
        return any(c.unit_cycle and not c.violations for c in self.cycles)


def nac_structure_report(config: CurveConfig, sol: NacSolution) -> NacStructureReport:
    """Coefficient pattern on each cycle of rational curves.

    Two facts about anticanonical coefficients are checked per cycle:

    * if any cycle coefficient equals m, then all of them do and the cycle
      carries no branch (the signature of the square-zero and
      Inoue-Hirzebruch cases);
    * otherwise (all strictly above m) the largest cycle coefficient must
      be attained at the root of some branch, since a cycle with every
      coefficient >= 2m necessarily supports one.
    """
    require_valid(config)
    khat = _normalized(config, sol)
    entries = []
    for rec in find_cycles(config):
        if rec.length < 1:
            continue  # elliptic 0-cycles carry no such pattern
        vals = {cid: khat[cid] for cid in rec.member_ids}
        lo, hi = min(vals.values()), max(vals.values())
        has_branch = bool(rec.branches)
        violations: list[str] = []
        unit_cycle = False
        max_at_root: bool | None = None
        if lo == 1:
            if hi != 1:
                violations.append(
                    "one cycle coefficient equals m but others exceed it; a unit "
                    "coefficient forces the whole cycle to be at the unit"
                )
            if has_branch:
                violations.append(
                    "cycle at the unit coefficient cannot carry a branch"
                )
            unit_cycle = not violations
        elif lo > 1:
            if not has_branch:
                violations.append(
                    "every cycle coefficient exceeds m but no branch is attached; "
                    "such a cycle must support at least one branch"
                )
                max_at_root = False
            else:
                roots = {br.root_id for br in rec.branches}
                max_at_root = any(vals[r] == hi for r in roots)
                if not max_at_root:
                    violations.append(
                        "the maximal cycle coefficient is not attained at a branch root"
                    )
        else:
            violations.append(
                "cycle coefficient below the anticanonical unit; the cycle always "
                "sits in the divisor with coefficient at least m"
            )
        entries.append(
            CycleStructure(
                rec.member_ids, lo, hi, unit_cycle, max_at_root, tuple(violations)
            )
        )
    return NacStructureReport(tuple(entries))


def _normalized(config: CurveConfig, sol: NacSolution) -> dict[int, Fraction]:
    if len(sol.coeffs) != len(config.curves):
        raise DomainError("solution length does not match the configuration")
    return {
        c.id: Fraction(k) / sol.m for c, k in zip(config.curves, sol.coeffs)
    }
