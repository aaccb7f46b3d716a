"""Curve configurations and their intersection combinatorics.

A configuration records the curves a surface with second Betti number b2 is
known to carry: at most b2 rational curves (smooth or nodal) plus at most
one elliptic curve, together with pairwise intersection multiplicities.
The dual graph of such a configuration is a disjoint union of cycles with
trees attached:

* an elliptic curve is a 0-cycle,
* a nodal rational curve is a 1-cycle,
* two smooth rational curves meeting twice form a 2-cycle,
* r >= 3 smooth rational curves in a closed chain of simple intersections
  form an r-cycle,

and every smooth rational curve not on a cycle belongs to a tree hanging
off exactly one cycle member (a branch) or to no cycle at all (isolated).
Anything else, cycles sharing a curve, cycles touching each other, trees
tied to two cycle members, is structurally impossible and rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import DomainError, InvalidConfigError, StructureError
from .linalg import determinant, leading_principal_minors

SMOOTH_RATIONAL = "smooth_rational"
NODAL_RATIONAL = "nodal_rational"
ELLIPTIC = "elliptic"
CURVE_KINDS = (SMOOTH_RATIONAL, NODAL_RATIONAL, ELLIPTIC)

DEFINITE = "definite"
SEMIDEFINITE = "semidefinite"
NEITHER = "neither"


@dataclass(frozen=True)
class Curve:
    id: int
    kind: str
    self_int: int


@dataclass(frozen=True)
class CurveConfig:
    """Immutable curve configuration.

    ``intersections`` holds one (low_id, high_id, mult) triple per meeting
    pair with mult > 0; self-intersections live on the curves themselves.
    """

    b2: int
    curves: tuple[Curve, ...]
    intersections: tuple[tuple[int, int, int], ...] = ()
    _mult: dict = field(init=False, repr=False, compare=False)
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        curves = tuple(self.curves)
        by_id = {}
        for c in curves:
            if c.id in by_id:
                raise InvalidConfigError(f"duplicate curve id {c.id}")
            by_id[c.id] = c
        mult: dict[tuple[int, int], int] = {}
        normalized = []
        for entry in self.intersections:
            i, j, m = (int(v) for v in entry)
            if i == j:
                raise InvalidConfigError(
                    f"self-pairing for curve {i}: self-intersections belong on the curve"
                )
            if m < 0:
                raise InvalidConfigError(f"negative multiplicity for pair ({i}, {j})")
            if i not in by_id or j not in by_id:
                raise InvalidConfigError(f"intersection names unknown curve in ({i}, {j})")
            if m == 0:
                continue
            key = (min(i, j), max(i, j))
            if key in mult:
                raise InvalidConfigError(f"duplicate intersection entry for pair {key}")
            mult[key] = m
            normalized.append((key[0], key[1], m))
        normalized.sort()
        object.__setattr__(self, "curves", curves)
        object.__setattr__(self, "intersections", tuple(normalized))
        object.__setattr__(self, "_mult", mult)
        object.__setattr__(self, "_by_id", by_id)

    def mult(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self._mult.get((min(i, j), max(i, j)), 0)

    def curve(self, cid: int) -> Curve:
        try:
            return self._by_id[cid]
        except KeyError:
            raise DomainError(f"no curve with id {cid}") from None

    def ids(self) -> tuple[int, ...]:
        return tuple(c.id for c in self.curves)

    def neighbors(self, cid: int) -> list[tuple[int, int]]:
        """(other id, multiplicity) pairs for every curve meeting cid."""
        out = []
        for c in self.curves:
            if c.id == cid:
                continue
            m = self.mult(cid, c.id)
            if m > 0:
                out.append((c.id, m))
        return out


@dataclass(frozen=True)
class ValidationIssue:
    message: str
    curve_id: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[ValidationIssue, ...]

    @property
    def valid(self) -> bool:
        return not self.issues


def validate(config: CurveConfig) -> ValidationReport:
    """Check the per-curve and counting invariants; never raises."""
    issues: list[ValidationIssue] = []
    if config.b2 < 1:
        issues.append(ValidationIssue(f"b2 must be at least 1, got {config.b2}"))
    rational = 0
    elliptic = 0
    for c in config.curves:
        if c.kind not in CURVE_KINDS:
            issues.append(ValidationIssue(f"unknown curve kind {c.kind!r}", c.id))
            continue
        if c.kind == SMOOTH_RATIONAL:
            rational += 1
            if c.self_int > -2:
                issues.append(
                    ValidationIssue(
                        f"smooth rational curve needs self-intersection <= -2, got {c.self_int}",
                        c.id,
                    )
                )
        elif c.kind == NODAL_RATIONAL:
            rational += 1
            if c.self_int > 0:
                issues.append(
                    ValidationIssue(
                        f"nodal rational curve needs self-intersection <= 0, got {c.self_int}",
                        c.id,
                    )
                )
        else:
            elliptic += 1
            if c.self_int > 0:
                issues.append(
                    ValidationIssue(
                        f"elliptic curve needs self-intersection <= 0, got {c.self_int}",
                        c.id,
                    )
                )
    if rational > config.b2:
        issues.append(
            ValidationIssue(
                f"{rational} rational curves exceed b2 = {config.b2}; "
                "these surfaces carry at most b2 rational curves"
            )
        )
    if elliptic > 1:
        issues.append(ValidationIssue(f"at most one elliptic curve allowed, got {elliptic}"))
    return ValidationReport(tuple(issues))


def require_valid(config: CurveConfig) -> None:
    report = validate(config)
    if not report.valid:
        raise InvalidConfigError(
            "; ".join(i.message for i in report.issues), issues=report.issues
        )


def intersection_matrix(config: CurveConfig) -> list[list[int]]:
    """Symmetric integer matrix in the order the curves are listed."""
    require_valid(config)
    ids = config.ids()
    n = len(ids)
    m = [[0] * n for _ in range(n)]
    for a in range(n):
        m[a][a] = config.curve(ids[a]).self_int
        for b in range(a + 1, n):
            v = config.mult(ids[a], ids[b])
            m[a][b] = v
            m[b][a] = v
    return m


def is_negative_definite(matrix: list[list[int]]) -> str:
    """Exact definiteness verdict: "definite", "semidefinite" or "neither".

    Definiteness is read off the leading principal minors (signs must
    alternate starting negative).  When that fails, the semidefinite verdict
    needs every principal minor of -M to be non-negative, so we fall back to
    scanning all of them, bailing out at the first negative one.
    """
    n = len(matrix)
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise DomainError("matrix must be square")
        for j in range(n):
            if matrix[i][j] != matrix[j][i]:
                raise DomainError("matrix must be symmetric")
    if n == 0:
        return DEFINITE
    leading = leading_principal_minors(matrix)
    if all((d > 0) if (k % 2 == 0) else (d < 0) for k, d in enumerate(leading, 1)):
        # (-1)^k det(M_k) > 0 for every k
        return DEFINITE
    neg = [[-x for x in row] for row in matrix]
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            sub = [[neg[a][b] for b in subset] for a in subset]
            if determinant(sub) < 0:
                return NEITHER
    return SEMIDEFINITE


# --- cycle decomposition ---------------------------------------------------


@dataclass(frozen=True)
class Branch:
    root_id: int
    member_ids: tuple[int, ...]


@dataclass(frozen=True)
class CycleRecord:
    member_ids: tuple[int, ...]
    length: int
    branches: tuple[Branch, ...] = ()


def find_cycles(config: CurveConfig) -> list[CycleRecord]:
    """Decompose the dual graph into cycles with their branches.

    Smooth rational curves are pruned to the 2-core of their intersection
    graph (counting multiplicities); what survives must be a disjoint union
    of simple closed chains, each one an r-cycle with r >= 2.  Nodal and
    elliptic curves are 1- and 0-cycles on their own.  The leftover trees
    are assigned to the unique cycle member they touch, or reported as
    isolated by :func:`partition_curves`.
    """
    require_valid(config)
    smooth = [c.id for c in config.curves if c.kind == SMOOTH_RATIONAL]
    smooth_set = set(smooth)

    def smooth_degree(v: int, alive: set[int]) -> int:
        return sum(m for u, m in config.neighbors(v) if u in alive)

    # 2-core of the smooth subgraph: repeatedly strip multiplicity-degree <= 1
    core = set(smooth)
    changed = True
    while changed:
        changed = False
        for v in sorted(core):
            if smooth_degree(v, core) <= 1:
                core.remove(v)
                changed = True

    for v in sorted(core):
        if smooth_degree(v, core) != 2:
            raise StructureError(
                f"curve {v} lies on more than one cycle "
                "(its pruned intersection graph degree exceeds 2)"
            )

    cycles: list[CycleRecord] = []
    seen: set[int] = set()
    for start in sorted(core):
        if start in seen:
            continue
        members = _walk_cycle(config, core, start)
        seen.update(members)
        cycles.append(CycleRecord(tuple(members), len(members)))

    for c in config.curves:
        if c.kind == NODAL_RATIONAL:
            cycles.append(CycleRecord((c.id,), 1))
        elif c.kind == ELLIPTIC:
            cycles.append(CycleRecord((c.id,), 0))

    cycle_members = {cid for rec in cycles for cid in rec.member_ids}
    for a, b in itertools.combinations(sorted(cycle_members), 2):
        if config.mult(a, b) > 0 and not _same_cycle(cycles, a, b):
            raise StructureError(f"curves {a} and {b} join two distinct cycles")

    # trees: connected components of the remaining smooth curves
    rest = sorted(smooth_set - cycle_members)
    assigned: dict[int, list[tuple[int, list[int]]]] = {}
    visited: set[int] = set()
    for start in rest:
        if start in visited:
            continue
        component = _tree_component(config, start, set(rest))
        visited.update(component)
        attachments = []
        for v in component:
            for u, m in config.neighbors(v):
                if u in cycle_members:
                    attachments.extend([u] * m)
        if not attachments:
            continue  # isolated tree, reported by partition_curves
        if len(attachments) > 1:
            raise StructureError(
                f"tree through curve {start} attaches to a cycle more than once "
                f"(roots {sorted(set(attachments))})"
            )
        root = attachments[0]
        assigned.setdefault(root, []).append((min(component), sorted(component)))

    out = []
    for rec in sorted(cycles, key=lambda r: min(r.member_ids)):
        branches = []
        for root in rec.member_ids:
            for _, members in sorted(assigned.get(root, [])):
                branches.append(Branch(root, tuple(members)))
        out.append(CycleRecord(rec.member_ids, rec.length, tuple(branches)))
    return out


def _walk_cycle(config: CurveConfig, core: set[int], start: int) -> list[int]:
    # every core vertex has multiplicity-degree exactly 2 here
    first = sorted(u for u, m in config.neighbors(start) if u in core)
    if len(first) == 1:
        u, m = first[0], config.mult(start, first[0])
        if m == 2:
            return [start, u]  # two curves meeting twice
        raise StructureError(f"curves {start} and {first[0]} meet with multiplicity {m}, not a cycle")
    members = [start]
    prev, cur = start, first[0]
    while cur != start:
        if config.mult(prev, cur) != 1:
            raise StructureError(
                f"cycle edge {prev}-{cur} has multiplicity {config.mult(prev, cur)}, expected 1"
            )
        members.append(cur)
        nxt = [u for u, m in config.neighbors(cur) if u in core and u != prev]
        prev, cur = cur, nxt[0]
    if config.mult(prev, start) != 1:
        raise StructureError(f"cycle edge {prev}-{start} has multiplicity != 1")
    return members


def _same_cycle(cycles: list[CycleRecord], a: int, b: int) -> bool:
    return any(a in rec.member_ids and b in rec.member_ids for rec in cycles)


def _tree_component(config: CurveConfig, start: int, pool: set[int]) -> list[int]:
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u, _ in config.neighbors(v):
            if u in pool and u not in comp:
                comp.add(u)
                stack.append(u)
    return sorted(comp)


def partition_curves(
    config: CurveConfig, cycles: list[CycleRecord]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split curve ids into (cycle members, branch members, isolated)."""
    cycle_ids = {cid for rec in cycles for cid in rec.member_ids}
    branch_ids = {cid for rec in cycles for br in rec.branches for cid in br.member_ids}
    isolated = [c.id for c in config.curves if c.id not in cycle_ids and c.id not in branch_ids]
    return (
        tuple(sorted(cycle_ids)),
        tuple(sorted(branch_ids)),
        tuple(sorted(isolated)),
    )


# --- numerical classification ----------------------------------------------

ENOKI_CLASS = "enoki_class"
INTERMEDIATE = "intermediate"
INOUE_HIRZEBRUCH = "inoue_hirzebruch"
OUT_OF_RANGE = "out_of_range"


@dataclass(frozen=True)
class SigmaClassification:
    sigma: int
    verdict: str
    ih_parity: str | None = None
    torsion_crosscheck: bool | None = None
    notes: tuple[str, ...] = ()


def sigma_classify(config: CurveConfig) -> SigmaClassification:
    """Trichotomy by the total opposite self-intersection of the b2 rational curves.

    sigma adds 2 for each nodal curve: the square of an r-cycle satisfies
    C^2 = sum(D_i^2) + 2r with the node of a 1-cycle counting as its own
    adjacency, so the node contributes +2 to the cycle bookkeeping exactly
    as a chain intersection would.  With that convention every Enoki-type
    cycle gives sigma = 2n (its class has square zero) and the two
    Inoue-Hirzebruch families give sigma = 3n.

    For configurations carrying exactly one cycle of rational curves the
    verdict also reports the torsion cross-check #C - C^2 == 2*b2, the
    signature of the twisted single-cycle case.
    """
    require_valid(config)
    rational = [c for c in config.curves if c.kind != ELLIPTIC]
    if len(rational) < config.b2:
        raise DomainError(
            f"insufficient curves: sigma needs exactly b2 = {config.b2} rational "
            f"curves, found {len(rational)} (configuration is not known to be complete)"
        )
    n = config.b2
    nodal = sum(1 for c in rational if c.kind == NODAL_RATIONAL)
    sigma = sum(-c.self_int for c in rational) + 2 * nodal

    cycles = find_cycles(config)
    rational_cycles = [rec for rec in cycles if rec.length >= 1]

    crosscheck: bool | None = None
    notes: list[str] = []
    if len(rational_cycles) == 1:
        rec = rational_cycles[0]
        csq = _cycle_square(config, rec)
        crosscheck = (rec.length - csq) == 2 * n
        notes.append(
            f"single-cycle torsion cross-check: #C - C^2 = {rec.length - csq}, "
            f"2*b2 = {2 * n}"
        )

    if sigma == 2 * n:
        verdict, parity = ENOKI_CLASS, None
    elif 2 * n < sigma < 3 * n:
        verdict, parity = INTERMEDIATE, None
    elif sigma == 3 * n:
        verdict = INOUE_HIRZEBRUCH
        if len(rational_cycles) == 2:
            parity = "even"
        elif len(rational_cycles) == 1:
            parity = "odd"
        else:
            parity = None
            notes.append("sigma = 3*b2 but the cycle count matches neither parity")
    else:
        verdict, parity = OUT_OF_RANGE, None
    return SigmaClassification(sigma, verdict, parity, crosscheck, tuple(notes))


def _cycle_square(config: CurveConfig, rec: CycleRecord) -> int:
    total = 0
    for a in rec.member_ids:
        total += config.curve(a).self_int
        for b in rec.member_ids:
            if a != b:
                total += config.mult(a, b)
    return total


def adjunction_degree(curve: Curve) -> int:
    """Degree of the canonical class on the curve, from adjunction.

    Smooth rational: -2 - c^2; nodal rational and elliptic: -c^2 (their
    arithmetic genus 1 absorbs the -2).  Non-negative for every valid curve.
    """
    if curve.kind == SMOOTH_RATIONAL:
        return -2 - curve.self_int
    if curve.kind in (NODAL_RATIONAL, ELLIPTIC):
        return -curve.self_int
    raise DomainError(f"unknown curve kind {curve.kind!r}")
