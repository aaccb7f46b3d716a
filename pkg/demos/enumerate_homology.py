"""Admissible basis representations for small configurations.

Each curve gets a lattice class; the assignment must reproduce every
pairwise intersection number, respect the exceptional-curve combinatorics,
and give cycle class sums of the right shape.  The enumerator returns the
distinct solutions up to renumbering the basis.
"""

from viilattice import (
    Curve,
    CurveConfig,
    EnumerationCapError,
    NODAL_RATIONAL,
    SMOOTH_RATIONAL,
    classify_normal_form,
    enoki_cycle_config,
    enumerate_representations,
    singrat_config,
    verify_representation,
)


def render(config, rep):
    tag = " (odd twisted case)" if rep.odd_ih else ""
    print(f"  representation{tag}:")
    for curve, klass in zip(config.curves, rep.classes):
        twist = " + order-2 twist" if klass.torsion2 else ""
        print(f"    curve {curve.id} ({curve.kind}, {curve.self_int}) "
              f"-> {klass.coeffs}{twist}   {classify_normal_form(klass)}")
    report = verify_representation(config, rep)
    print(f"    verified: {report.ok} "
          f"({', '.join(r.name for r in report.results)})")


def main():
    print("chain family, n=3: the assignment is forced:")
    config = singrat_config(3, 2)
    for rep in enumerate_representations(config):
        render(config, rep)

    print("\nbare cycle of four (-2)-curves: two orientations survive:")
    config = enoki_cycle_config(4)
    for rep in enumerate_representations(config):
        render(config, rep)

    print("\nsquare-zero cycle with its elliptic companion:")
    config = enoki_cycle_config(2, with_elliptic=True)
    for rep in enumerate_representations(config):
        render(config, rep)

    print("\na single nodal curve of self-intersection -1 needs the twist:")
    config = CurveConfig(1, (Curve(0, NODAL_RATIONAL, -1),), ())
    for rep in enumerate_representations(config):
        render(config, rep)

    print("\na triangle of (-3)-curves only closes up in the twisted case:")
    config = CurveConfig(
        3,
        tuple(Curve(i, SMOOTH_RATIONAL, -3) for i in range(3)),
        ((0, 1, 1), (1, 2, 1), (2, 0, 1)),
    )
    for rep in enumerate_representations(config):
        render(config, rep)

    print("\nthe enumerator refuses oversized inputs instead of hanging:")
    try:
        enumerate_representations(singrat_config(10, 9))
    except EnumerationCapError as exc:
        print(f"  {exc}")
    print("  (pass cap=... or set VII_ENUM_CAP on the command line to raise it)")


if __name__ == "__main__":
    main()
