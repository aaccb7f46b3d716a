"""Tour of the rank-n lattice primitives.

Everything downstream (curve assignments, cycle sums, the enumerator)
reduces to the handful of operations shown here: the anti-diagonal pairing
on the basis classes, the canonical class, and the four normal forms a
curve class can take.
"""

from viilattice import (
    FullCycle,
    LatticeClass,
    TypeA,
    add,
    basis_class,
    canonical_class,
    class_geometry,
    classify_normal_form,
    full_cycle_class,
    intersect,
    negate,
    realize_normal_form,
    type_a_class,
    type_b_class,
)

N = 4


def show(label, c):
    form = classify_normal_form(c)
    geo = class_geometry(c, N)
    print(f"  {label:14s} coeffs={c.coeffs}  square={geo.self_int}  "
          f"k_degree={geo.k_degree}  genus={geo.arithmetic_genus}  -> {form}")


def main():
    print(f"basis pairing in rank {N} (L_i . L_j = -delta_ij):")
    l0, l1 = basis_class(N, 0), basis_class(N, 1)
    print(f"  L0.L0 = {intersect(l0, l0)},  L0.L1 = {intersect(l0, l1)}")

    k = canonical_class(N)
    print(f"\ncanonical class K = {k.coeffs}, K^2 = {intersect(k, k)} = -b2")

    print("\nnormal forms and their geometry:")
    show("exceptional", type_a_class(N, 2, {0, 3}))
    show("doubled base", type_b_class(N, 1, {2, 3}))
    show("full cycle", full_cycle_class(N, 1))
    show("plain -L3", LatticeClass((0, 0, 0, -1)))

    print("\nround trip through the classifier:")
    form = TypeA(base=1, blowups=frozenset({0, 2}))
    c = realize_normal_form(form, N)
    print(f"  {form} -> {c.coeffs} -> {classify_normal_form(c)}")

    print("\nthe order-2 twist rides along additively and is invisible "
          "to the pairing:")
    t = full_cycle_class(N, 2, torsion2=True)
    u = full_cycle_class(N, 2)
    print(f"  twisted:   {t.coeffs}, torsion2={t.torsion2}")
    print(f"  t + t:     torsion2={add(t, t).torsion2}  (twists cancel mod 2)")
    print(f"  -t:        torsion2={negate(t).torsion2}  (negation preserves it)")
    print(f"  t.u = {intersect(t, u)} either way")

    print("\na start index of n encodes the zero class:")
    z = full_cycle_class(N, N)
    print(f"  FullCycle(start={N}) -> {z.coeffs}, "
          f"classified as {classify_normal_form(z)}")
    print(f"  while -L3 alone classifies as {classify_normal_form(LatticeClass((0, 0, 0, -1)))}")
    assert isinstance(classify_normal_form(LatticeClass((0, 0, 0, -1))), FullCycle)


if __name__ == "__main__":
    main()
