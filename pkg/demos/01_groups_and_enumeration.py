"""Enumerating group-level Rota-Baxter operators of weight -1.

A weight -1 Rota-Baxter operator on a group G is a map B: G -> G with

    B(g) B(h) = B( B(g) h B(g)^{-1} g )   for all g, h,

which forces B(e) = e. On an abelian group these are exactly the group
endomorphisms; on a nonabelian group they form a strictly smaller and more
interesting family. This demo walks the built-in group catalog and counts
the operators on each group of small order.
"""

from hopfrb import (abelian_rb_equals_endomorphisms, catalog,
                    enumerate_group_rb, group_rb_check, GroupMap,
                    make_cyclic, make_symmetric)


def main():
    print("Operator counts over the catalog (order <= 8):")
    for g in catalog():
        if g.order > 8:
            continue
        ops = enumerate_group_rb(g)
        print(f"  {g.name:6s} order {g.order}: {len(ops)} operators")

    print()
    print("On abelian groups, operators coincide with endomorphisms:")
    for n in (4, 6, 8):
        g = make_cyclic(n)
        print(f"  Z{n}: {abelian_rb_equals_endomorphisms(g)}")

    print()
    g = make_symmetric(3)
    print(f"The operators on S3 (elements indexed 0..5):")
    for f in enumerate_group_rb(g):
        print(f"  {f.images}")

    print()
    print("A non-example: the swap endomorphism candidate on Z4.")
    bad = GroupMap(make_cyclic(4), (0, 2, 1, 3))
    ok, wit = group_rb_check(bad)
    print(f"  accepted: {ok}, first failing pair (g, h): {wit}")


if __name__ == "__main__":
    main()
