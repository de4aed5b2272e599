"""Companion operators and descendent Hopf algebras.

Lift a group-level operator B to the group algebra Q[G], derive its
companion Bt(x) = x1 B(S(x2)), and build the descendent Hopf algebra H_B
whose product is x *_B y = B(x1) y S(B(x2)) x3. `derive_all` verifies every
identity that connects these objects (roundtrips, factorizations, composite
swaps, antipode transport) and raises on the first exact mismatch.
"""

from hopfrb import (GroupMap, derive_all, group_algebra, lift_group_map,
                    make_cyclic, make_symmetric, rb_operator)


def show(g, images):
    h = group_algebra(g)
    rb = rb_operator(h, lift_group_map(g, GroupMap(g, images)))
    d = derive_all(rb)
    print(f"{g.name}, B images {images}")
    print(f"  Im B  (H+) dimension: {d.h_plus.space.dim}")
    print(f"  Im Bt (H-) dimension: {d.h_minus.space.dim}")
    print(f"  Ker B  dimension:     {d.k_plus.dim}")
    print(f"  Ker Bt dimension:     {d.k_minus.dim}")
    same = d.descendent.mult == h.mult
    print(f"  descendent product equals the original product: {same}")
    print()
    return d


def main():
    # abelian example: the "multiply by 3" projector on Z6
    show(make_cyclic(6), (0, 3, 0, 3, 0, 3))

    # nonabelian example on S3: here the descendent product genuinely
    # differs from the group-algebra product
    d = show(make_symmetric(3), (0, 0, 3, 3, 4, 4))

    h = d.algebra
    desc = d.descendent
    def row(mult, i):
        # on a group-like basis every product is a single basis element
        return [next(iter(mult[i][j])) for j in range(h.dim)]

    print("Multiplication row of S3 basis element 2 (result indices):")
    print("  original:  ", row(h.mult, 2))
    print("  descendent:", row(desc.mult, 2))


if __name__ == "__main__":
    main()
