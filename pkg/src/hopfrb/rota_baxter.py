"""Weight -1 Rota-Baxter operators on cocommutative Hopf algebras.

An operator B is admitted when it is a coalgebra map and satisfies, on all
basis pairs,

    B(x) B(y) = B( B(x1) y S(B(x2)) x3 ).

From a valid operator the module derives the companion operator
Bt(x) = x1 B(S(x2)), the images H+ = Im B and H- = Im Bt (Hopf subalgebras),
the kernels K+ = ker Bt and K- = ker B, and the descendent Hopf algebra H_B
with product x *_B y = B(x1) y S(B(x2)) x3 and antipode
S_B(x) = S(B(x1)) S(x2) B(x3). Every identity is verified exactly before a
derived bundle is returned; a failure aborts with the identity named and a
witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import (Matrix, Subspace, Vec, ONE, ZERO, image_basis,
                     kernel_basis, unit_vec, zero_vec)
from .hopf import (HopfData, HopfElement, SubHopf, hopf_hom_check,
                   coalgebra_map_check, is_cocommutative, make_hopf,
                   sub_hopf_from_subspace, verify_hopf)


class IdentityError(AssertionError):
    """An exactly-checked identity failed; names the identity and a witness."""

    def __init__(self, identity: str, witness):
        self.identity = identity
        self.witness = witness
        super().__init__(f"identity failed: {identity} at {witness}")


@dataclass
class RBOperator:
    """A verified weight -1 Rota-Baxter operator on a cocommutative algebra."""
    algebra: HopfData
    matrix: Matrix
    weight: int = -1


def rb_check(h: HopfData, b: Matrix):
    """Coalgebra-map condition plus the defining identity on all basis pairs.

    Returns (True, None) or (False, witness); the witness is either a
    coalgebra failure tag or the first failing basis pair (i, j).
    """
    if not is_cocommutative(h):
        raise ValueError("Rota-Baxter operators are defined on cocommutative algebras")
    if b.rows != h.dim or b.cols != h.dim:
        raise ValueError("operator shape must match the algebra dimension")
    co_ok, co_wit = coalgebra_map_check(h, b)
    if not co_ok:
        return False, ("coalgebra", co_wit)
    bcols = [b.col(i) for i in range(h.dim)]
    sb = [h.antipode_vec(c) for c in bcols]  # S(B(e_i))
    for i in range(h.dim):
        terms3 = h.sweedler(h.basis_vec(i), 3)
        for j in range(h.dim):
            lhs = h.mul_vec(bcols[i], bcols[j])
            arg = zero_vec(h.dim)
            ej = h.basis_vec(j)
            for (a, m, c), coef in terms3.items():
                t = h.mul_many(bcols[a], ej, sb[m], h.basis_vec(c))
                for k, v in enumerate(t):
                    if v != 0:
                        arg[k] += coef * v
            if lhs != b.apply(arg):
                return False, (i, j)
    return True, None


def rb_operator(h: HopfData, b: Matrix) -> RBOperator:
    ok, witness = rb_check(h, b)
    if not ok:
        raise IdentityError("rb-defining-identity", witness)
    return RBOperator(h, b)


def tilde_op(rb: RBOperator) -> Matrix:
    """Companion operator Bt(x) = x1 B(S(x2))."""
    h = rb.algebra
    bs = rb.matrix.mul(h.antipode)  # B o S
    bs_cols = [bs.col(i) for i in range(h.dim)]
    cols = []
    for i in range(h.dim):
        out = zero_vec(h.dim)
        for (a, m), coef in h.comult[i].items():
            t = h.mul_vec(h.basis_vec(a), bs_cols[m])
            for k, v in enumerate(t):
                if v != 0:
                    out[k] += coef * v
        cols.append(out)
    return Matrix.from_cols(cols)


def _tilde_of(h: HopfData, b: Matrix) -> Matrix:
    return tilde_op(RBOperator(h, b))


def star_product(rb: RBOperator, x: HopfElement, y: HopfElement) -> HopfElement:
    """Pointwise x *_B y = B(x1) y S(B(x2)) x3."""
    h = rb.algebra
    if x.parent is not h or y.parent is not h:
        raise ValueError("elements must live in the operator's algebra")
    out = zero_vec(h.dim)
    for (a, m, c), coef in h.sweedler(x.coords, 3).items():
        t = h.mul_many(rb.matrix.col(a), y.coords,
                       h.antipode_vec(rb.matrix.col(m)), h.basis_vec(c))
        for k, v in enumerate(t):
            if v != 0:
                out[k] += coef * v
    return HopfElement(h, out)


def s_b(rb: RBOperator, x: HopfElement) -> HopfElement:
    """Pointwise S_B(x) = S(B(x1)) S(x2) B(x3)."""
    h = rb.algebra
    if x.parent is not h:
        raise ValueError("element must live in the operator's algebra")
    out = zero_vec(h.dim)
    for (a, m, c), coef in h.sweedler(x.coords, 3).items():
        t = h.mul_many(h.antipode_vec(rb.matrix.col(a)),
                       h.antipode.col(m), rb.matrix.col(c))
        for k, v in enumerate(t):
            if v != 0:
                out[k] += coef * v
    return HopfElement(h, out)


def descendent(rb: RBOperator) -> HopfData:
    """The descendent Hopf algebra H_B: new product and antipode, same
    coalgebra, same unit. Construction verifies all axioms."""
    h = rb.algebra
    n = h.dim
    bcols = [rb.matrix.col(i) for i in range(n)]
    sbcols = [h.antipode_vec(c) for c in bcols]
    scols = [h.antipode.col(i) for i in range(n)]
    mult = []
    for i in range(n):
        terms3 = h.sweedler(h.basis_vec(i), 3)
        row = []
        for j in range(n):
            out = zero_vec(n)
            ej = h.basis_vec(j)
            for (a, m, c), coef in terms3.items():
                t = h.mul_many(bcols[a], ej, sbcols[m], h.basis_vec(c))
                for k, v in enumerate(t):
                    if v != 0:
                        out[k] += coef * v
            row.append({k: v for k, v in enumerate(out) if v != 0})
        mult.append(row)
    antipode = Matrix.zero(n, n)
    for i in range(n):
        out = zero_vec(n)
        for (a, m, c), coef in h.sweedler(h.basis_vec(i), 3).items():
            t = h.mul_many(sbcols[a], scols[m], bcols[c])
            for k, v in enumerate(t):
                if v != 0:
                    out[k] += coef * v
        for k, v in enumerate(out):
            antipode.entries[k][i] = v
    return make_hopf(n, list(h.basis_labels), mult, list(h.unit),
                     [dict(d) for d in h.comult], list(h.counit), antipode,
                     name=f"{h.name}_B")


def descendent_rb_check(rb: RBOperator, desc: Optional[HopfData] = None):
    """B must remain a weight -1 operator on the descendent algebra."""
    d = desc if desc is not None else descendent(rb)
    return rb_check(d, rb.matrix)


@dataclass
class RBDerived:
    """Everything the theory attaches to a single verified operator."""
    rb: RBOperator
    tilde: Matrix
    h_plus: SubHopf
    h_minus: SubHopf
    k_plus: Subspace
    k_minus: Subspace
    descendent: HopfData
    descendent_antipode: Matrix
    descendent_tilde: HopfData  # H for the companion operator's product

    @property
    def algebra(self) -> HopfData:
        return self.rb.algebra


def derive_all(rb: RBOperator) -> RBDerived:
    """Derive the companion, images, kernels, and descendent algebras,
    verifying every attached identity exactly. Fails loudly: a failure here
    means either an implementation bug or a false theorem."""
    h = rb.algebra
    n = h.dim
    b = rb.matrix
    tilde = tilde_op(rb)

    # companion is again an operator
    ok, wit = rb_check(h, tilde)
    if not ok:
        raise IdentityError("companion-operator", wit)

    # round-trip B(x) = x1 Bt(S(x2))
    ts = tilde.mul(h.antipode)
    ts_cols = [ts.col(i) for i in range(n)]
    for i in range(n):
        out = zero_vec(n)
        for (a, m), coef in h.comult[i].items():
            t = h.mul_vec(h.basis_vec(a), ts_cols[m])
            for k, v in enumerate(t):
                if v != 0:
                    out[k] += coef * v
        if out != b.col(i):
            raise IdentityError("companion-roundtrip", (i,))

    # Bt(x1) S(B(S(x2))) = x and B(x1) S(Bt(S(x2))) = x
    sbs = h.antipode.mul(b).mul(h.antipode)
    stildes = h.antipode.mul(tilde).mul(h.antipode)
    tilde_cols = [tilde.col(i) for i in range(n)]
    b_cols = [b.col(i) for i in range(n)]
    for i in range(n):
        lhs1 = zero_vec(n)
        lhs2 = zero_vec(n)
        for (a, m), coef in h.comult[i].items():
            t1 = h.mul_vec(tilde_cols[a], sbs.col(m))
            t2 = h.mul_vec(b_cols[a], stildes.col(m))
            for k in range(n):
                if t1[k] != 0:
                    lhs1[k] += coef * t1[k]
                if t2[k] != 0:
                    lhs2[k] += coef * t2[k]
        e = h.basis_vec(i)
        if lhs1 != e:
            raise IdentityError("companion-factorization-left", (i,))
        if lhs2 != e:
            raise IdentityError("companion-factorization-right", (i,))

    # composite identities Bt B = B S Bt S and B Bt = Bt S B S
    if tilde.mul(b) != b.mul(stildes):
        raise IdentityError("composite-swap-left", None)
    if b.mul(tilde) != tilde.mul(sbs):
        raise IdentityError("composite-swap-right", None)

    # subspaces
    h_plus = sub_hopf_from_subspace(h, image_basis(b), name=f"{h.name}+")
    h_minus = sub_hopf_from_subspace(h, image_basis(tilde), name=f"{h.name}-")
    k_plus = kernel_basis(tilde)
    k_minus = kernel_basis(b)

    # descendent algebras for both operators
    desc = descendent(rb)
    rb_tilde = RBOperator(h, tilde)
    desc_tilde = descendent(rb_tilde)

    # antipode transport: S(S(x) *_Bt S(y)) = x *_B y
    scols = [h.antipode.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = h.antipode_vec(desc_tilde.mul_vec(scols[i], scols[j]))
            rhs = desc.mul_vec(h.basis_vec(i), h.basis_vec(j))
            if lhs != rhs:
                raise IdentityError("antipode-product-transport", (i, j))

    # B is a Hopf homomorphism from H_B to H
    if not hopf_hom_check(desc, h, b).ok:
        raise IdentityError("descendent-to-parent-homomorphism", None)

    # B stays Rota-Baxter on the descendent algebra
    ok, wit = descendent_rb_check(rb, desc)
    if not ok:
        raise IdentityError("descendent-rb", wit)

    return RBDerived(rb, tilde, h_plus, h_minus, k_plus, k_minus,
                     desc, desc.antipode, desc_tilde)
