"""Finite-dimensional Hopf algebras by structure constants, exact axiom
verification, Sweedler machinery, group algebras, and morphism predicates.

A ``HopfData`` stores the multiplication tensor sparsely per basis pair, the
comultiplication as (left, right, coefficient) triples per basis element, the
counit as a functional, and the antipode as a matrix. Construction through
``make_hopf`` verifies every axiom on basis elements, so downstream code may
assume a lawful Hopf structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import (Matrix, Subspace, Vec, ONE, ZERO, is_zero_vec, unit_vec,
                     vec_add, zero_vec)
from .groups import GroupTable, GroupMap


class HopfAxiomError(ValueError):
    """Raised at construction when an axiom fails; carries the witness."""

    def __init__(self, axiom: str, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"Hopf axiom failed: {axiom} at {witness}")


@dataclass
class HopfData:
    """Structure constants of a finite-dimensional Hopf algebra over Q.

    ``mult[i][j]`` is a sparse dict {k: coeff} for e_i e_j; ``comult[i]`` is a
    sparse dict {(j, k): coeff} for Delta(e_i). Instances are treated as
    immutable after construction.
    """
    dim: int
    basis_labels: list
    mult: list          # dim x dim list of {k: Fraction}
    unit: Vec
    comult: list        # dim list of {(j, k): Fraction}
    counit: Vec
    antipode: Matrix
    name: str = ""

    # ---- element-level operations -------------------------------------

    def nonzeros(self, x: Vec):
        return [(i, c) for i, c in enumerate(x) if c != 0]

    def mul_vec(self, x: Vec, y: Vec) -> Vec:
        out = zero_vec(self.dim)
        for i, a in enumerate(x):
            if a == 0:
                continue
            mi = self.mult[i]
            for j, b in enumerate(y):
                if b == 0:
                    continue
                ab = a * b
                for k, c in mi[j].items():
                    out[k] += ab * c
        return out

    def mul_many(self, *factors: Vec) -> Vec:
        out = factors[0]
        for f in factors[1:]:
            out = self.mul_vec(out, f)
        return out

    def comult_vec(self, x: Vec) -> dict:
        out: dict = {}
        for i, a in enumerate(x):
            if a == 0:
                continue
            for jk, c in self.comult[i].items():
                out[jk] = out.get(jk, ZERO) + a * c
                if out[jk] == 0:
                    del out[jk]
        return out

    def counit_vec(self, x: Vec) -> Fraction:
        return sum((a * e for a, e in zip(x, self.counit)), ZERO)

    def antipode_vec(self, x: Vec) -> Vec:
        return self.antipode.apply(x)

    def sweedler(self, x: Vec, legs: int) -> dict:
        """Sparse Delta_{legs-1}(x): dict over index tuples of length `legs`.

        legs=1 returns {(i,): x_i}; legs=2 is Delta; higher legs expand the
        first tensor leg repeatedly (all bracketings agree by
        coassociativity).
        """
        cur = {(i,): c for i, c in enumerate(x) if c != 0}
        for _ in range(legs - 1):
            nxt: dict = {}
            for idx, c in cur.items():
                for (j, k), d in self.comult[idx[0]].items():
                    key = (j, k) + idx[1:]
                    nxt[key] = nxt.get(key, ZERO) + c * d
                    if nxt[key] == 0:
                        del nxt[key]
            cur = nxt
        return cur

    def basis_vec(self, i: int) -> Vec:
        return unit_vec(self.dim, i)

    def is_group_like_basis(self) -> bool:
        return all(self.comult[i] == {(i, i): ONE} and self.counit[i] == 1
                   for i in range(self.dim))


@dataclass
class HopfElement:
    parent: HopfData
    coords: Vec

    def __post_init__(self):
        if len(self.coords) != self.parent.dim:
            raise ValueError("coordinate length must equal the parent dimension")

    def __mul__(self, other: "HopfElement") -> "HopfElement":
        if other.parent is not self.parent:
            raise ValueError("elements of different algebras")
        return HopfElement(self.parent, self.parent.mul_vec(self.coords, other.coords))

    def __add__(self, other: "HopfElement") -> "HopfElement":
        if other.parent is not self.parent:
            raise ValueError("elements of different algebras")
        return HopfElement(self.parent, vec_add(self.coords, other.coords))

    def __eq__(self, other) -> bool:
        return (isinstance(other, HopfElement)
                and other.parent is self.parent
                and other.coords == self.coords)

    def antipode(self) -> "HopfElement":
        return HopfElement(self.parent, self.parent.antipode_vec(self.coords))


def delta_n(x: HopfElement, n: int) -> dict:
    """Iterated comultiplication with n+1 tensor legs, first-leg nested."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return x.parent.sweedler(x.coords, n + 1)


# ---- axiom verification ------------------------------------------------

@dataclass
class AxiomReport:
    results: list  # list of (axiom name, ok, witness or None)

    @property
    def ok(self) -> bool:
        return all(r[1] for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r[1]]

    def first_failure(self):
        f = self.failures()
        return f[0] if f else None


def _check_associativity(h: HopfData):
    mult = h.mult
    n = h.dim
    for i in range(n):
        for j in range(n):
            p = mult[i][j]
            for k in range(n):
                left: dict = {}
                for l, c in p.items():
                    for t, d in mult[l][k].items():
                        left[t] = left.get(t, ZERO) + c * d
                        if left[t] == 0:
                            del left[t]
                right: dict = {}
                for l, c in mult[j][k].items():
                    for t, d in mult[i][l].items():
                        right[t] = right.get(t, ZERO) + c * d
                        if right[t] == 0:
                            del right[t]
                if left != right:
                    return False, (i, j, k)
    return True, None


def _check_unitality(h: HopfData):
    for i in range(h.dim):
        e = h.basis_vec(i)
        if h.mul_vec(h.unit, e) != e or h.mul_vec(e, h.unit) != e:
            return False, (i,)
    return True, None


def _check_coassociativity(h: HopfData):
    for i in range(h.dim):
        x = h.basis_vec(i)
        left: dict = {}
        for (j, k), c in h.comult[i].items():
            for (a, b), d in h.comult[j].items():
                key = (a, b, k)
                left[key] = left.get(key, ZERO) + c * d
                if left[key] == 0:
                    del left[key]
        right: dict = {}
        for (j, k), c in h.comult[i].items():
            for (a, b), d in h.comult[k].items():
                key = (j, a, b)
                right[key] = right.get(key, ZERO) + c * d
                if right[key] == 0:
                    del right[key]
        if left != right:
            return False, (i,)
    return True, None


def _check_counit(h: HopfData):
    for i in range(h.dim):
        left = zero_vec(h.dim)
        right = zero_vec(h.dim)
        for (j, k), c in h.comult[i].items():
            left[k] += c * h.counit[j]
            right[j] += c * h.counit[k]
        e = h.basis_vec(i)
        if left != e or right != e:
            return False, (i,)
    return True, None


def _check_bialgebra(h: HopfData):
    # Delta and epsilon must be algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1.
    d1 = h.comult_vec(h.unit)
    t1 = {}
    for i, a in enumerate(h.unit):
        if a == 0:
            continue
        for j, b in enumerate(h.unit):
            if b != 0:
                t1[(i, j)] = t1.get((i, j), ZERO) + a * b
    if d1 != t1 or h.counit_vec(h.unit) != 1:
        return False, ("unit",)
    for i in range(h.dim):
        di = h.comult[i]
        for j in range(h.dim):
            prod = h.mult[i][j]
            lhs: dict = {}
            for k, c in prod.items():
                for ab, d in h.comult[k].items():
                    lhs[ab] = lhs.get(ab, ZERO) + c * d
                    if lhs[ab] == 0:
                        del lhs[ab]
            rhs: dict = {}
            for (a1, a2), c in di.items():
                for (b1, b2), d in h.comult[j].items():
                    cd = c * d
                    for l, u in h.mult[a1][b1].items():
                        for r, v in h.mult[a2][b2].items():
                            key = (l, r)
                            rhs[key] = rhs.get(key, ZERO) + cd * u * v
                            if rhs[key] == 0:
                                del rhs[key]
            if lhs != rhs:
                return False, (i, j)
            eps_prod = sum((c * h.counit[k] for k, c in prod.items()), ZERO)
            if eps_prod != h.counit[i] * h.counit[j]:
                return False, (i, j)
    return True, None


def _check_antipode(h: HopfData):
    s_cols = [h.antipode.col(i) for i in range(h.dim)]
    for i in range(h.dim):
        left = zero_vec(h.dim)
        right = zero_vec(h.dim)
        for (j, k), c in h.comult[i].items():
            sx1 = s_cols[j]
            ek = h.basis_vec(k)
            for t, v in enumerate(h.mul_vec(sx1, ek)):
                left[t] += c * v
            sx2 = s_cols[k]
            ej = h.basis_vec(j)
            for t, v in enumerate(h.mul_vec(ej, sx2)):
                right[t] += c * v
        target = [h.counit[i] * u for u in h.unit]
        if left != target or right != target:
            return False, (i,)
    return True, None


def verify_hopf(h: HopfData) -> AxiomReport:
    """Run every Hopf axiom on basis elements, reporting first witnesses."""
    checks = [
        ("associativity", _check_associativity),
        ("unitality", _check_unitality),
        ("coassociativity", _check_coassociativity),
        ("counit", _check_counit),
        ("bialgebra", _check_bialgebra),
        ("antipode", _check_antipode),
    ]
    results = []
    for name, fn in checks:
        ok, witness = fn(h)
        results.append((name, ok, witness))
    return AxiomReport(results)


def make_hopf(dim: int, basis_labels, mult, unit, comult, counit, antipode,
              name: str = "", check: bool = True) -> HopfData:
    """Build a HopfData, rejecting invalid structures at the boundary."""
    h = HopfData(dim, list(basis_labels), mult, list(unit), comult,
                 list(counit), antipode, name=name)
    if check:
        report = verify_hopf(h)
        bad = report.first_failure()
        if bad is not None:
            raise HopfAxiomError(bad[0], bad[2])
    return h


def is_cocommutative(h: HopfData) -> bool:
    for i in range(h.dim):
        d = h.comult[i]
        if any(d.get((k, j)) != c for (j, k), c in d.items()):
            return False
    return True


# ---- group algebras ----------------------------------------------------

def group_algebra(g: GroupTable) -> HopfData:
    """Q[G]: basis indexed by group elements, Delta(g) = g (x) g, S(g) = g^-1."""
    n = g.order
    mult = [[{g.mult[i][j]: ONE} for j in range(n)] for i in range(n)]
    comult = [{(i, i): ONE} for i in range(n)]
    counit = [ONE] * n
    unit = unit_vec(n, g.identity_index)
    s = Matrix.zero(n, n)
    for i in range(n):
        s.entries[g.inverse[i]][i] = ONE
    return make_hopf(n, [f"g{i}" for i in range(n)], mult, unit, comult,
                     counit, s, name=f"Q[{g.name}]")


def lift_group_map(g: GroupTable, f: GroupMap) -> Matrix:
    """0/1 matrix sending basis vector i to basis vector f(i)."""
    m = Matrix.zero(g.order, g.order)
    for i in range(g.order):
        m.entries[f.images[i]][i] = ONE
    return m


def group_likes(h: HopfData, cap: int = 24) -> list:
    """All x with Delta(x) = x (x) x and eps(x) = 1.

    Implemented for the case where every basis element is itself group-like
    (group algebras and their sub-Hopf algebras): the coefficient system
    c_i c_j = delta_ij c_i with sum c_i = 1 then forces x to be a single
    basis vector. Other comultiplications are out of range of this solver.
    """
    if h.dim > cap:
        raise ValueError(f"dimension {h.dim} exceeds group-like solver cap {cap}")
    if not h.is_group_like_basis():
        raise NotImplementedError(
            "group-like solver requires a basis of group-like elements")
    return [HopfElement(h, h.basis_vec(i)) for i in range(h.dim)]


# ---- morphism predicates ------------------------------------------------

def coalgebra_map_check(src: HopfData, f: Matrix, dst: Optional[HopfData] = None):
    """True iff (f (x) f) Delta = Delta f and eps f = eps on basis vectors."""
    dst = dst or src
    if f.cols != src.dim or f.rows != dst.dim:
        raise ValueError("matrix shape does not match the algebras")
    cols = [f.col(i) for i in range(src.dim)]
    for i in range(src.dim):
        lhs: dict = {}
        for (j, k), c in src.comult[i].items():
            fj, fk = cols[j], cols[k]
            for a, u in enumerate(fj):
                if u == 0:
                    continue
                cu = c * u
                for b, v in enumerate(fk):
                    if v != 0:
                        key = (a, b)
                        lhs[key] = lhs.get(key, ZERO) + cu * v
                        if lhs[key] == 0:
                            del lhs[key]
        rhs = dst.comult_vec(cols[i])
        if lhs != rhs:
            return False, (i, "comultiplication")
        if dst.counit_vec(cols[i]) != src.counit[i]:
            return False, (i, "counit")
    return True, None


@dataclass
class HopfMorphismReport:
    is_algebra_hom: bool
    is_coalgebra_hom: bool
    preserves_unit: bool
    preserves_counit: bool
    commutes_with_antipode: bool
    first_failure: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return (self.is_algebra_hom and self.is_coalgebra_hom
                and self.preserves_unit and self.preserves_counit
                and self.commutes_with_antipode)


def hopf_hom_check(src: HopfData, dst: HopfData, f: Matrix) -> HopfMorphismReport:
    if f.cols != src.dim or f.rows != dst.dim:
        raise ValueError("matrix shape does not match source/target dimensions")
    cols = [f.col(i) for i in range(src.dim)]
    first = None

    preserves_unit = f.apply(src.unit) == dst.unit
    if not preserves_unit and first is None:
        first = ("unit",)

    is_algebra = True
    for i in range(src.dim):
        for j in range(src.dim):
            fij = zero_vec(dst.dim)
            for k, c in src.mult[i][j].items():
                for t, v in enumerate(cols[k]):
                    if v != 0:
                        fij[t] += c * v
            if fij != dst.mul_vec(cols[i], cols[j]):
                is_algebra = False
                if first is None:
                    first = ("multiplication", i, j)
                break
        if not is_algebra:
            break

    co_ok, co_wit = coalgebra_map_check(src, f, dst)
    preserves_counit = all(dst.counit_vec(cols[i]) == src.counit[i]
                           for i in range(src.dim))
    if not co_ok and first is None:
        first = co_wit

    antipode_ok = all(
        f.apply(src.antipode.col(i)) == dst.antipode_vec(cols[i])
        for i in range(src.dim))
    if not antipode_ok and first is None:
        first = ("antipode",)

    return HopfMorphismReport(is_algebra, co_ok, preserves_unit,
                              preserves_counit, antipode_ok, first)


# ---- sub-Hopf-algebras ---------------------------------------------------

class NotClosedError(ValueError):
    pass


@dataclass
class SubHopf:
    parent: HopfData
    space: Subspace
    induced: HopfData
    inclusion: Matrix

    @property
    def dim(self) -> int:
        return self.space.dim

    def include(self, coords: Vec) -> Vec:
        return self.space.from_coords(coords)

    def restrict(self, v: Vec) -> Vec:
        cs = self.space.coords(v)
        if cs is None:
            raise NotClosedError("vector is not in the subspace")
        return cs


def _coords_pair(space: Subspace, sparse2: dict, n: int):
    """Coordinates of a sparse rank-2 tensor in space (x) space, or None."""
    piv = space.pivots
    cand = {}
    for s, p in enumerate(piv):
        for t, q in enumerate(piv):
            c = sparse2.get((p, q), ZERO)
            if c != 0:
                cand[(s, t)] = c
    # reconstruct and compare
    recon: dict = {}
    basis = space.basis
    for (s, t), c in cand.items():
        bs, bt = basis[s], basis[t]
        for i, u in enumerate(bs):
            if u == 0:
                continue
            cu = c * u
            for j, v in enumerate(bt):
                if v != 0:
                    key = (i, j)
                    recon[key] = recon.get(key, ZERO) + cu * v
                    if recon[key] == 0:
                        del recon[key]
    if recon != sparse2:
        return None
    return cand


def sub_hopf_from_subspace(h: HopfData, s: Subspace, name: str = "") -> SubHopf:
    """Restrict h to a subspace, verifying all closure conditions.

    Rejects with the violated closure named: unit membership, multiplication,
    comultiplication (both legs must land in the subspace), antipode.
    """
    if s.ambient_dim != h.dim:
        raise ValueError("subspace ambient dimension mismatch")
    unit_coords = s.coords(h.unit)
    if unit_coords is None:
        raise NotClosedError("unit is not in the subspace")
    k = s.dim
    basis = s.basis
    mult = []
    for a in range(k):
        row = []
        for b in range(k):
            prod = h.mul_vec(basis[a], basis[b])
            cs = s.coords(prod)
            if cs is None:
                raise NotClosedError(f"not closed under multiplication at ({a},{b})")
            row.append({i: c for i, c in enumerate(cs) if c != 0})
        mult.append(row)
    comult = []
    for a in range(k):
        d = h.comult_vec(basis[a])
        cp = _coords_pair(s, d, h.dim)
        if cp is None:
            raise NotClosedError(f"not closed under comultiplication at {a}")
        comult.append(cp)
    counit = [h.counit_vec(basis[a]) for a in range(k)]
    antipode = Matrix.zero(k, k)
    for a in range(k):
        sa = h.antipode_vec(basis[a])
        cs = s.coords(sa)
        if cs is None:
            raise NotClosedError(f"not closed under antipode at {a}")
        for i, c in enumerate(cs):
            antipode.entries[i][a] = c
    induced = make_hopf(k, [f"b{i}" for i in range(k)], mult, unit_coords,
                        comult, counit, antipode,
                        name=name or f"sub({h.name}, dim {k})")
    inclusion = (Matrix.from_cols(basis) if k
                 else Matrix.zero(h.dim, 0))
    return SubHopf(h, s, induced, inclusion)
