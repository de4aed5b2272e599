"""Finite groups as explicit Cayley tables, a small catalog, and exhaustive
discovery of the group-level operators that linearize to weight -1
Rota-Baxter operators on the group algebra.

At the group level the defining equation specializes (on the group-like
basis, where comultiplication duplicates and the antipode inverts) to

    B(g) B(h) = B( B(g) h B(g)^-1 g )      for all g, h,

with B(e) = e forced by setting g = h = e. ``enumerate_group_rb`` finds every
total map satisfying this by backtracking; for abelian groups the equation
collapses to B being a group endomorphism, which serves as an independent
oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

DEFAULT_ENUM_CAP = 12


class InvalidGroupError(ValueError):
    """Raised when a raw table violates one of the group axioms."""


@dataclass(frozen=True)
class GroupTable:
    order: int
    mult: tuple  # tuple of row tuples, 0-based indices
    identity_index: int
    inverse: tuple
    name: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        m = self.mult
        return all(m[a][b] == m[b][a]
                   for a in range(self.order) for b in range(a + 1, self.order))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity_index:
            x = self.mult[x][a]
            k += 1
        return k


def from_cayley_table(raw: Sequence[Sequence[int]], name: str = "") -> GroupTable:
    """Validate a raw multiplication table and build a GroupTable.

    Rejects with the violated axiom named: Latin square, identity,
    associativity, inverses.
    """
    n = len(raw)
    if n == 0:
        raise InvalidGroupError("empty table")
    rows = []
    for r in raw:
        if len(r) != n or any(not (0 <= x < n) for x in r):
            raise InvalidGroupError("not a Latin square: malformed row")
        rows.append(tuple(int(x) for x in r))
    full = set(range(n))
    for i in range(n):
        if set(rows[i]) != full:
            raise InvalidGroupError(f"not a Latin square: row {i} has repeats")
        if {rows[j][i] for j in range(n)} != full:
            raise InvalidGroupError(f"not a Latin square: column {i} has repeats")
    e = None
    for i in range(n):
        if all(rows[i][j] == j and rows[j][i] == j for j in range(n)):
            e = i
            break
    if e is None:
        raise InvalidGroupError("no identity element")
    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            for c in range(n):
                if rows[ab][c] != rows[a][rows[b][c]]:
                    raise InvalidGroupError(
                        f"not associative at ({a},{b},{c})")
    inv = []
    for a in range(n):
        ia = next((b for b in range(n)
                   if rows[a][b] == e and rows[b][a] == e), None)
        if ia is None:
            raise InvalidGroupError(f"element {a} has no inverse")
        inv.append(ia)
    return GroupTable(n, tuple(rows), e, tuple(inv), name or f"order{n}")


def make_cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InvalidGroupError("cyclic group needs n >= 1")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return from_cayley_table(rows, name=f"Z{n}")


def make_klein_four() -> GroupTable:
    rows = [[i ^ j for j in range(4)] for i in range(4)]
    return from_cayley_table(rows, name="Z2xZ2")


def make_dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n; element r^i s^j is index i + n*j."""
    if n < 1:
        raise InvalidGroupError("dihedral group needs n >= 1")
    size = 2 * n

    def mul(a: int, b: int) -> int:
        r1, s1 = a % n, a // n
        r2, s2 = b % n, b // n
        r = (r1 + (r2 if s1 == 0 else -r2)) % n
        return r + n * ((s1 + s2) % 2)

    rows = [[mul(a, b) for b in range(size)] for a in range(size)]
    return from_cayley_table(rows, name=f"D{n}")


def make_symmetric(n: int) -> GroupTable:
    """Symmetric group S_n, n <= 4, on lexicographically sorted permutations."""
    if not 1 <= n <= 4:
        raise InvalidGroupError("symmetric group supported for 1 <= n <= 4")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    rows = [[index[tuple(p[q[i]] for i in range(n))] for q in perms]
            for p in perms]
    return from_cayley_table(rows, name=f"S{n}")


def make_quaternion8() -> GroupTable:
    """Quaternion group {+-1, +-i, +-j, +-k}; index = 2*unit + sign bit."""
    unit_mul = {
        (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
        (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
        (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
        (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
    }

    def mul(a: int, b: int) -> int:
        u, s = unit_mul[(a >> 1, b >> 1)]
        return (u << 1) | (s ^ (a & 1) ^ (b & 1))

    rows = [[mul(a, b) for b in range(8)] for a in range(8)]
    return from_cayley_table(rows, name="Q8")


def direct_product(g: GroupTable, h: GroupTable, name: str = "") -> GroupTable:
    """Direct product with index (a, b) -> a * h.order + b."""
    n, m = g.order, h.order
    rows = [[g.mult[a1][a2] * m + h.mult[b1][b2]
             for a2 in range(n) for b2 in range(m)]
            for a1 in range(n) for b1 in range(m)]
    return from_cayley_table(rows, name=name or f"{g.name}x{h.name}")


def catalog() -> list:
    """Catalog groups in a fixed, deterministic order (orders up to 24)."""
    groups = [make_cyclic(n) for n in range(1, 9)]
    groups += [
        make_klein_four(),
        make_symmetric(3),
        make_dihedral(4),
        make_quaternion8(),
        make_cyclic(12),
        make_dihedral(6),
        make_symmetric(4),
    ]
    groups.sort(key=lambda g: (g.order, g.name))
    return groups


def catalog_group(name: str) -> GroupTable:
    for g in catalog():
        if g.name == name:
            return g
    raise KeyError(f"unknown catalog group: {name}")


@dataclass(frozen=True)
class GroupMap:
    """A total (not necessarily structure-preserving) map G -> G."""
    group: GroupTable
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.group.order:
            raise ValueError("image tuple length must equal the group order")

    def __call__(self, g: int) -> int:
        return self.images[g]


def group_rb_check(f: GroupMap):
    """Check B(g)B(h) = B(B(g) h B(g)^-1 g) for all pairs.

    Returns (True, None) or (False, first failing (g, h)) in lexicographic
    order.
    """
    g = f.group
    m, inv, img = g.mult, g.inverse, f.images
    for a in range(g.order):
        ba = img[a]
        for b in range(g.order):
            t = m[m[m[ba][b]][inv[ba]]][a]
            if m[ba][img[b]] != img[t]:
                return False, (a, b)
    return True, None


class EnumerationCapError(ValueError):
    pass


def enumerate_group_rb(g: GroupTable, cap: int = DEFAULT_ENUM_CAP) -> list:
    """All group-level weight -1 operators on g, in lexicographic image order.

    Backtracking over non-identity elements with B(e) = e forced; every
    partial assignment is pruned by the pairs it already determines, so the
    |G|^|G| space is never materialized.
    """
    if g.order > cap:
        raise EnumerationCapError(
            f"group order {g.order} exceeds enumeration cap {cap}")
    n = g.order
    m, inv, e = g.mult, g.inverse, g.identity_index
    img: list = [None] * n
    img[e] = e
    todo = [i for i in range(n) if i != e]
    results = []

    def consistent() -> bool:
        assigned = [i for i in range(n) if img[i] is not None]
        for a in assigned:
            ba = img[a]
            for b in assigned:
                t = m[m[m[ba][b]][inv[ba]]][a]
                if img[t] is not None and m[ba][img[b]] != img[t]:
                    return False
        return True

    def backtrack(k: int):
        if k == len(todo):
            results.append(GroupMap(g, tuple(img)))
            return
        x = todo[k]
        for v in range(n):
            img[x] = v
            if consistent():
                backtrack(k + 1)
        img[x] = None

    backtrack(0)
    results.sort(key=lambda f: f.images)
    return results


def endomorphisms(g: GroupTable) -> list:
    """All group endomorphisms of g, as GroupMaps in lexicographic order."""
    n = g.order
    m, e = g.mult, g.identity_index
    img: list = [None] * n
    img[e] = e
    todo = [i for i in range(n) if i != e]
    results = []

    def consistent() -> bool:
        assigned = [i for i in range(n) if img[i] is not None]
        for a in assigned:
            for b in assigned:
                t = m[a][b]
                if img[t] is not None and m[img[a]][img[b]] != img[t]:
                    return False
        return True

    def backtrack(k: int):
        if k == len(todo):
            results.append(GroupMap(g, tuple(img)))
            return
        x = todo[k]
        for v in range(n):
            img[x] = v
            if consistent():
                backtrack(k + 1)
        img[x] = None

    backtrack(0)
    results.sort(key=lambda f: f.images)
    return results


def abelian_rb_equals_endomorphisms(g: GroupTable, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """For abelian g, the operator set should equal the endomorphism set."""
    if not g.is_abelian():
        raise ValueError("defined for abelian groups only")
    ops = {f.images for f in enumerate_group_rb(g, cap=cap)}
    ends = {f.images for f in endomorphisms(g)}
    return ops == ends


def companion_group_map(f: GroupMap) -> GroupMap:
    """Group-level companion g -> g * B(g^-1)."""
    g = f.group
    return GroupMap(g, tuple(g.mult[a][f.images[g.inverse[a]]]
                             for a in range(g.order)))


def automorphism_orbit_count(g: GroupTable, ops: Sequence[GroupMap]) -> int:
    """Number of orbits of the operator list under conjugation by Aut(g).

    Reported as metadata only; the full operator list is always used
    downstream.
    """
    autos = [f.images for f in endomorphisms(g)
             if sorted(f.images) == list(range(g.order))]
    op_set = {f.images for f in ops}
    seen = set()
    orbits = 0
    for f in ops:
        if f.images in seen:
            continue
        orbits += 1
        for a in autos:
            ainv = [0] * g.order
            for i, v in enumerate(a):
                ainv[v] = i
            conj = tuple(a[f.images[ainv[x]]] for x in range(g.order))
            if conj in op_set:
                seen.add(conj)
    return orbits
