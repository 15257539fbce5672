"""Structure-constant algebras, Lie/Jordan axiom checkers and the sl2 data."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import lcm
from typing import Mapping

from . import _backend
from .exactlin import Matrix, ZERO, to_scalar, vcomb, vsub
from .report import Check, Report
from .superspace import GradedMap, SuperSpace, sign


class BilinearMap:
    """Bilinear map left x right -> target given on basis pairs.

    ``table`` maps ``(i, j)`` to an iterable of ``(k, coeff)``; missing pairs
    are zero.  Every term must respect parity(k) = parity(i) + parity(j).
    """

    def __init__(self, left: SuperSpace, right: SuperSpace, target: SuperSpace,
                 table: Mapping | None = None, name: str = "product"):
        self.left, self.right, self.target, self.name = left, right, target, name
        clean = {}
        for (i, j), terms in (table or {}).items():
            acc = {}
            for k, c in terms:
                c = to_scalar(c)
                if not c:
                    continue
                if not (0 <= i < left.dim and 0 <= j < right.dim and 0 <= k < target.dim):
                    raise ValueError(f"{name}: index out of range in ({i}, {j}) -> {k}")
                if (left.parities[i] + right.parities[j] + target.parities[k]) & 1:
                    raise ValueError(
                        f"{name}: {left.labels[i]} * {right.labels[j]} -> "
                        f"{target.labels[k]} is not parity preserving")
                acc[k] = acc.get(k, ZERO) + c
            acc = tuple(sorted((k, c) for k, c in acc.items() if c))
            if acc:
                clean[(i, j)] = acc
        self.table = clean
        self._dense = {}

    @classmethod
    def zero(cls, left, right, target, name="product") -> "BilinearMap":
        return cls(left, right, target, {}, name)

    def basis(self, i: int, j: int) -> tuple:
        v = self._dense.get((i, j))
        if v is None:
            out = [ZERO] * self.target.dim
            for k, c in self.table.get((i, j), ()):
                out[k] = c
            v = self._dense[(i, j)] = tuple(out)
        return v

    def __call__(self, u, v) -> tuple:
        n = self.target.dim
        acc = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in self.table.get((i, j), ()):
                    acc[k] += a * b * c
        return tuple(acc)

    def is_zero(self) -> bool:
        return not self.table

    def entries(self):
        """(i, j, k, c) in lexicographic order."""
        for (i, j) in sorted(self.table):
            for k, c in self.table[(i, j)]:
                yield i, j, k, c

    def __eq__(self, other):
        return (isinstance(other, BilinearMap) and self.table == other.table
                and self.left == other.left and self.right == other.right
                and self.target == other.target)


class TrilinearMap:
    """Trilinear map V x V x V -> V on basis triples."""

    def __init__(self, space: SuperSpace, table: Mapping | None = None, name: str = "triple"):
        self.space, self.name = space, name
        clean = {}
        for (i, j, l), terms in (table or {}).items():
            acc = {}
            for k, c in terms:
                c = to_scalar(c)
                if not c:
                    continue
                if not all(0 <= x < space.dim for x in (i, j, l, k)):
                    raise ValueError(f"{name}: index out of range")
                p = space.parities
                if (p[i] + p[j] + p[l] + p[k]) & 1:
                    raise ValueError(
                        f"{name}: ({space.labels[i]}, {space.labels[j]}, {space.labels[l]}) -> "
                        f"{space.labels[k]} is not parity preserving")
                acc[k] = acc.get(k, ZERO) + c
            acc = tuple(sorted((k, c) for k, c in acc.items() if c))
            if acc:
                clean[(i, j, l)] = acc
        self.table = clean
        self._dense = {}

    def basis(self, i: int, j: int, l: int) -> tuple:
        v = self._dense.get((i, j, l))
        if v is None:
            out = [ZERO] * self.space.dim
            for k, c in self.table.get((i, j, l), ()):
                out[k] = c
            v = self._dense[(i, j, l)] = tuple(out)
        return v

    def __call__(self, u, v, w) -> tuple:
        acc = [ZERO] * self.space.dim
        nz = lambda x: [(i, a) for i, a in enumerate(x) if a]
        vs, ws = nz(v), nz(w)
        for i, a in nz(u):
            for j, b in vs:
                for l, c in ws:
                    for k, t in self.table.get((i, j, l), ()):
                        acc[k] += a * b * c * t
        return tuple(acc)

    def is_zero(self) -> bool:
        return not self.table

    def entries(self):
        for key in sorted(self.table):
            for k, c in self.table[key]:
                yield (*key, k, c)

    def __eq__(self, other):
        return (isinstance(other, TrilinearMap) and self.space == other.space
                and self.table == other.table)


class AlgebraTable:
    """An algebra on a super space: e_i * e_j = sum_k c[i][j][k] e_k."""

    def __init__(self, space: SuperSpace, table: Mapping | None = None, name: str = "product"):
        self.space = space
        self.product = BilinearMap(space, space, space, table, name)

    @classmethod
    def from_labels(cls, space: SuperSpace, entries: Mapping, name: str = "product") -> "AlgebraTable":
        """``entries`` maps ``(label, label)`` to ``{label: coeff}``."""
        table = {}
        for (a, b), res in entries.items():
            table[(space.index(a), space.index(b))] = [(space.index(k), c) for k, c in res.items()]
        return cls(space, table, name)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def table(self):
        return self.product.table

    def mul(self, u, v) -> tuple:
        return self.product(u, v)

    def basis_product(self, i: int, j: int) -> tuple:
        return self.product.basis(i, j)

    def ad(self, x) -> Matrix:
        """Left multiplication by the vector ``x`` as a matrix."""
        n = self.dim
        cols = [self.mul(x, self.space.basis_vector(j)) for j in range(n)]
        return Matrix.from_columns(cols, n) if n else Matrix(0, 0, [])

    def ad_basis(self, i: int) -> Matrix:
        n = self.dim
        return Matrix.from_columns([self.basis_product(i, j) for j in range(n)], n)

    def __eq__(self, other):
        return (isinstance(other, AlgebraTable) and self.space == other.space
                and self.product.table == other.product.table)

    def __repr__(self):
        return f"AlgebraTable(dim={self.dim}, nonzero={len(self.table)})"


# ---------------------------------------------------------------- Lie checks

def check_super_anticommutative(g: AlgebraTable) -> Report:
    chk = Check("super-anticommutativity", "[x,y] + (-1)^{|x||y|}[y,x] = 0")
    sp = g.space
    n = g.dim
    for i in range(n):
        for j in range(i, n):
            s = sign(sp.parities[i], sp.parities[j])
            u, v = g.basis_product(i, j), g.basis_product(j, i)
            res = tuple(a + s * b for a, b in zip(u, v))
            chk.record((sp.labels[i], sp.labels[j]), res, sp.labels)
    return Report([chk])


def _scaled_table(g: AlgebraTable):
    den = 1
    for terms in g.table.values():
        for _, c in terms:
            den = lcm(den, c.denominator)
    table = {key: [(k, int(c * den)) for k, c in terms] for key, terms in g.table.items()}
    return table, den


def jacobi_violations(g: AlgebraTable):
    """(i, j, k, dense residual) for every failing basis triple."""
    table, den = _scaled_table(g)
    n = g.dim
    out = []
    d2 = den * den
    for i, j, k, res in _backend.jacobi_residuals(n, list(g.space.parities), table):
        vec = [ZERO] * n
        for u, x in res.items():
            vec[u] = Fraction(x, d2)
        out.append((i, j, k, tuple(vec)))
    return out


def check_super_jacobi(g: AlgebraTable) -> Report:
    chk = Check("super-jacobi",
                "[[x,y],z] + (-1)^{|x|(|y|+|z|)}[[y,z],x] + (-1)^{|z|(|x|+|y|)}[[z,x],y] = 0")
    sp = g.space
    chk.tuples_checked = g.dim ** 3
    for i, j, k, res in jacobi_violations(g):
        chk.tuples_checked -= 1
        chk.record((sp.labels[i], sp.labels[j], sp.labels[k]), res, sp.labels)
    return Report([chk])


def check_lie(g: AlgebraTable) -> Report:
    return check_super_anticommutative(g).extend(check_super_jacobi(g))


def is_lie(g: AlgebraTable) -> bool:
    return check_lie(g).ok


# ------------------------------------------------------------- Jordan checks

def _check_supercommutative(j: AlgebraTable) -> Check:
    chk = Check("super-commutativity", "a.b - (-1)^{|a||b|} b.a = 0")
    sp = j.space
    for a in range(j.dim):
        for b in range(a, j.dim):
            s = sign(sp.parities[a], sp.parities[b])
            res = tuple(x - s * y for x, y in zip(j.basis_product(a, b), j.basis_product(b, a)))
            chk.record((sp.labels[a], sp.labels[b]), res, sp.labels)
    return chk


def check_super_jordan(j: AlgebraTable) -> Report:
    """Super commutativity and the 4-linear Jordan identity on basis quadruples."""
    rep = Report([_check_supercommutative(j)])
    chk = rep.add(Check(
        "jordan-4-linear",
        "(ab)(cd) + s(ac)(bd) + s(ad)(bc) = ((ab)c)d + s((ad)c)b + s((bd)c)a"))
    sp = j.space
    p = sp.parities
    m = j.mul
    P = j.basis_product
    n = j.dim
    for a, b, c, d in iproduct(range(n), repeat=4):
        pa, pb, pc, pd = p[a], p[b], p[c], p[d]
        ab, ac, ad, bc, bd, cd = P(a, b), P(a, c), P(a, d), P(b, c), P(b, d), P(c, d)
        ea, eb, ec, ed = (sp.basis_vector(x) for x in (a, b, c, d))
        lhs = vcomb([
            (1, m(ab, cd)),
            (sign(pb, pc), m(ac, bd)),
            (sign(pb, pd) * sign(pc, pd), m(ad, bc)),
        ], n)
        rhs = vcomb([
            (1, m(m(ab, ec), ed)),
            (sign(pb, pc) * sign(pb, pd) * sign(pc, pd), m(m(ad, ec), eb)),
            (sign(pa, pb) * sign(pa, pc) * sign(pa, pd) * sign(pc, pd), m(m(bd, ec), ea)),
        ], n)
        chk.record((sp.labels[a], sp.labels[b], sp.labels[c], sp.labels[d]), vsub(lhs, rhs), sp.labels)
    return rep


def jordan_angle(j: AlgebraTable, x, px: int, y, py: int, z) -> tuple:
    """<x,y>(z) = x.(y.z) - (-1)^{|x||y|} y.(x.z) for homogeneous x, y."""
    m = j.mul
    return vsub(m(x, m(y, z)), vcomb([(sign(px, py), m(y, m(x, z)))], j.dim))


def check_super_jordan_via_brackets(j: AlgebraTable) -> Report:
    """Super commutativity and <a.b,c> + s<c.a,b> + s<b.c,a> = 0 as operators."""
    rep = Report([_check_supercommutative(j)])
    chk = rep.add(Check(
        "jordan-angle-cyclic",
        "<a.b,c> + (-1)^{|c|(|a|+|b|)}<c.a,b> + (-1)^{|a|(|b|+|c|)}<b.c,a> = 0"))
    sp = j.space
    p = sp.parities
    P = j.basis_product
    n = j.dim
    for a, b, c, d in iproduct(range(n), repeat=4):
        pa, pb, pc = p[a], p[b], p[c]
        ea, eb, ec, ed = (sp.basis_vector(x) for x in (a, b, c, d))
        t1 = jordan_angle(j, P(a, b), pa + pb, ec, pc, ed)
        t2 = jordan_angle(j, P(c, a), pc + pa, eb, pb, ed)
        t3 = jordan_angle(j, P(b, c), pb + pc, ea, pa, ed)
        res = vcomb([(1, t1), (sign(pc, pa + pb), t2), (sign(pa, pb + pc), t3)], n)
        chk.record((sp.labels[a], sp.labels[b], sp.labels[c], sp.labels[d]), res, sp.labels)
    return rep


def check_special_supermodule(j: AlgebraTable, m: SuperSpace, bullet: BilinearMap) -> Report:
    """(a.b)*m = 1/2 (a*(b*m) + (-1)^{|a||b|} b*(a*m)) on basis triples."""
    chk = Check("special-supermodule",
                "(a.b)•m = 1/2 (a•(b•m) + (-1)^{|a||b|} b•(a•m))")
    if bullet.left != j.space or bullet.right != m or bullet.target != m:
        raise ValueError("bullet must map J x M -> M")
    jp = j.space.parities
    half = Fraction(1, 2)
    for a in range(j.dim):
        for b in range(j.dim):
            ab = j.basis_product(a, b)
            for r in range(m.dim):
                er = m.basis_vector(r)
                lhs = bullet(ab, er)
                t1 = bullet(j.space.basis_vector(a), bullet.basis(b, r))
                t2 = bullet(j.space.basis_vector(b), bullet.basis(a, r))
                res = vcomb([(1, lhs), (-half, t1), (-half * sign(jp[a], jp[b]), t2)], m.dim)
                chk.record((j.space.labels[a], j.space.labels[b], m.labels[r]), res, m.labels)
    return Report([chk])


# --------------------------------------------------------------- sl2 and V

SL2_LABELS = ("e", "h", "f")
V_LABELS = ("e1", "e2")


@dataclass(frozen=True)
class Sl2Forms:
    kappa: Matrix
    symmetrizer: dict
    det_form: Matrix


@dataclass(frozen=True)
class Sl2Data:
    """E, F, H as matrices acting on a target space."""
    space: SuperSpace
    E: Matrix
    F: Matrix
    H: Matrix

    def as_maps(self) -> tuple[GradedMap, GradedMap, GradedMap]:
        return tuple(GradedMap(self.space, self.space, x, 0) for x in (self.E, self.F, self.H))

    @classmethod
    def from_elements(cls, g: AlgebraTable, e, f, h) -> "Sl2Data":
        """E = ad(e) etc. for vectors e, f, h of g."""
        return cls(g.space, g.ad(e), g.ad(f), g.ad(h))


def sl2_fixtures():
    """The sl2 table on (e, h, f), its forms, and the natural action on V."""
    space = SuperSpace(SL2_LABELS, (0, 0, 0))
    sl2 = AlgebraTable.from_labels(space, {
        ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
        ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
        ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
    }, "bracket")
    # kappa(x, y) = 4 tr(xy)
    kappa = Matrix(3, 3, [[0, 0, 4], [0, 8, 0], [4, 0, 0]])
    half = Fraction(1, 2)
    symmetrizer = {
        (0, 0): (1, 0, 0),
        (0, 1): (0, -half, 0),
        (1, 0): (0, -half, 0),
        (1, 1): (0, 0, -1),
    }
    symmetrizer = {k: tuple(Fraction(x) for x in v) for k, v in symmetrizer.items()}
    det_form = Matrix(2, 2, [[0, 1], [-1, 0]])
    action = {
        "e": Matrix(2, 2, [[0, 1], [0, 0]]),
        "h": Matrix(2, 2, [[1, 0], [0, -1]]),
        "f": Matrix(2, 2, [[0, 0], [1, 0]]),
    }
    return sl2, Sl2Forms(kappa, symmetrizer, det_form), action


def check_sl2_relations(s: Sl2Data) -> Report:
    chk = Check("sl2-relations", "[H,E] = 2E, [H,F] = -2F, [E,F] = H")
    E, F, H = s.E, s.F, s.H
    lab = ("E", "F", "H")
    for name, lhs, rhs in (
        ("[H,E]=2E", H @ E - E @ H, E.scale(2)),
        ("[H,F]=-2F", H @ F - F @ H, F.scale(-2)),
        ("[E,F]=H", E @ F - F @ E, H),
    ):
        chk.record((name,), (lhs - rhs).flatten(),
                   [f"({i},{j})" for i in range(E.rows) for j in range(E.cols)])
    chk_even = Check("sl2-even", "E, F, H preserve parity")
    for nm, X in zip(lab, (E, F, H)):
        chk_even.tuples_checked += 1
        try:
            GradedMap(s.space, s.space, X, 0)
        except ValueError as exc:
            chk_even.fail((nm,), str(exc))
    return Report([chk, chk_even])


def check_derivation_action(g: AlgebraTable, ops: Mapping[str, Matrix]) -> Report:
    """Each operator D must satisfy D[x,y] = [Dx,y] + [x,Dy] (even D)."""
    chk = Check("sl2-derivations", "D[x,y] = [D x, y] + [x, D y]")
    sp = g.space
    n = g.dim
    for name, D in ops.items():
        Dcols = D.columns()
        for i in range(n):
            for j in range(n):
                lhs = D.apply(g.basis_product(i, j))
                rhs = vcomb([(1, g.mul(Dcols[i], sp.basis_vector(j))),
                             (1, g.mul(sp.basis_vector(i), Dcols[j]))], n)
                chk.record((name, sp.labels[i], sp.labels[j]), vsub(lhs, rhs), sp.labels)
    return Report([chk])
