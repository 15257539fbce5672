"""J-ternary superalgebras: axioms, inner operators and InnDer."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebras import (AlgebraTable, BilinearMap, TrilinearMap, check_special_supermodule,
                       check_super_jordan)
from .exactlin import Matrix, Subspace, ZERO, vcomb, vsub
from .report import Check, CheckFailed, Report
from .superspace import SuperSpace, sign

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class JTernaryData:
    """(J, M, ., •, ⋆, triple) with J an AlgebraTable and M a SuperSpace."""

    def __init__(self, J: AlgebraTable, M: SuperSpace, bullet: BilinearMap | None = None,
                 star: BilinearMap | None = None, triple: TrilinearMap | None = None):
        self.J, self.M = J, M
        self.bullet = bullet if bullet is not None else BilinearMap.zero(J.space, M, M, "bullet")
        self.star = star if star is not None else BilinearMap.zero(M, M, J.space, "star")
        self.triple = triple if triple is not None else TrilinearMap(M)
        if (self.bullet.left, self.bullet.right, self.bullet.target) != (J.space, M, M):
            raise ValueError("bullet must map J x M -> M")
        if (self.star.left, self.star.right, self.star.target) != (M, M, J.space):
            raise ValueError("star must map M x M -> J")
        if self.triple.space != M:
            raise ValueError("triple product must live on M")
        self.W = J.space.direct_sum(M)
        self._angle = {}
        self._partial = {}

    @property
    def nJ(self) -> int:
        return self.J.dim

    @property
    def nM(self) -> int:
        return self.M.dim

    @property
    def nW(self) -> int:
        return self.nJ + self.nM

    def jp(self, i: int) -> int:
        return self.J.space.parities[i]

    def mp(self, i: int) -> int:
        return self.M.parities[i]

    def ej(self, i: int) -> tuple:
        return self.J.space.basis_vector(i)

    def em(self, i: int) -> tuple:
        return self.M.basis_vector(i)

    def dot(self, a, b):
        return self.J.mul(a, b)

    def bul(self, a, m):
        return self.bullet(a, m)

    def st(self, m, n):
        return self.star(m, n)

    def tri(self, m, n, r):
        return self.triple(m, n, r)

    def join(self, a=None, m=None) -> tuple:
        a = a if a is not None else (ZERO,) * self.nJ
        m = m if m is not None else (ZERO,) * self.nM
        return tuple(a) + tuple(m)

    def split(self, w) -> tuple[tuple, tuple]:
        return tuple(w[:self.nJ]), tuple(w[self.nJ:])

    def apply_j(self, D: Matrix, a) -> tuple:
        out = D.apply(self.join(a=a))
        return out[:self.nJ]

    def apply_m(self, D: Matrix, m) -> tuple:
        out = D.apply(self.join(m=m))
        return out[self.nJ:]

    # basis inner operators, cached
    def angle_basis(self, a: int, b: int) -> Matrix:
        key = (a, b)
        if key not in self._angle:
            self._angle[key] = _angle_matrix(self, a, b)
        return self._angle[key]

    def partial_basis(self, m: int, n: int) -> Matrix:
        key = (m, n)
        if key not in self._partial:
            self._partial[key] = _partial_matrix(self, m, n)
        return self._partial[key]

    def angle(self, u, v) -> Matrix:
        """<u,v> extended bilinearly."""
        return mat_comb(((x * y, self.angle_basis(i, j))
                         for i, x in enumerate(u) if x for j, y in enumerate(v) if y), self.nW)

    def partial(self, u, v) -> Matrix:
        return mat_comb(((x * y, self.partial_basis(i, j))
                         for i, x in enumerate(u) if x for j, y in enumerate(v) if y), self.nW)

    def is_trivial_ops(self) -> bool:
        return self.J.product.is_zero() and self.bullet.is_zero() and self.star.is_zero()

    def __eq__(self, other):
        return (isinstance(other, JTernaryData) and self.J == other.J and self.M == other.M
                and self.bullet == other.bullet and self.star == other.star
                and self.triple == other.triple)


def mat_comb(terms, n: int) -> Matrix:
    acc = [[ZERO] * n for _ in range(n)]
    for c, A in terms:
        if not c:
            continue
        for i, row in enumerate(A.data):
            arow = acc[i]
            for j, x in enumerate(row):
                if x:
                    arow[j] += c * x
    return Matrix(n, n, acc)


def _angle_matrix(d: JTernaryData, a: int, b: int) -> Matrix:
    s = sign(d.jp(a), d.jp(b))
    ea, eb = d.ej(a), d.ej(b)
    cols = []
    for c in range(d.nJ):
        ec = d.ej(c)
        v = vsub(d.dot(ea, d.dot(eb, ec)), vcomb([(s, d.dot(eb, d.dot(ea, ec)))], d.nJ))
        cols.append(d.join(a=v))
    for m in range(d.nM):
        em = d.em(m)
        v = vcomb([(QUARTER, d.bul(ea, d.bul(eb, em))),
                   (-QUARTER * s, d.bul(eb, d.bul(ea, em)))], d.nM)
        cols.append(d.join(m=v))
    return Matrix.from_columns(cols, d.nW)


def _partial_matrix(d: JTernaryData, m: int, n: int) -> Matrix:
    pm, pn = d.mp(m), d.mp(n)
    em, en = d.em(m), d.em(n)
    cols = []
    for a in range(d.nJ):
        pa = d.jp(a)
        ea = d.ej(a)
        # 2 ∂(a) = (-1)^{|a|(|m|+|n|)} (a•m)⋆n - (-1)^{|a||n|} m⋆(a•n)
        v = vcomb([(HALF * sign(pa, pm + pn), d.st(d.bul(ea, em), en)),
                   (-HALF * sign(pa, pn), d.st(em, d.bul(ea, en)))], d.nJ)
        cols.append(d.join(a=v))
    mn = d.st(em, en)
    for r in range(d.nM):
        er = d.em(r)
        v = vcomb([(HALF, d.bul(mn, er)), (-1, d.tri(em, en, er))], d.nM)
        cols.append(d.join(m=v))
    return Matrix.from_columns(cols, d.nW)


@dataclass(frozen=True)
class InnerOperator:
    kind: str          # "angle" or "partial"
    args: tuple        # basis indices
    matrix: Matrix     # acting on J ⊕ M
    parity: int


def angle_op(d: JTernaryData, a: int, b: int) -> InnerOperator:
    return InnerOperator("angle", (a, b), d.angle_basis(a, b), (d.jp(a) + d.jp(b)) & 1)


def partial_op(d: JTernaryData, m: int, n: int) -> InnerOperator:
    return InnerOperator("partial", (m, n), d.partial_basis(m, n), (d.mp(m) + d.mp(n)) & 1)


def generators(d: JTernaryData) -> list[InnerOperator]:
    out = [angle_op(d, a, b) for a in range(d.nJ) for b in range(d.nJ)]
    out += [partial_op(d, m, n) for m in range(d.nM) for n in range(d.nM)]
    return out


def generator_label(d: JTernaryData, g: InnerOperator) -> str:
    if g.kind == "angle":
        a, b = g.args
        return f"<{d.J.space.labels[a]},{d.J.space.labels[b]}>"
    m, n = g.args
    return f"∂[{d.M.labels[m]},{d.M.labels[n]}]"


def _distinct_nonzero(d: JTernaryData):
    seen = set()
    for g in generators(d):
        if g.matrix.is_zero() or g.matrix in seen:
            continue
        seen.add(g.matrix)
        yield g


def _op_labels(d: JTernaryData):
    return [f"({r},{c})" for r in d.W.labels for c in d.W.labels]


# --------------------------------------------------------------- axioms

def check_jternary(d: JTernaryData) -> Report:
    """Residuals of SJT1-SJT6 on all basis tuples."""
    J, M = d.J.space, d.M
    jl, ml = J.labels, M.labels
    nJ, nM = d.nJ, d.nM
    jp, mp = J.parities, M.parities
    ej, em = d.ej, d.em
    rep = Report()

    c1 = rep.add(Check("SJT1", "a.(m⋆n) = 1/2((a•m)⋆n + (-1)^{|a||m|} m⋆(a•n))"))
    for a, m, n in iproduct(range(nJ), range(nM), range(nM)):
        lhs = d.dot(ej(a), d.star.basis(m, n))
        rhs = vcomb([(HALF, d.st(d.bullet.basis(a, m), em(n))),
                     (HALF * sign(jp[a], mp[m]), d.st(em(m), d.bullet.basis(a, n)))], nJ)
        c1.record((jl[a], ml[m], ml[n]), vsub(lhs, rhs), jl)

    c2 = rep.add(Check("SJT2", "a•(m,n,s) = (a•m,n,s) - (-1)^{|a||m|}(m,a•n,s) "
                               "+ (-1)^{|a|(|m|+|n|)}(m,n,a•s)"))
    for a, m, n, s in iproduct(range(nJ), range(nM), range(nM), range(nM)):
        lhs = d.bul(ej(a), d.triple.basis(m, n, s))
        rhs = vcomb([(1, d.tri(d.bullet.basis(a, m), em(n), em(s))),
                     (-sign(jp[a], mp[m]), d.tri(em(m), d.bullet.basis(a, n), em(s))),
                     (sign(jp[a], mp[m] + mp[n]), d.tri(em(m), em(n), d.bullet.basis(a, s)))], nM)
        c2.record((jl[a], ml[m], ml[n], ml[s]), vsub(lhs, rhs), ml)

    c3 = rep.add(Check("SJT3", "(m,n,s) = (-1)^{|m|(|n|+|s|)+|n||s|}(s,n,m) - (-1)^{|n||s|}(m⋆s)•n"))
    c4 = rep.add(Check("SJT4", "(m,n,s) = (-1)^{|m||n|}(n,m,s) + (m⋆n)•s"))
    for m, n, s in iproduct(range(nM), repeat=3):
        t = d.triple.basis(m, n, s)
        r3 = vcomb([(1, t),
                    (-sign(mp[m], mp[n] + mp[s]) * sign(mp[n], mp[s]), d.triple.basis(s, n, m)),
                    (sign(mp[n], mp[s]), d.bul(d.star.basis(m, s), em(n)))], nM)
        c3.record((ml[m], ml[n], ml[s]), r3, ml)
        r4 = vcomb([(1, t), (-sign(mp[m], mp[n]), d.triple.basis(n, m, s)),
                    (-1, d.bul(d.star.basis(m, n), em(s)))], nM)
        c4.record((ml[m], ml[n], ml[s]), r4, ml)

    c5 = rep.add(Check("SJT5", "(m,n,r)⋆s + (-1)^{|r|(|m|+|n|)} r⋆(m,n,s) "
                               "= (-1)^{|n|(|r|+|s|)} m⋆((r⋆s)•n)"))
    for m, n, r, s in iproduct(range(nM), repeat=4):
        res = vcomb([(1, d.st(d.triple.basis(m, n, r), em(s))),
                     (sign(mp[r], mp[m] + mp[n]), d.st(em(r), d.triple.basis(m, n, s))),
                     (-sign(mp[n], mp[r] + mp[s]), d.st(em(m), d.bul(d.star.basis(r, s), em(n))))],
                    nJ)
        c5.record((ml[m], ml[n], ml[r], ml[s]), res, jl)

    rep.add(_check_sjt6(d))
    return rep


def _check_sjt6(d: JTernaryData) -> Check:
    M = d.M
    ml, mp = M.labels, M.parities
    nM = d.nM
    em = d.em
    chk = Check("SJT6", "(m,n,(r,s,t)) = ((m,n,r),s,t) + (-1)^{|r|(|m|+|n|)+|m||n|}(r,(n,m,s),t) "
                        "+ (-1)^{(|m|+|n|)(|r|+|s|)}(r,s,(m,n,t))")
    T = d.triple.basis
    for m, n, r, s, t in iproduct(range(nM), repeat=5):
        # skip tuples on which every nested triple vanishes by the table's support
        if not (d.triple.table.get((r, s, t)) or d.triple.table.get((m, n, r))
                or d.triple.table.get((n, m, s)) or d.triple.table.get((m, n, t))):
            chk.tuples_checked += 1
            continue
        res = vcomb([(1, d.tri(em(m), em(n), T(r, s, t))),
                     (-1, d.tri(T(m, n, r), em(s), em(t))),
                     (-sign(mp[r], mp[m] + mp[n]) * sign(mp[m], mp[n]), d.tri(em(r), T(n, m, s), em(t))),
                     (-sign(mp[m] + mp[n], mp[r] + mp[s]), d.tri(em(r), em(s), T(m, n, t)))], nM)
        chk.record((ml[m], ml[n], ml[r], ml[s], ml[t]), res, ml)
    return chk


def check_star_antisymmetry(d: JTernaryData) -> Report:
    chk = Check("star-antisymmetry", "m⋆n + (-1)^{|m||n|} n⋆m = 0")
    ml, mp = d.M.labels, d.M.parities
    for m in range(d.nM):
        for n in range(m, d.nM):
            res = vcomb([(1, d.star.basis(m, n)), (sign(mp[m], mp[n]), d.star.basis(n, m))], d.nJ)
            chk.record((ml[m], ml[n]), res, d.J.space.labels)
    return Report([chk])


def validate(d: JTernaryData) -> Report:
    """Everything a J-ternary superalgebra must satisfy."""
    rep = check_super_jordan(d.J)
    rep.extend(check_special_supermodule(d.J, d.M, d.bullet))
    rep.extend(check_star_antisymmetry(d))
    rep.extend(check_jternary(d))
    return rep


def require_valid(d: JTernaryData) -> None:
    rep = validate(d)
    if not rep.ok:
        raise CheckFailed("input is not a J-ternary superalgebra (failing: "
                          + ", ".join(rep.failing()) + ")", rep)


def check_trivial_ops_symmetry(d: JTernaryData) -> Report:
    """With ., •, ⋆ zero the triple must be totally super symmetric and satisfy SJT6."""
    if not d.is_trivial_ops():
        raise ValueError("check_trivial_ops_symmetry needs ., • and ⋆ identically zero")
    ml, mp = d.M.labels, d.M.parities
    c12 = Check("triple-symmetry-12", "(m,n,s) = (-1)^{|m||n|}(n,m,s)")
    c23 = Check("triple-symmetry-23", "(m,n,s) = (-1)^{|n||s|}(m,s,n)")
    T = d.triple.basis
    for m, n, s in iproduct(range(d.nM), repeat=3):
        c12.record((ml[m], ml[n], ml[s]),
                   vcomb([(1, T(m, n, s)), (-sign(mp[m], mp[n]), T(n, m, s))], d.nM), ml)
        c23.record((ml[m], ml[n], ml[s]),
                   vcomb([(1, T(m, n, s)), (-sign(mp[n], mp[s]), T(m, s, n))], d.nM), ml)
    return Report([c12, c23, _check_sjt6(d)])


# ------------------------------------------------------------ InnDer

@dataclass
class InnDerAlgebra:
    data: JTernaryData
    span: Subspace
    generators: list
    generator_coords: list
    basis_ops: list = field(default_factory=list)
    parities: tuple = ()
    table: AlgebraTable | None = None
    closure: Check | None = None

    @property
    def dim(self) -> int:
        return self.span.dim

    def coordinates(self, op: Matrix) -> tuple:
        return self.span.coordinates(op.flatten())

    def operator(self, coords) -> Matrix:
        return mat_comb(zip(coords, self.basis_ops), self.data.nW)


def _op_parity(d: JTernaryData, A: Matrix) -> int:
    p = d.W.parities
    for i, row in enumerate(A.data):
        for j, x in enumerate(row):
            if x:
                return (p[i] + p[j]) & 1
    return 0


def commutator(A: Matrix, B: Matrix, pa: int, pb: int) -> Matrix:
    ab, ba = A @ B, B @ A
    return ab - ba if sign(pa, pb) == 1 else ab + ba


def innder_basis(d: JTernaryData) -> InnDerAlgebra:
    gens = generators(d)
    nW = d.nW
    span = Subspace.span([g.matrix.flatten() for g in gens], nW * nW)
    coords = [span.coordinates(g.matrix.flatten()) for g in gens]
    ops = [Matrix.unflatten(v, nW, nW) for v in span.vectors()]
    pars = tuple(_op_parity(d, A) for A in ops)
    labels = tuple(f"d{i}" for i in range(len(ops)))
    space = SuperSpace(labels, pars)
    closure = Check("innder-closure", "[D1,D2] = D1∘D2 - (-1)^{|D1||D2|} D2∘D1 lies in the span")
    table = {}
    for i, A in enumerate(ops):
        for j, B in enumerate(ops):
            C = commutator(A, B, pars[i], pars[j]).flatten()
            closure.tuples_checked += 1
            rem = span.reduce(C)
            if any(rem):
                closure.record((labels[i], labels[j]), rem, _op_labels(d))
                continue
            cs = tuple(C[p] for p in span.pivot_cols)
            table[(i, j)] = [(k, c) for k, c in enumerate(cs) if c]
    alg = AlgebraTable(space, table, "bracket") if closure.ok else None
    return InnDerAlgebra(d, span, gens, coords, ops, pars, alg, closure)


# ------------------------------------------------------ derivation laws

def check_derivation_laws(d: JTernaryData) -> Report:
    """Every inner generator super-derives ., •, ⋆ and the operation (r,s,t) -> ∂_{r,s}(t)."""
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    nJ, nM = d.nJ, d.nM
    rep = Report()
    cdot = rep.add(Check("derives-dot", "D(c.c') = D(c).c' + (-1)^{|D||c|} c.D(c')"))
    cbul = rep.add(Check("derives-bullet", "D(c•r) = D(c)•r + (-1)^{|D||c|} c•D(r)"))
    cst = rep.add(Check("derives-star", "D(r⋆s) = D(r)⋆s + (-1)^{|D||r|} r⋆D(s)"))
    cpar = rep.add(Check("derives-partial",
                         "D(∂_{r,s}(t)) = ∂_{D r,s}(t) + (-1)^{|D||r|}∂_{r,D s}(t) "
                         "+ (-1)^{|D|(|r|+|s|)}∂_{r,s}(D t)"))
    for g in _distinct_nonzero(d):
        D, pD = g.matrix, g.parity
        name = generator_label(d, g)
        Dj = [d.apply_j(D, d.ej(i)) for i in range(nJ)]
        Dm = [d.apply_m(D, d.em(i)) for i in range(nM)]
        for c, c2 in iproduct(range(nJ), repeat=2):
            lhs = d.apply_j(D, d.J.basis_product(c, c2))
            rhs = vcomb([(1, d.dot(Dj[c], d.ej(c2))), (sign(pD, jp[c]), d.dot(d.ej(c), Dj[c2]))], nJ)
            cdot.record((name, jl[c], jl[c2]), vsub(lhs, rhs), jl)
        for c, r in iproduct(range(nJ), range(nM)):
            lhs = d.apply_m(D, d.bullet.basis(c, r))
            rhs = vcomb([(1, d.bul(Dj[c], d.em(r))), (sign(pD, jp[c]), d.bul(d.ej(c), Dm[r]))], nM)
            cbul.record((name, jl[c], ml[r]), vsub(lhs, rhs), ml)
        for r, s in iproduct(range(nM), repeat=2):
            lhs = d.apply_j(D, d.star.basis(r, s))
            rhs = vcomb([(1, d.st(Dm[r], d.em(s))), (sign(pD, mp[r]), d.st(d.em(r), Dm[s]))], nJ)
            cst.record((name, ml[r], ml[s]), vsub(lhs, rhs), jl)
        for r, s in iproduct(range(nM), repeat=2):
            P = d.partial_basis(r, s)
            P1 = d.partial(Dm[r], d.em(s))
            P2 = d.partial(d.em(r), Dm[s])
            for t in range(nM):
                lhs = d.apply_m(D, d.apply_m(P, d.em(t)))
                rhs = vcomb([(1, d.apply_m(P1, d.em(t))),
                             (sign(pD, mp[r]), d.apply_m(P2, d.em(t))),
                             (sign(pD, mp[r] + mp[s]), d.apply_m(P, Dm[t]))], nM)
                cpar.record((name, ml[r], ml[s], ml[t]), vsub(lhs, rhs), ml)
    return rep


def check_bracket_closure(d: JTernaryData) -> Report:
    """[D,<a,b>] = <Da,b> + s<a,Db> and [D,∂_{m,n}] = ∂_{Dm,n} + s∂_{m,Dn}."""
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    nJ, nM = d.nJ, d.nM
    olab = _op_labels(d)
    rep = Report()
    ca = rep.add(Check("bracket-angle", "[D,<a,b>] = <D a,b> + (-1)^{|a||D|}<a,D b>"))
    cp = rep.add(Check("bracket-partial", "[D,∂_{m,n}] = ∂_{D m,n} + (-1)^{|m||D|}∂_{m,D n}"))
    for g in _distinct_nonzero(d):
        D, pD = g.matrix, g.parity
        name = generator_label(d, g)
        Dj = [d.apply_j(D, d.ej(i)) for i in range(nJ)]
        Dm = [d.apply_m(D, d.em(i)) for i in range(nM)]
        for a, b in iproduct(range(nJ), repeat=2):
            lhs = commutator(D, d.angle_basis(a, b), pD, jp[a] + jp[b])
            rhs = mat_comb([(1, d.angle(Dj[a], d.ej(b))),
                            (sign(jp[a], pD), d.angle(d.ej(a), Dj[b]))], d.nW)
            ca.record((name, jl[a], jl[b]), (lhs - rhs).flatten(), olab)
        for m, n in iproduct(range(nM), repeat=2):
            lhs = commutator(D, d.partial_basis(m, n), pD, mp[m] + mp[n])
            rhs = mat_comb([(1, d.partial(Dm[m], d.em(n))),
                            (sign(mp[m], pD), d.partial(d.em(m), Dm[n]))], d.nW)
            cp.record((name, ml[m], ml[n]), (lhs - rhs).flatten(), olab)
    return rep


def check_angle_partial_compat(d: JTernaryData) -> Report:
    chk = Check("angle-partial", "2<a,m⋆n> = -∂_{a•m,n} + (-1)^{|a||m|}∂_{m,a•n}")
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    olab = _op_labels(d)
    for a, m, n in iproduct(range(d.nJ), range(d.nM), range(d.nM)):
        lhs = d.angle(d.ej(a), d.star.basis(m, n)).scale(2)
        rhs = mat_comb([(-1, d.partial(d.bullet.basis(a, m), d.em(n))),
                        (sign(jp[a], mp[m]), d.partial(d.em(m), d.bullet.basis(a, n)))], d.nW)
        chk.record((jl[a], ml[m], ml[n]), (lhs - rhs).flatten(), olab)
    return Report([chk])


def check_operator_symmetry(d: JTernaryData) -> Report:
    """<a,b> = -(-1)^{|a||b|}<b,a> and ∂_{m,n} = (-1)^{|m||n|}∂_{n,m} as matrices."""
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    olab = _op_labels(d)
    ca = Check("angle-antisymmetry", "<a,b> + (-1)^{|a||b|}<b,a> = 0")
    cp = Check("partial-symmetry", "∂_{m,n} - (-1)^{|m||n|}∂_{n,m} = 0")
    for a, b in iproduct(range(d.nJ), repeat=2):
        res = mat_comb([(1, d.angle_basis(a, b)), (sign(jp[a], jp[b]), d.angle_basis(b, a))], d.nW)
        ca.record((jl[a], jl[b]), res.flatten(), olab)
    for m, n in iproduct(range(d.nM), repeat=2):
        res = mat_comb([(1, d.partial_basis(m, n)), (-sign(mp[m], mp[n]), d.partial_basis(n, m))],
                       d.nW)
        cp.record((ml[m], ml[n]), res.flatten(), olab)
    return Report([ca, cp])
