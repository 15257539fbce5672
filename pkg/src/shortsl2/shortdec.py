"""Short sl2 decompositions, the extraction of J-ternary data and φ."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebras import (AlgebraTable, BilinearMap, Sl2Data, TrilinearMap, check_derivation_action,
                       check_lie, check_special_supermodule, check_super_jordan, check_sl2_relations)
from .constructions import AssembledLie, _assemble, _check_ternary_morphism, tag
from .exactlin import Matrix, Subspace, ZERO, eigenspace, kernel, rank, vcomb, vsub
from .jternary import JTernaryData, commutator, require_valid
from .report import Check, CheckFailed, Report
from .superspace import GradedMap, SuperSpace, sign

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class NotShort(CheckFailed):
    """The sl2 action has weights outside -2..2 or does not account for g."""


@dataclass
class ShortDecomposition:
    g: AlgebraTable
    sl2: Sl2Data
    J_space: Subspace
    M_space: Subspace
    D_space: Subspace
    report: Report = field(default_factory=Report)

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.J_space.dim, self.M_space.dim, self.D_space.dim)

    def parities(self, sub: Subspace) -> tuple:
        return tuple(self.g.space.vector_parity(v) for v in sub.vectors())

    def labels(self, sub: Subspace) -> tuple:
        return tuple(self.g.space.labels[p] for p in sub.pivot_cols)


def decompose(g: AlgebraTable, sl2: Sl2Data, force: bool = False) -> ShortDecomposition:
    """Weight decomposition of g under sl2.

    With ``force`` the Lie and derivation checks are still recorded in the
    report but do not stop the decomposition; this is for locating which
    structural identity a corrupted table breaks.
    """
    rep = check_lie(g)
    if not rep.ok and not force:
        raise CheckFailed("not a Lie superalgebra", rep)
    rel = check_sl2_relations(sl2)
    rep.extend(rel)
    if not rel.ok:
        raise CheckFailed("not an sl2 action", rep)
    der = check_derivation_action(g, {"E": sl2.E, "F": sl2.F, "H": sl2.H})
    rep.extend(der)
    if not der.ok and not force:
        raise CheckFailed("not an sl2 action", rep)
    n = g.dim
    H = sl2.H
    eig = {lam: eigenspace(H, lam) for lam in range(-2, 3)}
    total = sum(s.dim for s in eig.values())
    chk = rep.add(Check("weights", "H is diagonalizable with eigenvalues in {-2,...,2}"))
    chk.tuples_checked = 1
    if total != n:
        extra = [lam for lam in range(-n - 2, n + 3)
                 if abs(lam) > 2 and eigenspace(H, lam).dim]
        msg = (f"not short: H has eigenvalue {max(extra)}" if extra
               else "not short: H is not diagonalizable over the integers")
        chk.fail(("H",), msg)
        raise NotShort(msg, rep)
    J, M = eig[2], eig[1]
    D = eig[0].intersect(kernel(sl2.E))
    chk = rep.add(Check("dimension-accounting", "dim g = 3 dim J + 2 dim M + dim D"))
    chk.tuples_checked = 1
    if 3 * J.dim + 2 * M.dim + D.dim != n:
        msg = f"not short: 3*{J.dim} + 2*{M.dim} + {D.dim} != {n}"
        chk.fail(("dims",), msg)
        raise NotShort(msg, rep)
    return ShortDecomposition(g, sl2, J, M, D, rep)


# ------------------------------------------------------------ extraction

@dataclass
class ExtractedOps:
    data: JTernaryData
    angle_g: dict           # (i, j) -> vector of g inside D_space
    partial_g: dict
    J_vectors: list
    M_vectors: list
    D_vectors: list


def _coords(sub: Subspace, v, what: str) -> tuple:
    try:
        return sub.coordinates(v)
    except ValueError:
        raise CheckFailed(f"decomposition inconsistent: {what} leaves its block") from None


def extract_ternary(dec: ShortDecomposition, j_labels=None, m_labels=None) -> ExtractedOps:
    g, F = dec.g, dec.sl2.F
    br = g.mul
    Jv, Mv, Dv = dec.J_space.vectors(), dec.M_space.vectors(), dec.D_space.vectors()
    Fj = [F.apply(a) for a in Jv]
    Fm = [F.apply(m) for m in Mv]
    jl = tuple(j_labels or dec.labels(dec.J_space))
    ml = tuple(m_labels or dec.labels(dec.M_space))
    if len(set(jl + ml)) < len(jl) + len(ml):
        # pivots of J and M can share a column after a change of basis
        jl = tuple(f"a{i}" for i in range(len(jl)))
        ml = tuple(f"m{i}" for i in range(len(ml)))
    J = SuperSpace(jl, dec.parities(dec.J_space))
    M = SuperSpace(ml, dec.parities(dec.M_space))
    Js, Ms, Ds = dec.J_space, dec.M_space, dec.D_space

    def terms(v):
        return [(k, c) for k, c in enumerate(v) if c]

    dot, bul, st, tri, ang, par = {}, {}, {}, {}, {}, {}
    for i, j in iproduct(range(J.dim), repeat=2):
        dot[(i, j)] = terms(_coords(Js, [HALF * x for x in br(Jv[i], Fj[j])], "a.b"))
        v = vcomb([(QUARTER, br(Fj[i], Fj[j]))], g.dim)
        _coords(Ds, v, "<a,b>")
        ang[(i, j)] = v
    for i, m in iproduct(range(J.dim), range(M.dim)):
        bul[(i, m)] = terms(_coords(Ms, br(Jv[i], Fm[m]), "a•m"))
    for m, n in iproduct(range(M.dim), repeat=2):
        st[(m, n)] = terms(_coords(Js, br(Mv[m], Mv[n]), "m⋆n"))
        v = vcomb([(HALF, br(Mv[m], Fm[n])), (-HALF, br(Fm[m], Mv[n]))], g.dim)
        _coords(Ds, v, "∂_{m,n}")
        par[(m, n)] = v
        mfn = br(Mv[m], Fm[n])
        for r in range(M.dim):
            tri[(m, n, r)] = terms(_coords(Ms, [-x for x in br(mfn, Mv[r])], "(m,n,r)"))
    jt = AlgebraTable(J, {k: v for k, v in dot.items() if v}, "dot")
    data = JTernaryData(jt, M,
                        BilinearMap(J, M, M, {k: v for k, v in bul.items() if v}, "bullet"),
                        BilinearMap(M, M, J, {k: v for k, v in st.items() if v}, "star"),
                        TrilinearMap(M, {k: v for k, v in tri.items() if v}))
    return ExtractedOps(data, ang, par, Jv, Mv, Dv)


# ---------------------------------------------------------- verification

class _Ctx:
    """Coordinates of the extracted operations and of D acting on J ⊕ M."""

    def __init__(self, dec: ShortDecomposition, ops: ExtractedOps):
        self.dec, self.ops, self.d = dec, ops, ops.data
        g = dec.g
        self.g = g
        self.br = g.mul
        self.nJ, self.nM, self.nD = dec.dims
        self.jp = self.d.J.space.parities
        self.mp = self.d.M.parities
        self.dp = dec.parities(dec.D_space)
        self.jv, self.mv, self.dv = ops.J_vectors, ops.M_vectors, ops.D_vectors

    def jvec(self, coords):
        return self.dec.J_space.from_coordinates(coords)

    def mvec(self, coords):
        return self.dec.M_space.from_coordinates(coords)

    def dact_j(self, dvec, a):
        return self.dec.J_space.coordinates(self.br(dvec, self.jvec(a)))

    def dact_m(self, dvec, m):
        return self.dec.M_space.coordinates(self.br(dvec, self.mvec(m)))

    def angle(self, a, b):
        """<a,b>_g for coordinate vectors a, b (bilinear extension)."""
        out = [ZERO] * self.g.dim
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        for k, z in enumerate(self.ops.angle_g[(i, j)]):
                            if z:
                                out[k] += x * y * z
        return out

    def partial(self, m, n):
        out = [ZERO] * self.g.dim
        for i, x in enumerate(m):
            if x:
                for j, y in enumerate(n):
                    if y:
                        for k, z in enumerate(self.ops.partial_g[(i, j)]):
                            if z:
                                out[k] += x * y * z
        return out


def _e(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def verify_short_structure(dec: ShortDecomposition, ops: ExtractedOps) -> Report:
    c = _Ctx(dec, ops)
    d = c.d
    g = c.g
    gl = g.space.labels
    jl, ml = d.J.space.labels, d.M.labels
    dl = [f"D{i}" for i in range(c.nD)]
    nJ, nM, nD = c.nJ, c.nM, c.nD
    jp, mp, dp = c.jp, c.mp, c.dp
    br = c.br
    rep = Report()
    rep.extend(check_super_jordan(d.J))
    rep.extend(check_special_supermodule(d.J, d.M, d.bullet))

    chk = rep.add(Check("weight-three", "[J, M] = 0"))
    for i, m in iproduct(range(nJ), range(nM)):
        chk.record((jl[i], ml[m]), br(c.jv[i], c.mv[m]), gl)
    chk = rep.add(Check("bullet-two-forms", "[a, f m] = -[f a, m]"))
    F = dec.sl2.F
    for i, m in iproduct(range(nJ), range(nM)):
        chk.record((jl[i], ml[m]), vcomb([(1, br(c.jv[i], F.apply(c.mv[m]))),
                                          (1, br(F.apply(c.jv[i]), c.mv[m]))], g.dim), gl)

    ej = [_e(nJ, i) for i in range(nJ)]
    em = [_e(nM, i) for i in range(nM)]
    dot, bul, st = d.dot, d.bul, d.st

    # D super-derives the operations and acts through its bracket
    cdot = rep.add(Check("D-derives-dot", "d(a.b) = d(a).b + (-1)^{|d||a|} a.d(b)"))
    cbul = rep.add(Check("D-derives-bullet", "d(a•m) = d(a)•m + (-1)^{|d||a|} a•d(m)"))
    cst = rep.add(Check("D-derives-star", "d(m⋆n) = d(m)⋆n + (-1)^{|d||m|} m⋆d(n)"))
    cbr = rep.add(Check("D-bracket-action", "[d1,d2](x) = d1(d2(x)) - (-1)^{|d1||d2|} d2(d1(x))"))
    cda = rep.add(Check("D-angle", "[d,<a,b>] = <d a,b> + (-1)^{|d||a|}<a,d b>"))
    cdp = rep.add(Check("D-partial", "[d,∂_{m,n}] = ∂_{d m,n} + (-1)^{|d||m|}∂_{m,d n}"))
    for k in range(nD):
        dv, pd = c.dv[k], dp[k]
        for a, b in iproduct(range(nJ), repeat=2):
            lhs = c.dact_j(dv, dot(ej[a], ej[b]))
            rhs = vcomb([(1, dot(c.dact_j(dv, ej[a]), ej[b])),
                         (sign(pd, jp[a]), dot(ej[a], c.dact_j(dv, ej[b])))], nJ)
            cdot.record((dl[k], jl[a], jl[b]), vsub(lhs, rhs), jl)
            lhs = br(dv, c.angle(ej[a], ej[b]))
            rhs = vcomb([(1, c.angle(c.dact_j(dv, ej[a]), ej[b])),
                         (sign(pd, jp[a]), c.angle(ej[a], c.dact_j(dv, ej[b])))], g.dim)
            cda.record((dl[k], jl[a], jl[b]), vsub(lhs, rhs), gl)
        for a, m in iproduct(range(nJ), range(nM)):
            lhs = c.dact_m(dv, bul(ej[a], em[m]))
            rhs = vcomb([(1, bul(c.dact_j(dv, ej[a]), em[m])),
                         (sign(pd, jp[a]), bul(ej[a], c.dact_m(dv, em[m])))], nM)
            cbul.record((dl[k], jl[a], ml[m]), vsub(lhs, rhs), ml)
        for m, n in iproduct(range(nM), repeat=2):
            lhs = c.dact_j(dv, st(em[m], em[n]))
            rhs = vcomb([(1, st(c.dact_m(dv, em[m]), em[n])),
                         (sign(pd, mp[m]), st(em[m], c.dact_m(dv, em[n])))], nJ)
            cst.record((dl[k], ml[m], ml[n]), vsub(lhs, rhs), jl)
            lhs = br(dv, c.partial(em[m], em[n]))
            rhs = vcomb([(1, c.partial(c.dact_m(dv, em[m]), em[n])),
                         (sign(pd, mp[m]), c.partial(em[m], c.dact_m(dv, em[n])))], g.dim)
            cdp.record((dl[k], ml[m], ml[n]), vsub(lhs, rhs), gl)
        for k2 in range(nD):
            dv2, pd2 = c.dv[k2], dp[k2]
            b12 = br(dv, dv2)
            s = sign(pd, pd2)
            for a in range(nJ):
                lhs = c.dact_j(b12, ej[a])
                rhs = vcomb([(1, c.dact_j(dv, c.dact_j(dv2, ej[a]))),
                             (-s, c.dact_j(dv2, c.dact_j(dv, ej[a])))], nJ)
                cbr.record((dl[k], dl[k2], jl[a]), vsub(lhs, rhs), jl)
            for m in range(nM):
                lhs = c.dact_m(b12, em[m])
                rhs = vcomb([(1, c.dact_m(dv, c.dact_m(dv2, em[m]))),
                             (-s, c.dact_m(dv2, c.dact_m(dv, em[m])))], nM)
                cbr.record((dl[k], dl[k2], ml[m]), vsub(lhs, rhs), ml)

    # the inner elements and how they act
    caj = rep.add(Check("angle-on-J", "[<a,b>,c] = a.(b.c) - (-1)^{|a||b|} b.(a.c)"))
    cam = rep.add(Check("angle-on-M", "4[<a,b>,m] = a•(b•m) - (-1)^{|a||b|} b•(a•m)"))
    for a, b in iproduct(range(nJ), repeat=2):
        s = sign(jp[a], jp[b])
        A = c.angle(ej[a], ej[b])
        for x in range(nJ):
            lhs = c.dact_j(A, ej[x])
            rhs = vcomb([(1, dot(ej[a], dot(ej[b], ej[x]))), (-s, dot(ej[b], dot(ej[a], ej[x])))], nJ)
            caj.record((jl[a], jl[b], jl[x]), vsub(lhs, rhs), jl)
        for m in range(nM):
            lhs = [4 * x for x in c.dact_m(A, em[m])]
            rhs = vcomb([(1, bul(ej[a], bul(ej[b], em[m]))), (-s, bul(ej[b], bul(ej[a], em[m])))], nM)
            cam.record((jl[a], jl[b], ml[m]), vsub(lhs, rhs), ml)

    ccy = rep.add(Check("angle-cyclic", "<a.b,c> + (-1)^{|c|(|a|+|b|)}<c.a,b> + (-1)^{|a|(|b|+|c|)}<b.c,a> = 0"))
    for a, b, x in iproduct(range(nJ), repeat=3):
        pa, pb, pc = jp[a], jp[b], jp[x]
        v = vcomb([(1, c.angle(dot(ej[a], ej[b]), ej[x])),
                   (sign(pc, pa + pb), c.angle(dot(ej[x], ej[a]), ej[b])),
                   (sign(pa, pb + pc), c.angle(dot(ej[b], ej[x]), ej[a]))], g.dim)
        ccy.record((jl[a], jl[b], jl[x]), v, gl)

    cap = rep.add(Check("angle-partial", "2<a,m⋆n> = -∂_{a•m,n} + (-1)^{|a||m|}∂_{m,a•n}"))
    cpj = rep.add(Check("partial-on-J",
                        "2[∂_{m,n},a] = (-1)^{|a|(|m|+|n|)}(a•m)⋆n - (-1)^{|a||n|} m⋆(a•n)"))
    ccp = rep.add(Check("dot-star", "a.(m⋆n) = 1/2((a•m)⋆n + (-1)^{|a||m|} m⋆(a•n))"))
    for a, m, n in iproduct(range(nJ), range(nM), range(nM)):
        pa, pm, pn = jp[a], mp[m], mp[n]
        lhs = [2 * x for x in c.angle(ej[a], st(em[m], em[n]))]
        rhs = vcomb([(-1, c.partial(bul(ej[a], em[m]), em[n])),
                     (sign(pa, pm), c.partial(em[m], bul(ej[a], em[n])))], g.dim)
        cap.record((jl[a], ml[m], ml[n]), vsub(lhs, rhs), gl)
        lhs = [2 * x for x in c.dact_j(c.partial(em[m], em[n]), ej[a])]
        rhs = vcomb([(sign(pa, pm + pn), st(bul(ej[a], em[m]), em[n])),
                     (-sign(pa, pn), st(em[m], bul(ej[a], em[n])))], nJ)
        cpj.record((ml[m], ml[n], jl[a]), vsub(lhs, rhs), jl)
        lhs = dot(ej[a], st(em[m], em[n]))
        rhs = vcomb([(HALF, st(bul(ej[a], em[m]), em[n])),
                     (HALF * sign(pa, pm), st(em[m], bul(ej[a], em[n])))], nJ)
        ccp.record((jl[a], ml[m], ml[n]), vsub(lhs, rhs), jl)

    # super Jacobi on (e1⊗m, e2⊗n, e1⊗r) read off the e1 component
    cpm = rep.add(Check(
        "partial-on-M",
        "∂_{m,n}r - (-1)^{|m|(|n|+|r|)}∂_{n,r}m = 1/2(m⋆n)•r "
        "+ 1/2(-1)^{|m|(|n|+|r|)}(n⋆r)•m - (-1)^{|r|(|m|+|n|)}(r⋆m)•n"))
    for m, n, r in iproduct(range(nM), repeat=3):
        pm, pn, pr = mp[m], mp[n], mp[r]
        s1, s2 = sign(pm, pn + pr), sign(pr, pm + pn)
        lhs = vcomb([(1, c.dact_m(c.partial(em[m], em[n]), em[r])),
                     (-s1, c.dact_m(c.partial(em[n], em[r]), em[m]))], nM)
        rhs = vcomb([(HALF, bul(st(em[m], em[n]), em[r])),
                     (HALF * s1, bul(st(em[n], em[r]), em[m])),
                     (-s2, bul(st(em[r], em[m]), em[n]))], nM)
        cpm.record((ml[m], ml[n], ml[r]), vsub(lhs, rhs), ml)

    # brackets among the inner elements
    caa = rep.add(Check("angle-angle", "[<a,b>,<c,d>] = <<a,b>(c),d> + (-1)^{(|a|+|b|)|c|}<c,<a,b>(d)>"))
    for a, b, x, y in iproduct(range(nJ), repeat=4):
        A = c.angle(ej[a], ej[b])
        lhs = br(A, c.angle(ej[x], ej[y]))
        rhs = vcomb([(1, c.angle(c.dact_j(A, ej[x]), ej[y])),
                     (sign(jp[a] + jp[b], jp[x]), c.angle(ej[x], c.dact_j(A, ej[y])))], g.dim)
        caa.record((jl[a], jl[b], jl[x], jl[y]), vsub(lhs, rhs), gl)
    cab = rep.add(Check("angle-partial-bracket",
                        "[<a,b>,∂_{m,n}] = ∂_{<a,b>(m),n} + (-1)^{(|a|+|b|)|m|}∂_{m,<a,b>(n)}"))
    cba = rep.add(Check("partial-angle-bracket",
                        "[∂_{m,n},<a,b>] = <∂_{m,n}(a),b> + (-1)^{(|m|+|n|)|a|}<a,∂_{m,n}(b)>"))
    for a, b, m, n in iproduct(range(nJ), range(nJ), range(nM), range(nM)):
        A, P = c.angle(ej[a], ej[b]), c.partial(em[m], em[n])
        lhs = br(A, P)
        rhs = vcomb([(1, c.partial(c.dact_m(A, em[m]), em[n])),
                     (sign(jp[a] + jp[b], mp[m]), c.partial(em[m], c.dact_m(A, em[n])))], g.dim)
        cab.record((jl[a], jl[b], ml[m], ml[n]), vsub(lhs, rhs), gl)
        lhs = br(P, A)
        rhs = vcomb([(1, c.angle(c.dact_j(P, ej[a]), ej[b])),
                     (sign(mp[m] + mp[n], jp[a]), c.angle(ej[a], c.dact_j(P, ej[b])))], g.dim)
        cba.record((ml[m], ml[n], jl[a], jl[b]), vsub(lhs, rhs), gl)
    cpp = rep.add(Check("partial-partial",
                        "[∂_{m,n},∂_{r,s}] = ∂_{∂_{m,n}(r),s} + (-1)^{(|m|+|n|)|r|}∂_{r,∂_{m,n}(s)}"))
    for m, n, r, s_ in iproduct(range(nM), repeat=4):
        P = c.partial(em[m], em[n])
        lhs = br(P, c.partial(em[r], em[s_]))
        rhs = vcomb([(1, c.partial(c.dact_m(P, em[r]), em[s_])),
                     (sign(mp[m] + mp[n], mp[r]), c.partial(em[r], c.dact_m(P, em[s_])))], g.dim)
        cpp.record((ml[m], ml[n], ml[r], ml[s_]), vsub(lhs, rhs), gl)

    # derivation relation as endomorphisms of J ⊕ M
    cdr = rep.add(Check(
        "derivation-relation",
        "d(X_{u,v}(x)) = X_{d u,v}(x) + (-1)^{|d||u|}X_{u,d v}(x) + (-1)^{|d|(|u|+|v|)}X_{u,v}(d x)"))
    targets = [("J", x) for x in range(nJ)] + [("M", x) for x in range(nM)]

    def act(elem, tgt):
        kind, x = tgt
        return c.dact_j(elem, ej[x]) if kind == "J" else c.dact_m(elem, em[x])

    def act_vec(elem, kind, v):
        return c.dact_j(elem, v) if kind == "J" else c.dact_m(elem, v)

    pairs = ([("angle", a, b) for a, b in iproduct(range(nJ), repeat=2)]
             + [("partial", m, n) for m, n in iproduct(range(nM), repeat=2)])
    for k in range(nD):
        dv, pd = c.dv[k], dp[k]
        for kind, u, v in pairs:
            if kind == "angle":
                X = lambda p, q: c.angle(p, q)
                eu, ev, pu, pv = ej[u], ej[v], jp[u], jp[v]
                du, dvv = c.dact_j(dv, eu), c.dact_j(dv, ev)
                lab = (dl[k], f"<{jl[u]},{jl[v]}>")
            else:
                X = lambda p, q: c.partial(p, q)
                eu, ev, pu, pv = em[u], em[v], mp[u], mp[v]
                du, dvv = c.dact_m(dv, eu), c.dact_m(dv, ev)
                lab = (dl[k], f"∂_{{{ml[u]},{ml[v]}}}")
            Xuv = X(eu, ev)
            for tgt in targets:
                tk, tx = tgt
                n_t = nJ if tk == "J" else nM
                lhs = act_vec(dv, tk, act(Xuv, tgt))
                dx = act(dv, tgt)
                rhs = vcomb([(1, act(X(du, ev), tgt)),
                             (sign(pd, pu), act(X(eu, dvv), tgt)),
                             (sign(pd, pu + pv), act_vec(Xuv, tk, dx))], n_t)
                names = jl if tk == "J" else ml
                cdr.record(lab + (names[tx],), vsub(lhs, rhs), names)

    # the dictionary reproduces every bracket of g
    rep.add(_dictionary_check(dec, ops, c))
    return rep


def _d_block(dec: ShortDecomposition, ops: ExtractedOps, c: _Ctx):
    """Labels, parities, table and action of D_space for the shared assembly."""
    d = ops.data
    Ds = dec.D_space
    nD = Ds.dim
    table = {}
    for i, j in iproduct(range(nD), repeat=2):
        v = _coords(Ds, c.br(c.dv[i], c.dv[j]), "[d,d']")
        terms = [(k, x) for k, x in enumerate(v) if x]
        if terms:
            table[(i, j)] = terms
    acts = []
    for i in range(nD):
        cols = [tuple(c.dact_j(c.dv[i], d.ej(a))) + (ZERO,) * d.nM for a in range(d.nJ)]
        cols += [(ZERO,) * d.nJ + tuple(c.dact_m(c.dv[i], d.em(m))) for m in range(d.nM)]
        acts.append(Matrix.from_columns(cols, d.nW))
    labels = tuple(f"D{i}" for i in range(nD))
    return labels, c.dp, table, acts


def _psi_columns(dec: ShortDecomposition, ops: ExtractedOps, nblock: int, dcols) -> list:
    """Images of e⊗a, h⊗a, f⊗a, e1⊗m, e2⊗m and then the invariant block."""
    F = dec.sl2.F
    cols = []
    cols += [tuple(a) for a in ops.J_vectors]
    cols += [tuple(-x for x in F.apply(a)) for a in ops.J_vectors]
    cols += [tuple(-HALF * x for x in F.apply(F.apply(a))) for a in ops.J_vectors]
    cols += [tuple(m) for m in ops.M_vectors]
    cols += [tuple(F.apply(m)) for m in ops.M_vectors]
    cols += list(dcols)
    return cols


def _morphism_check(cid: str, ident: str, src: AlgebraTable, dst: AlgebraTable, mat: Matrix) -> Check:
    chk = Check(cid, ident)
    sl = src.space.labels
    for i, j in iproduct(range(src.dim), repeat=2):
        lhs = mat.apply(src.basis_product(i, j))
        rhs = dst.mul(mat.col(i), mat.col(j))
        chk.record((sl[i], sl[j]), vsub(lhs, rhs), dst.space.labels)
    return chk


def _dictionary_check(dec: ShortDecomposition, ops: ExtractedOps, c: _Ctx) -> Check:
    d = ops.data
    labels, pars, table, acts = _d_block(dec, ops, c)
    Ds = dec.D_space
    alg = _assemble(d, labels, pars, table, acts,
                    lambda a, b: Ds.coordinates(ops.angle_g[(a, b)]),
                    lambda m, n: Ds.coordinates(ops.partial_g[(m, n)]), "short")
    cols = _psi_columns(dec, ops, alg.dim, [tuple(v) for v in ops.D_vectors])
    mat = Matrix.from_columns(cols, dec.g.dim) if cols else Matrix(dec.g.dim, 0, [[]] * dec.g.dim)
    chk = _morphism_check("dictionary", "brackets of sl2⊗J ⊕ V⊗M ⊕ D given by the extracted operations",
                          alg.table, dec.g, mat)
    if cols and rank(mat) != dec.g.dim:
        chk.fail(("ψ",), f"block map has rank {rank(mat)} < {dec.g.dim}")
    return chk


# ------------------------------------------------------------------- φ

def phi_map(g: AlgebraTable, sl2: Sl2Data):
    dec = decompose(g, sl2)
    ops = extract_ternary(dec)
    require_valid(ops.data)
    G = tag(ops.data)
    bs = G.dblock
    dcols = []
    for r in bs.reps:
        kind, i, j = bs.ambient.unpack(r)
        dcols.append(tuple(ops.angle_g[(i, j)] if kind == "J" else ops.partial_g[(i, j)]))
    cols = _psi_columns(dec, ops, G.dim, dcols)
    n = g.dim
    mat = Matrix.from_columns(cols, n) if cols else Matrix(n, 0, [[] for _ in range(n)])
    phi = GradedMap(G.table.space, g.space, mat, 0)
    rep = Report()
    rep.add(_morphism_check("phi-morphism", "φ[X,Y] = [φX, φY]", G.table, g, mat))
    chk = rep.add(Check("phi-sl2-equivariant", "φ∘X = X∘φ for X = E, F, H"))
    flat = [f"({i},{j})" for i in range(n) for j in range(G.dim)]
    for nm, Xs, Xg in (("E", G.sl2.E, sl2.E), ("F", G.sl2.F, sl2.F), ("H", G.sl2.H, sl2.H)):
        chk.record((nm,), (mat @ Xs - Xg @ mat).flatten() if G.dim else (), flat)
    r = rank(mat) if G.dim else 0
    blk = 3 * dec.dims[0] + 2 * dec.dims[1]
    chk = rep.add(Check("phi-rank", "rank bookkeeping"))
    chk.tuples_checked = 1
    chk.note = (f"rank {r}; source dim {G.dim}; target dim {n}; "
                f"injective={r == G.dim}; surjective={r == n}")
    if r < blk:
        chk.fail(("blocks",), "φ is not injective on sl2⊗J ⊕ V⊗M")
    if n - r != dec.dims[2] - (r - blk):
        chk.fail(("D",), "cokernel of φ is not dim D minus the rank on the invariant block")
    return G, phi, rep


def roundtrip_check(d: JTernaryData) -> Report:
    G = tag(d)
    dec = decompose(G.table, G.sl2)
    ops = extract_ternary(dec)
    rep = Report()
    chk = rep.add(Check("roundtrip-dims", "T(TAG(J,M)) has the dimensions of (J,M)"))
    chk.tuples_checked = 1
    if dec.dims[:2] != (d.nJ, d.nM):
        chk.fail(("dims",), f"extracted {dec.dims[:2]}, expected {(d.nJ, d.nM)}")
        return rep
    e1 = [dec.J_space.coordinates(G.table.space.basis_vector(G.index_sj(0, a))) for a in range(d.nJ)]
    e2 = [dec.M_space.coordinates(G.table.space.basis_vector(G.index_vm(0, m))) for m in range(d.nM)]
    eta1 = Matrix.from_columns(e1, d.nJ) if d.nJ else Matrix(0, 0, [])
    eta2 = Matrix.from_columns(e2, d.nM) if d.nM else Matrix(0, 0, [])
    chk = rep.add(Check("roundtrip-bijective", "a ↦ e⊗a and m ↦ e1⊗m are bijective"))
    chk.tuples_checked = 1
    if (d.nJ and rank(eta1) != d.nJ) or (d.nM and rank(eta2) != d.nM):
        chk.fail(("η",), "identification maps are not bijective")
    rep.extend(_check_ternary_morphism(eta1, eta2, d, ops.data))
    return rep
