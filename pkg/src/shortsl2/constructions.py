"""TKK, the relation space Rˢ, the quotient 𝔅ˢ and TAG.

TKK and TAG share ``_assemble``; they differ only in the invariant block
(InnDer or 𝔅ˢ), its bracket and how it acts on J ⊕ M.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .algebras import AlgebraTable, Sl2Data, check_super_jacobi, sl2_fixtures, SL2_LABELS, V_LABELS
from .exactlin import Matrix, Subspace, ZERO, kernel, quotient_complement, rank, vcomb, vsub
from .jternary import (InnDerAlgebra, JTernaryData, commutator, innder_basis, mat_comb,
                       require_valid)
from .report import Check, CheckFailed, Report
from .superspace import GradedMap, SuperSpace, sign

HALF = Fraction(1, 2)


# ------------------------------------------------------------ assembly

@dataclass
class AssembledLie:
    table: AlgebraTable
    block_layout: dict
    provenance: str
    data: JTernaryData
    dblock: object
    sl2: Sl2Data

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.data.nJ, self.data.nM, self.block_layout["D"][1] - self.block_layout["D"][0])

    def index_sj(self, x: int, a: int) -> int:
        return x * self.data.nJ + a

    def index_vm(self, v: int, m: int) -> int:
        return 3 * self.data.nJ + v * self.data.nM + m

    def index_d(self, i: int) -> int:
        return 3 * self.data.nJ + 2 * self.data.nM + i


def _assemble(d: JTernaryData, dlabels, dparities, dtable, dact, angle_d, partial_d,
              provenance: str) -> AssembledLie:
    sl2, forms, vact = sl2_fixtures()
    nJ, nM, nD = d.nJ, d.nM, len(dlabels)
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    o1 = 3 * nJ
    o2 = o1 + 2 * nM
    labels = ([f"{x}⊗{a}" for x in SL2_LABELS for a in jl]
              + [f"{v}⊗{m}" for v in V_LABELS for m in ml] + list(dlabels))
    parities = list(jp) * 3 + list(mp) * 2 + list(dparities)
    space = SuperSpace(labels, parities)
    n = space.dim
    sj = lambda x, a: x * nJ + a
    vm = lambda v, m: o1 + v * nM + m
    dd = lambda i: o2 + i
    vact_m = [vact[x] for x in SL2_LABELS]
    brk = {}

    def put(i, j, vec):
        terms = [(k, c) for k, c in enumerate(vec) if c]
        if terms:
            brk[(i, j)] = terms

    def embed_sj(x_coeffs, jvec):
        out = [ZERO] * n
        for x, cx in enumerate(x_coeffs):
            if cx:
                for a, ca in enumerate(jvec):
                    if ca:
                        out[sj(x, a)] += cx * ca
        return out

    def embed_vm(v_coeffs, mvec):
        out = [ZERO] * n
        for v, cv in enumerate(v_coeffs):
            if cv:
                for m, cm in enumerate(mvec):
                    if cm:
                        out[vm(v, m)] += cv * cm
        return out

    def embed_d(dvec, scale=1):
        out = [ZERO] * n
        for i, c in enumerate(dvec):
            if c:
                out[dd(i)] += scale * c
        return out

    ones = [sl2.space.basis_vector(i) for i in range(3)]
    vones = [(Fraction(1), ZERO), (ZERO, Fraction(1))]
    ang = {(a, b): angle_d(a, b) for a in range(nJ) for b in range(nJ)}
    par = {(m, r): partial_d(m, r) for m in range(nM) for r in range(nM)}

    # sl2⊗J with sl2⊗J
    for x, y in iproduct(range(3), repeat=2):
        xy = sl2.basis_product(x, y)
        kap = forms.kappa[x, y]
        for a, b in iproduct(range(nJ), repeat=2):
            vec = embed_sj(xy, d.J.basis_product(a, b))
            if kap:
                vec = vcomb([(1, vec), (HALF * kap, embed_d(ang[(a, b)]))], n)
            put(sj(x, a), sj(y, b), vec)
    # sl2⊗J with V⊗M, both orders
    for x, v in iproduct(range(3), range(2)):
        xv = vact_m[x].col(v)
        for a, m in iproduct(range(nJ), range(nM)):
            vec = embed_vm(xv, d.bullet.basis(a, m))
            put(sj(x, a), vm(v, m), vec)
            s = -sign(jp[a], mp[m])
            put(vm(v, m), sj(x, a), [s * c for c in vec])
    # V⊗M with V⊗M
    for v, w in iproduct(range(2), repeat=2):
        sym = forms.symmetrizer[(v, w)]
        det = forms.det_form[v, w]
        for m, r in iproduct(range(nM), repeat=2):
            vec = embed_sj(sym, d.star.basis(m, r))
            if det:
                vec = vcomb([(1, vec), (det, embed_d(par[(m, r)]))], n)
            put(vm(v, m), vm(w, r), vec)
    # D with everything
    for i in range(nD):
        A = dact[i]
        pi = dparities[i]
        for x, a in iproduct(range(3), range(nJ)):
            vec = embed_sj(ones[x], d.apply_j(A, d.ej(a)))
            put(dd(i), sj(x, a), vec)
            s = -sign(pi, jp[a])
            put(sj(x, a), dd(i), [s * c for c in vec])
        for v, m in iproduct(range(2), range(nM)):
            vec = embed_vm(vones[v], d.apply_m(A, d.em(m)))
            put(dd(i), vm(v, m), vec)
            s = -sign(pi, mp[m])
            put(vm(v, m), dd(i), [s * c for c in vec])
    for (i, j), terms in dtable.items():
        brk[(dd(i), dd(j))] = [(dd(k), c) for k, c in terms]

    table = AlgebraTable(space, brk, "bracket")
    layout = {"sl2⊗J": (0, o1), "V⊗M": (o1, o2), "D": (o2, n)}
    return AssembledLie(table, layout, provenance, d, None, block_sl2(d, space, nD))


def block_sl2(d: JTernaryData, space: SuperSpace, nD: int) -> Sl2Data:
    """The sl2 action x ↦ [x,-] on sl2⊗J ⊕ V⊗M, zero on the invariant block."""
    sl2, _, vact = sl2_fixtures()
    nJ, nM = d.nJ, d.nM
    n = space.dim
    ops = []
    for x in range(3):
        cols = []
        for y in range(3):
            xy = sl2.basis_product(x, y)
            for a in range(nJ):
                col = [ZERO] * n
                for k, c in enumerate(xy):
                    if c:
                        col[k * nJ + a] = c
                cols.append(col)
        X = vact[SL2_LABELS[x]]
        for v in range(2):
            for m in range(nM):
                col = [ZERO] * n
                for w in range(2):
                    if X[w, v]:
                        col[3 * nJ + w * nM + m] = X[w, v]
                cols.append(col)
        for _ in range(nD):
            cols.append([ZERO] * n)
        ops.append(Matrix.from_columns(cols, n) if n else Matrix(0, 0, []))
    E, H, F = ops
    return Sl2Data(space, E, F, H)


def _require_lie(alg: AssembledLie) -> AssembledLie:
    rep = check_super_jacobi(alg.table)
    if not rep.ok:
        raise CheckFailed(f"assembled {alg.provenance} fails the super Jacobi identity", rep)
    return alg


# ------------------------------------------------------------------ TKK

def tkk(d: JTernaryData, check: bool = True) -> AssembledLie:
    if check:
        require_valid(d)
    inn = innder_basis(d)
    if not inn.closure.ok:
        raise CheckFailed("inner derivations are not closed under the bracket",
                          Report([inn.closure]))
    labels = [f"d{i}" for i in range(inn.dim)]
    alg = _assemble(d, labels, inn.parities, inn.table.table, inn.basis_ops,
                    lambda a, b: inn.coordinates(d.angle_basis(a, b)),
                    lambda m, n: inn.coordinates(d.partial_basis(m, n)), "TKK")
    alg.dblock = inn
    return _require_lie(alg) if check else alg


# ---------------------------------------------------------- relations

class TensorAmbient:
    """J⊗J ⊕ M⊗M with the J block first."""

    def __init__(self, d: JTernaryData):
        self.d = d
        nJ, nM = d.nJ, d.nM
        jl, ml = d.J.space.labels, d.M.labels
        jp, mp = d.J.space.parities, d.M.parities
        self.nJ, self.nM = nJ, nM
        self.off = nJ * nJ
        self.dim = nJ * nJ + nM * nM
        self.space = SuperSpace(
            tuple(f"{a}⊗{b}" for a in jl for b in jl) + tuple(f"{m}⊗{n}" for m in ml for n in ml),
            tuple(p + q for p in jp for q in jp) + tuple(p + q for p in mp for q in mp))

    def jj(self, u, v) -> list:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        out[i * self.nJ + j] += a * b
        return out

    def mm(self, u, v) -> list:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        out[self.off + i * self.nM + j] += a * b
        return out

    def unpack(self, k: int) -> tuple[str, int, int]:
        if k < self.off:
            return ("J",) + divmod(k, self.nJ)
        return ("M",) + divmod(k - self.off, self.nM)

    def basis_op(self, k: int) -> Matrix:
        """φ of the k-th tensor: <a,b> or ∂_{m,n}."""
        kind, i, j = self.unpack(k)
        return self.d.angle_basis(i, j) if kind == "J" else self.d.partial_basis(i, j)

    def phi(self, t) -> Matrix:
        return mat_comb(((c, self.basis_op(k)) for k, c in enumerate(t) if c), self.d.nW)

    def act(self, D: Matrix, pD: int) -> Matrix:
        """D(z1⊗z2) = D z1 ⊗ z2 + (-1)^{|D||z1|} z1 ⊗ D z2 as a matrix on the tensors."""
        d = self.d
        cols = []
        for k in range(self.dim):
            kind, i, j = self.unpack(k)
            if kind == "J":
                e1, e2 = d.ej(i), d.ej(j)
                col = vcomb([(1, self.jj(d.apply_j(D, e1), e2)),
                             (sign(pD, d.jp(i)), self.jj(e1, d.apply_j(D, e2)))], self.dim)
            else:
                e1, e2 = d.em(i), d.em(j)
                col = vcomb([(1, self.mm(d.apply_m(D, e1), e2)),
                             (sign(pD, d.mp(i)), self.mm(e1, d.apply_m(D, e2)))], self.dim)
            cols.append(col)
        return Matrix.from_columns(cols, self.dim) if self.dim else Matrix(0, 0, [])


def relation_generators(d: JTernaryData) -> list[tuple[str, tuple, list]]:
    """(family, labels, vector) for every generator of Rˢ on basis tuples."""
    T = TensorAmbient(d)
    nJ, nM = d.nJ, d.nM
    jl, ml = d.J.space.labels, d.M.labels
    jp, mp = d.J.space.parities, d.M.parities
    ej, em = d.ej, d.em
    out = []
    for a, b in iproduct(range(nJ), repeat=2):
        v = vcomb([(1, T.jj(ej(a), ej(b))), (sign(jp[a], jp[b]), T.jj(ej(b), ej(a)))], T.dim)
        out.append(("I_ab", (jl[a], jl[b]), v))
    for m, n in iproduct(range(nM), repeat=2):
        v = vcomb([(1, T.mm(em(m), em(n))), (-sign(mp[m], mp[n]), T.mm(em(n), em(m)))], T.dim)
        out.append(("I_mn", (ml[m], ml[n]), v))
    P = d.J.basis_product
    for a, b, c in iproduct(range(nJ), repeat=3):
        v = vcomb([(sign(jp[a], jp[c]), T.jj(P(a, b), ej(c))),
                   (sign(jp[a], jp[b]), T.jj(P(b, c), ej(a))),
                   (sign(jp[b], jp[c]), T.jj(P(c, a), ej(b)))], T.dim)
        out.append(("I_abc", (jl[a], jl[b], jl[c]), v))
    for a, m, n in iproduct(range(nJ), range(nM), range(nM)):
        v = vcomb([(1, T.mm(d.bullet.basis(a, m), em(n))),
                   (-sign(jp[a], mp[m]), T.mm(em(m), d.bullet.basis(a, n))),
                   (-2 * sign(jp[a], mp[m] + mp[n]), T.jj(d.star.basis(m, n), ej(a)))], T.dim)
        out.append(("I_amn", (jl[a], ml[m], ml[n]), v))
    for m, n, r, s in iproduct(range(nM), repeat=4):
        Pmn, Prs = d.partial_basis(m, n), d.partial_basis(r, s)
        pmn, prs = mp[m] + mp[n], mp[r] + mp[s]
        v = vcomb([(1, T.mm(d.apply_m(Pmn, em(r)), em(s))),
                   (sign(pmn, mp[r]), T.mm(em(r), d.apply_m(Pmn, em(s)))),
                   (sign(pmn, prs), T.mm(d.apply_m(Prs, em(m)), em(n))),
                   (sign(prs, mp[n]), T.mm(em(m), d.apply_m(Prs, em(n))))], T.dim)
        out.append(("I_mnrs", (ml[m], ml[n], ml[r], ml[s]), v))
    return out


def rs_relations(d: JTernaryData) -> Subspace:
    T = TensorAmbient(d)
    return Subspace.span([v for _, _, v in relation_generators(d)], T.dim)


# ------------------------------------------------------------------ 𝔅ˢ

@dataclass
class BsAlgebra:
    data: JTernaryData
    ambient: TensorAmbient
    relations: Subspace
    reps: list
    projection: Matrix
    table: AlgebraTable
    phi: Matrix                 # rows: InnDer coordinates, columns: classes
    innder: InnDerAlgebra
    class_ops: list             # φ(class) acting on J ⊕ M
    report: Report = field(default_factory=Report)

    @property
    def dim(self) -> int:
        return len(self.reps)

    @property
    def space(self) -> SuperSpace:
        return self.table.space

    def project(self, t) -> tuple:
        if not self.reps:
            return ()
        return self.projection.apply(t)

    def class_jj(self, a: int, b: int) -> tuple:
        return self.project(self.ambient.jj(self.data.ej(a), self.data.ej(b)))

    def class_mm(self, m: int, n: int) -> tuple:
        return self.project(self.ambient.mm(self.data.em(m), self.data.em(n)))

    def rep_vector(self, i: int) -> list:
        v = [ZERO] * self.ambient.dim
        v[self.reps[i]] = Fraction(1)
        return v

    def action_on_classes(self, D: Matrix, pD: int) -> Matrix:
        """The induced action of an inner derivation on 𝔅ˢ."""
        k = self.dim
        A = self.ambient.act(D, pD)
        cols = [self.project(A.apply(self.rep_vector(j))) for j in range(k)]
        return Matrix.from_columns(cols, k) if k else Matrix(0, 0, [])


def bs_quotient(d: JTernaryData, check: bool = True) -> BsAlgebra:
    if check:
        require_valid(d)
    T = TensorAmbient(d)
    R = rs_relations(d)
    inn = innder_basis(d)
    rep = Report()
    olabels = [f"({r},{c})" for r in d.W.labels for c in d.W.labels]

    c_kill = rep.add(Check("phi-kills-relations", "φ(Rˢ) = 0"))
    for i, r in enumerate(R.vectors()):
        c_kill.record((f"rel{i}",), T.phi(r).flatten(), olabels)

    # the action of every inner derivation must preserve Rˢ, otherwise the
    # bracket would depend on the chosen lift of its second argument
    c_stab = rep.add(Check("relations-stable", "D(Rˢ) ⊆ Rˢ for every inner derivation D"))
    acts = [T.act(B, p) for B, p in zip(inn.basis_ops, inn.parities)]
    for bi, A in enumerate(acts):
        for i, r in enumerate(R.vectors()):
            c_stab.record((f"d{bi}", f"rel{i}"), R.reduce(A.apply(r)), T.space.labels)
    if not (c_kill.ok and c_stab.ok):
        raise CheckFailed("𝔅ˢ bracket is not well defined on this input", rep)

    reps, P = quotient_complement(R)
    k = len(reps)
    labels = tuple("{" + T.space.labels[r] + "}" for r in reps)
    pars = tuple(T.space.parities[r] for r in reps)
    space = SuperSpace(labels, pars)
    class_ops = [T.basis_op(r) for r in reps]
    table = {}
    for i in range(k):
        A = T.act(class_ops[i], pars[i])
        for j in range(k):
            t = [ZERO] * T.dim
            t[reps[j]] = Fraction(1)
            v = P.apply(A.apply(t))
            terms = [(x, c) for x, c in enumerate(v) if c]
            if terms:
                table[(i, j)] = terms
    alg = AlgebraTable(space, table, "bracket")
    phi_cols = [inn.coordinates(op) for op in class_ops]
    phi = Matrix.from_columns(phi_cols, inn.dim) if k else Matrix(inn.dim, 0, [[] for _ in range(inn.dim)])
    bs = BsAlgebra(d, T, R, reps, P, alg, phi, inn, class_ops, rep)

    c_surj = rep.add(Check("phi-surjective", "rank φ = dim InnDer"))
    c_surj.tuples_checked = 1
    if (rank(phi) if k else 0) != inn.dim:
        c_surj.fail(("φ",), f"rank {rank(phi) if k else 0} < {inn.dim}")

    c_mor = rep.add(Check("phi-morphism", "φ([p,q]) = [φ p, φ q]"))
    ilab = [f"d{i}" for i in range(inn.dim)]
    for i, j in iproduct(range(k), repeat=2):
        lhs = phi.apply(alg.basis_product(i, j)) if inn.dim else ()
        rhs = inn.table.mul(phi.col(i), phi.col(j)) if inn.dim else ()
        c_mor.record((labels[i], labels[j]), vsub(lhs, rhs), ilab)

    c_cent = rep.add(Check("kernel-central", "[ker φ, 𝔅ˢ] = 0"))
    ker = kernel(phi) if k else Subspace.zero(0)
    for zi, z in enumerate(ker.vectors()):
        for j in range(k):
            ej = space.basis_vector(j)
            c_cent.record((f"ker{zi}", labels[j]), alg.mul(z, ej), labels)
            c_cent.record((labels[j], f"ker{zi}"), alg.mul(ej, z), labels)
    if check and not rep.ok:
        raise CheckFailed("𝔅ˢ failed its structural checks", rep)
    return bs


# ---------------------------------------------------- quotient from a module

@dataclass
class QuotientFromModule:
    module_space: SuperSpace
    lie: AlgebraTable
    action: list                # action[i]: matrix of the i-th Lie basis element on the module
    lam: Matrix                 # module -> lie


@dataclass
class QuotientResult:
    A: Subspace
    table: AlgebraTable
    mu: Matrix
    reps: list
    projection: Matrix
    report: Report


def _rho(q: QuotientFromModule, x) -> Matrix:
    n = q.module_space.dim
    return mat_comb(((c, q.action[i]) for i, c in enumerate(x) if c), n)


def quotient_from_module(q: QuotientFromModule) -> QuotientResult:
    M, g = q.module_space, q.lie
    n = M.dim
    gp = g.space.parities
    mp = M.parities
    rep = Report()

    c_mod = rep.add(Check("module-action", "ρ([x,y]) = ρ(x)ρ(y) - (-1)^{|x||y|}ρ(y)ρ(x)"))
    lab = [f"({r},{c})" for r in M.labels for c in M.labels]
    for i, j in iproduct(range(g.dim), repeat=2):
        lhs = _rho(q, g.basis_product(i, j))
        rhs = commutator(q.action[i], q.action[j], gp[i], gp[j])
        c_mod.record((g.space.labels[i], g.space.labels[j]), (lhs - rhs).flatten(), lab)
    if not c_mod.ok:
        raise CheckFailed("not a module action", rep)

    c_eq = rep.add(Check("lambda-equivariant", "λ(x·m) = [x, λ(m)]"))
    for i, j in iproduct(range(g.dim), range(n)):
        lhs = q.lam.apply(q.action[i].col(j))
        rhs = g.mul(g.space.basis_vector(i), q.lam.col(j))
        c_eq.record((g.space.labels[i], M.labels[j]), vsub(lhs, rhs), g.space.labels)
    if not c_eq.ok:
        raise CheckFailed("not a module morphism", rep)

    gens = []
    for i, j in iproduct(range(n), repeat=2):
        u = _rho(q, q.lam.col(i)).col(j)
        v = _rho(q, q.lam.col(j)).col(i)
        gens.append(vcomb([(1, u), (sign(mp[i], mp[j]), v)], n))
    A = Subspace.span(gens, n)

    c_in = rep.add(Check("A-in-kernel", "λ(A) = 0"))
    for i, v in enumerate(A.vectors()):
        c_in.record((f"A{i}",), q.lam.apply(v), g.space.labels)
    c_ik = rep.add(Check("image-times-kernel", "λ(M)·Ker λ ⊆ A"))
    kl = kernel(q.lam) if n else Subspace.zero(0)
    for i, z in iproduct(range(n), range(kl.dim)):
        c_ik.record((M.labels[i], f"ker{z}"), A.reduce(_rho(q, q.lam.col(i)).apply(kl.vectors()[z])),
                    M.labels)

    reps, P = quotient_complement(A)
    k = len(reps)
    qspace = SuperSpace(tuple(M.labels[r] for r in reps), tuple(mp[r] for r in reps))
    table = {}
    for i, j in iproduct(range(k), repeat=2):
        v = P.apply(_rho(q, q.lam.col(reps[i])).col(reps[j]))
        terms = [(x, c) for x, c in enumerate(v) if c]
        if terms:
            table[(i, j)] = terms
    Q = AlgebraTable(qspace, table, "bracket")
    mu = (Matrix.from_columns([q.lam.col(r) for r in reps], g.dim) if k
          else Matrix(g.dim, 0, [[] for _ in range(g.dim)]))
    rep.extend(check_super_jacobi(Q))
    c_mu = rep.add(Check("mu-morphism", "μ([p,q]) = [μ p, μ q]"))
    for i, j in iproduct(range(k), repeat=2):
        lhs = mu.apply(Q.basis_product(i, j))
        rhs = g.mul(mu.col(i), mu.col(j))
        c_mu.record((qspace.labels[i], qspace.labels[j]), vsub(lhs, rhs), g.space.labels)
    c_c = rep.add(Check("mu-kernel-central", "[ker μ, Q] = 0"))
    if k:
        for zi, z in enumerate(kernel(mu).vectors()):
            for j in range(k):
                ej = qspace.basis_vector(j)
                c_c.record((f"ker{zi}", qspace.labels[j]), Q.mul(z, ej), qspace.labels)
    return QuotientResult(A, Q, mu, reps, P, rep)


def bs_module_input(bs: BsAlgebra) -> QuotientFromModule:
    """𝔅ˢ as an InnDer-module with λ = φ."""
    inn = bs.innder
    action = [bs.action_on_classes(B, p) for B, p in zip(inn.basis_ops, inn.parities)]
    return QuotientFromModule(bs.space, inn.table, action, bs.phi)


# ------------------------------------------------------------------ TAG

def tag(d: JTernaryData, check: bool = True) -> AssembledLie:
    bs = bs_quotient(d, check=check)
    alg = _assemble(d, bs.space.labels, bs.space.parities, bs.table.table, bs.class_ops,
                    bs.class_jj, bs.class_mm, "TAG")
    alg.dblock = bs
    return _require_lie(alg) if check else alg


# ------------------------------------------------------------ morphisms

def _check_ternary_morphism(e1: Matrix, e2: Matrix, src: JTernaryData, dst: JTernaryData) -> Report:
    rep = Report()
    jl, ml = src.J.space.labels, src.M.labels
    c1 = rep.add(Check("eta-jordan", "η1(a.b) = η1(a).η1(b)"))
    for a, b in iproduct(range(src.nJ), repeat=2):
        lhs = e1.apply(src.J.basis_product(a, b))
        rhs = dst.dot(e1.col(a), e1.col(b))
        c1.record((jl[a], jl[b]), vsub(lhs, rhs), dst.J.space.labels)
    c2 = rep.add(Check("eta-bullet", "η2(a•m) = η1(a)•η2(m)"))
    for a, m in iproduct(range(src.nJ), range(src.nM)):
        lhs = e2.apply(src.bullet.basis(a, m))
        rhs = dst.bul(e1.col(a), e2.col(m))
        c2.record((jl[a], ml[m]), vsub(lhs, rhs), dst.M.labels)
    c3 = rep.add(Check("eta-star", "η1(m⋆n) = η2(m)⋆η2(n)"))
    for m, n in iproduct(range(src.nM), repeat=2):
        lhs = e1.apply(src.star.basis(m, n))
        rhs = dst.st(e2.col(m), e2.col(n))
        c3.record((ml[m], ml[n]), vsub(lhs, rhs), dst.J.space.labels)
    c4 = rep.add(Check("eta-triple", "η2(m,n,r) = (η2 m, η2 n, η2 r)"))
    for m, n, r in iproduct(range(src.nM), repeat=3):
        lhs = e2.apply(src.triple.basis(m, n, r))
        rhs = dst.tri(e2.col(m), e2.col(n), e2.col(r))
        c4.record((ml[m], ml[n], ml[r]), vsub(lhs, rhs), dst.M.labels)
    return rep


def _shape(rows, cols, m: Matrix | None):
    if m is None:
        return Matrix.zeros(rows, cols) if rows else Matrix(0, cols, [])
    return m


def tag_on_morphism(eta1: Matrix, eta2: Matrix, src: JTernaryData, dst: JTernaryData,
                    tsrc: AssembledLie | None = None, tdst: AssembledLie | None = None):
    """TAG(η) as a GradedMap TAG(src) -> TAG(dst), with a verification report."""
    rep = _check_ternary_morphism(eta1, eta2, src, dst)
    if not rep.ok:
        raise CheckFailed("not a J-ternary morphism (failing: " + ", ".join(rep.failing()) + ")", rep)
    tsrc = tsrc or tag(src)
    tdst = tdst or tag(dst)
    bs_s, bs_d = tsrc.dblock, tdst.dblock

    c_wd = rep.add(Check("eta-relations", "η(Rˢ) ⊆ Rˢ"))
    def eta_t(t):
        out = [ZERO] * bs_d.ambient.dim
        for k, c in enumerate(t):
            if not c:
                continue
            kind, i, j = bs_s.ambient.unpack(k)
            if kind == "J":
                v = bs_d.ambient.jj(eta1.col(i), eta1.col(j))
            else:
                v = bs_d.ambient.mm(eta2.col(i), eta2.col(j))
            for x, y in enumerate(v):
                if y:
                    out[x] += c * y
        return out
    for i, r in enumerate(bs_s.relations.vectors()):
        c_wd.record((f"rel{i}",), bs_d.relations.reduce(eta_t(r)), bs_d.ambient.space.labels)
    if not c_wd.ok:
        raise CheckFailed("η does not induce a map on 𝔅ˢ", rep)

    n_s, n_d = tsrc.dim, tdst.dim
    cols = []
    for k in range(n_s):
        col = [ZERO] * n_d
        if k < 3 * src.nJ:
            x, a = divmod(k, src.nJ)
            for b, c in enumerate(eta1.col(a)):
                if c:
                    col[tdst.index_sj(x, b)] += c
        elif k < 3 * src.nJ + 2 * src.nM:
            v, m = divmod(k - 3 * src.nJ, src.nM)
            for b, c in enumerate(eta2.col(m)):
                if c:
                    col[tdst.index_vm(v, b)] += c
        else:
            i = k - 3 * src.nJ - 2 * src.nM
            img = bs_d.project(eta_t(bs_s.rep_vector(i)))
            for b, c in enumerate(img):
                if c:
                    col[tdst.index_d(b)] += c
        cols.append(col)
    mat = Matrix.from_columns(cols, n_d) if n_s else Matrix(n_d, 0, [[] for _ in range(n_d)])
    gm = GradedMap(tsrc.table.space, tdst.table.space, mat, 0)

    c_mor = rep.add(Check("tag-morphism", "TAG(η)[X,Y] = [TAG(η)X, TAG(η)Y]"))
    sl = tsrc.table.space.labels
    for i, j in iproduct(range(n_s), repeat=2):
        lhs = mat.apply(tsrc.table.basis_product(i, j))
        rhs = tdst.table.mul(mat.col(i), mat.col(j))
        c_mor.record((sl[i], sl[j]), vsub(lhs, rhs), tdst.table.space.labels)
    return gm, rep
