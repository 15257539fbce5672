"""Built-in algebras and seeds.

Everything here is written out by hand or derived from matrix commutators;
none of it is produced by the constructions it is used to test.  The JSON
corpus under ``fixtures/`` at the repository root is generated from these
builders (``python -m shortsl2.fixtures fixtures``) and the test suite checks
that the two agree.
"""
from __future__ import annotations

from fractions import Fraction

from .algebras import AlgebraTable, BilinearMap, Sl2Data, TrilinearMap, sl2_fixtures
from .exactlin import Matrix, solve
from .jternary import JTernaryData
from .superspace import SuperSpace

HALF = Fraction(1, 2)


# ------------------------------------------------------------------ Lie

def sl2():
    """sl2 on (e, h, f) with its adjoint sl2 action."""
    g, _, _ = sl2_fixtures()
    return g, Sl2Data.from_elements(g, *(g.space.basis_vector(i) for i in (0, 2, 1)))


def _elem(i, j):
    m = [[0] * 3 for _ in range(3)]
    m[i - 1][j - 1] = 1
    return Matrix(3, 3, m)


SL3_LABELS = ("E12", "E13", "E23", "H12", "H23", "E21", "E31", "E32")


def _sl3_matrices():
    E = _elem
    return {
        "E12": E(1, 2), "E13": E(1, 3), "E23": E(2, 3),
        "H12": E(1, 1) - E(2, 2), "H23": E(2, 2) - E(3, 3),
        "E21": E(2, 1), "E31": E(3, 1), "E32": E(3, 2),
    }


def sl3():
    """sl3 from commutators of 3x3 matrices, with e=E12, f=E21, h=H12."""
    mats = _sl3_matrices()
    space = SuperSpace(SL3_LABELS, (0,) * 8)
    basis = Matrix.from_columns([mats[l].flatten() for l in SL3_LABELS], 9)
    table = {}
    for i, a in enumerate(SL3_LABELS):
        for j, b in enumerate(SL3_LABELS):
            A, B = mats[a], mats[b]
            c = solve(basis, (A @ B - B @ A).flatten())
            table[(i, j)] = [(k, x) for k, x in enumerate(c) if x]
    g = AlgebraTable(space, table, "bracket")
    v = space.basis_vector
    return g, Sl2Data.from_elements(g, v(0), v(5), v(3))


def h3():
    space = SuperSpace(("e1", "e2", "z"), (0, 0, 0))
    return AlgebraTable.from_labels(space, {("e1", "e2"): {"z": 1}, ("e2", "e1"): {"z": -1}},
                                    "bracket")


def _sl2_plus_module(vlabels, vparities, action, vv=None):
    """sl2 ⊕ U with [x,u] = x(u) and [u,u'] given by ``vv`` (default zero)."""
    sg, _, _ = sl2_fixtures()
    labels = ("e", "h", "f") + tuple(vlabels)
    space = SuperSpace(labels, (0, 0, 0) + tuple(vparities))
    entries = {}
    for (a, b), terms in sg.table.items():
        entries[(sg.space.labels[a], sg.space.labels[b])] = {sg.space.labels[k]: c for k, c in terms}
    n = len(vlabels)
    for x in ("e", "h", "f"):
        A = action[x]
        for j in range(n):
            img = {vlabels[i]: A[i, j] for i in range(n) if A[i, j]}
            if img:
                entries[(x, vlabels[j])] = img
                entries[(vlabels[j], x)] = {k: -c for k, c in img.items()}
    for key, val in (vv or {}).items():
        entries[key] = val
    return AlgebraTable.from_labels(space, entries, "bracket")


def _sl2_block_action(g: AlgebraTable) -> Sl2Data:
    v = g.space.basis_vector
    return Sl2Data.from_elements(g, v(0), v(2), v(1))


def sl2_ltimes_v():
    """sl2 ⋉ V with V abelian."""
    _, _, act = sl2_fixtures()
    g = _sl2_plus_module(("v1", "v2"), (0, 0), act)
    return g, _sl2_block_action(g)


def osp12():
    """osp(1,2): sl2 even, V odd with [v,w] = v⊙w."""
    _, forms, act = sl2_fixtures()
    vv = {}
    for (i, j), res in forms.symmetrizer.items():
        vv[(f"v{i + 1}", f"v{j + 1}")] = {l: c for l, c in zip(("e", "h", "f"), res) if c}
    g = _sl2_plus_module(("v1", "v2"), (1, 1), act, vv)
    return g, _sl2_block_action(g)


def sl2_plus_v3():
    """sl2 ⊕ V(3), the 4-dimensional irreducible module as an abelian ideal."""
    n = 3
    E = [[0] * 4 for _ in range(4)]
    F = [[0] * 4 for _ in range(4)]
    H = [[0] * 4 for _ in range(4)]
    for i in range(4):
        H[i][i] = n - 2 * i
        if i + 1 < 4:
            F[i + 1][i] = 1
        if i > 0:
            E[i - 1][i] = i * (n - i + 1)
    act = {"e": Matrix(4, 4, E), "f": Matrix(4, 4, F), "h": Matrix(4, 4, H)}
    g = _sl2_plus_module(("u0", "u1", "u2", "u3"), (0, 0, 0, 0), act)
    return g, _sl2_block_action(g)


# --------------------------------------------------------------- Jordan

def lambda_jordan():
    """Λ(Cz ⊕ Cz*) on (1, z, zs, w) with w = zs∧z."""
    space = SuperSpace(("1", "z", "zs", "w"), (0, 1, 1, 0))
    entries = {}
    for x in space.labels:
        entries[("1", x)] = {x: 1}
        entries[(x, "1")] = {x: 1}
    entries[("zs", "z")] = {"w": 1}
    entries[("z", "zs")] = {"w": -1}
    return AlgebraTable.from_labels(space, entries, "dot")


def one_dim_jordan(label="1"):
    space = SuperSpace((label,), (0,))
    return AlgebraTable.from_labels(space, {(label, label): {label: 1}}, "dot")


def broken_jordan():
    """Λ with w.w = w: still super commutative, no longer Jordan."""
    j = lambda_jordan()
    entries = {}
    sp = j.space
    for (a, b), terms in j.table.items():
        entries[(sp.labels[a], sp.labels[b])] = {sp.labels[k]: c for k, c in terms}
    entries[("w", "w")] = {"w": 1}
    return AlgebraTable.from_labels(sp, entries, "dot")


# ---------------------------------------------------------------- seeds

def _data(J, mlabels, mpar, bullet=None, star=None, triple=None):
    M = SuperSpace(mlabels, mpar)

    def idx2(sa, sb, d):
        return {(sa.index(a), sb.index(b)): [(k, c) for k, c in v.items()]
                for (a, b), v in (d or {}).items()}

    bl = BilinearMap(J.space, M, M, {k: [(M.index(x), c) for x, c in v]
                                      for k, v in idx2(J.space, M, bullet).items()}, "bullet")
    sl = BilinearMap(M, M, J.space, {k: [(J.space.index(x), c) for x, c in v]
                                      for k, v in idx2(M, M, star).items()}, "star")
    tt = {}
    for (a, b, c), v in (triple or {}).items():
        tt[(M.index(a), M.index(b), M.index(c))] = [(M.index(x), y) for x, y in v.items()]
    return JTernaryData(J, M, bl, sl, TrilinearMap(M, tt))


def empty_jordan():
    return AlgebraTable(SuperSpace((), ()), {}, "dot")


def heisenberg_seed():
    """J = 0, M = C m0 even, every operation zero."""
    return _data(empty_jordan(), ("m0",), (0,))


def zero_seed():
    """J = C c with zero product, M = C m even, every operation zero."""
    J = AlgebraTable(SuperSpace(("c",), (0,)), {}, "dot")
    return _data(J, ("m",), (0,))


def sl2v_seed():
    """J = C, M = C even, 1.1 = 1, 1•1 = 1, ⋆ = 0, triple = 0."""
    return _data(one_dim_jordan("1"), ("1m",), (0,), bullet={("1", "1m"): {"1m": 1}})


def osp_seed():
    """J = C, M = C^{0|1}, 1•1~ = 1~, 1~⋆1~ = 1, (1~,1~,1~) = 1/2 1~."""
    return _data(one_dim_jordan("1"), ("1~",), (1,),
                 bullet={("1", "1~"): {"1~": 1}},
                 star={("1~", "1~"): {"1": 1}},
                 triple={("1~", "1~", "1~"): {"1~": HALF}})


def sl3_seed(m1m2m1=2):
    """The ternary data read off sl3 with e=E12, f=E21, h=H12."""
    return _data(one_dim_jordan("a"), ("m1", "m2"), (0, 0),
                 bullet={("a", "m1"): {"m1": 1}, ("a", "m2"): {"m2": 1}},
                 star={("m1", "m2"): {"a": 1}, ("m2", "m1"): {"a": -1}},
                 triple={("m1", "m2", "m1"): {"m1": m1m2m1}, ("m1", "m2", "m2"): {"m2": -1},
                         ("m2", "m1", "m1"): {"m1": 1}, ("m2", "m1", "m2"): {"m2": -2}})


def broken_sl3_seed():
    """sl3 data with (m1,m2,m1) = m1 instead of 2 m1."""
    return sl3_seed(1)


def lambda_seed():
    """(Λ, 0)."""
    return _data(lambda_jordan(), (), ())


def lambda_regular_seed():
    """(Λ, Λ) with the regular action, ⋆ = 0 and zero triple product."""
    J = lambda_jordan()
    mlabels = tuple(f"{x}'" for x in J.space.labels)
    bullet = {}
    for (a, b), terms in J.table.items():
        bullet[(J.space.labels[a], mlabels[b])] = {mlabels[k]: c for k, c in terms}
    return _data(J, mlabels, J.space.parities, bullet=bullet)


def a_only_seed():
    """J = C a with a.a = a, M = 0."""
    return _data(one_dim_jordan("a"), (), ())


def broken_module_seed():
    """J = C, M = C even, 1.1 = 1 but 1•1 = 2."""
    return _data(one_dim_jordan("1"), ("1m",), (0,), bullet={("1", "1m"): {"1m": 2}})


def trivial_triple_seed(c):
    """J = 0, M = C m0 even, (m0,m0,m0) = c m0."""
    return _data(empty_jordan(), ("m0",), (0,), triple={("m0", "m0", "m0"): {"m0": c}})


def broken_sl3():
    """sl3 with the pair [E12,E23], [E23,E12] negated."""
    g, s = sl3()
    sp = g.space
    table = dict(g.table)
    i, j = sp.index("E12"), sp.index("E23")
    table[(i, j)] = [(k, -c) for k, c in table[(i, j)]]
    table[(j, i)] = [(k, -c) for k, c in table[(j, i)]]
    return AlgebraTable(sp, table, "bracket"), s


SEEDS = {
    "heisenberg": heisenberg_seed,
    "zero": zero_seed,
    "sl2V": sl2v_seed,
    "osp": osp_seed,
    "sl3": sl3_seed,
    "a_only": a_only_seed,
    "lambda": lambda_seed,
    "lambda_regular": lambda_regular_seed,
}

NEGATIVE_SEEDS = {
    "broken_sl3_ternary": broken_sl3_seed,
    "broken_module": broken_module_seed,
}

LIE = {
    "sl2": sl2,
    "sl3": sl3,
    "sl2_ltimes_V": sl2_ltimes_v,
    "osp12": osp12,
}


def corpus() -> dict:
    """File name -> JSON document for the shipped fixture corpus."""
    from .documents import jordan_document, lie_document, lie_document_named_sl2, ternary_document
    out = {}
    g, _ = sl2()
    out["sl2.json"] = lie_document_named_sl2(g, "sl2", "e", "f", "h")
    g, _ = sl3()
    out["sl3.json"] = lie_document_named_sl2(g, "sl3", "E12", "E21", "H12")
    g, _ = broken_sl3()
    out["broken_sl3.json"] = lie_document_named_sl2(g, "broken_sl3", "E12", "E21", "H12")
    out["h3.json"] = lie_document(h3(), "h3")
    for name, fn in (("sl2_ltimes_V", sl2_ltimes_v), ("osp12", osp12), ("sl2_plus_V3", sl2_plus_v3)):
        g, _ = fn()
        out[f"{name}.json"] = lie_document_named_sl2(g, name, "e", "f", "h")
    out["lambda_jordan.json"] = jordan_document(lambda_jordan(), "lambda_jordan")
    out["broken_jordan.json"] = jordan_document(broken_jordan(), "broken_jordan")
    out["one_dim_jordan.json"] = jordan_document(one_dim_jordan(), "one_dim_jordan")
    for name, fn in {**SEEDS, **NEGATIVE_SEEDS}.items():
        fname = name if name.startswith("broken") else f"{name}_ternary"
        out[f"{fname}.json"] = ternary_document(fn(), name)
    return out


if __name__ == "__main__":
    import sys
    from pathlib import Path

    from .documents import dumps

    target = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    target.mkdir(parents=True, exist_ok=True)
    for fname, doc in corpus().items():
        (target / fname).write_text(dumps(doc), encoding="utf-8")
        print(target / fname)
