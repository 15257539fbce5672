import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from shortsl2 import _backend, _pykernels

ckernels = pytest.importorskip("shortsl2._ckernels")

coeff = st.integers(-6, 6)


@given(st.integers(1, 6).flatmap(lambda c: st.lists(st.lists(coeff, min_size=c, max_size=c),
                                                     min_size=1, max_size=6)))
def test_rref_kernels_agree(rows):
    n = len(rows[0])
    assert _pykernels.rref_int([r[:] for r in rows], n) == ckernels.rref_int([r[:] for r in rows], n)


@st.composite
def tables(draw):
    n = draw(st.integers(1, 6))
    par = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    table = {}
    for i in range(n):
        for j in range(n):
            terms = draw(st.lists(st.tuples(st.integers(0, n - 1), coeff), max_size=2))
            if terms:
                table[(i, j)] = terms
    return n, par, table


@given(tables())
def test_jacobi_kernels_agree(t):
    n, par, table = t
    assert _pykernels.jacobi_residuals(n, par, table) == ckernels.jacobi_residuals(n, par, table)


def test_large_coefficients_fall_back_exactly():
    table = {(0, 0): [(0, 1 << 40)]}
    assert ckernels.jacobi_residuals(1, [0], table) == _pykernels.jacobi_residuals(1, [0], table)


def test_backend_selection_env():
    env = dict(os.environ, SHORTSL2_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import shortsl2; print(shortsl2.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert _backend.BACKEND in ("python", "cython")
