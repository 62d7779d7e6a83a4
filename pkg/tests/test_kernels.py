import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from antibracket import _kernels
from antibracket._kernels import python_kernels as py
from antibracket.scalars import mpq

ck = _kernels.compiled_kernels
needs_compiled = pytest.mark.skipif(ck is None, reason="compiled kernels not built")

coef = st.one_of(st.integers(-4, 4), st.fractions(min_value=-2, max_value=2, max_denominator=5).map(
    lambda f: mpq(f.numerator, f.denominator)
))
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exps, coef.filter(bool), max_size=5)
superpolys = st.dictionaries(st.integers(0, 7), polys.filter(bool), max_size=4)


def brute_sign(a, b):
    """Sort the concatenated generator word by bubble sort, counting swaps."""
    if a & b:
        return 0
    word = [i for i in range(8) if a >> i & 1] + [i for i in range(8) if b >> i & 1]
    swaps = 0
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                swaps += 1
    return -1 if swaps % 2 else 1


def test_python_sign_matches_bubble_sort():
    for a in range(64):
        for b in range(64):
            assert py.grassmann_sign(a, b) == brute_sign(a, b)


def test_backend_name():
    assert _kernels.BACKEND in ("compiled", "python")


@needs_compiled
def test_compiled_sign_matches():
    for a in range(64):
        for b in range(64):
            assert ck.grassmann_sign(a, b) == py.grassmann_sign(a, b)


@needs_compiled
@given(polys, polys)
def test_poly_mul_agrees(a, b):
    assert ck.poly_mul(a, b) == py.poly_mul(a, b)


@needs_compiled
@given(polys, polys, st.integers(-2, 2))
def test_poly_add_agrees(a, b, s):
    assert ck.poly_add(a, b, s) == py.poly_add(a, b, s)


@needs_compiled
@given(superpolys, superpolys)
def test_superpoly_mul_agrees(a, b):
    assert ck.superpoly_mul(a, b) == py.superpoly_mul(a, b)


@needs_compiled
@given(st.lists(coef, max_size=6), st.lists(coef, max_size=6))
def test_upoly_mul_agrees(a, b):
    assert ck.upoly_mul(list(a), list(b)) == py.upoly_mul(list(a), list(b))


@needs_compiled
def test_row_reduction_agrees():
    rng = random.Random(3)
    pc, pp = {}, {}
    for _ in range(60):
        row = {rng.randrange(12): mpq(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(4)}
        row = {k: v for k, v in row.items() if v}
        assert ck.insert_row(dict(row), pc) == py.insert_row(dict(row), pp)
    assert pc == pp


def test_pure_python_switch():
    env = dict(os.environ, ANTIBRACKET_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from antibracket._kernels import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
