import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import posets, relspaces
from findual import kernels
from findual.dlattice import from_upsets
from findual.modal import algebra_from_space
from findual.tense import tense_from_space

IMPLS = kernels.implementations()
needs_both = pytest.mark.skipif(len(IMPLS) < 2, reason="compiled extension not built")


def _same(f, *args):
    out = [getattr(impl, f)(*args) for impl in IMPLS.values()]
    for o in out[1:]:
        if isinstance(o, tuple) and o and isinstance(o[0], np.ndarray):
            for x, y in zip(out[0], o):
                np.testing.assert_array_equal(x, y)
        elif isinstance(o, np.ndarray):
            np.testing.assert_array_equal(out[0], o)
        else:
            assert o == out[0]
    return out[0]


def test_backend_is_reported():
    assert kernels.BACKEND in IMPLS


@needs_both
@given(relspaces(max_size=5))
def test_box_table_parity(s):
    box = _same("box_table", np.asarray(s.succ, dtype=np.int64), s.size)
    for u in range(1 << s.size):
        expect = sum(1 << x for x in range(s.size) if s.succ[x] & ~u == 0)
        assert box[u] == expect


@needs_both
@given(posets())
def test_lattice_kernels_parity(p):
    d = from_upsets(p)
    _same("tables_from_masks", np.asarray(d.sets, dtype=np.uint64))
    arrow = _same("residual_table", d.meet, d.join, d.leq, d.bottom)
    assert _same("residuation_violation", d.meet, d.leq, arrow) is None
    assert _same("distributivity_violation", d.meet, d.join) is None
    if d.size > 2:
        broken = np.array(arrow)
        broken[1, 0] = (broken[1, 0] + 1) % d.size
        assert _same("residuation_violation", d.meet, d.leq, broken) is not None


@needs_both
@given(relspaces(max_size=4), st.integers(0, 15))
def test_modal_kernels_parity(s, k):
    m = algebra_from_space(s)
    meet = m.base.meet
    assert _same("box_meet_violation", np.asarray(m.box), meet) is None
    broken = np.array(m.box)
    broken[k % m.size] = 0 if broken[k % m.size] else m.size - 1
    _same("box_meet_violation", broken, meet)
    t = tense_from_space(s)
    assert _same("conjugate_violation", np.asarray(t.box_f), np.asarray(t.box_p), s.size) == -1
    _same("conjugate_violation", np.asarray(t.box_f), np.arange(m.size), s.size)


def test_tables_from_masks_marks_missing():
    for impl in IMPLS.values():
        meet, join = impl.tables_from_masks(np.array([0, 1, 2], dtype=np.uint64))
        assert join[1, 2] == -1 and meet[1, 2] == 0


def test_env_forces_fallback():
    env = dict(os.environ, FINDUAL_PUREPY="1")
    out = subprocess.run([sys.executable, "-c", "import findual; print(findual.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "purepy"
