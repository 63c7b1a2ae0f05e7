import os
import subprocess
import sys

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import FIXTURES, load
from neutra import enumerate_maps, enumerate_substructures, kernels, minimal_generating_set
from neutra import _kernels_py
from neutra.errors import BudgetExceeded, NotGenerable
from strategies import structures

compiled = pytest.importorskip("neutra._kernels")

SETTINGS = settings(max_examples=200, deadline=None, derandomize=True, suppress_health_check=list(HealthCheck))


def test_compiled_backend_selected():
    assert kernels.BACKEND == "compiled"
    assert kernels._impl is compiled


def test_environment_forces_fallback():
    code = "from neutra import kernels; print(kernels.BACKEND, kernels._impl.__name__)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={**os.environ, "NEUTRA_KERNELS": "python"},
        check=True,
    )
    assert out.stdout.split() == ["python", "neutra._kernels_py"]


# raw kernels on random tables -----------------------------------------------------------

@st.composite
def add_tables(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    add = draw(st.lists(st.integers(-2, n - 1), min_size=n * n, max_size=n * n))
    return n, add


@SETTINGS
@given(add_tables(), st.data())
def test_closed_subsets_parity(table, data):
    n, add = table
    masks = st.integers(0, (1 << n) - 1)
    need = data.draw(st.lists(masks, min_size=n, max_size=n))
    bad = data.draw(masks)
    zero = data.draw(masks)
    use_add = data.draw(st.booleans())
    args = (n, need, bad, add if use_add else None, zero)
    assert list(compiled.closed_subsets(*args)) == _kernels_py.closed_subsets(*args)


@SETTINGS
@given(add_tables(), st.data())
def test_additive_closure_parity(table, data):
    n, add = table
    mask = data.draw(st.integers(0, (1 << n) - 1))
    assert compiled.additive_closure(n, mask, add) == _kernels_py.additive_closure(n, mask, add)


@SETTINGS
@given(add_tables(max_n=6), st.data())
def test_min_generating_parity(table, data):
    n, add = table
    add = [max(t, -1) for t in add]
    cover = [data.draw(st.integers(0, (1 << n) - 1)) | (1 << v) for v in range(n)]
    forced = data.draw(st.integers(0, (1 << n) - 1))
    candidates = sorted(data.draw(st.sets(st.integers(0, n - 1))) - {v for v in range(n) if forced >> v & 1})
    target = data.draw(st.integers(0, (1 << n) - 1))
    use_add = data.draw(st.booleans())
    args = (n, cover, add if use_add else None, forced, candidates, target)
    assert list(compiled.min_generating(*args)) == _kernels_py.min_generating(*args)


@SETTINGS
@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 3), st.data())
def test_enumerate_maps_parity(nd, nc, ns, data):
    act = data.draw(st.lists(st.integers(-1, nc - 1), min_size=ns * nc, max_size=ns * nc))
    add = data.draw(st.lists(st.integers(-1, nc - 1), min_size=nc * nc, max_size=nc * nc))
    constraints = []
    for k in range(nd):
        pos = st.integers(0, k)
        rec = st.tuples(st.integers(0, 2), pos, st.integers(0, ns - 1), pos, pos)
        constraints.append(data.draw(st.lists(rec, max_size=3)))
    fixed = data.draw(st.lists(st.integers(-1, nc - 1), min_size=nd, max_size=nd))
    args = (nd, nc, act, add, constraints, fixed)
    assert [tuple(t) for t in compiled.enumerate_maps(*args)] == _kernels_py.enumerate_maps(*args)


# whole operations under each backend -----------------------------------------------------

def _both(monkeypatch, fn):
    got = fn()
    monkeypatch.setattr(kernels, "_impl", _kernels_py)
    fallback = fn()
    monkeypatch.setattr(kernels, "_impl", compiled)
    return got, fallback


def _outcome(fn):
    try:
        return fn()
    except (BudgetExceeded, NotGenerable) as exc:
        return type(exc).__name__


def _fixture_structures(limit):
    out = []
    for path in sorted(FIXTURES.glob("*.neu")):
        if path.name == "malformed.neu":
            continue
        ws = load(path.name)
        for name in ws.names("structure"):
            s = ws.structure(name)
            if len(s.carrier) <= limit:
                out.append(pytest.param(s, id=f"{path.stem}-{name}"))
    return out


@pytest.mark.parametrize("s", _fixture_structures(20))
def test_fixture_operations_agree(monkeypatch, s):
    def run():
        subs = _outcome(lambda: [tuple(w) for w in enumerate_substructures(s)])
        gens = _outcome(lambda: minimal_generating_set(s).generating_set)
        return subs, gens

    got, fallback = _both(monkeypatch, run)
    assert got == fallback


@SETTINGS
@given(structures(max_n=5, max_size=5))
def test_random_operations_agree(s):
    def run():
        return (
            _outcome(lambda: [tuple(w) for w in enumerate_substructures(s)]),
            _outcome(lambda: minimal_generating_set(s).generating_set),
            _outcome(lambda: [m.images() for m in enumerate_maps(s, s)]),
        )

    got = run()
    kernels._impl = _kernels_py
    try:
        fallback = run()
    finally:
        kernels._impl = compiled
    assert got == fallback
