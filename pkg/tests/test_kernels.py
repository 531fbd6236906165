import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esnkit import kernels
from esnkit.algebra import PartialTable, UnaryStructure, check_associativity, check_unary_axioms

native = pytest.mark.skipif("native" not in kernels.available(), reason="extension not built")


@st.composite
def flat_tables(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return n, tuple(draw(st.lists(st.integers(-1, n - 1), min_size=n * n, max_size=n * n)))


def test_python_backend_always_available():
    assert "python" in kernels.available()


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.set_backend("fortran")


def test_use_backend_restores_previous():
    before = kernels.backend_name()
    with kernels.use_backend("python"):
        assert kernels.backend_name() == "python"
    assert kernels.backend_name() == before


@settings(max_examples=300, deadline=None)
@given(flat_tables())
def test_assoc_kernel_matches_full_checker(data):
    n, flat = data
    verdict = check_associativity(PartialTable.from_flat(n, flat)).verdict
    for name in kernels.available():
        with kernels.use_backend(name):
            assert kernels.assoc_ok(flat, n) == verdict


@settings(max_examples=300, deadline=None)
@given(flat_tables(max_n=3), st.data())
def test_unary_kernel_matches_full_checker(data, draw):
    n, flat = data
    t = PartialTable.from_flat(n, flat)
    if not check_associativity(t).verdict:
        return
    u = tuple(draw.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    s = UnaryStructure(t, u, u)
    for name in kernels.available():
        with kernels.use_backend(name):
            for right in (False, True):
                for restriction in (False, True):
                    kind = ("right-" if right else "left-") + ("restriction" if restriction else "ehresmann")
                    want = check_unary_axioms(s, kind).verdict
                    assert kernels.unary_ok(flat, u, n, right, restriction) == want, kind


@native
@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("lms", [False, True])
def test_table_search_identical_across_backends(n, lms):
    out = {}
    for name in ("python", "native"):
        with kernels.use_backend(name):
            out[name] = [tuple(t) for t in kernels.search_tables(n, lms)]
    assert out["python"] == out["native"]


@native
def test_unary_search_and_inverses_identical_across_backends():
    with kernels.use_backend("python"):
        tables = [tuple(t) for t in kernels.search_tables(3)]
    for flat in tables:
        res = {}
        for name in ("python", "native"):
            with kernels.use_backend(name):
                res[name] = (
                    [[tuple(u) for u in kernels.search_unary(flat, 3, r, k)] for r in (0, 1) for k in (0, 1)],
                    kernels.unique_pseudo_inverses(flat, 3),
                )
                if res[name][1] is not None:
                    res[name] = (res[name][0], tuple(res[name][1]))
        assert res["python"] == res["native"]


def test_fallback_when_extension_missing():
    import subprocess
    import sys
    code = ("import sys; sys.modules['esnkit._ckernels'] = None\n"
            "from esnkit import kernels, enumeration\n"
            "print(kernels.backend_name(), kernels.available(), enumeration.count('inverse', 2))")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    assert out.split()[0] == "python" and out.strip().endswith("5")


def test_benchmark_smoke(capsys):
    import importlib.util
    import os
    path = os.path.join(os.path.dirname(__file__), os.pardir, "benchmarks", "bench_kernels.py")
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    bench = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(bench)
    bench.main(["--repeat", "1", "--size", "2"])
    assert "search_tables n=2" in capsys.readouterr().out
