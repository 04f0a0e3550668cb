import math
import os
import sys

sys.path.insert(0, os.environ["GAPSUMS_MODULE_DIR"])
sys.path.insert(0, os.environ["GAPSUMS_PACKAGE_DIR"])

import gapsums  # noqa: E402


def test_characters():
    chars = gapsums.characters(12)
    assert len(chars) == 4
    assert chars[0].is_principal
    prim = [c for c in chars if c.is_primitive]
    assert len(prim) == 1
    tau = gapsums.gauss_sum(prim[0])
    assert abs(abs(tau) - math.sqrt(12)) < 1e-9


def test_gap_and_fourier():
    g = gapsums.Gap(q=5, s=1, base=[0], generators=[[1]], lengths=[3])
    assert g.volume() == 3
    assert gapsums.is_proper_kernel(g)
    assert gapsums.is_proper_enumeration(g)
    assert abs(gapsums.l1_norm(g) - 7.4721359) < 1e-6
    profile = gapsums.fourier_profile(g)
    assert profile["parseval_relative_error"] < 1e-9
    back = gapsums.Gap.from_json(g.to_json())
    assert back.to_json() == g.to_json()


def test_character_sum_and_chain():
    chi = next(c for c in gapsums.characters(13) if c.is_primitive)
    g = gapsums.Gap(q=13, s=1, base=[2], generators=[[1]], lengths=[6])
    rep = gapsums.character_sum_over_gap(chi, g)
    assert rep["magnitude"] <= rep["chain_bound"] + 1e-9
    direct = sum(chi(a[0]) for a in gapsums.distinct_elements(g))
    assert abs(rep["sum"] - direct) < 1e-9


def test_congruence():
    n = gapsums.count_solutions(q=5, s=1, generators=[[2]],
                                intervals=[(1, 2)], lengths=[5])
    assert n == 2
    bound = gapsums.solution_bound(q=5, s=1, generators=[[2]],
                                   intervals=[(1, 2)], lengths=[5])
    assert n <= bound


def test_poly_and_weil():
    h = gapsums.Polynomial(q=7, coeffs=[1, 0, 1])
    w = gapsums.weil_complete_sum_check(h)
    assert abs(w["max_complete_sum"] - math.sqrt(7)) < 1e-9
    assert w["within_bound"]
    g = gapsums.Gap(q=7, s=1, base=[0], generators=[[1]], lengths=[4])
    rep = gapsums.poly_exp_sum_over_gap(h, g)
    assert rep["magnitude"] <= rep["chain_bound"] + 1e-9


def test_counterexample():
    rep = gapsums.counterexample_demo(5, 2)
    assert abs(rep["double_sum"] - 2) < 1e-9
    assert abs(rep["weighted_sum"] - 2) < 1e-9
    assert rep["max_multiplicity"] >= 2


def test_sweep_deterministic():
    cfg = ('{"q_min":3,"q_max":10,"r":1,"kinds":["char"],'
           '"exhaustive_intervals":true,"random_gaps_per_q":2,"seed":7}')
    rows1 = gapsums.sweep(cfg)
    rows2 = gapsums.sweep(cfg)
    assert rows1 == rows2
    assert len(rows1) > 0


def test_errors():
    try:
        gapsums.Gap(q=5, s=1, base=[0], generators=[[1]], lengths=[99])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for H > q")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"FAIL {name}: {exc!r}")
    sys.exit(1 if failures else 0)
