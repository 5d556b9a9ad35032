import pytest

from polyextrema.errors import BadRange
from polyextrema.verify import Theorem, run_verify


@pytest.mark.parametrize("theorem,rng,kw", [
    ("T1", (3, 8), {}), ("T2", (3, 12), {}), ("T3", (3, 8), {}), ("T4", (3, 12), {}),
    ("T5", (5, 9), {"parity": "odd", "seed": 1}), ("T6", (3, 99), {"parity": "odd", "seed": 42}),
    ("L1", (3, 3), {}), ("L3", (3, 50), {"seed": 7}), ("L4", (3, 51), {}),
])
def test_every_suite_passes(theorem, rng, kw):
    kw = dict(kw)
    seed = kw.pop("seed", 0)
    rep = run_verify(theorem, rng, seed, restarts=60, **kw)
    assert rep.overall_pass, [c for c in rep.checks if not c.passed]
    assert rep.checks


def test_open_values_are_observations_not_checks():
    rep = run_verify("T1", (5, 5), restarts=40)
    assert rep.observations and all(o["open_problem"] for o in rep.observations)
    assert 1.25 <= rep.observations[0]["value"] <= 1.5 + 1e-3


def test_report_dict_and_lines():
    rep = run_verify(Theorem.L4, (5, 7))
    d = rep.to_dict()
    assert d["theorem"] == "L4" and d["overall_pass"] is True
    assert rep.summary_lines()[-1].startswith("PASS  L4")


@pytest.mark.parametrize("rng", [(2, 5), (5, 3), (3, 1000)])
def test_bad_range(rng):
    with pytest.raises(BadRange):
        run_verify("T2", rng)


def test_bad_theorem():
    with pytest.raises(ValueError):
        run_verify("T7", (3, 5))
