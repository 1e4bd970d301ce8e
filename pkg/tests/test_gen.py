import pytest
from hypothesis import given
from hypothesis import strategies as st

import polytropes.gen as gen
from polytropes.errors import GenerationExhausted
from polytropes.gen import GenConfig, random_polytrope, random_polytropes
from polytropes.polytrope import is_degenerate
from polytropes.trop_core import is_kleene_star


def test_deterministic():
    cfg = GenConfig(3, 0, 20, seed=42)
    assert random_polytrope(cfg) == random_polytrope(cfg)
    assert is_kleene_star(random_polytrope(cfg).star)
    a = [p.star for p in random_polytropes(2, 5, seed=1)]
    b = [p.star for p in random_polytropes(2, 5, seed=1)]
    assert a == b and len(set(a)) > 1


def test_zero_range_is_a_point():
    p = random_polytrope(GenConfig(3, 0, 0))
    assert is_degenerate(p)
    assert all(x == 0 for r in p.star.entries for x in r)


@pytest.mark.parametrize("bad", [dict(dim=0), dict(dim=2, entry_min=5, entry_max=1), dict(dim=2, method="x")])
def test_config_validation(bad):
    with pytest.raises(ValueError):
        GenConfig(**bad)


@given(st.integers(1, 4), st.integers(0, 2**32), st.sampled_from(["closure", "rejection"]))
def test_output_is_valid(dim, seed, method):
    p = random_polytrope(GenConfig(dim, 0, 50, seed, method=method))
    assert is_kleene_star(p.star)
    assert all(x == 0 for x in p.star.row(dim))


def test_nonnegative_range_never_retries(monkeypatch):
    calls = []
    real = gen._draw
    monkeypatch.setattr(gen, "_draw", lambda rng, cfg: calls.append(1) or real(rng, cfg))
    for seed in range(50):
        calls.clear()
        random_polytrope(GenConfig(3, 0, 100, seed))
        assert len(calls) == 1


def test_negative_entries_retry_or_exhaust():
    p = random_polytrope(GenConfig(2, -3, 10, seed=5))
    assert is_kleene_star(p.star)
    with pytest.raises(GenerationExhausted):
        random_polytrope(GenConfig(2, -100, -50, seed=0, max_retries=3))
