import pytest

from bottchern.double_complex import random_complex, square
from bottchern.flat import t2_model, t4_model
from bottchern.verify import corrupt_sign, core_properties, mode_properties, model_properties, run_suite


def test_core_suite_is_green():
    res = run_suite("core", seed=1, count=30)
    assert res.ok and res.failures == []
    assert all(res.passes[k] == res.runs[k] == 30 for k in res.runs)


def test_geometry_suite_is_green():
    res = run_suite("geometry", seed=1, count=4)
    assert res.ok, res.failures


def test_injected_fault_is_a_validation_failure():
    res = run_suite("core", seed=1, count=3, inject_fault=True)
    assert len(res.validation_failures) == 1
    assert "corrupted sign" in res.validation_failures[0]["instance"]
    assert not res.ok


def test_corrupt_sign_breaks_validity():
    c, _ = random_complex(4)
    assert c.is_valid() and not corrupt_sign(c).is_valid()
    assert not corrupt_sign(square()).is_valid()


def test_suite_is_deterministic():
    assert run_suite("core", 9, 5).to_json() == run_suite("core", 9, 5).to_json()


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("nope", 0, 1)
    with pytest.raises(ValueError):
        run_suite("core", 0, 0)


def test_zigzag_flag_is_checked_against_the_shapes():
    c, shapes = random_complex(2)
    honest = any(s.honest_zigzag for s in shapes)
    assert all(core_properties(c, honest).values())
    assert not all(core_properties(c, not honest).values())


def test_property_maps():
    assert all(model_properties(t2_model(), radius=1).values())
    assert all(mode_properties(t2_model(), (2, -1)).values())
    assert all(mode_properties(t4_model(), (0, 1, -1, 0), with_harmonic=False).values())
