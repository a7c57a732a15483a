from cfk.suite import PROPERTIES, run_suite


def test_suite_passes_quickly():
    lines = []
    assert run_suite(seed_count=5, emit=lines.append)
    assert lines[-1] == "suite PASS"
    assert len(lines) == len(PROPERTIES) + 1
    assert all(line.startswith("ok") for line in lines[:-1])


def test_suite_deterministic():
    first: list[str] = []
    second: list[str] = []
    run_suite(seed_count=8, emit=first.append)
    run_suite(seed_count=8, emit=second.append)
    assert first == second
