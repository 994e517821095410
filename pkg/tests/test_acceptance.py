"""One test per acceptance criterion; each prints a pass/fail line with computed values."""
import pytest

from bergekit.acceptance import ITEMS, SuiteConfig

CFG = SuiteConfig()
LINES: list[str] = []


def _run(key):
    result = ITEMS[key](CFG)
    line = result.summary()
    LINES.append(line)
    print(line)
    for c in result.failures():
        print(f"    {c.label}: computed {c.computed}, expected {c.expected}")
    return result


@pytest.mark.parametrize("key", list(ITEMS))
def test_criterion(key):
    result = _run(key)
    assert result.passed, result.summary()
