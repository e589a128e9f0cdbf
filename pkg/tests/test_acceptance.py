"""One test per acceptance criterion; each prints a PASS/FAIL line.

The checks are the exact identities assembled in :mod:`bchfactor.verify`.
Criteria whose stated forms do not hold stay red here on purpose.
"""
import pytest

from bchfactor import verify as V

CONFIG = V.RunConfig(order=5, degree=5, seed=0)
RESULTS: list[str] = []


def _describe(entry) -> str:
    bad = [r for r in entry["details"]["checks"] if r["passed"] != r["total"]]
    return "; ".join(f"{r['check']} {r['passed']}/{r['total']}" for r in bad)


@pytest.mark.parametrize("number,criterion", list(enumerate(V.CRITERIA, start=1)),
                         ids=[f"{i:02d}-{c.__name__}" for i, c in enumerate(V.CRITERIA, start=1)])
def test_criterion(number, criterion):
    entry = criterion(CONFIG)
    line = f"criterion {number:02d} {entry['name']}: {entry['status']}"
    if entry["status"] != V.PASS:
        line += f"  [{_describe(entry)}]"
    RESULTS.append(line)
    print(line)
    assert entry["status"] == V.PASS, _describe(entry)
