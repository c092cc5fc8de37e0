import pytest

from prmw import CodeParams, build, weight_report


@pytest.fixture(scope="session")
def reports():
    """Session-wide cache of built codes and their weight reports, so the
    expensive instances (2^30+ codewords) are enumerated once."""
    cache = {}

    def get(family, q, n, d):
        key = (family, q, n, d)
        if key not in cache:
            code = build(CodeParams(family, q, n, d))
            cache[key] = (code, weight_report(code))
        return cache[key]

    return get
