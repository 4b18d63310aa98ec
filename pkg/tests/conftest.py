import functools

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_CRITERIA = {}


def criterion(number, title):
    """Record pass/fail of an acceptance criterion for the terminal summary."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                detail = fn(*args, **kwargs)
            except BaseException as e:
                _CRITERIA[number] = (title, False, "%s: %s" % (type(e).__name__, e))
                raise
            _CRITERIA[number] = (title, True, detail or "")
        return run
    return wrap


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[n]
        line = "criterion %2d %s  %s" % (n, "PASS" if ok else "FAIL", title)
        if detail:
            line += "  (%s)" % str(detail).splitlines()[0][:160]
        tr.write_line(line)


@st.composite
def clause_sets(draw, max_vars=5, max_clauses=8, max_width=3):
    n = draw(st.integers(1, max_vars))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    out = set()
    for _ in range(draw(st.integers(0, max_clauses))):
        lits = draw(st.lists(lit, min_size=0, max_size=max_width))
        c = set()
        for x in lits:
            if -x not in c:
                c.add(x)
        out.add(frozenset(c))
    return frozenset(out)


@pytest.fixture
def cs():
    from ucslur.core import clause_set
    return clause_set
