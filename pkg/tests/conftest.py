import random
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from isoblow.exact_linalg import RationalMatrix

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rats = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))


@st.composite
def square_matrices(draw, lo=0, hi=5):
    n = draw(st.integers(lo, hi))
    return RationalMatrix([[draw(small_rats) for _ in range(n)] for _ in range(n)], n)


@st.composite
def skew_matrices(draw, sizes=(0, 2, 4, 6)):
    n = draw(st.sampled_from(sizes))
    e = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(small_rats)
            e[i][j], e[j][i] = v, -v
    return RationalMatrix(e, n)


def random_skew(n, rng):
    e = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            e[i][j], e[j][i] = v, -v
    return RationalMatrix(e, n)


def random_matrix(r, c, rng):
    return RationalMatrix([[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(c)] for _ in range(r)], c)


__all__ = ["small_rats", "square_matrices", "skew_matrices", "random_skew", "random_matrix", "random"]


# acceptance criteria report one line each at the end of the run
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {k:2d}. {title}")
