import random

import pytest

from freedim import QQ, ZZ, CoefficientDomain, PolynomialRing


def random_polynomial(rng, ring, max_degree=3, max_terms=3, coeff_range=9):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * ring.n
        for _ in range(rng.randint(0, max_degree)):
            mono[rng.randrange(ring.n)] += 1
        terms[tuple(mono)] = rng.randint(-coeff_range, coeff_range)
    return ring.from_dict(terms)


def random_monomials(rng, n, count, max_degree=4):
    monos = set()
    for _ in range(50 * count):
        if len(monos) == count:
            break
        m = [0] * n
        for _ in range(rng.randint(1, max_degree)):
            m[rng.randrange(n)] += 1
        monos.add(tuple(m))
    return sorted(monos)


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture
def zxyz():
    return PolynomialRing(ZZ, ["x", "y", "z"], "lex")


@pytest.fixture
def qxy():
    return PolynomialRing(QQ, ["x", "y"], "lex")


F5 = CoefficientDomain.prime_field(5)


# acceptance criteria report: one line per criterion in the terminal summary
CRITERIA: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key in report.keywords:
        if key.startswith("criterion_"):
            cid = key[len("criterion_"):]
            if report.failed or CRITERIA.get(cid) != "FAIL":
                CRITERIA[cid] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(CRITERIA, key=lambda c: (int(c.rstrip("abcdef")), c)):
        terminalreporter.write_line(f"criterion {cid:>3}: {CRITERIA[cid]}")


def pytest_configure(config):
    for cid in ("1", "2", "3", "4", "5", "6", "7a", "7b", "7c", "7d", "7e", "7f", "8"):
        config.addinivalue_line("markers", f"criterion_{cid}: acceptance criterion {cid}")
