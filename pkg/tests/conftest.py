import itertools

import numpy as np
import pytest

from pointplane import IncidenceStructure, generate_pg3


def enc(i):
    """Structure index of the PG(3,2) element whose binary encoding is ``i``."""
    return i - 1


def encs(*ids):
    return frozenset(enc(i) for i in ids)


@pytest.fixture(scope="session")
def pg2():
    return generate_pg3(2)


@pytest.fixture(scope="session")
def pg3():
    return generate_pg3(3)


@pytest.fixture(scope="session")
def pg5():
    return generate_pg3(5)


# -- independent oracles: plain loops over the raw matrix -----------------------

def oracle_perp_points(matrix, pts):
    return frozenset(j for j in range(matrix.shape[1])
                     if all(matrix[i, j] for i in pts))


def oracle_perp_planes(matrix, pls):
    return frozenset(i for i in range(matrix.shape[0])
                     if all(matrix[i, j] for j in pls))


def oracle_lines(matrix):
    """Distinct pencils {A,B}^perp^perp, found by brute force."""
    out = set()
    for a, b in itertools.combinations(range(matrix.shape[0]), 2):
        out.add(oracle_perp_planes(matrix, oracle_perp_points(matrix, (a, b))))
    return out


def random_structure(rng, n=None, m=None, density=None):
    n = int(rng.integers(0, 9)) if n is None else n
    m = int(rng.integers(0, 9)) if m is None else m
    density = rng.random() if density is None else density
    return IncidenceStructure(rng.random((n, m)) < density)


def flip(s, p, pi):
    m = s.matrix.copy()
    m[p, pi] = not m[p, pi]
    return IncidenceStructure(m)


def mutants(s, count, seed):
    rng = np.random.default_rng(seed)
    cells = rng.choice(s.n_points * s.n_planes, size=count, replace=False)
    return [(int(c) // s.n_planes, int(c) % s.n_planes,
             flip(s, int(c) // s.n_planes, int(c) % s.n_planes)) for c in cells]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
