import pytest

from secdiff import AttackSequence, GameConfig, Graph


@pytest.fixture
def path3():
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def star5():
    # center 0, four leaves
    return Graph(5, [(0, v) for v in range(1, 5)])


@pytest.fixture
def showcase():
    """Nine-node walkthrough instance.

    Hand-reconstructed so that the five-step attack (v8, v6, v3, v4, v7) on
    1-based labels hits cumulative capture times 4, 12, 17, 24, 26: degrees
    d(v8)=3, d(v6)=5, d(v3)=1, d(v4)=4, d(v7)=2, edge v8-v6 and v6-v3, v4
    adjacent to exactly one of the first three targets, v7 to exactly two of
    the first four.  Nodes are 0-based here (v1 -> 0).
    """
    edges = [
        (7, 5), (5, 2), (3, 5), (6, 5), (6, 3),
        (7, 8), (7, 4), (5, 4), (3, 0), (3, 1),
    ]
    g = Graph(9, edges)
    phi = [0.0, 0.0, 4.0, 3.0, 0.0, 3.0, 2.0, 1.0, 0.0]
    seq = AttackSequence([7, 5, 2, 3, 6], 1)
    cfg = GameConfig(Phi=13.0, T=26.5)
    return g, phi, seq, cfg
