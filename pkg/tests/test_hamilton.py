from itertools import permutations

import pytest

from specham.extremal import build_en, build_ep
from specham.graph import Graph, combine, complete, cycle, path, star
from specham.hamilton import (BUDGET_ENV, HamiltonBudgetExceeded, default_budget, hamilton,
                              is_hamiltonian, is_traceable, verify_witness)

from conftest import random_graph


def brute(g: Graph, kind: str) -> bool:
    n = g.n
    for perm in permutations(range(1, n)) if kind == "cycle" else permutations(range(n)):
        seq = (0,) + perm if kind == "cycle" else perm
        if verify_witness(g, kind, seq):
            return True
    return False


def test_against_brute_force(rng):
    for _ in range(500):
        n = rng.randint(3, 8)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        for kind in ("cycle", "path"):
            res = hamilton(g, kind)
            assert res.found == brute(g, kind)
            if res.found:
                assert verify_witness(g, kind, res.witness)


def twin_rich_graph(rng) -> Graph:
    # substitute cliques or independent sets for the vertices of a small base graph
    base = random_graph(rng.randint(2, 5), rng.uniform(0.3, 0.9), rng)
    blocks, nxt = [], 0
    for _ in range(base.n):
        size = rng.randint(1, 3)
        blocks.append((list(range(nxt, nxt + size)), rng.random() < 0.5))
        nxt += size
    edges = []
    for i, (block, clique) in enumerate(blocks):
        if clique:
            edges += [(a, b) for a in block for b in block if a < b]
        for j in range(i + 1, len(blocks)):
            if base.has_edge(i, j):
                edges += [(a, b) for a in block for b in blocks[j][0]]
    return Graph(nxt, edges)


def test_twin_pruning_against_brute_force(rng):
    tested = 0
    while tested < 300:
        g = twin_rich_graph(rng)
        if not 3 <= g.n <= 8:
            continue
        tested += 1
        for kind in ("cycle", "path"):
            res = hamilton(g, kind)
            assert res.found == brute(g, kind)
            if res.found:
                assert verify_witness(g, kind, res.witness)


def test_small_cases():
    assert is_hamiltonian(cycle(7))
    assert not is_hamiltonian(path(7))
    assert is_traceable(path(7))
    assert not is_traceable(star(3))
    assert not is_traceable(combine(complete(3), complete(3)))
    assert is_traceable(complete(1))


def test_argument_checks():
    with pytest.raises(ValueError):
        hamilton(complete(2), "cycle")
    with pytest.raises(ValueError):
        hamilton(complete(3), "walk")


def test_witness_checker_rejects_bad_sequences():
    g = cycle(4)
    assert verify_witness(g, "cycle", [0, 1, 2, 3])
    assert not verify_witness(g, "cycle", [0, 2, 1, 3])
    assert not verify_witness(g, "path", [0, 1, 2])
    assert not verify_witness(g, "path", [0, 1, 1, 2])


def test_deterministic_witness(rng):
    g = random_graph(12, 0.5, rng)
    first = hamilton(g, "path")
    assert first.found
    assert hamilton(g, "path").witness == first.witness


def test_extremal_graphs_fail():
    assert hamilton(build_ep(12), "cycle").status == "absent"
    assert hamilton(build_en(12), "path").status == "absent"


def test_large_cliques_stay_cheap():
    for n in (40, 60):
        res = hamilton(build_ep(n), "cycle")
        assert res.status == "absent" and res.nodes < 10 * n * n
        assert hamilton(build_en(n), "path").status == "absent"
    assert is_hamiltonian(complete(60))


def test_budget(monkeypatch):
    res = hamilton(build_ep(14), "cycle", budget=5)
    assert res.status == "budget_exceeded"
    with pytest.raises(HamiltonBudgetExceeded):
        is_hamiltonian(build_ep(14), budget=5)
    monkeypatch.setenv(BUDGET_ENV, "123")
    assert default_budget() == 123
