"""Acceptance criteria 1-8.

Each ``test_criterion_N`` covers one criterion; the terminal summary prints a
PASS/FAIL line per criterion (see ``conftest.py``).  Runtime bounds are
measured inside each test.
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time

import pytest

from zonodt.algebra import (
    central_power_ideal,
    inverse_system_dims,
    macaulay_check,
    pm_power_ideal,
    pspace_hilbert,
    quantum_dt,
    sign_isotypic_dt,
)
from zonodt.closed_form import (
    cohen_check,
    divisors,
    dset_orbit_count,
    dt_multipartite,
    orbit_formula,
    partitions,
    reineke_dt,
)
from zonodt.divisors import (
    check_break_vanishing,
    check_orientable_vanishing,
    enumerate_break_divisors,
    enumerate_orientable_divisors,
    interior_orientable_divisors,
    numerical_dt,
)
from zonodt.graph import (
    complete_bipartite,
    complete_graph,
    genus,
    is_connected,
    k4_minus_edge,
    spanning_tree_count,
    tutte,
)
from zonodt.groups import orbits, young_subgroup
from zonodt.quiver import SymmetricQuiver, covering_graph, loop_quiver, multipartite_quiver, n_gamma
from zonodt.symfunc import SymFunc, convert, frobenius_h, h_dimension, monomial_coefficient

DEGREE_CAP = 64


def sort_within_blocks(point, blocks):
    out, start = [], 0
    for b in blocks:
        out.extend(sorted(point[start:start + b], reverse=True))
        start += b
    return tuple(out)


def test_criterion_1_k23_pipeline():
    start = time.perf_counter()
    Q = SymmetricQuiver.from_matrix([[1, 1], [1, 1]])
    gamma = (2, 3)
    G = covering_graph(Q, gamma).graph
    assert G == complete_bipartite(2, 3)
    points = enumerate_break_divisors(G)
    assert len(points) == 12
    orbs = orbits(points, young_subgroup(gamma))
    assert len(orbs) == 4
    expected = {(2, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 0, 1, 1, 0)}
    assert {sort_within_blocks(o.rep, gamma) for o in orbs} == {sort_within_blocks(r, gamma) for r in expected}
    result = quantum_dt(Q, gamma)
    assert result.dims == [1, 1, 2]
    assert result.value_at_one == numerical_dt(Q, gamma) == 4
    assert time.perf_counter() - start < 1.0


def test_criterion_2_k4_minus_edge():
    start = time.perf_counter()
    G = k4_minus_edge()
    assert spanning_tree_count(G) == 8
    slim_rank = pspace_hilbert(G)
    specialization = tutte(G).hilbert_specialization(genus(G))
    kernel = inverse_system_dims(central_power_ideal(G).generators, G.n, DEGREE_CAP)
    assert slim_rank == specialization == kernel == [1, 3, 4]
    assert time.perf_counter() - start < 1.0


def test_criterion_3_k3():
    start = time.perf_counter()
    G = complete_graph(3)
    assert pspace_hilbert(G) == [1, 2]
    assert macaulay_check(G).passed
    assert time.perf_counter() - start < 1.0


def test_criterion_4_four_loop_quiver():
    start = time.perf_counter()
    assert numerical_dt(loop_quiver(4), (4,)) == 28
    assert reineke_dt(3, 4) == 28
    K = complete_graph(4, 3)
    f = frobenius_h(K)
    assert f == SymFunc("h", {(1, 1, 1, 1): 10, (2, 1, 1): 15, (3, 1): 3})
    assert h_dimension(f) == 432
    order = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    s, m = convert(f, "s"), convert(f, "m")
    assert [s[lam] for lam in order] == [10, 45, 35, 63, 28]
    assert [m[lam] for lam in order] == [432, 234, 126, 91, 28]
    brute = numerical_dt(multipartite_quiver(3, 2), (2, 2))
    assert dt_multipartite(3, (2, 2)) == monomial_coefficient(K, (2, 2)) == brute == 126
    assert time.perf_counter() - start < 60.0


def test_criterion_5_property_suite(corpus, quivers):
    start = time.perf_counter()
    assert len(corpus) >= 25
    assert any(m > 1 for G in corpus.values() for m in G.multiplicities)
    for name, G in corpus.items():
        assert is_connected(G) and G.n <= 6 and G.num_edges <= 12, name
        T = tutte(G)
        g = genus(G)
        dims = pspace_hilbert(G)
        assert dims == T.hilbert_specialization(g), name
        assert sum(dims) == spanning_tree_count(G), name
        assert len(enumerate_orientable_divisors(G)) == T(2, 1), name
        ext = inverse_system_dims(pm_power_ideal(G, 1).generators, G.n, DEGREE_CAP)
        assert sum(ext) == len(enumerate_orientable_divisors(G)), name
        internal = inverse_system_dims(pm_power_ideal(G, -1).generators, G.n, DEGREE_CAP)
        assert sum(internal) == len(interior_orientable_divisors(G)), name
        assert check_break_vanishing(G).passed, name
        assert check_orientable_vanishing(G).passed, name
    assert len(quivers) >= 10
    for name, (Q, gamma) in quivers.items():
        assert genus(covering_graph(Q, gamma).graph) == n_gamma(Q, gamma) - 1, name
    assert time.perf_counter() - start < 300.0


def test_criterion_6_oracle_sweep():
    start = time.perf_counter()
    for n in range(1, 7):
        for m in range(1, 4):
            for lam in partitions(n):
                for s in range(m * n):
                    assert orbit_formula(m, lam, s) == dset_orbit_count(m, n, lam, s), (m, lam, s)
    for n in range(2, 6):
        for m in range(1, 4):
            for lam in partitions(n):
                Q = multipartite_quiver(m, len(lam))
                assert dt_multipartite(m, lam) == numerical_dt(Q, lam), (m, lam)
    for q in range(1, 31):
        for d in divisors(q):
            for e in divisors(q):
                for p in range(q):
                    assert cohen_check(p, q, (d, e), brute=True).passed, (p, q, d, e)
    assert time.perf_counter() - start < 300.0


def test_criterion_7_sign_isotypic():
    start = time.perf_counter()
    Q = loop_quiver(2)
    for n, expected in [(3, 1), (4, 2)]:
        total = sum(sign_isotypic_dt(Q, (n,)))
        assert total == numerical_dt(Q, (n,)) == expected
    assert reineke_dt(1, 4) == 2
    assert time.perf_counter() - start < 30.0


K23_QUIVER = '{"matrix": [[1, 1], [1, 1]], "gamma": [2, 3]}'
K4E = json.dumps(k4_minus_edge().to_json())
K3_2 = json.dumps(complete_graph(3, 2).to_json())

SUBCOMMANDS = {
    "dt": ["dt", "--quiver", K23_QUIVER],
    "quantum-dt": ["quantum-dt", "--quiver", K23_QUIVER, "--sign"],
    "break-divisors": ["break-divisors", "--graph", K3_2, "--blocks", "3"],
    "orientable-divisors": ["orientable-divisors", "--graph", K4E, "--interior"],
    "hilbert": ["hilbert", "--graph", K4E, "--external"],
    "tutte": ["tutte", "--graph", K4E],
    "parking": ["parking", "--graph", K4E, "--root", "2"],
    "frobenius": ["frobenius", "--m", "3", "--n", "4", "--basis", "s"],
    "formula": ["formula", "dt-multipartite", "--m", "3", "--lambda", "2,2"],
    "verify": ["verify", "--graph", K3_2, "--triangle-n", "3", "--triangle-m", "2"],
}


@pytest.mark.parametrize("name", sorted(SUBCOMMANDS))
def test_criterion_8_determinism(name, tmp_path):
    env = {**os.environ, "ZONODT_CACHE_DIR": str(tmp_path / "unused")}
    outputs = set()
    for threads in ("1", "2", "8"):
        for _ in range(3):
            proc = subprocess.run(
                [sys.executable, "-m", "zonodt", *SUBCOMMANDS[name], "--threads", threads, "--no-cache"],
                capture_output=True, env=env, check=False,
            )
            assert proc.returncode == 0, proc.stderr.decode()
            outputs.add(proc.stdout)
    assert len(outputs) == 1
    assert not (tmp_path / "unused").exists()
