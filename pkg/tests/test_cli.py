from __future__ import annotations

import json
import logging

import pytest

from zonodt import __version__, cli
from zonodt.cache import ResultCache

K23 = '{"matrix": [[1, 1], [1, 1]], "gamma": [2, 3]}'
K4E = '{"n": 4, "edges": [[1, 2, 1], [1, 4, 1], [2, 3, 1], [2, 4, 1], [3, 4, 1]]}'


def invoke(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_envelope_shape(capsys, cache_dir):
    code, env, _ = invoke(capsys, "dt", "--quiver", K23, "--cache-dir", cache_dir)
    assert code == 0
    assert set(env) == {"schema", "subcommand", "input_hash", "version", "payload"}
    assert env["schema"] == 1 and env["subcommand"] == "dt" and env["version"] == __version__
    assert len(env["input_hash"]) == 64
    assert env["payload"]["dt"] == 4


def test_timing_only_on_request(capsys):
    _, env, _ = invoke(capsys, "formula", "reineke", "--m", "3", "--n", "4", "--no-cache", "--timing")
    assert "seconds" in env["timing"]
    assert env["payload"]["value"] == 28


def test_quantum_dt(capsys):
    _, env, _ = invoke(capsys, "quantum-dt", "--quiver", K23, "--no-cache")
    p = env["payload"]
    assert p["omega_tilde"] == [1, 1, 2]
    assert p["chi"] == -12 and p["dt"] == 4 and p["n_gamma"] == 3
    assert p["efimov_gradings"] == [[-12, 1], [-10, 1], [-8, 2]]


def test_quantum_dt_sign(capsys):
    _, env, _ = invoke(capsys, "quantum-dt", "--quiver", '{"matrix": [[2]], "gamma": [3]}', "--sign", "--no-cache")
    assert env["payload"]["sign_isotypic"] == [0, 0, 0, 1]
    assert env["payload"]["vandermonde_degree"] == 3


@pytest.mark.parametrize("flag, key, expected", [
    ("--central", "dims", [1, 3, 4]),
    ("--external", "total", 24),
    ("--internal", "total", 2),
])
def test_hilbert(capsys, flag, key, expected):
    _, env, _ = invoke(capsys, "hilbert", "--graph", K4E, flag, "--no-cache")
    assert env["payload"][key] == expected


def test_hilbert_central_three_routes(capsys):
    _, env, _ = invoke(capsys, "hilbert", "--graph", K4E, "--no-cache")
    p = env["payload"]
    assert p["dims"] == p["tutte_specialization"] == p["inverse_system"] == [1, 3, 4]


def test_internal_hilbert_of_tree(capsys):
    tree = '{"n": 3, "edges": [[1, 2, 1], [2, 3, 1]]}'
    _, env, _ = invoke(capsys, "hilbert", "--graph", tree, "--internal", "--no-cache")
    assert env["payload"]["unit_ideal"] is True
    assert env["payload"]["total"] == 0


def test_break_divisors_with_orbits(capsys):
    _, env, _ = invoke(capsys, "break-divisors", "--quiver", K23, "--no-cache")
    p = env["payload"]
    assert p["count"] == 12 and p["orbit_count"] == 4


def test_break_divisor_blocks_must_cover_graph(capsys):
    code, _, err = invoke(capsys, "break-divisors", "--graph", K4E, "--blocks", "2,1", "--no-cache")
    assert code == 2 and "add up to 4" in err


def test_other_subcommands(capsys):
    _, env, _ = invoke(capsys, "tutte", "--graph", K4E, "--no-cache")
    assert env["payload"]["spanning_trees"] == 8 and env["payload"]["T(2,1)"] == 24
    _, env, _ = invoke(capsys, "parking", "--graph", K4E, "--root", "1", "--no-cache")
    assert env["payload"]["generating_function"] == [1, 3, 4]
    _, env, _ = invoke(capsys, "orientable-divisors", "--graph", K4E, "--interior", "--no-cache")
    assert env["payload"]["count"] == 2
    _, env, _ = invoke(capsys, "frobenius", "--m", "3", "--n", "4", "--basis", "s", "--no-cache")
    assert env["payload"]["dimension"] == 432
    _, env, _ = invoke(capsys, "formula", "dt-multipartite", "--m", "3", "--lambda", "2,2", "--no-cache")
    assert env["payload"]["value"] == 126
    _, env, _ = invoke(capsys, "formula", "ramanujan", "--d", "4", "--b", "2", "--no-cache")
    assert env["payload"]["value"] == -2
    _, env, _ = invoke(capsys, "formula", "orbit", "--m", "1", "--lambda", "3", "--s", "1", "--no-cache")
    assert env["payload"]["value"] == 3


def test_verify_single_graph(capsys):
    code, env, _ = invoke(capsys, "verify", "--graph", K4E, "--triangle-n", "3", "--triangle-m", "1", "--no-cache")
    assert code == 0 and env["payload"]["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from zonodt import divisors

    real = divisors.check_break_vanishing

    def broken(G, points=None):
        rep = real(G, points)
        rep.fail(kind="injected")
        return rep

    monkeypatch.setattr(divisors, "check_break_vanishing", broken)
    code, env, _ = invoke(capsys, "verify", "--graph", K4E, "--triangle-n", "2", "--triangle-m", "1", "--no-cache")
    assert code == 1 and env["payload"]["passed"] is False


def test_large_integers_become_strings():
    assert cli.jsonable(2**53) == str(2**53)
    assert cli.jsonable(-(2**60)) == str(-(2**60))
    assert cli.jsonable(2**53 - 1) == 2**53 - 1
    assert cli.jsonable({"a": (1, True)}) == {"a": [1, True]}


def test_malformed_json_reports_position(capsys):
    code, env, err = invoke(capsys, "dt", "--quiver", '{"matrix": [[1, 1],\n [1 1]], "gamma": [2, 3]}', "--no-cache")
    assert code == 2 and env is None
    assert "line 2, column 5" in err


def test_malformed_json_file(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text('{"n": 3,\n  "edges": [[1, 2, 1],]\n}')
    code, _, err = invoke(capsys, "tutte", "--graph", str(path), "--no-cache")
    assert code == 2 and "line 2" in err and "g.json" in err


def test_missing_file(capsys):
    code, _, err = invoke(capsys, "tutte", "--graph", "/nonexistent/g.json", "--no-cache")
    assert code == 2 and "cannot read" in err


@pytest.mark.parametrize("quiver, fragment", [
    ('{"matrix": [[1, 2], [1, 1]], "gamma": [2, 3]}', "not symmetric"),
    ('{"matrix": [[1, 1], [1, 1]], "gamma": [2, 0]}', "positive"),
    ('{"matrix": [[1, 0], [0, 1]], "gamma": [1, 1]}', "disconnected"),
])
def test_invalid_quivers(capsys, quiver, fragment):
    code, _, err = invoke(capsys, "dt", "--quiver", quiver, "--no-cache")
    assert code == 2 and fragment in err


def test_cap_exit_code(capsys):
    code, _, err = invoke(capsys, "orientable-divisors", "--graph", K4E, "--max-edges", "3", "--no-cache")
    assert code == 3 and "cap" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["formula", "reineke", "--m", "0", "--n", "2"])
    assert exc.value.code == 2


def test_missing_formula_parameters(capsys):
    code, _, err = invoke(capsys, "formula", "orbit", "--m", "1", "--no-cache")
    assert code == 2 and "--lambda" in err and "--s" in err


# caching ---------------------------------------------------------------------


def test_cache_hit_gives_identical_payload(capsys, cache_dir):
    argv = ["quantum-dt", "--quiver", K23, "--cache-dir", cache_dir]
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv, "--timing")
    assert second["timing"]["cached"] is True
    second.pop("timing")
    assert first == second


def test_cache_key_ignores_threads_and_formatting(capsys, cache_dir):
    _, a, _ = invoke(capsys, "dt", "--quiver", K23, "--cache-dir", cache_dir)
    _, b, _ = invoke(capsys, "dt", "--quiver", '{"gamma":[2,3],"matrix":[[1,1],[1,1]]}',
                     "--threads", "2", "--cache-dir", cache_dir, "--timing")
    assert b["timing"]["cached"] is True
    assert a["input_hash"] == b["input_hash"]


def test_semantic_flags_change_key(capsys, cache_dir):
    _, a, _ = invoke(capsys, "hilbert", "--graph", K4E, "--cache-dir", cache_dir)
    _, b, _ = invoke(capsys, "hilbert", "--graph", K4E, "--external", "--cache-dir", cache_dir)
    assert a["input_hash"] != b["input_hash"]


def test_version_bump_forces_recompute(capsys, cache_dir, monkeypatch):
    argv = ["dt", "--quiver", K23, "--cache-dir", cache_dir, "--timing"]
    invoke(capsys, *argv)
    monkeypatch.setattr(cli, "__version__", "99.0.0")
    _, env, _ = invoke(capsys, *argv)
    assert env["timing"]["cached"] is False
    assert env["version"] == "99.0.0"


def test_corrupted_entry_is_recomputed(capsys, cache_dir, caplog):
    argv = ["dt", "--quiver", K23, "--cache-dir", cache_dir]
    _, env, _ = invoke(capsys, *argv)
    entry = ResultCache(cache_dir, __version__)._path(env["input_hash"])
    entry.write_text("{not json")
    with caplog.at_level(logging.WARNING, logger="zonodt.cache"):
        code, again, _ = invoke(capsys, *argv, "--timing")
    assert code == 0
    assert again["timing"]["cached"] is False
    assert again["payload"] == env["payload"]
    assert any("corrupted" in r.message for r in caplog.records)
    assert json.loads(entry.read_text())["payload"] == env["payload"]


def test_unwritable_cache_is_disabled(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cache = ResultCache(blocker / "sub", "1")
    with caplog.at_level(logging.WARNING, logger="zonodt.cache"):
        cache.put("k", {"a": 1})
    assert not cache.enabled
    assert cache.get("k") is None


@pytest.mark.parametrize("argv", [
    ["break-divisors", "--graph", K4E, "--quiver", K23],
    ["tutte", "--quiver", K23],
    ["formula", "reineke", "--m", "1", "--n", "2", "--graph", K4E],
    ["frobenius", "--graph", K4E, "--m", "1", "--n", "4"],
])
def test_exactly_one_input_source(capsys, argv):
    code, _, err = invoke(capsys, *argv, "--no-cache")
    assert code == 2 and "--" in err


def test_verify_bundled_corpus(capsys):
    code, env, _ = invoke(capsys, "verify", "--no-cache")
    assert code == 0
    assert env["payload"]["passed"]
    assert len(env["payload"]["checks"]) == 3 * 29
