import json
import logging

import pytest

from legdet import cli, registry
from legdet.cli import CacheRecord, SCHEMA_VERSION, cache_load, cache_store, main
from legdet.matrixgen import family
from legdet.multiaffine import MultiAffinePoly
from legdet.quadfield import invariants
from legdet.registry import Identity

Y = MultiAffinePoly.var("y")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_rows(capsys):
    code, out, _ = run(capsys, "invariants", "--primes", "5..13", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["p"] for r in rows] == [5, 7, 11, 13]
    assert (rows[0]["2a"], rows[0]["2b"]) == (1, 1)
    assert rows[1]["h_minus"] == 1


@pytest.mark.parametrize("argv", [
    ["invariants", "--primes", "8..10"],
    ["invariants", "--primes", "13..5"],
    ["invariants", "--primes", "five"],
    ["verify", "--id", "no.such.id", "--primes", "5..13"],
    ["verify", "--primes", "5..13"],
    ["verify", "--id", "thm1.3.*", "--primes", "5..13", "--odd", "5..13"],
    ["det", "n=14; range=0..3; atom=j"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_proved_family_exits_0(capsys):
    code, out, _ = run(capsys, "verify", "--id", "thm1.3.*", "--primes", "5..199", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows and all(r["outcome"] == "match" for r in rows)
    assert set(rows[0]) >= {"id", "modulus", "outcome", "computed", "expected", "residual", "engine", "millis"}


def test_verify_odd_range(capsys):
    assert run(capsys, "verify", "--id", "conj5.1.i", "--odd", "9..99", "--format", "csv")[0] == 0


def test_falsified_entry_exits_1(capsys, monkeypatch):
    bogus = Identity("zz.falsified", "theorem", "p = 3 (mod 4)", lambda p: p % 4 == 3,
                     family=family("j+k", "0..(p-1)/2", vars="yz"),
                     rhs=lambda c: (Y + 1) * 3)
    registry.all_identities()
    monkeypatch.setitem(registry._REGISTRY, bogus.id, bogus)
    code, out, _ = run(capsys, "verify", "--id", "zz.*", "--primes", "7..11", "--format", "json")
    assert code == 1
    assert json.loads(out.splitlines()[0])["outcome"] == "mismatch"


def test_discover_marks_published_values(capsys):
    code, out, _ = run(capsys, "discover", "--id", "conj4.6", "--primes", "5..29", "--format", "json")
    assert code == 0
    rows = {r["p"]: r for r in map(json.loads, out.splitlines())}
    assert rows[5]["value"] == 1 and rows[5]["status"] == "agrees"
    assert rows[13]["value"] == 11


def test_discover_reports_table_disagreement(capsys):
    code, out, _ = run(capsys, "discover", "--id", "conj3.7.ii", "--primes", "41..41", "--format", "json")
    row = json.loads(out)
    assert code == 0
    assert (row["value"], row["published"], row["status"]) == (8, 6, "DISAGREES")


def test_det_command(capsys):
    code, out, _ = run(capsys, "det", "n=5; range=0..2; atom=j-k; vars=x")
    assert (code, out.strip()) == (0, "-2 - 5*x")
    code, out, _ = run(capsys, "det", "p=7; range=1..3; atom=j+k-1; vars=x", "--mod", "5")
    assert (code, out.strip()) == (0, "2*x")
    code, out, _ = run(capsys, "det", "n=7; rows=2..5; cols=2..5; atom=j^2+3jk+2k^2", "--mod", "5")
    assert (code, out.strip()) == (0, "3")


def test_report_stream_is_deterministic(capsys):
    argv = ["scan", "--id", "conj3.*", "--primes", "5..43", "--format", "json", "--no-timing"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first[0] == 0
    assert first[1] == second[1]


def test_table_format(capsys):
    code, out, _ = run(capsys, "verify", "--id", "known.evilx", "--primes", "5..11", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].split()[:3] == ["id", "modulus", "outcome"]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert "FAIL" not in out


def records(n):
    from legdet.arith import primes_between

    return [CacheRecord.from_invariants(invariants(p)) for p in primes_between(3, 600)[:n]]


def test_cache_round_trip(tmp_path):
    recs = records(100)
    assert len(recs) == 100
    path = tmp_path / "inv.jsonl"
    cache_store(path, recs)
    assert cache_load(path) == recs
    assert [r.to_invariants() for r in cache_load(path)] == [invariants(r.p) for r in recs]


def test_cache_truncated_line(tmp_path, caplog):
    path = tmp_path / "inv.jsonl"
    cache_store(path, records(100))
    text = path.read_text()
    path.write_text(text[: len(text) - 15])
    with caplog.at_level(logging.WARNING, logger="legdet"):
        loaded = cache_load(path)
    assert len(loaded) == 99
    assert "skipping" in caplog.text


def test_cache_version_bump_ignored(tmp_path, monkeypatch):
    path = tmp_path / "inv.jsonl"
    cache_store(path, records(10))
    monkeypatch.setattr(cli, "SCHEMA_VERSION", SCHEMA_VERSION + 1)
    assert cache_load(path) == []


def test_cache_populated_by_cli(tmp_path, capsys):
    path = tmp_path / "inv.jsonl"
    assert run(capsys, "invariants", "--primes", "3..30", "--cache", str(path), "--format", "csv")[0] == 0
    assert [r.p for r in cache_load(path)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]
    run(capsys, "invariants", "--primes", "3..30", "--cache", str(path), "--format", "csv")
    assert len(cache_load(path)) == 9
