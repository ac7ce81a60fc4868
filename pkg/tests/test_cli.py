from __future__ import annotations

import json

import pytest

from conftest import K_TABLE
from palfact import lemmas
from palfact.cache import SCHEMA_VERSION, CacheEntry, ResultCache, payload_checksum
from palfact.cli import dispatch
from palfact.lemmas import LemmaReport


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_m_prints_measure(self, capsys):
        code, out, _ = run(capsys, "m", "aababbaabab")
        assert code == 0
        assert out.strip() == "5"

    def test_factor_prints_blocks(self, capsys):
        code, out, _ = run(capsys, "factor", "aabab")
        assert code == 0
        assert out.strip() == "(aa)(bab)"

    def test_m_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "m", "ab")
        assert code == 0
        assert json.loads(out) == {"word": "ab", "m": 2}

    def test_digit_alias_accepted(self, capsys):
        code, out, _ = run(capsys, "m", "01101")
        assert code == 0

    def test_invalid_word_is_usage_error(self, capsys):
        code, _, err = run(capsys, "m", "aXb")
        assert code == 2
        assert "position 2" in err

    def test_unknown_command_is_usage_error(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2

    def test_unknown_flag_is_usage_error(self, capsys):
        code, _, err = run(capsys, "m", "--zap", "ab")
        assert code == 2

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "kmax" in out


class TestKmaxCommand:
    def test_csv_matches_table(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "kmax", "--max-n", "15")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,K,maximizer_count"
        assert len(lines) == 16
        for n, line in enumerate(lines[1:], start=1):
            fields = line.split(",")
            assert int(fields[0]) == n
            assert int(fields[1]) == K_TABLE[n - 1]

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "kmax", "--max-n", "11")
        assert code == 0
        rows = json.loads(out)
        row11 = rows[-1]
        assert set(row11) == {"n", "K", "maximizer_count", "orbits"}
        assert row11["K"] == 5
        assert row11["maximizer_count"] == 4
        assert row11["orbits"][0]["representative"] == "aababbaabab"
        assert row11["orbits"][0]["size"] == 4

    def test_long_guard(self, capsys):
        code, _, err = run(capsys, "kmax", "--max-n", "27")
        assert code == 2
        assert "--allow-long" in err

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run(capsys, "--format", "json", "kmax", "--max-n", "9")
        _, second, _ = run(capsys, "--format", "json", "kmax", "--max-n", "9")
        assert first == second

    def test_thread_count_does_not_change_output(self, capsys):
        _, one, _ = run(capsys, "--threads", "1", "--format", "csv", "kmax", "--max-n", "10")
        _, four, _ = run(capsys, "--threads", "4", "--format", "csv", "kmax", "--max-n", "10")
        assert one == four

    def test_options_accepted_after_subcommand(self, capsys):
        code, post, _ = run(capsys, "kmax", "--max-n", "15", "--format", "csv")
        assert code == 0
        _, pre, _ = run(capsys, "--format", "csv", "kmax", "--max-n", "15")
        assert post == pre

    def test_subcommand_option_wins(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "m", "ab", "--format", "csv")
        assert code == 0
        assert out.strip().splitlines()[0] == "word,m"


class TestKbarAndHistogram:
    def test_kbar_csv_schema(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "kbar", "--max-n", "6")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,S,kbar_decimal,kbar_num,kbar_den_pow2"
        assert lines[4] == "4,28,1.75,7,2"
        assert lines[6] == "6,132,2.06,33,4"

    def test_histogram_csv(self, capsys):
        code, out, _ = run(capsys, "--format", "csv", "histogram", "--n", "3")
        assert code == 0
        assert out.strip().splitlines() == ["n,k,x_k", "3,1,4", "3,2,4"]

    def test_histogram_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "histogram", "--n", "2")
        assert code == 0
        assert json.loads(out) == {"n": 2, "counts": {"1": 2, "2": 2}}

    def test_worst_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "worst", "--n", "11")
        assert code == 0
        doc = json.loads(out)
        assert doc["K"] == 5
        assert len(doc["orbits"]) == 1
        assert doc["orbits"][0]["size"] == 4


class TestVerifyCommand:
    def test_verify_all_passes(self, capsys):
        code, out, _ = run(capsys, "--seed", "42", "verify", "all", "--max-n", "14", "--trials", "500")
        assert code == 0
        assert "theorem1: PASS" in out
        assert "lemma3: PASS" in out

    def test_verify_all_with_trailing_seed(self, capsys):
        code, _, _ = run(capsys, "verify", "all", "--max-n", "14", "--seed", "42", "--trials", "500")
        assert code == 0

    def test_verify_all_standard_invocation(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--max-n", "20", "--seed", "42")
        assert code == 0
        assert out.count("PASS") == 11  # 8 claim reports + theorem1 + subadditivity + counting

    def test_verify_json_is_single_document(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "verify", "lemma9")
        assert code == 0
        reports = json.loads(out)
        assert isinstance(reports, list) and len(reports) == 1
        assert set(reports[0]) == {"lemma", "params", "verdict", "counterexamples"}
        assert reports[0]["verdict"] == "pass"

    def test_verify_failure_exits_one(self, capsys, monkeypatch):
        fake = LemmaReport("lemma9", {"n_max": 5}, 6, ({"n": 0, "m": 99, "expected": 6},))
        monkeypatch.setattr(lemmas, "verify_lemma9", lambda n_max: fake)
        code, out, _ = run(capsys, "verify", "lemma9")
        assert code == 1
        assert "FAIL" in out
        assert "counterexample" in out

    def test_verify_seed_changes_params_only(self, capsys):
        _, out1, _ = run(capsys, "--seed", "1", "--format", "json", "verify", "ksum", "--trials", "200")
        _, out2, _ = run(capsys, "--seed", "1", "--format", "json", "verify", "ksum", "--trials", "200")
        assert out1 == out2

    def test_verify_rejects_bad_target(self, capsys):
        code, _, _ = run(capsys, "verify", "lemma6")
        assert code == 2


class TestBoundsCommand:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "bounds")
        assert code == 0
        doc = json.loads(out)
        assert doc["upper_exact"] == {"num": 372487, "den": "7*2^18"}
        assert abs(doc["theta_prime"] - 0.09488) < 1e-4
        assert abs(doc["lower"] - 0.08781) < 1e-4
        assert abs(doc["upper"] - 372487 / (7 * 2**18)) < 1e-12
        assert len(doc["g_prime_roots"]) == 2

    def test_table_mode(self, capsys):
        code, out, _ = run(capsys, "bounds")
        assert code == 0
        assert "0.08781" in out
        assert "0.2030" in out


class TestCache:
    def test_roundtrip(self, tmp_path):
        cache = ResultCache(tmp_path)
        entry = CacheEntry(kind="kmax", n=20, payload={"n": 20, "K": 8, "maximizer_count": 8, "sample_maximizers": []})
        assert cache.store(entry)
        assert cache.load("kmax", 20) == entry.payload

    def test_checksum_guards_payload(self, tmp_path):
        cache = ResultCache(tmp_path)
        entry = CacheEntry(kind="kmax", n=5, payload={"n": 5, "K": 2})
        cache.store(entry)
        path = tmp_path / "kmax_5.json"
        doc = json.loads(path.read_text())
        doc["payload"]["K"] = 99
        path.write_text(json.dumps(doc))
        with pytest.warns(UserWarning):
            assert cache.load("kmax", 5) is None

    def test_truncated_file_recomputes(self, tmp_path):
        cache = ResultCache(tmp_path)
        cache.store(CacheEntry(kind="histogram", n=4, payload={"n": 4, "counts": {"1": 4}}))
        path = tmp_path / "histogram_4.json"
        path.write_text(path.read_text()[: len(path.read_text()) // 2])
        with pytest.warns(UserWarning):
            assert cache.load("histogram", 4) is None

    def test_version_bump_recomputes(self, tmp_path):
        cache = ResultCache(tmp_path)
        cache.store(CacheEntry(kind="kmax", n=3, payload={"n": 3, "K": 2}))
        path = tmp_path / "kmax_3.json"
        doc = json.loads(path.read_text())
        assert doc["schema_version"] == SCHEMA_VERSION
        doc["schema_version"] = SCHEMA_VERSION + 1
        path.write_text(json.dumps(doc))
        with pytest.warns(UserWarning):
            assert cache.load("kmax", 3) is None

    def test_unwritable_directory_warns_not_fails(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("file, not a directory")
        cache = ResultCache(blocker / "sub")
        with pytest.warns(UserWarning):
            stored = cache.store(CacheEntry(kind="kmax", n=1, payload={"n": 1}))
        assert stored is False

    def test_checksum_is_canonical(self):
        a = payload_checksum({"x": 1, "y": 2})
        b = payload_checksum({"y": 2, "x": 1})
        assert a == b

    def test_disabled_cache(self):
        cache = ResultCache(None)
        assert cache.load("kmax", 1) is None
        assert not cache.store(CacheEntry(kind="kmax", n=1, payload={}))


class TestCliCacheIntegration:
    def test_cached_rows_equal_fresh(self, capsys, tmp_path):
        code, fresh, _ = run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "kmax", "--max-n", "10")
        assert code == 0
        assert (tmp_path / "kmax_10.json").exists()
        code, cached, _ = run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "kmax", "--max-n", "10")
        assert code == 0
        assert cached == fresh

    def test_histogram_cache_reused_by_kbar(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "kbar", "--max-n", "8")
        assert (tmp_path / "histogram_8.json").exists()
        code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "histogram", "--n", "8")
        assert code == 0

    def test_corrupt_cache_recomputed(self, capsys, tmp_path):
        run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "kmax", "--max-n", "6")
        (tmp_path / "kmax_6.json").write_text("{not json")
        with pytest.warns(UserWarning):
            code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--format", "csv", "kmax", "--max-n", "6")
        assert code == 0
        assert out.strip().splitlines()[-1] == f"6,{K_TABLE[5]},12"

    def test_env_var_overrides_flag(self, capsys, tmp_path, monkeypatch):
        env_dir = tmp_path / "from_env"
        flag_dir = tmp_path / "from_flag"
        monkeypatch.setenv("PALIN_CACHE_DIR", str(env_dir))
        code, _, _ = run(capsys, "--cache-dir", str(flag_dir), "--format", "csv", "kmax", "--max-n", "4")
        assert code == 0
        assert (env_dir / "kmax_4.json").exists()
        assert not flag_dir.exists()
