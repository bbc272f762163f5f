import io
import json
import subprocess
import sys

import pytest

from formal_modules import cli
from formal_modules.cli import CACHE_ENV, Config, cache_read, cache_write, dispatch
from formal_modules.gpoly import v


def run(*argv):
    out = io.StringIO()
    code = dispatch(list(argv), out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)


class TestOutput:
    def test_logs(self):
        code, text = run("logs", "--p", "3", "--n", "2")
        assert code == 0
        assert "l1 = -1/24*v1" in text
        assert "[PASS] recursive logs = closed-form logs" in text

    def test_right_unit(self):
        code, text = run("right-unit", "--p", "3", "--k", "1")
        assert code == 0
        assert text.splitlines()[0] == "eta_R(v1) = v1 - 24*t1"

    def test_right_unit_ramified(self):
        code, text = run("right-unit", "--p", "3", "--e", "2", "--k", "1")
        assert code == 0
        assert text.splitlines()[0] == "eta_R(v1) = v1 - 2*pi*t1"

    def test_hazewinkel(self):
        code, text = run("right-unit", "--p", "3", "--k", "1", "--convention", "hazewinkel")
        assert code == 0
        assert text.splitlines()[0] == "eta_R(V1) = V1 + 3*t1"

    def test_coproduct(self):
        code, text = run("coproduct", "--p", "3", "--k", "1")
        assert code == 0
        assert text.splitlines()[0] == "Delta(t1) = t1 + t1'"

    def test_witt(self):
        code, text = run("witt", "--p", "3", "--n", "2", "--m", "2")
        assert code == 0
        assert "FAIL" not in text

    def test_invariance(self):
        code, text = run("invariance", "--p", "5", "--h", "2")
        assert code == 0 and "FAIL" not in text

    def test_stabilizer_text(self):
        code, text = run("stabilizer", "--p", "3", "--h", "1", "--k", "2")
        assert code == 0
        assert "Delta(t2) = t2 + t1*t1' - t1^2*t1' - t1*t1'^2 + t2'" in text
        assert "relations: t1^3 = t1, t2^3 = t2" in text

    def test_stabilizer_json(self):
        code, text = run("stabilizer", "--p", "3", "--h", "1", "--k", "2", "--output", "json")
        assert code == 0
        data = json.loads(text)
        assert data["presentation"]["generators"] == ["t1", "t2"]
        assert all(c["pass"] for c in data["report"])

    def test_json_values(self):
        code, text = run("right-unit", "--p", "3", "--k", "2", "--output", "json")
        data = json.loads(text)
        assert set(data["values"]) == {"eta_R(v1)", "eta_R(v2)"}
        assert {c["check"] for c in data["report"]} == {"right unit integral", "recursive = closed-form right unit"}

    def test_verify_all_small(self):
        code, text = run("verify-all", "--p", "3", "--D", "16")
        assert code == 0, text
        assert text.rstrip().endswith("checks passed")

    def test_deterministic(self):
        assert run("coproduct", "--p", "3", "--k", "2") == run("coproduct", "--p", "3", "--k", "2")


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            ["logs", "--p", "4"],
            ["bogus"],
            ["logs", "--n", "0"],
            ["logs", "--p", "3", "--unknown"],
            ["logs", "--convention", "other"],
            [],
        ],
    )
    def test_exit_two(self, argv):
        assert run(*argv)[0] == 2

    def test_version(self, capsys):
        assert run("--version")[0] == 0

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "formal_modules", "logs", "--p", "3", "--n", "1"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert "l1 = -1/24*v1" in proc.stdout

    def test_verification_failure_exits_one(self, monkeypatch):
        import formal_modules.hopf as hopf

        def broken(*args, **kwargs):
            raise ArithmeticError("forced")

        monkeypatch.setattr(hopf, "coproduct_t", broken)
        assert run("coproduct", "--p", "3", "--k", "1")[0] == 1


class TestConfig:
    def test_file_and_override(self, tmp_path):
        path = tmp_path / "cfg.json"
        path.write_text(json.dumps({"p": 5, "k": 1}))
        code, text = run("right-unit", "--config", str(path))
        assert code == 0 and "eta_R(v1) = v1 - 3120*t1" in text
        code, text = run("right-unit", "--config", str(path), "--p", "3")
        assert "eta_R(v1) = v1 - 24*t1" in text

    @pytest.mark.parametrize("content", ["not json", "[1, 2]", '{"colour": 1}'])
    def test_bad_config_file(self, tmp_path, content):
        path = tmp_path / "cfg.json"
        path.write_text(content)
        assert run("logs", "--config", str(path))[0] == 2

    def test_key_depends_on_command_and_ring(self):
        a, b = Config(p=3), Config(p=5)
        assert a.key("logs") != b.key("logs")
        assert a.key("logs") != a.key("coproduct")
        assert a.key("logs") == Config(p=3, output="json").key("logs")


class TestCache:
    def test_round_trip(self, tmp_path):
        cfg = Config(p=3, cache_dir=str(tmp_path))
        ring = cfg.ring()
        cache_write(cfg, "logs", {"l1": v(ring, 1)})
        assert cache_read(cfg, "logs", {"l1": 4}) == {"l1": v(ring, 1)}
        assert cache_read(cfg, "logs", {"l1": 16}) is None  # wrong grading is rejected
        assert cache_read(cfg, "logs", {"l2": 16}) is None

    def test_corrupt_entry_is_recomputed(self, tmp_path):
        code, first = run("logs", "--p", "3", "--n", "2", "--cache-dir", str(tmp_path))
        files = list(tmp_path.glob("logs-*.json"))
        assert code == 0 and len(files) == 1
        files[0].write_text("{ broken")
        code, second = run("logs", "--p", "3", "--n", "2", "--cache-dir", str(tmp_path))
        assert code == 0 and second == first
        assert json.loads(files[0].read_text())["version"]

    def test_cached_value_is_used(self, tmp_path, monkeypatch):
        run("right-unit", "--p", "3", "--k", "1", "--cache-dir", str(tmp_path))
        import formal_modules.hopf as hopf

        def fail(*args, **kwargs):
            raise AssertionError("should have been served from cache")

        monkeypatch.setattr(hopf, "eta_R_v", fail)
        monkeypatch.setattr(hopf, "eta_R_closed", lambda ring, i: v(ring, 1) - v(ring, 1).__class__.var(ring, "t", 1).scale(24))
        code, text = run("right-unit", "--p", "3", "--k", "1", "--cache-dir", str(tmp_path))
        assert code == 0 and "eta_R(v1) = v1 - 24*t1" in text

    def test_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv(CACHE_ENV, str(tmp_path))
        run("logs", "--p", "3", "--n", "1")
        assert list(tmp_path.glob("logs-*.json"))
