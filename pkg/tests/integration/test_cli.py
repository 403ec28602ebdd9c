import pytest
from click.testing import CliRunner

from apstrip import __version__
from apstrip.cli import main
from apstrip.core.exceptions import InvalidParameterError
from apstrip.core.log import configure_logging
from apstrip.harness.config import PARAMS, ExperimentId
from apstrip.harness.experiments import EXPERIMENTS, Experiment
from apstrip.harness.results import Check, ResultTable


@pytest.fixture(autouse=True)
def restore_logging():
    """The CLI points structlog at the runner's streams; reset it afterwards."""
    yield
    configure_logging("WARNING", json=False)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def write_config(tmp_path):
    def write(text, name="experiment.cfg"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def invoke(runner, *args):
    return runner.invoke(main, ["--log-level", "WARNING", *args])


def replace_experiment(monkeypatch, run):
    monkeypatch.setitem(
        EXPERIMENTS,
        ExperimentId.LEMMA2,
        Experiment(ExperimentId.LEMMA2, PARAMS[ExperimentId.LEMMA2], run, "replaced"),
    )


@pytest.mark.integration
class TestCli:
    def test_version(self, runner):
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_list(self, runner):
        result = invoke(runner, "list")
        assert result.exit_code == 0
        assert "lemma2: Progressions inside I whose q-shift avoids I" in result.output
        assert "    q_max = 50" in result.output
        assert "    p = 1.0, 1.5, 2.0, 3.0" in result.output
        assert "    p' = 2.0" in result.output

    def test_run_passes(self, runner, write_config, tmp_path):
        config = write_config("experiment = lemma2\nq_max = 10\nj_range = 20\n")
        result = invoke(runner, "run", config, "--out", str(tmp_path / "out"), "--format", "csv")
        assert result.exit_code == 0, result.output
        assert "lemma2: 20 rows, 2/2 checks passed" in result.output
        assert (tmp_path / "out" / "lemma2.csv").exists()
        assert not (tmp_path / "out" / "lemma2.json").exists()

    def test_failed_check_exits_with_one(self, runner, write_config, tmp_path, monkeypatch):
        def failing(params):
            return ResultTable(
                experiment="lemma2",
                columns=["a"],
                checks=[Check(name="ok", passed=True), Check(name="forced", passed=False, detail="boom")],
            )

        replace_experiment(monkeypatch, failing)
        result = invoke(runner, "run", write_config("experiment = lemma2"), "--out", str(tmp_path))
        assert result.exit_code == 1
        assert "1/2 checks passed" in result.output
        assert "FAILED forced: boom" in result.output

    def test_numerical_error_exits_with_one(self, runner, write_config, tmp_path, monkeypatch):
        def broken(params):
            raise InvalidParameterError("window too short")

        replace_experiment(monkeypatch, broken)
        result = invoke(runner, "run", write_config("experiment = lemma2"), "--out", str(tmp_path))
        assert result.exit_code == 1
        assert "Error: window too short" in result.output

    @pytest.mark.parametrize("text, message", [
        ("experiment = lemma2\nqmax = 3", "Unknown key 'qmax'"),
        ("experiment = lemma2\nq_max = 1\nq_max = 2", "Duplicate key 'q_max'"),
        ("experiment = theorem4-separation\np = 2\np' = 1.5", "p' must exceed p"),
        ("q_max = 3", "Missing required key 'experiment'"),
        ("experiment = lemma2\nq_max", "expected 'key = value'"),
    ])
    def test_config_errors_exit_with_two(self, runner, write_config, text, message):
        result = invoke(runner, "run", write_config(text))
        assert result.exit_code == 2
        assert message in result.output

    def test_binary_config_rejected(self, runner, tmp_path):
        path = tmp_path / "binary.cfg"
        path.write_bytes(b"experiment = lemma2\n\xff\xfe")
        result = invoke(runner, "run", str(path))
        assert result.exit_code == 2
        assert "not a UTF-8 document" in result.output

    def test_missing_config_file(self, runner, tmp_path):
        result = invoke(runner, "run", str(tmp_path / "absent.cfg"))
        assert result.exit_code == 2
