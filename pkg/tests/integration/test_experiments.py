import json

import pytest

from apstrip import __version__
from apstrip.harness.config import ExperimentId, parse_config
from apstrip.harness.experiments import EXPERIMENTS
from apstrip.harness.results import OutputFormat
from apstrip.harness.runner import list_experiments, run_experiment


def run(text, out_dir, fmt=None):
    return run_experiment(parse_config(text), out_dir, fmt)


# Experiments whose distances go through the parallel maps, plus one that does not
DETERMINISM_CASES = [
    ("kernel-properties", "max_degree = 2\nt_max = 5\nt_step = 0.5"),
    ("metrics-ordering", "pairs = 1\np = 1, 2\nrungs = 2\nbridge_lengths = 1.5\ngaussian_T = 27"),
    ("theorem1-approx", "sums = 2\nrungs = 3\nseparator_degrees = 2\nseparator_t0 = 9\nseparator_rungs = 1"),
    ("theorem2-rate", "m = 1\nH = 0.5\nrungs = 3\nshift_step = 0.5"),
]


class TestRegistry:
    def test_every_experiment_registered(self):
        assert set(EXPERIMENTS) == set(ExperimentId)

    def test_listing_order_and_defaults(self):
        listing = list_experiments()
        assert [experiment.id for experiment, _ in listing] == list(ExperimentId)
        defaults = dict((experiment.id, values) for experiment, values in listing)
        assert defaults[ExperimentId.THEOREM4_SEPARATION]["p'"] == 2.0
        assert defaults[ExperimentId.LEMMA2] == {"q_max": 50, "j_range": 200}


@pytest.mark.integration
class TestCheapExperiments:
    def test_lemma1(self, tmp_path):
        table = run("experiment = lemma1\nR = 20\ndense_step = 0.1", tmp_path)
        assert table.passed, table.first_failure
        assert table.columns[0] == "R"
        assert len(table.rows) == 1

    def test_lemma2(self, tmp_path):
        table = run("experiment = lemma2\nq_max = 10\nj_range = 30", tmp_path)
        assert table.passed, table.first_failure
        assert len(table.rows) == 20
        assert all(row[3] is True for row in table.rows)

    def test_lemma3(self, tmp_path):
        table = run("experiment = lemma3\ntau = 1, 2.5", tmp_path)
        assert table.passed, table.first_failure
        assert [row[0] for row in table.rows] == [1.0, 2.5]
        assert any(check.name == "integer-shift-gap[tau=1]" for check in table.checks)

    def test_lemma4(self, tmp_path):
        table = run("experiment = lemma4\nx_step = 0.01", tmp_path)
        assert table.passed, table.first_failure
        assert [row[0] for row in table.rows] == [1.0, 1.5, 2.0, 3.0]
        assert all(row[1] == 301 for row in table.rows)

    def test_kernel_properties(self, tmp_path):
        table = run("experiment = kernel-properties\nmax_degree = 3\nt_max = 10\nt_step = 0.1", tmp_path)
        assert table.passed, table.first_failure
        assert len(table.checks) == 12
        # One basis element: 3 + 5 + 7 tuples; two elements: 9 + 25 + 49
        assert len(table.rows) == 15 + 83

    def test_theorem1_exact_parts(self, tmp_path):
        text = "\n".join([
            "experiment = theorem1-approx",
            "sums = 3",
            "rungs = 3",
            "separator_degrees = 2",
            "separator_t0 = 9",
            "separator_rungs = 1",
        ])
        table = run(text, tmp_path)
        status = {check.name: check.passed for check in table.checks}
        assert status["convolution-exact"]
        assert status["approximant-within-leakage"]
        assert [row[0] for row in table.rows].count("A") == 9

    def test_theorem2_small(self, tmp_path):
        table = run("experiment = theorem2-rate\nm = 1, 2\nH = 0, 0.5\nrungs = 3\nshift_step = 0.5", tmp_path)
        assert table.passed, table.first_failure
        assert len(table.rows) == 2 * 2 * 3

    def test_separation_tables_report_ratios(self, tmp_path):
        text = "experiment = theorem3-separation\nlevels = 2, 3\nn = 0\nl_max = 3\ntail_m = 2\nrungs = 2"
        table = run(text, tmp_path)
        assert table.columns[-2:] == ["bound", "ratio"]
        for row in table.rows:
            assert row[-1] == pytest.approx(row[-3] / row[-2])


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.timeout(1800)
class TestFullExperiments:
    def test_metrics_ordering(self, tmp_path):
        table = run("experiment = metrics-ordering\npairs = 2\np = 1, 2", tmp_path)
        assert table.passed, table.first_failure

    def test_mean_value(self, tmp_path):
        table = run("experiment = mean-value", tmp_path)
        assert table.passed, table.first_failure
        assert [row[0] for row in table.rows].count("exp-sum") == 20 * 6

    def test_lemma1_wide_scan(self, tmp_path):
        table = run("experiment = lemma1\nR = 729", tmp_path)
        assert table.passed, table.first_failure
        assert table.rows[0][0] == 729

    def test_theorem1(self, tmp_path):
        table = run("experiment = theorem1-approx", tmp_path)
        assert table.passed, table.first_failure
        status = {check.name: check.passed for check in table.checks}
        assert status["separator-approximants-improve"]
        assert [row[0] for row in table.rows].count("A") == 3 * 100
        assert [row[0] for row in table.rows].count("B") == 3 * 2

    def test_theorem2(self, tmp_path):
        table = run("experiment = theorem2-rate", tmp_path)
        assert table.passed, table.first_failure
        assert {check.name for check in table.checks} == {"finite-window-bound", "limit-bound"}
        assert len(table.rows) == 4 * 2 * 6

    def test_theorem3(self, tmp_path):
        table = run("experiment = theorem3-separation", tmp_path)
        assert table.passed, table.first_failure
        ratios = {row[0]: [] for row in table.rows}
        for row in table.rows:
            ratios[row[0]].append(row[-1])
        assert min(ratios["window"]) >= 1.0 - 1e-6
        assert max(ratios["besicovitch"]) <= 1.0
        assert max(ratios["tail"]) <= 1.0 + 1e-6

    def test_theorem4(self, tmp_path):
        table = run("experiment = theorem4-separation", tmp_path)
        assert table.passed, table.first_failure
        windows = [row for row in table.rows if row[0] == "window-p'"]
        assert min(row[-1] for row in windows) >= 1.0 - 1e-6
        (slope,) = [row for row in table.rows if row[0] == "slope"]
        assert slope[-1] == pytest.approx(1.0, abs=0.1)


@pytest.mark.integration
class TestRunner:
    def test_files_and_metadata(self, tmp_path):
        table = run("experiment = lemma2\nq_max = 3\nj_range = 5", tmp_path / "out")
        document = json.loads((tmp_path / "out" / "lemma2.json").read_text(encoding="utf-8"))
        assert document["metadata"]["version"] == __version__
        assert document["metadata"]["config"] == {
            "experiment": "lemma2",
            "params": {"q_max": 3, "j_range": 5},
        }
        assert document["metadata"]["wall_time"] >= 0
        csv_lines = (tmp_path / "out" / "lemma2.csv").read_text(encoding="utf-8").splitlines()
        assert csv_lines[0] == "q,start,difference,holds"
        assert len(csv_lines) == len(table.rows) + 1

    def test_config_output_and_format(self, tmp_path):
        cfg = parse_config(f"experiment = lemma2\nq_max = 2\noutput = {tmp_path / 'cfg'}\nformat = csv")
        run_experiment(cfg)
        assert [p.name for p in (tmp_path / "cfg").iterdir()] == ["lemma2.csv"]

    def test_arguments_override_config(self, tmp_path):
        cfg = parse_config(f"experiment = lemma2\nq_max = 2\noutput = {tmp_path / 'cfg'}\nformat = csv")
        run_experiment(cfg, tmp_path / "cli", OutputFormat.JSON)
        assert not (tmp_path / "cfg").exists()
        assert [p.name for p in (tmp_path / "cli").iterdir()] == ["lemma2.json"]

    @pytest.mark.parametrize("experiment, params", DETERMINISM_CASES, ids=[case[0] for case in DETERMINISM_CASES])
    def test_results_do_not_depend_on_thread_count(self, tmp_path, monkeypatch, fresh_settings, experiment, params):
        text = f"experiment = {experiment}\n{params}"
        outputs = []
        for threads in ("1", "4", "4"):
            monkeypatch.setenv("APSTRIP_THREADS", threads)
            fresh_settings.cache_clear()
            assert fresh_settings().worker_count == int(threads)
            out_dir = tmp_path / f"run-{len(outputs)}"
            run(text, out_dir, OutputFormat.CSV)
            outputs.append((out_dir / f"{experiment}.csv").read_bytes())
        assert outputs[0] == outputs[1] == outputs[2]
