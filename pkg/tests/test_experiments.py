import json
from pathlib import Path

import numpy as np
import pytest

from sfmst.experiments import (
    ConfigError,
    EfficiencyRow,
    ExperimentConfig,
    ExperimentError,
    default_binnings,
    efficiency_scaling,
    efficiency_table,
    load_config,
    run_ensemble,
    run_single,
)
from sfmst.generate import DisorderType, expected_edge_count
from sfmst.stats import read_histogram_csv


class TestConfig:
    def test_sizes_must_ascend(self):
        with pytest.raises(ConfigError):
            ExperimentConfig((100, 100), 2, None, 1, 0)
        with pytest.raises(ConfigError):
            ExperimentConfig((200, 100), 2, None, 1, 0)
        with pytest.raises(ConfigError):
            ExperimentConfig((), 2, None, 1, 0)

    def test_realizations_positive(self):
        with pytest.raises(ConfigError):
            ExperimentConfig((10,), 2, None, 0, 0)


class TestRunSingle:
    def test_alpha_in_unit_interval_and_tree_ok(self):
        for disorder in (DisorderType.TYPE1, DisorderType.TYPE2, None):
            meas = run_single(50, 2, disorder, seed=3)
            assert 0 < meas.alpha <= 1

    def test_deterministic(self):
        a = run_single(60, 2, DisorderType.TYPE2, seed=5)
        b = run_single(60, 2, DisorderType.TYPE2, seed=5)
        assert a.alpha == b.alpha
        assert (a.degree_hist.counts == b.degree_hist.counts).all()
        assert (a.weight_hist.densities == b.weight_hist.densities).all()

    def test_failure_carries_seed(self):
        with pytest.raises(ExperimentError, match="seed=77"):
            run_single(3, 2, None, seed=77)  # n <= m + 1 cannot generate

    def test_unit_weight_alpha_closed_form(self):
        n = 80
        meas = run_single(n, 2, None, seed=1)
        assert meas.alpha == (n - 1) / expected_edge_count(n, 2)


class TestRunEnsemble:
    def test_bookkeeping_two_sizes(self, tmp_path):
        cfg = ExperimentConfig((30, 60), 2, DisorderType.TYPE1, 3, 11, tmp_path / "out")
        res = run_ensemble(cfg)
        assert set(res.per_size) == {30, 60}
        for n in (30, 60):
            sr = res.per_size[n]
            assert len(sr.seeds) == 3
            assert sr.degree_hist.n_samples == 3 * n  # pooled mass = sum of runs
            assert ((sr.alphas > 0) & (sr.alphas <= 1)).all()
        # seeds are base + global index, replayable
        assert res.per_size[30].seeds == (11, 12, 13)
        assert res.per_size[60].seeds == (14, 15, 16)
        out = tmp_path / "out"
        for name in ("degree_type1.csv", "weight_type1.csv", "efficiency_type1.csv", "meta_type1.json"):
            assert (out / name).exists()

    def test_replay_matches_ensemble(self):
        cfg = ExperimentConfig((40,), 2, DisorderType.TYPE2, 2, 100)
        res = run_ensemble(cfg)
        replay = run_single(40, 2, DisorderType.TYPE2, seed=101)
        assert replay.alpha == res.per_size[40].alphas[1]

    def test_parallel_equals_serial(self):
        cfg = ExperimentConfig((25, 50), 2, DisorderType.TYPE1, 4, 9)
        serial = run_ensemble(cfg, n_jobs=1)
        parallel = run_ensemble(cfg, n_jobs=3)
        for n in cfg.sizes:
            assert (serial.per_size[n].alphas == parallel.per_size[n].alphas).all()
            assert (
                serial.per_size[n].degree_hist.counts
                == parallel.per_size[n].degree_hist.counts
            ).all()

    def test_metadata_contents(self, tmp_path):
        cfg = ExperimentConfig((20,), 2, None, 2, 5, tmp_path)
        res = run_ensemble(cfg)
        meta = json.loads((tmp_path / "meta_none.json").read_text())
        assert meta["rng"] == "PCG64"
        assert meta["realizations"] == 2
        assert meta["seeds"]["20"] == [5, 6]
        assert meta["backend"] in ("numba", "numpy")
        assert res.metadata["failed"] == {"20": []}

    def test_all_failures_raise(self):
        cfg = ExperimentConfig((3,), 2, None, 2, 0)  # n == m + 1: every run fails
        with pytest.raises(ExperimentError, match="0/2"):
            run_ensemble(cfg)

    def test_efficiency_csv_schema(self, tmp_path):
        cfg = ExperimentConfig((20, 40), 2, DisorderType.TYPE2, 2, 3, tmp_path)
        run_ensemble(cfg)
        lines = (tmp_path / "efficiency_type2.csv").read_text().splitlines()
        header = [l for l in lines if not l.startswith("#")][0]
        assert header == "n,mean_alpha,std_alpha,realizations"
        data = [l for l in lines if not l.startswith("#")][1:]
        assert len(data) == 2
        assert data[0].startswith("20,") and data[1].startswith("40,")

    def test_histogram_csv_readable(self, tmp_path):
        cfg = ExperimentConfig((20, 40), 2, DisorderType.TYPE1, 2, 3, tmp_path)
        run_ensemble(cfg)
        table = read_histogram_csv(tmp_path / "degree_type1.csv")
        assert table.meta["n"] == "40"  # largest size is the panel
        assert int(table.counts.sum()) == 2 * 40


class TestEfficiencyScaling:
    def test_needs_three_sizes(self):
        cfg = ExperimentConfig((10, 20), 2, None, 1, 0)
        with pytest.raises(ConfigError):
            efficiency_scaling(cfg)

    def test_unit_weight_closed_form_slope(self):
        sizes = (20, 40, 80)
        cfg = ExperimentConfig(sizes, 2, None, 2, 4)
        sc = efficiency_scaling(cfg)
        expected_alpha = {n: (n - 1) / expected_edge_count(n, 2) for n in sizes}
        for row in sc.rows:
            assert row.mean_alpha == pytest.approx(expected_alpha[row.n], rel=1e-12)
            assert row.std_alpha == 0.0
        x = np.log(sizes)
        y = np.log([expected_alpha[n] for n in sizes])
        assert sc.loglog_slope == pytest.approx(float(np.polyfit(x, y, 1)[0]), rel=1e-9)


class TestDefaultBinnings:
    def test_panel_choices(self):
        from sfmst.stats import LinearBinning, LogBinning

        d1, w1 = default_binnings(DisorderType.TYPE1)
        assert isinstance(d1, LinearBinning) and isinstance(w1, LogBinning)
        d2, w2 = default_binnings(DisorderType.TYPE2)
        assert isinstance(d2, LogBinning) and isinstance(w2, LinearBinning)


class TestConfigFile:
    def test_parse_full(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text(
            "# full example\n"
            "sizes=100,316,1000\n"
            "m=2\n"
            "disorder=type1\n"
            "realizations=10  # per size\n"
            "seed=42\n"
            "out=results\n"
            "threads=4\n"
        )
        cfg, threads = load_config(path)
        assert cfg.sizes == (100, 316, 1000)
        assert cfg.disorder is DisorderType.TYPE1
        assert cfg.realizations == 10
        assert cfg.base_seed == 42
        assert cfg.output_dir == Path("results")
        assert threads == 4

    def test_unknown_key_with_line_number(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("sizes=10\nbogus=1\n")
        with pytest.raises(ConfigError, match=r"exp\.cfg:2"):
            load_config(path)

    def test_duplicate_key(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("sizes=10\nsizes=20\n")
        with pytest.raises(ConfigError, match=":2"):
            load_config(path)

    def test_missing_sizes(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("m=2\n")
        with pytest.raises(ConfigError, match="sizes"):
            load_config(path)

    def test_bad_integer(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("sizes=10\nrealizations=ten\n")
        with pytest.raises(ConfigError, match="realizations"):
            load_config(path)

    def test_bad_disorder(self, tmp_path):
        path = tmp_path / "exp.cfg"
        path.write_text("sizes=10\ndisorder=type9\n")
        with pytest.raises(ConfigError, match="disorder"):
            load_config(path)
