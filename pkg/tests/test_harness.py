import json

import numpy as np
import pytest

from lingcond import (
    ExperimentRecord,
    GridConfig,
    IcaOptions,
    SampleComplexityConfig,
    ThresholdSweepConfig,
    run_grid,
    run_sample_complexity,
    run_threshold_sweep,
    sufficient_n,
    summarize_grid,
    summarize_sample_complexity,
)
from lingcond.harness import CSV_HEADER, load_records, ols_slope, write_records


def tiny_grid_cfg():
    return GridConfig(
        d=6,
        kappas=(2,),
        lambdas=(0.4,),
        regimes=("stable",),
        sample_sizes=(500,),
        seeds=(0, 1),
        mode="hungarian",
        ica=IcaOptions(restarts=1, max_iterations=200),
    )


class TestSufficientN:
    def test_plug_in(self):
        assert sufficient_n(1.0, 1.0, 0.5, 0.5) == pytest.approx(4.0)

    def test_beta_min_scaling(self):
        base = sufficient_n(1.0, 0.5, 1.0, 1.0)
        assert sufficient_n(0.5, 0.5, 1.0, 1.0) == pytest.approx(4 * base)

    def test_delta_scaling(self):
        base = sufficient_n(1.0, 0.4, 1.0, 1.0)
        assert sufficient_n(1.0, 0.1, 1.0, 1.0) == pytest.approx(2 * base)

    def test_domain_checks(self):
        with pytest.raises(ValueError):
            sufficient_n(0.0, 0.5, 1.0, 1.0)
        with pytest.raises(ValueError):
            sufficient_n(1.0, 1.5, 1.0, 1.0)
        with pytest.raises(ValueError):
            sufficient_n(1.0, 0.5, -1.0, 1.0)


class TestRecords:
    def test_csv_round_trip(self):
        rec = ExperimentRecord(
            d=10, kappa=4, lam=0.5, regime="stable", n=1000, seed=3, tau=0.1,
            ari=1.0, cluster_f1=1.0, variable_f1=0.875, hamming=2,
            exact_recovery=False, pred_clusters=5, fit_ms=123.456, ica_iters=17,
        )
        assert ExperimentRecord.from_csv_row(rec.to_csv_row()) == rec

    def test_error_record_round_trip(self):
        rec = ExperimentRecord(
            d=10, kappa=4, lam=0.5, regime="stable", n=50, seed=0, tau=0.1,
            error="WhiteningError",
        )
        parsed = ExperimentRecord.from_csv_row(rec.to_csv_row())
        assert parsed == rec
        assert parsed.ari is None

    def test_malformed_row_rejected(self):
        with pytest.raises(ValueError):
            ExperimentRecord.from_csv_row("1,2,3")

    def test_write_orders_by_key(self, tmp_path):
        recs = [
            ExperimentRecord(d=5, kappa=1, lam=0.5, regime="stable", n=100,
                             seed=s, tau=0.1)
            for s in (2, 0, 1)
        ]
        path = tmp_path / "r.csv"
        write_records(path, recs)
        lines = path.read_text().splitlines()
        assert lines[0] == CSV_HEADER
        assert [ExperimentRecord.from_csv_row(l).seed for l in lines[1:]] == [0, 1, 2]


class TestConfigs:
    def test_seed_count_expansion(self):
        cfg = GridConfig.from_json_dict({"seeds": 3})
        assert cfg.seeds == (0, 1, 2)

    def test_lambda_alias(self):
        cfg = ThresholdSweepConfig.from_json_dict({"lambda": 0.3})
        assert cfg.lam == 0.3

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValueError, match="unknown config keys"):
            GridConfig.from_json_dict({"taus": [0.1]})

    def test_sample_sizes_must_increase(self):
        with pytest.raises(ValueError):
            GridConfig(sample_sizes=(100, 100))

    def test_ica_sub_config(self):
        cfg = GridConfig.from_json_dict({"ica": {"restarts": 1, "seed": 4}})
        assert cfg.ica.restarts == 1

    def test_complexity_default_grid_is_log_spaced(self):
        cfg = SampleComplexityConfig()
        assert cfg.sample_sizes[0] == 100
        assert cfg.sample_sizes[-1] == 100000
        ratios = [b / a for a, b in zip(cfg.sample_sizes, cfg.sample_sizes[1:])]
        assert max(ratios) / min(ratios) < 1.05


class TestRunGrid:
    def test_records_and_rerun_idempotence(self, tmp_path):
        cfg = tiny_grid_cfg()
        out = tmp_path / "grid.csv"
        records = run_grid(cfg, out_path=out)
        assert len(records) == 2
        assert all(not r.error for r in records)
        first_bytes = out.read_bytes()
        rerun = run_grid(cfg, out_path=out)
        assert out.read_bytes() == first_bytes
        assert rerun == records

    def test_resume_recomputes_missing_rows(self, tmp_path):
        cfg = tiny_grid_cfg()
        out = tmp_path / "grid.csv"
        records = run_grid(cfg, out_path=out)
        # drop one row and resume
        kept = [r for r in records if r.seed != 1]
        write_records(out, kept)
        resumed = run_grid(cfg, out_path=out)
        a = [r for r in resumed if r.seed == 1][0]
        b = [r for r in records if r.seed == 1][0]
        assert (a.ari, a.cluster_f1, a.hamming) == (b.ari, b.cluster_f1, b.hamming)

    def test_metrics_deterministic_across_fresh_runs(self, tmp_path):
        cfg = tiny_grid_cfg()
        r1 = run_grid(cfg, out_path=tmp_path / "a.csv")
        r2 = run_grid(cfg, out_path=tmp_path / "b.csv")
        for a, b in zip(r1, r2):
            assert (a.ari, a.cluster_f1, a.variable_f1, a.hamming, a.ica_iters) == (
                b.ari, b.cluster_f1, b.variable_f1, b.hamming, b.ica_iters
            )

    def test_workers_do_not_change_results(self, tmp_path):
        cfg = tiny_grid_cfg()
        serial = run_grid(cfg, out_path=None, workers=1)
        parallel = run_grid(cfg, out_path=None, workers=2)
        for a, b in zip(serial, parallel):
            assert (a.key(), a.ari, a.hamming) == (b.key(), b.ari, b.hamming)

    def test_unique_keys(self, tmp_path):
        records = run_grid(tiny_grid_cfg())
        keys = [r.key() for r in records]
        assert len(set(keys)) == len(keys)


class TestThresholdSweep:
    def test_sweep_shares_fit_and_covers_taus(self, tmp_path):
        cfg = ThresholdSweepConfig(
            d=6, kappa=2, lam=0.4, taus=(0.05, 0.2), sample_sizes=(800,),
            seeds=(0, 1), mode="hungarian", ica=IcaOptions(restarts=1),
        )
        records = run_threshold_sweep(cfg, out_path=tmp_path / "sweep.csv")
        assert len(records) == 4
        by_seed = {}
        for rec in records:
            by_seed.setdefault(rec.seed, []).append(rec)
        for recs in by_seed.values():
            # one shared pipeline per (n, seed): identical fit time and iterations
            assert len({r.fit_ms for r in recs}) == 1
            assert len({r.ica_iters for r in recs}) == 1

    def test_monotone_support_across_taus(self, tmp_path):
        cfg = ThresholdSweepConfig(
            d=6, kappa=2, lam=0.4, taus=(0.05, 0.2, 0.6), sample_sizes=(800,),
            seeds=(0,), mode="hungarian", ica=IcaOptions(restarts=1),
        )
        records = run_threshold_sweep(cfg)
        by_tau = {r.tau: r for r in records}
        # larger tau can only remove edges, so predicted clusters cannot merge
        assert by_tau[0.05].pred_clusters <= by_tau[0.2].pred_clusters <= by_tau[0.6].pred_clusters


class TestSampleComplexity:
    def test_summary_matches_records(self, tmp_path):
        cfg = SampleComplexityConfig(
            d=6, kappa=2, lam=0.4, seeds=(0, 1, 2), sample_sizes=(200, 600),
            window=(100, 1000), ica=IcaOptions(restarts=1),
        )
        records, summary = run_sample_complexity(cfg, out_path=tmp_path / "sc.csv")
        assert len(records) == 6
        assert summary["betaMin"] > 0
        assert summary["tau"] == pytest.approx(summary["betaMin"] / 2)
        recomputed = summarize_sample_complexity(records, cfg.window)
        for key in ("perN", "transitionWindow", "slopeCells", "olsSlope"):
            assert recomputed[key] == summary[key]
        for entry in summary["perN"]:
            subset = [r for r in records if r.n == entry["n"] and not r.error]
            rate = sum(r.exact_recovery for r in subset) / len(subset)
            assert entry["exactRecovery"]["rate"] == pytest.approx(rate)
            assert entry["meanHamming"]["mean"] == pytest.approx(
                np.mean([r.hamming for r in subset])
            )

    def test_tau_is_half_beta_min(self, tmp_path):
        cfg = SampleComplexityConfig(
            d=6, kappa=2, lam=0.4, seeds=(0,), sample_sizes=(300,),
            ica=IcaOptions(restarts=1),
        )
        records, summary = run_sample_complexity(cfg)
        from lingcond import generate_scm

        scm = generate_scm(6, 2, 0.4, seed=cfg.scm_seed)
        assert summary["betaMin"] == pytest.approx(scm.beta_min)
        assert records[0].tau == pytest.approx(scm.beta_min / 2)


class TestSummaries:
    def test_ols_slope_exact_line(self):
        xs = np.log([100, 200, 400])
        ys = -2.0 * xs + 3.0
        assert ols_slope(xs, ys) == pytest.approx(-2.0)

    def test_grid_summary_matches_records(self, tmp_path):
        cfg = tiny_grid_cfg()
        records = run_grid(cfg)
        summary = summarize_grid(records)
        cell = summary["cells"][0]
        good = [r for r in records if not r.error]
        assert cell["seeds"] == len(records)
        assert cell["ari"]["mean"] == pytest.approx(np.mean([r.ari for r in good]))
        assert cell["ari"]["median"] == pytest.approx(np.median([r.ari for r in good]))
        rate = sum(r.exact_recovery for r in good) / len(good)
        assert cell["exactRecovery"]["rate"] == pytest.approx(rate)

    def test_summary_json_serializable(self, tmp_path):
        records = run_grid(tiny_grid_cfg())
        json.dumps(summarize_grid(records))


class TestLoadRecords:
    def test_missing_file(self, tmp_path):
        assert load_records(tmp_path / "nope.csv") == []

    def test_header_check(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("wrong,header\n")
        with pytest.raises(ValueError):
            load_records(path)
