"""Campaign sweeps, JSONL reports and the verification suites."""

import json
import random
from fractions import Fraction as F

import pytest

from turanstab import expressions, harness, sequences
from turanstab.harness import (
    CampaignConfig,
    DEFAULT_SEED,
    EXTREME_ROOT_TOL,
    emit_reports,
    oracle_agreement,
    polar_unit_sequence,
    question_probe_jensen,
    random_squarefree_poly,
    run_campaign,
    verify_chebyshev_closed_forms,
    verify_fisk_counterexample,
    verify_jensen_laguerre_relations,
    verify_legendre_turan,
    verify_theorem_1_2,
    verify_wronskian_strip,
)
from turanstab.polycore import Poly
from turanstab.sequences import POLAR_UNIT


def bell_cfg(**kw):
    base = dict(family=sequences.spec("bell"), k_max=4, n_max=2)
    base.update(kw)
    return CampaignConfig(**base)


def spoiler_builder(window, n, reflect, shift):
    # plant a right-half-plane root to exercise the flag path
    return harness._default_builder(window, n, reflect, shift) * Poly([-1, 1])


class TestCampaign:
    def test_grid_shape_and_order(self):
        records = run_campaign(bell_cfg())
        assert len(records) == 5 * 2
        keys = [r.sort_key() for r in records]
        assert keys == sorted(keys)

    def test_windowed_builder_matches_direct_expression(self):
        records = run_campaign(bell_cfg())
        seq = sequences.generate(sequences.spec("bell"), 4 + 2 * 2)
        for rec in records:
            expr = expressions.extended_turan(seq, rec.k, rec.n)
            assert rec.degree == expr.degree()

    def test_bell_grid_all_stable(self):
        records = run_campaign(bell_cfg())
        assert all(r.verdict and not r.flagged for r in records)

    def test_deterministic_across_jobs(self, tmp_path):
        paths = []
        for jobs in (1, 2):
            records = run_campaign(bell_cfg(jobs=jobs))
            path = tmp_path / f"report-{jobs}.jsonl"
            emit_reports(records, path)
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]

    def test_counterexample_flagging(self):
        records = run_campaign(bell_cfg(k_max=2, n_max=1), builder=spoiler_builder)
        assert all(r.flagged and not r.verdict for r in records)

    def test_tier_limits(self):
        with pytest.raises(ValueError):
            bell_cfg(k_max=30, tier="desk").validate()
        bell_cfg(k_max=30, tier="full").validate()
        with pytest.raises(ValueError):
            bell_cfg(n_max=0).validate()
        with pytest.raises(ValueError):
            bell_cfg(jobs=0).validate()


class TestReports:
    def test_schema(self, tmp_path):
        records = run_campaign(bell_cfg(k_max=1, n_max=1))
        path = tmp_path / "r.jsonl"
        emit_reports(records, path)
        lines = path.read_text().splitlines()
        assert len(lines) == len(records)
        for line in lines:
            rec = json.loads(line)
            assert rec["schema"] == 1
            assert set(rec) == {
                "schema", "family", "k", "n", "degree",
                "verdict", "flagged", "certificate",
            }
            assert "elapsed_ms" not in rec

    def test_timing_opt_in(self, tmp_path):
        records = run_campaign(bell_cfg(k_max=1, n_max=1))
        path = tmp_path / "t.jsonl"
        emit_reports(records, path, with_timing=True)
        rec = json.loads(path.read_text().splitlines()[0])
        assert "elapsed_ms" in rec

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(OSError):
            emit_reports([], tmp_path / "missing" / "r.jsonl")


class TestSuites:
    def test_fisk(self):
        assert verify_fisk_counterexample()

    def test_chebyshev_closed_forms_small(self):
        assert verify_chebyshev_closed_forms(6, 3)

    def test_legendre_small(self):
        assert verify_legendre_turan(8)

    def test_wronskian_strip_small(self):
        assert verify_wronskian_strip(20, seed=DEFAULT_SEED)

    def test_jensen_relations_small(self):
        assert verify_jensen_laguerre_relations(10, seed=DEFAULT_SEED)

    def test_theorem_bell_small(self):
        assert verify_theorem_1_2(sequences.spec("bell"), 8)

    def test_theorem_type_a_with_shift(self):
        spec = sequences.spec("type_a", a=1, b=F(1, 2), c=[F(j + 1) for j in range(12)])
        assert verify_theorem_1_2(spec, 8)

    def test_theorem_hermite_small(self):
        assert verify_theorem_1_2(sequences.spec("hermite"), 6)

    def test_theorem_polar_sequence(self):
        seq = polar_unit_sequence(10)
        assert sequences.verify_relation(seq, POLAR_UNIT)
        assert verify_theorem_1_2(seq, 8)

    def test_theorem_rejects_bad_sequence(self):
        with pytest.raises(ValueError):
            verify_theorem_1_2(sequences.bell(10), 8)  # wrong polar relation
        with pytest.raises(ValueError):
            verify_theorem_1_2(polar_unit_sequence(3), 8)  # too short

    def test_question_probe_reports_all_k(self):
        out = question_probe_jensen(5)
        assert [k for k, _ in out] == list(range(6))
        assert all(isinstance(v, bool) for _, v in out)

    def test_extreme_root_tol_pinned(self):
        assert EXTREME_ROOT_TOL == F(1, 1 << 20)


class TestOracleAgreement:
    def test_random_squarefree(self):
        rng = random.Random(DEFAULT_SEED)
        from turanstab import polycore

        for _ in range(25):
            p = random_squarefree_poly(rng, max_degree=6)
            assert 1 <= p.degree() <= 6
            assert polycore.is_squarefree(p)

    def test_agreement_sample(self):
        agreements, total, mismatches = oracle_agreement(samples=60)
        assert total == 60
        assert agreements == total
        assert mismatches == []

    def test_seed_determinism(self):
        a = oracle_agreement(samples=20, seed=7)
        b = oracle_agreement(samples=20, seed=7)
        assert a == b
