import io
import logging
from dataclasses import replace

import numpy as np
import pytest

from bench.run_config import RunConfig
from bench.runner import run, run_instance, write_csv

logger = logging.getLogger(__name__)


def csv_text(config: RunConfig, workers: int) -> str:
    out = io.StringIO()
    write_csv(list(run(config, workers=workers)), out)
    return out.getvalue()


class TestDeterminism:
    @pytest.fixture
    def config(self):
        return RunConfig(
            family="3reg",
            sizes=(6, 8),
            topology="grid",
            router="sabre",
            instances=4,
            base_seed=11,
        )

    @pytest.mark.integration
    def test_repeat_runs_are_identical(self, config):
        assert csv_text(config, workers=1) == csv_text(config, workers=1)

    @pytest.mark.integration
    @pytest.mark.timeout(300)
    def test_worker_count_does_not_change_output(self, config):
        assert csv_text(config, workers=1) == csv_text(config, workers=3)

    @pytest.mark.integration
    def test_base_seed_changes_instances(self, config):
        shifted = replace(config, base_seed=12)
        assert csv_text(config, 1) != csv_text(shifted, 1)


class TestShuffleVersusHeuristic:
    @pytest.mark.slow
    @pytest.mark.timeout(1800)
    @pytest.mark.parametrize("size", [16, 32])
    def test_dense_instances_favor_shuffle(self, size):
        counts = {}
        for router in ("shuffle", "sabre"):
            config = RunConfig(family="sk", sizes=(size,), topology="line", router=router)
            counts[router] = np.mean(
                [run_instance(config, size, instance).two_q_count for instance in range(20)]
            )
        logger.info("SK-%d on a line: shuffle %.1f, heuristic %.1f", size, *counts.values())
        if counts["shuffle"] > counts["sabre"]:
            pytest.xfail(
                f"shuffle averaged {counts['shuffle']:.1f} CNOTs, "
                f"heuristic {counts['sabre']:.1f}"
            )
