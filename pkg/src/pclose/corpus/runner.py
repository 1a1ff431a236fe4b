#
#  Copyright 2024 by C Change Labs Inc. www.c-change-labs.com
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
#
"""
Suite execution over a corpus tier.

Instances are evaluated in worker processes, each of which rebuilds the tier from its builders and is told
only instance positions. Results are reduced in corpus order, so a report does not depend on the number of
workers or on scheduling.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
import logging
import os
import time
from typing import Any, Iterable, Sequence

from pclose import const
from pclose.corpus.instances import CorpusInstance, generate_corpus
from pclose.corpus.suite import (
    InstanceOutcome,
    InstanceStatus,
    Suite,
    SuiteDomain,
    SuiteResult,
    evaluate,
    evaluate_corpus,
)
from pclose.corpus.suites import get_suite
from pclose.settings import get_settings, override_settings

LOGGER = logging.getLogger(__name__)


def available_cores() -> int:
    if hasattr(os, "sched_getaffinity"):
        return len(os.sched_getaffinity(0))
    return os.cpu_count() or 1


def _init_worker(settings: dict[str, Any]) -> None:
    override_settings(**settings)


def _evaluate_position(suite_id: str, tier: const.CorpusTier, position: int, seed: int) -> InstanceOutcome:
    return evaluate(get_suite(suite_id), generate_corpus(tier)[position], seed)


def _select(
    suite: Suite, tier: const.CorpusTier, instance_ids: Iterable[str] | None
) -> tuple[list[CorpusInstance], list[int]]:
    """The instances a run ranges over and the positions of those the suite applies to."""
    corpus = generate_corpus(tier)
    wanted = {i.instance_id for i in corpus} if instance_ids is None else set(instance_ids)
    unknown = wanted - {i.instance_id for i in corpus}
    if unknown:
        raise ValueError(f"No instances {', '.join(sorted(unknown))} in the {tier} tier")
    selected = [p for p, instance in enumerate(corpus) if instance.instance_id in wanted]
    instances = [corpus[p] for p in selected]
    return instances, [p for p in selected if suite.applies_to(corpus[p])]


def _outcomes(
    suite: Suite, tier: const.CorpusTier, positions: Sequence[int], seed: int, workers: int
) -> list[InstanceOutcome]:
    if workers <= 1 or len(positions) <= 1:
        return [_evaluate_position(suite.suite_id, tier, p, seed) for p in positions]
    settings = get_settings().dict()
    count = min(workers, len(positions))
    LOGGER.debug("Evaluating %d instances of %s on %d workers", len(positions), suite.suite_id, count)
    with ProcessPoolExecutor(max_workers=count, initializer=_init_worker, initargs=(settings,)) as pool:
        return list(
            pool.map(
                _evaluate_position,
                [suite.suite_id] * len(positions),
                [tier] * len(positions),
                positions,
                [seed] * len(positions),
            )
        )


def reduce_outcomes(
    suite: Suite, tier: const.CorpusTier, seed: int, outcomes: Sequence[InstanceOutcome], wall_time: float | None
) -> SuiteResult:
    """Fold outcomes, in the order given, into a report."""
    reasons: Counter[str] = Counter()
    findings = []
    passed = 0
    for outcome in outcomes:
        match outcome.status:
            case InstanceStatus.Passed:
                passed += 1
            case InstanceStatus.Skipped:
                reasons[outcome.reason or "unspecified"] += 1
            case InstanceStatus.Finding:
                findings.append(outcome.finding)
    return SuiteResult(
        suite_id=suite.suite_id,
        tier=tier,
        seed=seed,
        negative_control=suite.negative_control,
        instances_run=len(outcomes),
        passed=passed,
        skipped=sum(reasons.values()),
        findings=findings,
        skip_reasons=dict(sorted(reasons.items())),
        wall_time=wall_time,
    )


def run_suite(
    suite_id: str,
    tier: const.CorpusTier | str = const.CorpusTier.Small,
    seed: int | None = None,
    *,
    workers: int | None = None,
    instance_ids: Iterable[str] | None = None,
    timing: bool = False,
) -> SuiteResult:
    """
    Run a registered suite over a tier.

    The report is deterministic given the suite, the tier, the seed and the instance selection. Wall time is
    only recorded when `timing` is set.

    :raise ValueError: if the suite, the tier or a selected instance is unknown.
    """
    suite = get_suite(suite_id)
    tier = const.CorpusTier(tier)
    seed = get_settings().default_seed if seed is None else seed
    started = time.monotonic()
    instances, positions = _select(suite, tier, instance_ids)
    if suite.domain == SuiteDomain.Corpus:
        outcomes = [evaluate_corpus(suite, tier, instances, seed)]
    else:
        outcomes = _outcomes(suite, tier, positions, seed, available_cores() if workers is None else workers)
    result = reduce_outcomes(suite, tier, seed, outcomes, time.monotonic() - started if timing else None)
    LOGGER.info(result.summary())
    return result
