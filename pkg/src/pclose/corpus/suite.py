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
Suites: executable claims checked over the corpus.

A suite ranges over the instances of a tier it applies to. For each of them it first evaluates its hypothesis,
then its check. A check passes by returning, reports a finding by raising `TheoremViolationError`, and skips
the instance by raising `ResourceLimitError`.
"""
from dataclasses import dataclass, field
from enum import StrEnum
import logging
from typing import Any, Callable, Iterator, Mapping, Sequence

from sympy.combinatorics import Permutation

from pclose import const
from pclose.compat.pydantic import pyd
from pclose.corpus.hypotheses import Hypothesis
from pclose.corpus.instances import CorpusInstance
from pclose.dto import BaseDto, GroupDto
from pclose.errors import InternalConsistencyError, ResourceLimitError, TheoremViolationError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import format_cycles
from pclose.utils import random_index, seed_random

LOGGER = logging.getLogger(__name__)


class SuiteDomain(StrEnum):
    """Which instances a suite ranges over."""

    Groups = "groups"
    Actions = "actions"
    All = "all"
    Corpus = "corpus"


class InstanceStatus(StrEnum):
    Passed = "passed"
    Skipped = "skipped"
    Finding = "finding"


Check = Callable[[CorpusInstance], None]
CorpusCheck = Callable[[Sequence[CorpusInstance]], None]


@dataclass(frozen=True)
class Suite:
    """
    A registered suite.

    Corpus-domain suites see the whole tier at once through `corpus_check` and count as a single instance.
    A negative control is a planted violation: its findings are expected.
    """

    suite_id: str
    description: str
    domain: SuiteDomain
    check: Check | None = None
    corpus_check: CorpusCheck | None = None
    hypothesis: Hypothesis | None = None
    negative_control: bool = False

    def applies_to(self, instance: CorpusInstance) -> bool:
        match self.domain:
            case SuiteDomain.Groups:
                return instance.action is None
            case SuiteDomain.Actions:
                return instance.action is not None
            case _:
                return True


class FindingDto(BaseDto):
    """A failed claim on one instance, with what is needed to reproduce it."""

    kind: const.FindingKind
    instance_id: str
    claim: str
    witness: dict[str, Any] = pyd.Field(default_factory=dict)


class SuiteResult(BaseDto):
    """Outcome of one suite over one tier."""

    schema_version: int = const.REPORT_SCHEMA_VERSION
    suite_id: str
    tier: const.CorpusTier
    seed: int
    negative_control: bool = False
    instances_run: int = 0
    passed: int = 0
    skipped: int = 0
    findings: list[FindingDto] = pyd.Field(default_factory=list)
    skip_reasons: dict[str, int] = pyd.Field(default_factory=dict)
    wall_time: float | None = None

    @pyd.root_validator(skip_on_failure=True)
    def check_counts(cls, data: dict[str, Any]) -> dict[str, Any]:
        """Every instance run is passed, skipped or the source of exactly one finding."""
        if data["passed"] + data["skipped"] + len(data["findings"]) != data["instances_run"]:
            raise ValueError("passed + skipped + findings must equal instances_run")
        return data

    @property
    def has_findings(self) -> bool:
        return bool(self.findings)

    def summary(self) -> str:
        line = (
            f"{self.suite_id} [{self.tier}]: {self.instances_run} run, {self.passed} passed, "
            f"{self.skipped} skipped, {len(self.findings)} findings"
        )
        if self.negative_control:
            line += " (negative control)"
        return line


@dataclass(frozen=True)
class InstanceOutcome:
    """What happened to one instance; plain data so it crosses process boundaries."""

    instance_id: str
    status: InstanceStatus
    reason: str | None = None
    finding: dict[str, Any] | None = None


def render_witness(witness: Mapping[str, Any]) -> dict[str, Any]:
    """Subgroups become generator lists, permutations cycle strings, anything else its string form."""
    result: dict[str, Any] = {}
    for name, value in witness.items():
        if isinstance(value, PermGroup):
            result[name] = GroupDto.from_group(value).dict()
        elif isinstance(value, Permutation):
            result[name] = format_cycles(value)
        elif isinstance(value, (int, bool, str)) or value is None:
            result[name] = value
        else:
            result[name] = str(value)
    return result


def _finding(kind: const.FindingKind, instance_id: str, claim: str, witness: dict[str, Any]) -> dict[str, Any]:
    return {"kind": kind, "instance_id": instance_id, "claim": claim, "witness": witness}


def evaluate(suite: Suite, instance: CorpusInstance, seed: int) -> InstanceOutcome:
    """
    Run one suite on one instance.

    Every instance reseeds the random generator, so outcomes do not depend on which worker ran what.
    """
    if suite.check is None:
        raise InternalConsistencyError(f"Suite {suite.suite_id} has no per-instance check")
    if suite.hypothesis is not None:
        reason = suite.hypothesis(instance)
        if reason is not None:
            return InstanceOutcome(instance.instance_id, InstanceStatus.Skipped, reason)
    seed_random(seed)
    try:
        suite.check(instance)
    except ResourceLimitError as e:
        LOGGER.warning("Skipping %s on %s: %s", suite.suite_id, instance.instance_id, e)
        return InstanceOutcome(instance.instance_id, InstanceStatus.Skipped, "resource limit")
    except TheoremViolationError as e:
        return _violation(suite, instance.instance_id, e, instance.to_spec())
    except InternalConsistencyError as e:
        return _internal_error(suite, instance.instance_id, e, instance.to_spec())
    return InstanceOutcome(instance.instance_id, InstanceStatus.Passed)


def evaluate_corpus(
    suite: Suite, tier: const.CorpusTier, instances: Sequence[CorpusInstance], seed: int
) -> InstanceOutcome:
    """
    Run a corpus-domain suite; the whole tier counts as one instance.

    Errors are recorded the way `evaluate` records them: a resource limit skips the tier.
    """
    if suite.corpus_check is None:
        raise InternalConsistencyError(f"Suite {suite.suite_id} has no corpus check")
    instance_id = f"{tier}-corpus"
    seed_random(seed)
    try:
        suite.corpus_check(instances)
    except TheoremViolationError as e:
        return _violation(suite, e.witness.pop("instance_id", instance_id), e, e.witness.pop("instance", None))
    except ResourceLimitError as e:
        LOGGER.warning("Skipping %s on %s: %s", suite.suite_id, instance_id, e)
        return InstanceOutcome(instance_id, InstanceStatus.Skipped, "resource limit")
    except InternalConsistencyError as e:
        return _internal_error(suite, instance_id, e, None)
    return InstanceOutcome(instance_id, InstanceStatus.Passed)


def _violation(suite: Suite, instance_id: str, error: TheoremViolationError, spec: str | None) -> InstanceOutcome:
    level = logging.INFO if suite.negative_control else logging.ERROR
    LOGGER.log(level, "Finding in %s on %s: %s", suite.suite_id, instance_id, error.claim)
    witness = render_witness(error.witness)
    if spec is not None:
        witness["instance"] = spec
    finding = _finding(const.FindingKind.TheoremViolation, instance_id, error.claim, witness)
    return InstanceOutcome(instance_id, InstanceStatus.Finding, finding=finding)


def _internal_error(
    suite: Suite, instance_id: str, error: InternalConsistencyError, spec: str | None
) -> InstanceOutcome:
    LOGGER.error("Internal error in %s on %s: %s", suite.suite_id, instance_id, error)
    witness = {"error": str(error)}
    if spec is not None:
        witness["instance"] = spec
    finding = _finding(const.FindingKind.InternalError, instance_id, suite.suite_id, witness)
    return InstanceOutcome(instance_id, InstanceStatus.Finding, finding=finding)


def violation(claim: str, **witness: Any) -> TheoremViolationError:
    """Shorthand for the error a check raises when its claim fails."""
    return TheoremViolationError(claim, witness)


def sample(items: Sequence[Any], count: int) -> list[Any]:
    """Up to `count` items drawn without replacement with the seeded generator, in their original order."""
    if len(items) <= count:
        return list(items)
    chosen: set[int] = set()
    while len(chosen) < count:
        chosen.add(random_index(len(items)))
    return [items[i] for i in sorted(chosen)]


def pairs(items: Sequence[Any]) -> Iterator[tuple[Any, Any]]:
    """Unordered pairs of distinct positions."""
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


@dataclass
class SuiteRegistry:
    """Registered suites by identifier, in registration order."""

    suites: dict[str, Suite] = field(default_factory=dict)

    def register(self, suite: Suite) -> Suite:
        """
        Register a suite.

        :raise ValueError: if a suite with the same identifier is already registered.
        """
        if suite.suite_id in self.suites:
            raise ValueError(f"Suite already registered: {suite.suite_id}")
        self.suites[suite.suite_id] = suite
        return suite

    def get(self, suite_id: str) -> Suite:
        """
        Return a registered suite.

        :raise ValueError: if the identifier is unknown.
        """
        if suite_id not in self.suites:
            raise ValueError(f"Unknown suite: {suite_id}. See `suite list` for the registered suites.")
        return self.suites[suite_id]

    def get_supported_ids(self) -> list[str]:
        return list(self.suites)

    def negative_controls(self) -> list[Suite]:
        return [s for s in self.suites.values() if s.negative_control]

    def __contains__(self, suite_id: str) -> bool:
        return suite_id in self.suites

    def __len__(self) -> int:
        return len(self.suites)
