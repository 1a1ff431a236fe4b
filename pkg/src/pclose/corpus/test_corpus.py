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
from unittest import TestCase

from pclose import const
from pclose.corpus.hypotheses import (
    all_of,
    coprime,
    has_action,
    kgroup,
    noncyclic_actors,
    nonsolvable,
    nontrivial_actors,
    rank_at_least,
    within_oracle,
)
from pclose.corpus.instances import generate_corpus, get_instance, instance_ids
from pclose.corpus.runner import run_suite
from pclose.corpus.suite import (
    InstanceStatus,
    Suite,
    SuiteDomain,
    SuiteRegistry,
    SuiteResult,
    evaluate,
    evaluate_corpus,
    render_witness,
    sample,
)
from pclose.corpus.suites import default_registry, get_registry
from pclose.corpus.suites.controls import planted_non_subnormal
from pclose.errors import ConstructionError, InternalConsistencyError, ResourceLimitError, TheoremViolationError
from pclose.perm.permutation import parse_cycles
from pclose.utils import seed_random

SMALL = const.CorpusTier.Small


def small(instance_id: str):
    return get_instance(SMALL, instance_id)


class CorpusTestCase(TestCase):
    def test_tier_contents(self):
        ids = instance_ids(SMALL)
        self.assertIn("S4", ids)
        self.assertIn("inversion-C15", ids)
        self.assertLess(ids.index("S3"), ids.index("D8"))
        self.assertIn("coordinatewise-L2(32)^3", instance_ids(const.CorpusTier.Large))
        self.assertIn("wreath-A5^7", instance_ids("structured"))

    def test_generation(self):
        corpus = generate_corpus(SMALL)
        self.assertEqual(instance_ids(SMALL), [i.instance_id for i in corpus])
        self.assertEqual(24, small("S4").group.order)
        inversion = small("inversion-C15")
        self.assertIsNotNone(inversion.coprime_action)
        self.assertIn("prime: 2", inversion.to_spec())
        self.assertIsNone(small("swap-A5^2").coprime_action)
        with self.assertRaises(ConstructionError):
            small("S8")
        with self.assertRaises(ValueError):
            generate_corpus("huge")


class HypothesisTestCase(TestCase):
    def test_group_predicates(self):
        self.assertIsNone(within_oracle(small("S4")))
        self.assertEqual("beyond oracle bound", within_oracle(small("S7")))
        self.assertEqual("solvable", nonsolvable(small("S4")))
        self.assertIsNone(nonsolvable(small("A5")))
        self.assertIsNone(kgroup(small("A5")))

    def test_action_predicates(self):
        self.assertEqual("no action", has_action(small("S4")))
        self.assertEqual("no action", coprime(small("S4")))
        self.assertEqual("action not coprime", coprime(small("swap-A5^2")))
        self.assertIsNone(coprime(small("inversion-C15")))
        self.assertEqual("trivial actors", nontrivial_actors(small("trivial-A5")))
        self.assertEqual("cyclic actors", noncyclic_actors(small("inversion-C15")))
        self.assertIsNone(noncyclic_actors(small("coordinatewise-C3^3")))
        self.assertIsNone(rank_at_least(3)(small("coordinatewise-C3^3")))
        self.assertEqual("actor rank below 3", rank_at_least(3)(small("affine-C2^3")))

    def test_conjunction(self):
        hypothesis = all_of(has_action, noncyclic_actors)
        self.assertEqual("no action", hypothesis(small("S4")))
        self.assertEqual("cyclic actors", hypothesis(small("inversion-C15")))
        self.assertIsNone(hypothesis(small("coordinatewise-C3^3")))

    def test_planted_subgroup(self):
        self.assertIsNone(planted_non_subnormal(small("A6")))
        self.assertEqual("trivial perfect core", planted_non_subnormal(small("S4")))


def _raise(error: Exception):
    def check(instance):
        raise error

    return check


class SuiteTestCase(TestCase):
    def test_result_counts(self):
        with self.assertRaises(ValueError):
            SuiteResult(suite_id="x", tier=SMALL, seed=0, instances_run=2, passed=1)
        result = SuiteResult(suite_id="x", tier=SMALL, seed=0, instances_run=2, passed=1, skipped=1)
        self.assertEqual(const.REPORT_SCHEMA_VERSION, result.schema_version)
        self.assertFalse(result.has_findings)
        self.assertEqual("x [small]: 2 run, 1 passed, 1 skipped, 0 findings", result.summary())

    def test_evaluate(self):
        s4 = small("S4")
        skipped = evaluate(Suite("t", "", SuiteDomain.Groups, _raise(ResourceLimitError("big"))), s4, 0)
        self.assertEqual((InstanceStatus.Skipped, "resource limit"), (skipped.status, skipped.reason))
        hypothesis = Suite("t", "", SuiteDomain.Groups, _raise(AssertionError()), hypothesis=nonsolvable)
        self.assertEqual("solvable", evaluate(hypothesis, s4, 0).reason)
        internal = evaluate(Suite("t", "", SuiteDomain.Groups, _raise(InternalConsistencyError("bug"))), s4, 0)
        self.assertEqual(const.FindingKind.InternalError, internal.finding["kind"])
        found = evaluate(
            Suite("t", "", SuiteDomain.Groups, _raise(TheoremViolationError("claim", {"group": s4.group}))), s4, 0
        )
        self.assertEqual(InstanceStatus.Finding, found.status)
        self.assertEqual("claim", found.finding["claim"])
        self.assertEqual(24, found.finding["witness"]["group"]["order"])
        self.assertIn("degree 4", found.finding["witness"]["instance"])

    def test_evaluate_corpus(self):
        instances = [small("S3"), small("S4")]
        test_cases = [
            (ResourceLimitError("table too large"), InstanceStatus.Skipped, "small-corpus", None),
            (InternalConsistencyError("bug"), InstanceStatus.Finding, "small-corpus", const.FindingKind.InternalError),
            (TheoremViolationError("claim", {"instance_id": "S4"}), InstanceStatus.Finding, "S4", None),
        ]
        for error, status, instance_id, kind in test_cases:
            with self.subTest(error=type(error).__name__):
                suite = Suite("t", "", SuiteDomain.Corpus, corpus_check=_raise(error))
                outcome = evaluate_corpus(suite, SMALL, instances, 0)
                self.assertEqual((status, instance_id), (outcome.status, outcome.instance_id))
                if status == InstanceStatus.Skipped:
                    self.assertEqual("resource limit", outcome.reason)
                if kind is not None:
                    self.assertEqual(kind, outcome.finding["kind"])
        passed = evaluate_corpus(Suite("t", "", SuiteDomain.Corpus, corpus_check=len), SMALL, instances, 0)
        self.assertEqual(InstanceStatus.Passed, passed.status)

    def test_render_witness(self):
        rendered = render_witness({"t": parse_cycles("(1 2)", 3), "n": 3, "word": "e1"})
        self.assertEqual({"t": "(1 2)", "n": 3, "word": "e1"}, rendered)

    def test_sample(self):
        items = list(range(20))
        seed_random(5)
        first = sample(items, 4)
        seed_random(5)
        self.assertEqual(first, sample(items, 4))
        self.assertEqual(sorted(first), first)
        self.assertEqual([1, 2], sample([1, 2], 4))

    def test_registry(self):
        registry = get_registry()
        for suite_id in ("engine:oracle", "closure:oracle", "pc:3(b)", "pc:4(d)", "ap:3", "p:2", "md:5", "gor:2"):
            with self.subTest(suite=suite_id):
                self.assertIn(suite_id, registry)
        controls = {s.suite_id for s in registry.negative_controls()}
        self.assertEqual({"axioms:abelian", "control:balance", "control:pc:2"}, controls)
        with self.assertRaises(ValueError):
            registry.get("pc:99")
        fresh = SuiteRegistry()
        fresh.register(Suite("t", "", SuiteDomain.All))
        with self.assertRaises(ValueError):
            fresh.register(Suite("t", "", SuiteDomain.All))
        self.assertEqual(len(registry), len(default_registry()))


class RunSuiteTestCase(TestCase):
    def test_subnormal_intersection(self):
        result = run_suite("pc:3(b)", SMALL, 0, workers=1, instance_ids=["S3", "D8", "A4", "S4", "A5"])
        self.assertEqual(5, result.instances_run)
        self.assertEqual(5, result.passed)
        self.assertEqual([], result.findings)

    def test_closure_oracle(self):
        result = run_suite("closure:oracle", SMALL, 0, workers=1, instance_ids=["Q8", "SL(2,3)", "S7"])
        self.assertEqual((3, 2, 1), (result.instances_run, result.passed, result.skipped))
        self.assertEqual({"beyond oracle bound": 1}, result.skip_reasons)

    def test_abelian_control(self):
        result = run_suite("axioms:abelian", SMALL, 0, workers=1, instance_ids=["C2", "C6", "S3", "D8", "Q8"])
        self.assertTrue(result.negative_control)
        self.assertEqual(1, result.instances_run)
        self.assertEqual(1, len(result.findings))
        self.assertEqual("D8", result.findings[0].instance_id)
        self.assertEqual(const.FindingKind.TheoremViolation, result.findings[0].kind)

    def test_declared_axioms_hold(self):
        result = run_suite("axioms:solvable", SMALL, 0, workers=1, instance_ids=["S3", "D8", "A4", "S4"])
        self.assertEqual((1, 1), (result.instances_run, result.passed))

    def test_planted_controls(self):
        component = run_suite("control:pc:2", SMALL, 0, workers=1, instance_ids=["S4", "A6"])
        self.assertEqual(["A6"], [f.instance_id for f in component.findings])
        self.assertEqual({"trivial perfect core": 1}, component.skip_reasons)
        balance = run_suite("control:balance", SMALL, 0, workers=1, instance_ids=["coordinatewise-C3^3"])
        self.assertEqual(1, len(balance.findings))

    def test_functor_suites(self):
        for suite_id in ("md:5", "p:3", "gor:2", "gor:4"):
            with self.subTest(suite=suite_id):
                result = run_suite(suite_id, SMALL, 0, workers=1, instance_ids=["coordinatewise-C3^3"])
                self.assertEqual((1, 1), (result.instances_run, result.passed))

    def test_invariant_closure(self):
        result = run_suite("p:2", SMALL, 0, workers=1, instance_ids=["inversion-C15", "inversion-F21", "S4"])
        self.assertEqual((2, 2), (result.instances_run, result.passed))

    def test_empty_selection(self):
        result = run_suite("p:2", SMALL, 0, workers=1, instance_ids=["S4"])
        self.assertEqual((0, 0, 0), (result.instances_run, result.passed, result.skipped))

    def test_unknown(self):
        with self.assertRaises(ValueError):
            run_suite("pc:99", SMALL)
        with self.assertRaises(ValueError):
            run_suite("pc:3(b)", SMALL, instance_ids=["S8"])

    def test_determinism(self):
        selection = ["S4", "A5", "S3xS3"]
        first = run_suite("pc:3(c)", SMALL, 3, workers=1, instance_ids=selection)
        second = run_suite("pc:3(c)", SMALL, 3, workers=1, instance_ids=selection)
        self.assertEqual(first.json(), second.json())
        parallel = run_suite("pc:3(c)", SMALL, 3, workers=2, instance_ids=selection)
        self.assertEqual(first.json(), parallel.json())
        self.assertIsNone(first.wall_time)
        self.assertIsNotNone(run_suite("pc:3(c)", SMALL, 3, workers=1, instance_ids=["S3"], timing=True).wall_time)
