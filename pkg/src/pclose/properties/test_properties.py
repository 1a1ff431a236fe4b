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

import pytest

from pclose import const
from pclose.constructions.named import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    factor_embedding,
    klein_four,
    quaternion,
    special_linear_2,
    symmetric,
)
from pclose.errors import PreconditionError, ResourceLimitError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import element_table
from pclose.perm.subgroups import is_normal, is_subnormal, intersection
from pclose.properties.axioms import verify_axioms
from pclose.properties.closure import o_p, o_p_by_oracle, o_upper_p, o_upper_p_by_oracle
from pclose.properties.extended import o_pe
from pclose.properties.property import Axiom, Property, fixed_point_solvability, trivial_action_case
from pclose.properties.registry import (
    ABELIAN,
    NILPOTENT,
    ODD_ORDER,
    SOLVABLE,
    TRIVIAL,
    PropertyRegistry,
    default_registry,
    get_property,
)
from pclose.utils import seed_random

SMALL_GROUPS = [
    symmetric(3),
    symmetric(4),
    dihedral(4),
    quaternion(),
    alternating(4),
    special_linear_2(3),
    direct_product(symmetric(3), cyclic(3)),
    cyclic(15),
]
LARGER_GROUPS = [alternating(5), direct_product(alternating(4), cyclic(2))]
ORACLE_PROPERTIES = [TRIVIAL, NILPOTENT, SOLVABLE, ODD_ORDER, get_property("pi:2"), get_property("pi:3")]


class RegistryTestCase(TestCase):
    def test_builtins(self):
        registry = default_registry()
        self.assertEqual(["trivial", "nilpotent", "solvable", "odd-order", "abelian"], registry.get_supported_names())
        self.assertIs(SOLVABLE, registry.get("Solvable"))
        self.assertTrue(registry.is_supported("pi:2,3"))
        self.assertFalse(registry.is_supported("pi:"))

    def test_pi_property(self):
        prop = get_property("pi:3,2")
        self.assertEqual("pi:2,3", prop.name)
        self.assertTrue(prop.all_solvable)
        self.assertTrue(prop(symmetric(4)))
        self.assertFalse(prop(alternating(5)))
        self.assertFalse(get_property("pi:2,3,5").all_solvable)
        self.assertTrue(get_property("pi:3,5,7").all_solvable)

    def test_errors(self):
        with self.assertRaises(ValueError):
            get_property("perfect")
        with self.assertRaises(ValueError):
            get_property("pi:4")
        registry = PropertyRegistry()
        registry.register(TRIVIAL)
        with self.assertRaises(ValueError):
            registry.register(TRIVIAL)
        with self.assertRaises(ValueError):
            registry.register(Property(name="pi:2", predicate=lambda g: True))

    def test_trivial_group_satisfies_builtins(self):
        for prop in (TRIVIAL, NILPOTENT, SOLVABLE, ODD_ORDER, ABELIAN, get_property("pi:5")):
            with self.subTest(prop=prop.name):
                self.assertTrue(prop(PermGroup.trivial(4)))

    def test_fixed_point_classification(self):
        self.assertEqual(const.FixedPointStatus.Accepted, fixed_point_solvability(NILPOTENT))
        self.assertEqual(const.FixedPointStatus.Accepted, fixed_point_solvability(ODD_ORDER))
        self.assertEqual(const.FixedPointStatus.CorpusTested, fixed_point_solvability(SOLVABLE))
        self.assertTrue(trivial_action_case(SOLVABLE))
        self.assertFalse(trivial_action_case(get_property("pi:2,3,5")))


class ClosureTestCase(TestCase):
    def setUp(self):
        seed_random(0)

    def test_o_p_examples(self):
        self.assertEqual(klein_four(), o_p(symmetric(4), NILPOTENT))
        self.assertTrue(o_p(alternating(5), SOLVABLE).is_trivial)
        self.assertEqual(symmetric(4), o_p(symmetric(4), SOLVABLE))
        self.assertEqual(klein_four(), o_p(symmetric(4), get_property("pi:2")))

    def test_o_upper_p_examples(self):
        self.assertEqual(alternating(4), o_upper_p(symmetric(4), NILPOTENT))
        self.assertEqual(alternating(5), o_upper_p(symmetric(5), SOLVABLE))
        self.assertEqual(symmetric(4), o_upper_p(symmetric(4), TRIVIAL))
        self.assertEqual(alternating(4), o_upper_p(symmetric(4), ABELIAN))

    def check_against_oracle(self, groups):
        for group in groups:
            for prop in ORACLE_PROPERTIES:
                with self.subTest(order=group.order, prop=prop.name):
                    self.assertEqual(o_p_by_oracle(group, prop), o_p(group, prop))
                    self.assertEqual(o_upper_p_by_oracle(group, prop), o_upper_p(group, prop))

    def test_against_oracle(self):
        self.check_against_oracle(SMALL_GROUPS)

    @pytest.mark.slow
    def test_against_oracle_larger(self):
        self.check_against_oracle(LARGER_GROUPS)

    def test_results_are_normal(self):
        for group in SMALL_GROUPS:
            with self.subTest(order=group.order):
                radical = o_p(group, NILPOTENT)
                residual = o_upper_p(group, NILPOTENT)
                self.assertTrue(is_normal(group, radical))
                self.assertTrue(is_normal(group, residual))
                self.assertTrue(NILPOTENT(radical))
                self.assertTrue(NILPOTENT.holds_for_quotient(group, residual))

    def test_subnormal_intersection(self):
        group = symmetric(4)
        table = element_table(group)
        radical = o_p(group, NILPOTENT)
        for mask in table.subnormal_subgroups():
            sub = table.subgroup(mask)
            with self.subTest(order=sub.order):
                self.assertTrue(is_subnormal(group, sub))
                self.assertEqual(intersection(sub, radical), o_p(sub, NILPOTENT))

    def test_nonsolvable_pi_uses_oracle(self):
        prop = get_property("pi:2,3,5")
        groups = [alternating(5), cyclic(7)]
        self.assertEqual(factor_embedding(groups, 0), o_p(direct_product(*groups), prop))

    def test_preconditions(self):
        bare = Property(name="bare", predicate=lambda g: g.is_trivial)
        with self.assertRaises(PreconditionError):
            o_p(symmetric(3), bare)
        with self.assertRaises(PreconditionError):
            o_upper_p(symmetric(3), bare)
        with self.assertRaises(PreconditionError):
            o_pe(symmetric(3), NILPOTENT)

    def test_unvalidated_declaration_rejected(self):
        with self.assertRaises(PreconditionError) as context:
            o_p(dihedral(4), ABELIAN)
        self.assertIn("normal_product", str(context.exception))
        verify_axioms(ABELIAN, [symmetric(3), dihedral(4)])
        with self.assertRaises(PreconditionError) as context:
            o_p(dihedral(4), ABELIAN)
        self.assertIn("refuted", str(context.exception))
        self.assertEqual(alternating(4), o_upper_p(symmetric(4), ABELIAN))

    def test_validated_by_corpus(self):
        two_group = Property(
            name="2-group",
            predicate=lambda g: g.order & (g.order - 1) == 0,
            order_test=lambda n: n & (n - 1) == 0,
            declared_axioms=frozenset({Axiom.SubgroupClosed, Axiom.QuotientClosed, Axiom.NormalProduct}),
        )
        with self.assertRaises(PreconditionError):
            o_p(symmetric(4), two_group)
        self.assertEqual(frozenset(), two_group.validated_axioms)
        report = verify_axioms(two_group, SMALL_GROUPS)
        self.assertTrue(report.passed)
        self.assertEqual(two_group.declared_axioms, two_group.validated_axioms)
        self.assertEqual(klein_four(), o_p(symmetric(4), two_group))

    def test_oracle_bound(self):
        prop = get_property("pi:2,3,5")
        with self.assertRaises(ResourceLimitError):
            o_p(direct_product(alternating(6), cyclic(7)), prop)


class ExtendedClosureTestCase(TestCase):
    def test_examples(self):
        seed_random(0)
        self.assertEqual(alternating(5), o_pe(symmetric(5), SOLVABLE))
        self.assertEqual(symmetric(4), o_pe(symmetric(4), SOLVABLE))
        product = direct_product(alternating(5), symmetric(4))
        self.assertEqual(product, o_pe(product, SOLVABLE))


class AxiomsTestCase(TestCase):
    def test_solvable_passes(self):
        report = verify_axioms(SOLVABLE, SMALL_GROUPS)
        self.assertTrue(report.passed)
        self.assertEqual(set(Axiom), set(report.checked))
        self.assertTrue(all(count > 0 for count in report.checked.values()))

    @pytest.mark.slow
    def test_solvable_passes_larger(self):
        self.assertTrue(verify_axioms(SOLVABLE, LARGER_GROUPS).passed)
        self.assertTrue(verify_axioms(NILPOTENT, LARGER_GROUPS).passed)

    def test_trivial_passes(self):
        self.assertTrue(verify_axioms(TRIVIAL, SMALL_GROUPS).passed)
        self.assertTrue(verify_axioms(NILPOTENT, SMALL_GROUPS).passed)

    def test_abelian_fails_on_d8(self):
        report = verify_axioms(ABELIAN, [symmetric(3), dihedral(4), symmetric(4)])
        failure = report.failure_for(Axiom.NormalProduct)
        self.assertIsNotNone(failure)
        self.assertEqual(8, failure.group.order)
        first, second, product = failure.witnesses["first"], failure.witnesses["second"], failure.witnesses["product"]
        self.assertTrue(first.is_abelian and second.is_abelian)
        self.assertTrue(is_normal(failure.group, first) and is_normal(failure.group, second))
        self.assertFalse(product.is_abelian)
        self.assertEqual([Axiom.NormalProduct], [f.axiom for f in report.failures])

    def test_empty_corpus(self):
        with self.assertRaises(PreconditionError):
            verify_axioms(SOLVABLE, [])
