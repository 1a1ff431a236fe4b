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

import numpy as np
import pytest

from pclose import const
from pclose.closures.fixed import fixed_points, fixed_points_of
from pclose.closures.text_format import parse_action_spec
from pclose.constructions.affine import build_affine_action, build_inversion_action
from pclose.constructions.cli import ConstructCliExtension
from pclose.constructions.field import FiniteField, binary_field
from pclose.constructions.lg_example import (
    ClaimStatus,
    build_lg_example,
    faithful_orbit_model,
    verify_lg_example,
    wreath_model,
)
from pclose.constructions.named import alternating, cyclic
from pclose.constructions.power import PowerStructure, build_power_action
from pclose.constructions.psl2 import build_psl2, psl2_order_2k
from pclose.errors import ConstructionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles
from pclose.perm.subgroups import centralizer, intersection, normalizes
from pclose.perm.text_format import parse_group_spec
from pclose.structure.layer import is_simple
from pclose.utils import seed_random


class FiniteFieldTestCase(TestCase):
    def test_field_axioms(self):
        for k in range(1, 9):
            with self.subTest(k=k):
                field = binary_field(k)
                xs = field.elements
                nonzero = xs[1:]
                self.assertEqual(2**k, len(xs))
                self.assertTrue(np.all(xs + xs == 0))
                self.assertTrue(np.all(nonzero * nonzero**-1 == 1))
                products = xs[:, None] * xs[None, :]
                self.assertTrue(np.all(products == products.T))
                self.assertEqual(0, int(np.count_nonzero(products[1:, 1:] == 0)))
                c = xs[-1]
                self.assertTrue(np.all(c * (xs[:, None] + xs[None, :]) == c * xs[:, None] + c * xs[None, :]))

    def test_associativity_small(self):
        for k in range(1, 5):
            with self.subTest(k=k):
                xs = binary_field(k).elements
                left = (xs[:, None, None] * xs[None, :, None]) * xs[None, None, :]
                right = xs[:, None, None] * (xs[None, :, None] * xs[None, None, :])
                self.assertTrue(np.all(left == right))

    def test_frobenius(self):
        for k in range(1, 9):
            with self.subTest(k=k):
                field = binary_field(k)
                xs = field.elements
                squares = xs[:, None] ** 2 * xs[None, :] ** 2
                self.assertTrue(np.all((xs[:, None] * xs[None, :]) ** 2 == squares))
                images = xs
                for _ in range(k):
                    images = images**2
                self.assertTrue(np.all(images == xs))
                if k > 1:
                    self.assertFalse(np.all(xs**2 == xs))

    def test_scalar_operations(self):
        field = FiniteField(3)
        self.assertEqual(3, field.add(1, 2))
        self.assertEqual(1, field.mul(5, field.inverse(5)))
        self.assertEqual(4, field.frobenius(2))
        with self.assertRaises(ZeroDivisionError):
            field.inverse(0)
        with self.assertRaises(ConstructionError):
            FiniteField(9)


class Psl2TestCase(TestCase):
    def test_examples(self):
        test_cases = [(1, 3, 6), (2, 5, 60), (3, 9, 504), (5, 33, 32736)]
        for k, degree, order in test_cases:
            with self.subTest(k=k):
                group, frobenius = build_psl2(k)
                self.assertEqual(degree, group.degree)
                self.assertEqual(order, group.order)
                self.assertEqual(psl2_order_2k(k), group.order)
                self.assertTrue(normalizes(frobenius, group))

    def test_frobenius_fixed_points(self):
        group, frobenius = build_psl2(5)
        self.assertEqual(3, sum(1 for i, x in enumerate(frobenius.array_form) if i == x))
        self.assertEqual(5, frobenius.order())
        self.assertFalse(group.contains(frobenius))

    def test_simple(self):
        seed_random(0)
        group, frobenius = build_psl2(3)
        self.assertTrue(is_simple(group))
        self.assertEqual(3, frobenius.order())
        self.assertFalse(group.contains(frobenius))

    def test_out_of_range(self):
        for k in (0, 9):
            with self.subTest(k=k):
                with self.assertRaises(ConstructionError):
                    build_psl2(k)


class PowerActionTestCase(TestCase):
    def test_regular_wreath(self):
        action = build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=7)
        self.assertEqual(35, action.wrapper.degree)
        self.assertEqual(60**7, action.group.order)
        self.assertEqual(7, action.actors.order)
        diagonal = fixed_points(action)
        self.assertEqual(60, diagonal.order)
        self.assertTrue(all(a * g == g * a for a in action.actors.generators for g in diagonal.generators))
        self.assertTrue(diagonal.is_subgroup_of(action.group))

    def test_coordinatewise_inversions(self):
        inversion = parse_cycles("(2 3)", 3)
        action = build_power_action(
            cyclic(3), const.PowerPattern.Coordinatewise, prime=2, automorphism=inversion, copies=3
        )
        self.assertEqual(27, action.group.order)
        self.assertEqual(8, action.actors.order)
        e1 = action.actor((1, 0, 0))
        self.assertEqual(9, fixed_points_of(action, e1).order)
        self.assertEqual(centralizer(action.group, e1), fixed_points_of(action, e1))
        self.assertTrue(fixed_points(action).is_trivial)

    def test_structured_matches_centralizer(self):
        inversion = parse_cycles("(2 3)", 3)
        for pattern in (const.PowerPattern.Diagonal, const.PowerPattern.Coordinatewise):
            action = build_power_action(cyclic(3), pattern, prime=2, automorphism=inversion, copies=2)
            for coords in action.frame.nonidentity():
                a = action.actor(coords)
                with self.subTest(pattern=pattern, word=action.frame.format_word(coords)):
                    self.assertEqual(centralizer(action.group, a), fixed_points_of(action, a))

    def test_mixed(self):
        inversion = parse_cycles("(2 5)(3 4)", 5)
        action = build_power_action(cyclic(5), const.PowerPattern.Mixed, prime=2, automorphism=inversion)
        self.assertEqual(4, action.actors.order)
        self.assertEqual(25, action.group.order)
        for coords in action.frame.nonidentity():
            a = action.actor(coords)
            with self.subTest(word=action.frame.format_word(coords)):
                self.assertEqual(centralizer(action.group, a), fixed_points_of(action, a))
        self.assertEqual(centralizer(action.group, action.actors), fixed_points(action))

    def test_trivial_actors(self):
        action = build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=7, copies=1)
        self.assertTrue(action.actors.is_trivial)
        self.assertEqual(alternating(5), action.group)
        self.assertEqual(action.group, fixed_points(action))

    def test_errors(self):
        with self.assertRaises(ConstructionError):
            build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=5)
        with self.assertRaises(ConstructionError):
            build_power_action(alternating(5), const.PowerPattern.Mixed, prime=7)
        with self.assertRaises(ConstructionError):
            build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=7, copies=3)

    def test_large_coordinatewise_frobenius(self):
        group, frobenius = build_psl2(5)
        action = build_power_action(
            group, const.PowerPattern.Coordinatewise, prime=5, automorphism=frobenius, copies=3
        )
        self.assertEqual(99, action.wrapper.degree)
        self.assertEqual(32736**3, action.group.order)
        self.assertEqual(6**3, fixed_points(action).order)
        e1 = action.actor((1, 0, 0))
        self.assertEqual(6 * 32736**2, fixed_points_of(action, e1).order)

    def test_power_structure_coordinates(self):
        structure = PowerStructure(cyclic(3), 2)
        self.assertEqual(6, structure.degree)
        self.assertEqual(9, structure.power().order)
        shifted = structure.embed(1, parse_cycles("(1 2 3)", 3))
        self.assertEqual(parse_cycles("(4 5 6)", 6), shifted)

    def test_power_structure_recovery(self):
        action = build_power_action(
            cyclic(3), const.PowerPattern.Coordinatewise, prime=2, automorphism=parse_cycles("(2 3)", 3), copies=2
        )
        structure = PowerStructure.from_power(action.group, 2)
        self.assertEqual(cyclic(3), structure.factor)
        first = structure.coordinate_group(0)
        self.assertEqual([3, 1], [p.order for p in structure.coordinate_parts(first)])
        diagonal = PermGroup(6, [parse_cycles("(1 2 3)(4 5 6)", 6)])
        self.assertIsNone(structure.coordinate_parts(diagonal))
        with self.assertRaises(ConstructionError):
            PowerStructure.from_power(PermGroup(6, [parse_cycles("(1 4)", 6)]), 2)
        with self.assertRaises(ConstructionError):
            PowerStructure.from_power(diagonal, 2)


class AffineActionTestCase(TestCase):
    def test_affine(self):
        action = build_affine_action(3, alternating(5))
        self.assertEqual(13, action.wrapper.degree)
        self.assertEqual(480, action.group.order)
        self.assertEqual(7, action.prime)
        self.assertEqual(alternating(5).order, fixed_points(action).order)
        with self.assertRaises(ConstructionError):
            build_affine_action(4)

    def test_inversion(self):
        action = build_inversion_action(15)
        self.assertEqual(15, action.group.order)
        self.assertTrue(fixed_points(action).is_trivial)
        with self.assertRaises(ConstructionError):
            build_inversion_action(6)
        self.assertEqual(PermGroup.trivial(15), fixed_points(action))


class LgExampleTestCase(TestCase):
    def test_r5(self):
        instance = build_lg_example(5)
        self.assertEqual(60, instance.n)
        self.assertEqual(33, instance.factor.degree)
        report = verify_lg_example(instance)
        self.assertTrue(report.passed)
        self.assertEqual(5, len(report.claims))
        self.assertEqual([ClaimStatus.Passed] * 5, [c.status for c in report.claims])
        self.assertIn("order 6 ", report.claim("centralizer-solvable").detail)
        self.assertIn("gcd(5, |K|) = 5", report.claim("coprime").detail)
        self.assertIn("|C(a)| = 7776", report.claim("fixed-point-formula").detail)
        self.assertIn("there are 1, 1 containing K", report.claim("k-in-fixed-component").detail)
        self.assertIn("the 5 (A,sol)-components", report.claim("components-avoid-k").detail)
        self.assertTrue(report.to_dto().passed)

    @pytest.mark.slow
    def test_r7_formula_unverified(self):
        report = verify_lg_example(build_lg_example(7))
        formula = report.claim("fixed-point-formula")
        self.assertEqual(ClaimStatus.Unverified, formula.status)
        self.assertFalse(formula.computed)
        self.assertEqual([formula], report.unverified)
        self.assertTrue(report.passed)
        self.assertEqual(ClaimStatus.Passed, report.claim("k-in-fixed-component").status)

    def test_models(self):
        fixed = centralizer(*build_psl2(5))
        model = faithful_orbit_model(fixed)
        self.assertEqual((3, 6), (model.degree, model.order))
        wreath, k_group, structure = wreath_model(model)
        self.assertEqual((15, 6**5 * 60), (wreath.degree, wreath.order))
        self.assertEqual(alternating(5).order, k_group.order)
        self.assertTrue(structure.power().is_subgroup_of(wreath))
        self.assertEqual(1, intersection(k_group, structure.power()).order)

    def test_other_k(self):
        instance = build_lg_example(5, "L2(7)")
        self.assertEqual(168, instance.n)
        self.assertEqual(1, instance.factor_action().rank)

    def test_errors(self):
        for r, label in ((3, "A5"), (11, "A5"), (5, "C7"), (5, "X9")):
            with self.subTest(r=r, label=label):
                with self.assertRaises(ConstructionError):
                    build_lg_example(r, label)


class SpecOutputTestCase(TestCase):
    def test_psl2_spec(self):
        action = parse_action_spec(ConstructCliExtension.psl2_spec(5))
        self.assertEqual((psl2_order_2k(5), 5, 5), (action.group.order, action.actors.order, action.prime))
        self.assertEqual(psl2_order_2k(4), parse_group_spec(ConstructCliExtension.psl2_spec(4)).order)
        shared = parse_action_spec(ConstructCliExtension.psl2_spec(2), coprime=False)
        self.assertFalse(shared.is_coprime)
