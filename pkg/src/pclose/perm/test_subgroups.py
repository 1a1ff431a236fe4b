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

from pclose.constructions.named import alternating, cyclic, from_cycles, klein_four, symmetric
from pclose.const import SeriesKind
from pclose.errors import DegreeMismatchError, NotContainedError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import element_table
from pclose.perm.permutation import identity, parse_cycles
from pclose.perm.subgroups import (
    center,
    centralizer,
    commutator_subgroup,
    core,
    intersection,
    is_normal,
    is_subnormal,
    normal_closure,
    normalizer,
    series,
)


def brute_force_centralizer_order(group: PermGroup, target) -> int:
    return sum(1 for g in group.elements() if g * target == target * g)


class CentralizerTestCase(TestCase):
    def test_examples(self):
        test_cases = [
            (symmetric(4), "(1 2)(3 4)", 8),
            (alternating(5), "(1 2 3 4 5)", 5),
            (symmetric(5), "(1 2 3)", 6),
        ]
        for group, cycles, expected in test_cases:
            with self.subTest(target=cycles):
                target = parse_cycles(cycles, group.degree)
                result = centralizer(group, target)
                self.assertEqual(expected, result.order)
                self.assertEqual(brute_force_centralizer_order(group, target), result.order)

    def test_identity_and_groups(self):
        s4 = symmetric(4)
        self.assertEqual(s4, centralizer(s4, identity(4)))
        self.assertEqual(klein_four(), centralizer(s4, klein_four()))
        self.assertEqual(1, center(s4).order)
        self.assertEqual(4, center(cyclic(4)).order)

    def test_degree_mismatch(self):
        with self.assertRaises(DegreeMismatchError):
            centralizer(symmetric(4), identity(5))


class NormalClosureTestCase(TestCase):
    def test_examples(self):
        s4 = symmetric(4)
        test_cases = [("(1 2)", 24), ("(1 2)(3 4)", 4), ("(1 2 3)", 12)]
        for cycles, expected in test_cases:
            with self.subTest(seed=cycles):
                closure = normal_closure(s4, from_cycles(4, cycles))
                self.assertEqual(expected, closure.order)
                self.assertTrue(is_normal(s4, closure))
        self.assertEqual(s4, normal_closure(s4, s4))

    def test_not_contained(self):
        with self.assertRaises(NotContainedError):
            normal_closure(alternating(4), from_cycles(4, "(1 2)"))


class SubnormalTestCase(TestCase):
    def test_examples(self):
        s4 = symmetric(4)
        self.assertTrue(is_subnormal(s4, klein_four()))
        self.assertTrue(is_subnormal(s4, from_cycles(4, "(1 2)(3 4)")))
        self.assertFalse(is_subnormal(s4, from_cycles(4, "(1 2)")))
        self.assertTrue(is_subnormal(s4, s4))
        self.assertTrue(is_subnormal(s4, PermGroup.trivial(4)))

    def test_not_contained(self):
        with self.assertRaises(NotContainedError):
            is_subnormal(alternating(4), from_cycles(4, "(1 2)"))


class SeriesTestCase(TestCase):
    def test_derived_series(self):
        self.assertEqual([24, 12, 4, 1], [g.order for g in series(symmetric(4), SeriesKind.Derived)])
        self.assertEqual([120, 60], [g.order for g in series(symmetric(5), "derived")])

    def test_lower_central_series(self):
        self.assertEqual([24, 12], [g.order for g in series(symmetric(4), SeriesKind.LowerCentral)])
        d8 = from_cycles(4, "(1 2 3 4)", "(1 3)")
        self.assertEqual([8, 2, 1], [g.order for g in series(d8, SeriesKind.LowerCentral)])

    def test_perfect_core(self):
        self.assertEqual([alternating(5)], series(symmetric(5), SeriesKind.PerfectCore))
        self.assertEqual(1, series(cyclic(6), SeriesKind.PerfectCore)[0].order)


class OtherConstructionsTestCase(TestCase):
    def test_normalizer(self):
        s4 = symmetric(4)
        self.assertEqual(4, normalizer(s4, from_cycles(4, "(1 2)")).order)
        self.assertEqual(s4, normalizer(s4, klein_four()))
        self.assertEqual(6, normalizer(s4, from_cycles(4, "(1 2 3)")).order)
        self.assertEqual(8, normalizer(s4, from_cycles(4, "(1 2 3 4)")).order)

    def test_normalizer_against_elements(self):
        s4 = symmetric(4)
        table = element_table(s4)
        for mask in table.all_subgroups():
            sub = table.subgroup(mask)
            with self.subTest(order=sub.order, generators=len(sub.generators)):
                result = normalizer(s4, sub)
                expected = [g for g in s4.elements() if sub.conjugate(g) == sub]
                self.assertEqual(len(expected), result.order)
                self.assertTrue(all(result.contains(g) for g in expected))

    def test_normalizer_then_centralizer(self):
        s4 = symmetric(4)
        transposition = from_cycles(4, "(1 2)")
        self.assertEqual(4, normalizer(s4, transposition).order)
        self.assertEqual(4, centralizer(s4, transposition).order)
        self.assertEqual(2, intersection(centralizer(s4, transposition), alternating(4)).order)
        self.assertFalse(normalizer(s4, transposition).contains(parse_cycles("(1 3)(2 4)", 4)))

    def test_intersection_and_core(self):
        s4 = symmetric(4)
        s3 = from_cycles(4, "(1 2)", "(1 2 3)")
        self.assertEqual(3, intersection(s3, alternating(4)).order)
        self.assertEqual(1, core(s4, s3).order)
        d8 = from_cycles(4, "(1 2 3 4)", "(1 3)")
        self.assertEqual(klein_four(), core(s4, d8))

    def test_commutator_subgroup(self):
        s4 = symmetric(4)
        self.assertEqual(alternating(4), commutator_subgroup(s4, s4))
        self.assertEqual(klein_four(), commutator_subgroup(klein_four(), from_cycles(4, "(1 2 3)")))
