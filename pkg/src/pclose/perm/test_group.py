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

from pclose.constructions.named import alternating, from_cycles, symmetric
from pclose.errors import ConstructionError, DegreeMismatchError
from pclose.perm.group import PermGroup, build_group
from pclose.perm.permutation import parse_cycles
from pclose.utils import seed_random


class PermGroupTestCase(TestCase):
    def test_build_group(self):
        test_cases = [
            (5, ["(1 2 3 4 5)", "(3 4 5)"], 60),
            (4, [], 1),
            (2, ["(1 2)"], 2),
        ]
        for degree, gens, expected in test_cases:
            with self.subTest(gens=gens):
                group = build_group(degree, [parse_cycles(g, degree) for g in gens])
                self.assertEqual(expected, group.order)
                self.assertEqual(expected, len(list(group.elements())))

    def test_order_is_product_of_basic_orbit_lengths(self):
        group = symmetric(5)
        product = 1
        for orbit in group.basic_orbits:
            product *= len(orbit)
        self.assertEqual(120, product)
        self.assertEqual(len(group.base), len(group.basic_orbits))

    def test_membership_matches_enumeration(self):
        a4 = alternating(4)
        members = {tuple(g.array_form) for g in a4.elements()}
        for g in symmetric(4).elements():
            with self.subTest(g=g):
                self.assertEqual(tuple(g.array_form) in members, a4.contains(g))
                self.assertEqual(g.is_even, g in a4)

    def test_generators_must_share_degree(self):
        with self.assertRaises(DegreeMismatchError):
            PermGroup(4, [parse_cycles("(1 2)", 3)])
        with self.assertRaises(ConstructionError):
            PermGroup(0)

    def test_identity_generators_are_dropped(self):
        group = PermGroup(3, [parse_cycles("()", 3), parse_cycles("(1 2)", 3), parse_cycles("(1 2)", 3)])
        self.assertEqual(1, len(group.generators))
        self.assertTrue(PermGroup.trivial(3).is_trivial)
        self.assertEqual(3, PermGroup.trivial(3).identity.size)

    def test_semantic_equality(self):
        first = from_cycles(4, "(1 2 3 4)")
        second = from_cycles(4, "(1 4 3 2)")
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, from_cycles(4, "(1 2)(3 4)", "(1 3)(2 4)"))
        self.assertTrue(from_cycles(4, "(1 3)(2 4)") <= first)
        self.assertTrue(from_cycles(4, "(1 3)(2 4)") < first)

    def test_orbits_and_stabilizers(self):
        group = from_cycles(6, "(1 2 3)", "(4 5)")
        self.assertEqual([(0, 1, 2), (3, 4), (5,)], group.orbits())
        self.assertEqual(2, group.stabilizer(0).order)
        self.assertEqual(6, group.stabilizer(0).degree)
        self.assertEqual(6, symmetric(4).stabilizer(3).order)

    def test_random_elements_are_members_and_reproducible(self):
        group = symmetric(6)
        seed_random(11)
        first = [group.random_element() for _ in range(10)]
        seed_random(11)
        second = [group.random_element() for _ in range(10)]
        self.assertEqual(first, second)
        for g in first:
            self.assertTrue(group.contains(g))

    def test_sylow_and_flags(self):
        s4 = symmetric(4)
        self.assertEqual(8, s4.sylow_subgroup(2).order)
        self.assertEqual(1, s4.sylow_subgroup(5).order)
        self.assertTrue(s4.is_solvable)
        self.assertFalse(s4.is_nilpotent)
        self.assertFalse(s4.is_abelian)
        self.assertFalse(alternating(5).is_solvable)
        self.assertTrue(from_cycles(4, "(1 2 3 4)").is_abelian)
