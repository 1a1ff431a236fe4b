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
from dataclasses import replace
from unittest import TestCase

from pclose import const
from pclose.closures.action import GroupAction
from pclose.components.acomp import (
    EmbeddingReport,
    actor_orbits,
    comp_a,
    comp_ap,
    embed_in_asol,
    embedding_report,
    is_ap_component,
)
from pclose.components.pcomp import comp_p, is_p_component, p_layer, stable_residual
from pclose.constructions.affine import build_affine_action
from pclose.constructions.named import (
    alternating,
    cyclic,
    direct_product,
    factor_embedding,
    special_linear_2,
    symmetric,
)
from pclose.constructions.power import PowerStructure, build_power_action
from pclose.errors import NotInvariantError, PreconditionError
from pclose.perm.group import PermGroup
from pclose.perm.oracle import element_table
from pclose.perm.permutation import parse_cycles, shift
from pclose.properties.registry import NILPOTENT, SOLVABLE, TRIVIAL


def a5_squared() -> PermGroup:
    return direct_product(alternating(5), alternating(5))


def swap_action() -> GroupAction:
    swap = parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", 10)
    return GroupAction.from_parts(a5_squared(), PermGroup(10, [swap]), 2, structure=PowerStructure(alternating(5), 2))


def passive_a5(degree: int) -> PermGroup:
    return PermGroup(degree, [shift(g, 0, degree) for g in alternating(5).generators])


class PComponentsTestCase(TestCase):
    def test_examples(self):
        self.assertEqual([alternating(5)], list(comp_p(symmetric(5), SOLVABLE).members))
        sl25 = special_linear_2(5)
        self.assertEqual([sl25], list(comp_p(sl25, NILPOTENT).members))
        self.assertEqual([sl25], list(comp_p(sl25, SOLVABLE).members))
        self.assertEqual(0, len(comp_p(symmetric(4), SOLVABLE)))
        self.assertTrue(p_layer(symmetric(4), SOLVABLE).is_trivial)

    def test_products(self):
        product = a5_squared()
        self.assertCountEqual(
            [factor_embedding([alternating(5)] * 2, i) for i in range(2)], comp_p(product, SOLVABLE).members
        )
        mixed = direct_product(alternating(5), symmetric(4))
        nilpotent = comp_p(mixed, NILPOTENT)
        self.assertEqual([factor_embedding([alternating(5), symmetric(4)], 0)], list(nilpotent.members))
        self.assertEqual(60, nilpotent.layer.order)

    def test_against_definition(self):
        for group in (symmetric(5), direct_product(alternating(5), cyclic(2)), special_linear_2(5)):
            table = element_table(group)
            for prop in (TRIVIAL, NILPOTENT, SOLVABLE):
                with self.subTest(group=group, prop=prop.name):
                    expected = [
                        table.subgroup(m)
                        for m in table.subnormal_subgroups()
                        if is_p_component(group, table.subgroup(m), prop)
                    ]
                    self.assertCountEqual(expected, comp_p(group, prop).members)

    def test_is_p_component(self):
        a6 = alternating(6)
        self.assertTrue(is_p_component(a6, a6, SOLVABLE))
        self.assertFalse(is_p_component(a6, a6.stabilizer(5), SOLVABLE))
        self.assertFalse(is_p_component(symmetric(4), alternating(4), SOLVABLE))
        self.assertFalse(is_p_component(a6, PermGroup.trivial(6), TRIVIAL))

    def test_stable_residual(self):
        self.assertTrue(stable_residual(symmetric(4), SOLVABLE).is_trivial)
        self.assertEqual(alternating(5), stable_residual(symmetric(5), SOLVABLE))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            comp_p(symmetric(4), replace(NILPOTENT, name="undeclared", declared_axioms=frozenset()))

    def test_dto(self):
        dto = comp_p(a5_squared(), SOLVABLE).to_dto()
        self.assertEqual("solvable", dto.property)
        self.assertEqual(3600, dto.layer.order)
        self.assertEqual([60, 60], [m.order for m in dto.members])


class APComponentsTestCase(TestCase):
    def test_swap(self):
        action = swap_action()
        components = comp_ap(action, action.group, SOLVABLE)
        self.assertEqual([action.group], list(components.members))
        self.assertEqual(1, len(comp_a(action, action.group)))
        self.assertTrue(is_ap_component(action, action.group, action.group, SOLVABLE))
        self.assertFalse(
            is_ap_component(action, action.group, factor_embedding([alternating(5)] * 2, 0), SOLVABLE)
        )

    def test_trivial_actors_match_p_components(self):
        group = a5_squared()
        action = GroupAction.from_parts(group, PermGroup.trivial(10), 2)
        self.assertCountEqual(comp_p(group, SOLVABLE).members, comp_ap(action, group, SOLVABLE).members)
        self.assertEqual(2, len(actor_orbits(action, comp_p(group, SOLVABLE).members)))

    def test_regular_wreath(self):
        action = build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=7)
        components = comp_ap(action, action.group, SOLVABLE)
        self.assertEqual(1, len(components))
        self.assertEqual(action.group.order, components.layer.order)

    def test_not_invariant(self):
        action = swap_action()
        with self.assertRaises(NotInvariantError):
            comp_ap(action, factor_embedding([alternating(5)] * 2, 0), SOLVABLE)


class EmbeddingTestCase(TestCase):
    def test_diagonal_lands_in_whole_power(self):
        action = build_power_action(alternating(5), const.PowerPattern.RegularWreath, prime=7)
        diagonal = action.structure.fixed_points(action.actors.generators)
        self.assertEqual(60, diagonal.order)
        self.assertEqual(action.group, embed_in_asol(action, diagonal, diagonal, NILPOTENT))

    def test_passive_factor(self):
        action = build_affine_action(3, alternating(5))
        a5 = passive_a5(action.group.degree)
        report = embedding_report(action, action.group, a5, SOLVABLE)
        self.assertEqual(a5, report.target)
        self.assertEqual(const.FixedPointStatus.Accepted, report.hypothesis)
        self.assertFalse(report.is_violation)

    def test_preconditions(self):
        swap = swap_action()
        with self.assertRaises(PreconditionError):
            embed_in_asol(swap, swap.group, swap.group, SOLVABLE)
        action = build_affine_action(3, alternating(5))
        with self.assertRaises(PreconditionError):
            embed_in_asol(action, action.group, action.group, SOLVABLE)
        degree = action.group.degree
        a4 = PermGroup(degree, [shift(g, 0, degree) for g in alternating(4).generators])
        with self.assertRaises(NotInvariantError):
            embed_in_asol(action, a4, a4, TRIVIAL)

    def test_violation_flag(self):
        k = alternating(5)
        self.assertTrue(EmbeddingReport(k, (), const.FixedPointStatus.Accepted).is_violation)
        self.assertFalse(EmbeddingReport(k, (), const.FixedPointStatus.CorpusTested).is_violation)
        self.assertEqual(k, EmbeddingReport(k, (k,), const.FixedPointStatus.Accepted).target)
