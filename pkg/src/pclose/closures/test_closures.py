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
from pclose.closures.action import ActorFrame, CoprimeAction, GroupAction
from pclose.closures.fixed import commutator_in, commutator_with, fixed_points
from pclose.closures.invariant import (
    enumerate_invariant_subgroups,
    is_near_ap,
    o_np_invariant,
    o_np_normal,
    o_p_invariant,
)
from pclose.closures.text_format import format_action_spec, parse_action_spec
from pclose.constructions.affine import build_affine_action, build_inversion_action
from pclose.constructions.named import (
    alternating,
    cyclic,
    direct_product,
    factor_embedding,
    frobenius_21,
    symmetric,
)
from pclose.constructions.power import PowerStructure, build_power_action
from pclose.constructions.psl2 import build_psl2
from pclose.errors import (
    ConstructionError,
    NotContainedError,
    NotInvariantError,
    NotNormalError,
    ResourceLimitError,
)
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles, shift
from pclose.properties.registry import NILPOTENT, SOLVABLE, get_property
from pclose.structure.layer import is_a_quasisimple


def swap_action() -> GroupAction:
    """C2 swapping the factors of A5 × A5."""
    swap = parse_cycles("(1 6)(2 7)(3 8)(4 9)(5 10)", 10)
    product = direct_product(alternating(5), alternating(5))
    return GroupAction.from_parts(product, PermGroup(10, [swap]), 2, structure=PowerStructure(alternating(5), 2))


def frobenius_action() -> CoprimeAction:
    group, frobenius = build_psl2(5)
    return CoprimeAction.from_parts(group, PermGroup(group.degree, [frobenius]), 5)


def inverted_c3_squared() -> CoprimeAction:
    return build_power_action(
        cyclic(3), const.PowerPattern.Diagonal, prime=2, automorphism=parse_cycles("(2 3)", 3), copies=2
    )


class ActionTestCase(TestCase):
    def test_validation(self):
        s3 = symmetric(3)
        with self.assertRaises(NotNormalError):
            GroupAction(s3, PermGroup(3, [parse_cycles("(1 2)", 3)]), PermGroup(3, [parse_cycles("(1 2 3)", 3)]), 3)
        with self.assertRaises(ConstructionError):
            GroupAction.from_parts(cyclic(3), PermGroup(3, [parse_cycles("(1 2)", 3)]), 3)
        with self.assertRaises(ConstructionError):
            CoprimeAction.from_parts(alternating(5), alternating(5).sylow_subgroup(2), 2)
        with self.assertRaises(ConstructionError):
            swap = swap_action()
            CoprimeAction(swap.wrapper, swap.group, swap.actors, 2)

    def test_restrict_and_with_actors(self):
        action = build_inversion_action(15)
        c5 = PermGroup(15, [parse_cycles("(1 4 7 10 13)(2 5 8 11 14)(3 6 9 12 15)", 15)])
        restricted = action.restrict(c5)
        self.assertEqual(5, restricted.group.order)
        self.assertIsInstance(restricted, CoprimeAction)
        trivial = action.with_actors(PermGroup.trivial(15))
        self.assertTrue(trivial.actors.is_trivial)
        with self.assertRaises(NotContainedError):
            action.with_actors(PermGroup(15, [parse_cycles("(1 2)", 15)]))
        swap = swap_action()
        with self.assertRaises(NotInvariantError):
            swap.restrict(factor_embedding([alternating(5), alternating(5)], 0))

    def test_frame(self):
        action = build_power_action(
            cyclic(3), const.PowerPattern.Coordinatewise, prime=2, automorphism=parse_cycles("(2 3)", 3), copies=3
        )
        frame = action.frame
        self.assertEqual(3, frame.rank)
        words = [frame.format_word(c) for c in frame.cyclic_representatives()]
        self.assertEqual(["e1", "e2", "e3", "e1*e2", "e1*e3", "e2*e3", "e1*e2*e3"], words)
        self.assertEqual(7, len(frame.hyperplanes()))
        self.assertTrue(all(h.order == 4 for h in frame.hyperplanes()))
        self.assertEqual((1, 0, 1), frame.parse_word("e1*e3"))
        self.assertEqual((0, 0, 0), frame.parse_word("1"))
        self.assertEqual((1, 1, 0), frame.coords(action.actor((1, 1, 0))))
        for bad in ("e4", "x1", "e1**e2"):
            with self.subTest(word=bad):
                with self.assertRaises(ConstructionError):
                    frame.parse_word(bad)

    def test_frame_odd_prime(self):
        cycle = parse_cycles("(1 2 3 4 5)", 5)
        frame = ActorFrame(PermGroup(10, [shift(cycle, 0, 10), shift(cycle, 5, 10)]), 5)
        self.assertEqual(6, len(frame.cyclic_representatives()))
        self.assertEqual((1, 3), frame.normalize((2, 1)))
        self.assertEqual("e1^2*e2", frame.format_word((2, 1)))
        self.assertEqual((2, 1), frame.parse_word("e1^2*e2"))
        self.assertEqual([], ActorFrame(PermGroup(5, [parse_cycles("(1 2 3 4 5)", 5)]), 5).hyperplanes())


class FixedPointsTestCase(TestCase):
    def test_swap_diagonal(self):
        action = swap_action()
        diagonal = fixed_points(action)
        self.assertEqual(60, diagonal.order)
        plain = GroupAction(action.wrapper, action.group, action.actors, 2)
        self.assertEqual(diagonal, fixed_points(plain))
        self.assertTrue(is_a_quasisimple(action, action.group))

    def test_trivial_actors(self):
        action = swap_action()
        self.assertEqual(action.group, fixed_points(action, PermGroup.trivial(10)))
        with self.assertRaises(NotContainedError):
            fixed_points(action, PermGroup(10, [parse_cycles("(1 2 3)", 10)]))

    def test_frobenius_on_psl2_32(self):
        fixed = fixed_points(frobenius_action())
        self.assertEqual(6, fixed.order)
        self.assertFalse(fixed.is_abelian)

    def test_commutators(self):
        action = build_inversion_action(15)
        self.assertEqual(15, commutator_with(action).order)
        self.assertEqual(15, commutator_in(action.group, action.actors.generators[0]).order)
        self.assertTrue(commutator_with(action, PermGroup.trivial(15)).is_trivial)


class InvariantClosureTestCase(TestCase):
    def test_enumeration(self):
        s4 = GroupAction.from_parts(symmetric(4), PermGroup.trivial(4), 2)
        self.assertEqual(30, len(enumerate_invariant_subgroups(s4, const.StabilizerMode.NoFilter)))
        self.assertEqual(4, len(enumerate_invariant_subgroups(s4, const.StabilizerMode.ACGA)))
        trivial = GroupAction.from_parts(PermGroup.trivial(3), PermGroup.trivial(3), 2)
        self.assertEqual(1, len(enumerate_invariant_subgroups(trivial)))
        family = enumerate_invariant_subgroups(build_inversion_action(15), prop=get_property("pi:5"))
        self.assertEqual([1, 5], [m.order for m in family.members])

    def test_enumeration_under_single_actor(self):
        action = inverted_c3_squared()
        a = action.actors.generators[0]
        family = enumerate_invariant_subgroups(action, const.StabilizerMode.ACGa, a=a)
        self.assertEqual(6, len(family))

    def test_o_p_invariant(self):
        action = build_inversion_action(15)
        self.assertEqual(5, o_p_invariant(action, get_property("pi:5")).order)
        self.assertEqual(3, o_p_invariant(action, get_property("pi:3")).order)
        self.assertEqual(action.group, o_p_invariant(action, NILPOTENT))

    def test_o_p_invariant_affine(self):
        action = build_affine_action(3, alternating(5))
        self.assertEqual(8, o_p_invariant(action, SOLVABLE).order)
        self.assertEqual(8, o_np_invariant(action, SOLVABLE).order)
        self.assertEqual(8, o_np_normal(action, SOLVABLE).order)

    def test_o_p_invariant_structured(self):
        inversion = parse_cycles("(2 7)(3 6)(4 5)", 7)
        action = build_power_action(
            frobenius_21(), const.PowerPattern.Coordinatewise, prime=2, automorphism=inversion, copies=3
        )
        self.assertEqual(21**3, action.group.order)
        self.assertEqual(7**3, o_p_invariant(action, get_property("pi:7")).order)
        with self.assertRaises(ResourceLimitError):
            o_p_invariant(GroupAction(action.wrapper, action.group, action.actors, 2), get_property("pi:7"))

    def test_near(self):
        action = frobenius_action()
        self.assertTrue(is_near_ap(action, action.group, SOLVABLE))
        self.assertEqual(action.group, o_np_invariant(action, SOLVABLE))
        a5 = GroupAction.from_parts(alternating(5), PermGroup.trivial(5), 2)
        self.assertFalse(is_near_ap(a5, a5.group, SOLVABLE))
        inversion = build_inversion_action(15)
        self.assertTrue(is_near_ap(inversion, inversion.group, NILPOTENT))
        squared = inverted_c3_squared()
        self.assertEqual(squared.group, o_np_invariant(squared, SOLVABLE))
        self.assertEqual(squared.group, o_np_normal(squared, SOLVABLE))
        with self.assertRaises(NotInvariantError):
            is_near_ap(swap_action(), factor_embedding([alternating(5), alternating(5)], 0), SOLVABLE)


INVERTED_SQUARE = """
# C3 x C3 inverted diagonally
degree 6
(1 2 3)
(4 5 6)
(2 3)(5 6)
group: 1 2
actors: 3
prime: 2
power: 2
"""


class ActionSpecTestCase(TestCase):
    def test_parse(self):
        action = parse_action_spec(INVERTED_SQUARE)
        self.assertIsInstance(action, CoprimeAction)
        self.assertEqual((9, 2, 2), (action.group.order, action.actors.order, action.prime))
        self.assertEqual(2, action.structure.copies)
        self.assertEqual(3, action.structure.factor.order)
        bare = parse_action_spec(INVERTED_SQUARE.replace("power: 2\n", ""), coprime=False)
        self.assertIsNone(bare.structure)
        self.assertNotIsInstance(bare, CoprimeAction)

    def test_format(self):
        text = format_action_spec(inverted_c3_squared())
        self.assertTrue(text.endswith("prime: 2\npower: 2\n"))
        self.assertEqual(9, parse_action_spec(text).group.order)

    def test_malformed(self):
        cases = {
            "missing prime": INVERTED_SQUARE.replace("prime: 2\n", ""),
            "twice": INVERTED_SQUARE + "prime: 2\n",
            "out of range": INVERTED_SQUARE.replace("actors: 3", "actors: 4"),
            "overlap": INVERTED_SQUARE.replace("actors: 3", "actors: 2 3"),
            "not a power": INVERTED_SQUARE.replace("power: 2", "power: 4"),
            "bad prime": INVERTED_SQUARE.replace("prime: 2", "prime: two"),
        }
        for name, text in cases.items():
            with self.subTest(case=name):
                with self.assertRaises(ConstructionError):
                    parse_action_spec(text)
