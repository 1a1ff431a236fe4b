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
from pclose.closures.action import CoprimeAction
from pclose.constructions.affine import build_inversion_action
from pclose.constructions.named import cyclic
from pclose.constructions.power import build_power_action
from pclose.constructions.psl2 import build_psl2
from pclose.errors import ConstructionError, NotContainedError, PreconditionError
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles
from pclose.properties.registry import SOLVABLE, get_property
from pclose.signalizer.completeness import completeness, functor_restrict_hyperplane, hyperplane_values
from pclose.signalizer.derived import derive_functor, subfunctor_psi
from pclose.signalizer.functor import (
    SignalizerFunctor,
    full_centralizer_functor,
    functor_size,
    functor_verify,
    is_theta_subgroup,
    theta_of_actors,
    trivial_functor,
)
from pclose.signalizer.gorenstein_lyons import gorenstein_lyons_check
from pclose.signalizer.text_format import format_functor_spec, parse_functor_spec

E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def inverted_cube(copies: int = 3) -> CoprimeAction:
    """C3^m with the i-th actor inverting the i-th coordinate."""
    return build_power_action(
        cyclic(3), const.PowerPattern.Coordinatewise, prime=2, automorphism=parse_cycles("(2 3)", 3), copies=copies
    )


def coordinate(action: CoprimeAction, i: int) -> PermGroup:
    return action.structure.coordinate_group(i)


def broken_functor(action: CoprimeAction) -> SignalizerFunctor:
    """The full centralizer functor with `θ(e2)` replaced by the trivial group."""
    full = full_centralizer_functor(action)
    values = {c: v for c, v in full.items()}
    values[E2] = PermGroup.trivial(action.group.degree)
    return SignalizerFunctor(action, values)


class FunctorTestCase(TestCase):
    def test_full_and_trivial_pass(self):
        action = inverted_cube()
        self.assertTrue(functor_verify(full_centralizer_functor(action)).passed)
        self.assertTrue(functor_verify(trivial_functor(action)).passed)
        self.assertTrue(trivial_functor(action).verified)

    def test_balance_failure(self):
        report = functor_verify(broken_functor(inverted_cube()))
        self.assertFalse(report.passed)
        balance = [v for v in report.of_kind(const.ViolationKind.Balance) if (v.a, v.b) == (E1, E2)]
        self.assertEqual(1, len(balance))
        self.assertEqual(3, balance[0].witness.order())
        self.assertEqual([], report.of_kind(const.ViolationKind.Containment))
        self.assertFalse(report.to_dto().passed)

    def test_value_violations(self):
        action = inverted_cube()
        full = full_centralizer_functor(action)
        values = {c: v for c, v in full.items()}
        values[E1] = coordinate(action, 0)
        values[E3] = PermGroup(9, [parse_cycles("(1 2 3)(4 5 6)", 9)])
        report = functor_verify(SignalizerFunctor(action, values))
        self.assertEqual([E1], [v.a for v in report.of_kind(const.ViolationKind.Containment)])
        self.assertEqual([E3], [v.a for v in report.of_kind(const.ViolationKind.Invariance)])

    def test_values_keyed_by_cyclic_subgroup(self):
        action = build_power_action(
            cyclic(7), const.PowerPattern.Diagonal, prime=3, automorphism=parse_cycles("(2 3 5)(4 7 6)", 7), copies=2
        )
        functor = full_centralizer_functor(action)
        a = action.actors.generators[0]
        self.assertEqual([(1,)], list(functor.representatives))
        self.assertEqual(functor.value(a), functor.value(a**2))
        with self.assertRaises(NotContainedError):
            functor.value((0,))
        with self.assertRaises(ConstructionError):
            SignalizerFunctor(action, {(1,): PermGroup.trivial(14), (2,): action.group})
        with self.assertRaises(ConstructionError):
            SignalizerFunctor(inverted_cube(), {E1: PermGroup.trivial(9)})

    def test_theta_of_actors_and_size(self):
        action = inverted_cube()
        full = full_centralizer_functor(action)
        self.assertTrue(theta_of_actors(full).is_trivial)
        self.assertEqual(3 * 9 + 3 * 3 + 1, functor_size(full))
        self.assertEqual(0, functor_size(trivial_functor(action)))

    def test_theta_subgroups(self):
        action = inverted_cube()
        full = full_centralizer_functor(action)
        self.assertTrue(is_theta_subgroup(full, action.group))
        self.assertTrue(is_theta_subgroup(full, coordinate(action, 1)))
        self.assertFalse(is_theta_subgroup(full, PermGroup(9, [parse_cycles("(1 2 3)(4 5 6)", 9)])))
        self.assertFalse(is_theta_subgroup(trivial_functor(action), coordinate(action, 0)))


class HyperplaneTestCase(TestCase):
    def test_restrict(self):
        action = inverted_cube()
        b = PermGroup(9, [action.actor(E1), action.actor(E2)])
        self.assertEqual(coordinate(action, 2), functor_restrict_hyperplane(full_centralizer_functor(action), b))
        self.assertTrue(functor_restrict_hyperplane(trivial_functor(action), b).is_trivial)
        self.assertEqual(7, len(hyperplane_values(full_centralizer_functor(action))))

    def test_errors(self):
        inversion = build_inversion_action(15)
        with self.assertRaises(PreconditionError):
            functor_restrict_hyperplane(trivial_functor(inversion), inversion.actors)
        action = inverted_cube()
        with self.assertRaises(PreconditionError):
            functor_restrict_hyperplane(trivial_functor(action), PermGroup(9, [action.actor(E1)]))


class CompletenessTestCase(TestCase):
    def test_full_centralizer(self):
        report = completeness(full_centralizer_functor(inverted_cube()))
        self.assertTrue(report.complete)
        self.assertEqual(27, report.closure.order)
        self.assertTrue(report.generated_by_hyperplanes)
        self.assertEqual(7, len(report.fixed_point_match))

    def test_trivial(self):
        report = completeness(trivial_functor(inverted_cube()))
        self.assertTrue(report.complete)
        self.assertTrue(report.closure.is_trivial)
        self.assertTrue(report.to_dto().complete)

    def test_rank_one(self):
        report = completeness(full_centralizer_functor(build_inversion_action(15)))
        self.assertTrue(report.complete)
        self.assertIsNone(report.generated_by_hyperplanes)

    def test_needs_verified_functor(self):
        with self.assertRaises(PreconditionError):
            completeness(broken_functor(inverted_cube()))


class DerivedFunctorTestCase(TestCase):
    def test_p_closures(self):
        full = full_centralizer_functor(inverted_cube())
        same = derive_functor(full, const.FunctorMode.P, get_property("pi:3"))
        self.assertTrue(all(same.value(c) == v for c, v in full.items()))
        trivial = derive_functor(full, "P", get_property("pi:2"))
        self.assertTrue(all(v.is_trivial for _, v in trivial.items()))

    def test_near_closure(self):
        full = full_centralizer_functor(inverted_cube())
        near = derive_functor(full, const.FunctorMode.NearP, SOLVABLE)
        self.assertTrue(all(near.value(c) == v for c, v in full.items()))
        self.assertTrue(near.verified)

    def test_needs_verified_functor(self):
        with self.assertRaises(PreconditionError):
            derive_functor(broken_functor(inverted_cube()), const.FunctorMode.P, SOLVABLE)


class SubfunctorTestCase(TestCase):
    def test_commutators_with_e1(self):
        action = inverted_cube()
        psi = subfunctor_psi(full_centralizer_functor(action), action.actor(E1))
        first = coordinate(action, 0)
        expected = {
            E1: None,
            E2: first,
            E3: first,
            (1, 1, 0): None,
            (1, 0, 1): None,
            (0, 1, 1): first,
            (1, 1, 1): None,
        }
        for coords, value in expected.items():
            with self.subTest(a=psi.word(coords)):
                if value is None:
                    self.assertTrue(psi.value(coords).is_trivial)
                else:
                    self.assertEqual(value, psi.value(coords))
        self.assertTrue(psi.verified)

    def test_trivial_functor(self):
        action = inverted_cube()
        psi = subfunctor_psi(trivial_functor(action), action.actor((1, 1, 1)))
        self.assertTrue(all(v.is_trivial for _, v in psi.items()))

    def test_errors(self):
        action = inverted_cube()
        full = full_centralizer_functor(action)
        with self.assertRaises(NotContainedError):
            subfunctor_psi(full, action.group.generators[0])
        with self.assertRaises(NotContainedError):
            subfunctor_psi(full, action.group.identity)


class GorensteinLyonsTestCase(TestCase):
    def test_small_instance(self):
        report = gorenstein_lyons_check(full_centralizer_functor(inverted_cube()))
        self.assertTrue(report.hypothesis)
        self.assertTrue(report.conclusion)
        self.assertTrue(report.passed)
        self.assertTrue(all(not v.components for v in report.values))
        self.assertTrue(gorenstein_lyons_check(trivial_functor(inverted_cube())).passed)

    def test_rank_below_three(self):
        with self.assertRaises(PreconditionError):
            gorenstein_lyons_check(trivial_functor(inverted_cube(2)))

    @pytest.mark.slow
    def test_psl2_32_cube(self):
        factor, frobenius = build_psl2(5)
        action = build_power_action(
            factor, const.PowerPattern.Coordinatewise, prime=5, automorphism=frobenius, copies=3
        )
        report = gorenstein_lyons_check(full_centralizer_functor(action))
        self.assertTrue(report.hypothesis)
        self.assertTrue(report.passed)
        self.assertEqual(action.group, report.completeness.closure)
        self.assertEqual(2, report.to_dto().component_counts["e1"])


class FunctorSpecTestCase(TestCase):
    SPEC = """
    # C3^2 with coordinatewise inversions
    degree 6
    (1 2 3)
    (4 5 6)
    (2 3)
    (5 6)
    group: 1 2
    actors: 3 4
    prime: 2
    power: 2
    theta e1 : centralizer
    theta e2 : (1 2 3)
    theta e1*e2 :
    """

    def test_parse(self):
        functor = parse_functor_spec(self.SPEC)
        self.assertEqual(3, functor.value((1, 0)).order)
        self.assertEqual(functor.value((1, 0)), PermGroup(6, [parse_cycles("(4 5 6)", 6)]))
        self.assertTrue(functor.value((1, 1)).is_trivial)
        self.assertTrue(functor.verified)
        self.assertIsNotNone(functor.action.structure)

    def test_format(self):
        functor = parse_functor_spec(self.SPEC)
        text = format_functor_spec(functor)
        self.assertIn("theta e2 : (1 2 3)\n", text)
        self.assertIn("theta e1*e2 :\n", text)
        again = parse_functor_spec(text)
        self.assertTrue(all(again.value(c) == v for c, v in functor.items()))

    def test_errors(self):
        missing = self.SPEC.replace("theta e1*e2 :", "")
        for text in (missing, self.SPEC + "theta x1 : ()", self.SPEC.replace("prime: 2", "")):
            with self.subTest(text=text[-20:]):
                with self.assertRaises(ConstructionError):
                    parse_functor_spec(text)
