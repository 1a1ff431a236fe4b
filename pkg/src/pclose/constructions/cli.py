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
import argparse
import math

from cli_rack import CLI
from cli_rack.modular import CliExtension

from pclose import const
from pclose.closures.action import CoprimeAction, GroupAction
from pclose.closures.text_format import format_action_spec
from pclose.constructions.lg_example import DEFAULT_K_LABEL, SUPPORTED_PRIMES, build_lg_example, verify_lg_example
from pclose.constructions.power import build_power_action
from pclose.constructions.psl2 import build_psl2
from pclose.output import add_out_argument, emit, emit_dto, write_text
from pclose.perm.group import PermGroup
from pclose.perm.permutation import parse_cycles
from pclose.perm.text_format import format_group_spec, read_group_spec
from pclose.utils import is_prime

EXIT_FINDINGS = 1


class ConstructCliExtension(CliExtension):
    COMMAND_NAME = "construct"
    COMMAND_DESCRIPTION = "Writes PSL(2,2^k) and direct powers with actors as spec files"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        commands = parser.add_subparsers(dest="construct_command", metavar="{psl2,power}")
        commands.required = True
        psl2 = commands.add_parser("psl2", help="PSL(2,2^k) on the projective line, with its Frobenius for prime k")
        psl2.add_argument("--k", dest="k", type=int, required=True, help="Extension degree of the field, 1..8")
        add_out_argument(psl2, "the spec file")
        power = commands.add_parser("power", help="A direct power J^m with elementary abelian actors")
        power.add_argument("--j", dest="j", type=str, required=True, help="Group-spec file of the factor J")
        power.add_argument(
            "--pattern",
            dest="pattern",
            type=str,
            required=True,
            choices=[p.value for p in const.PowerPattern],
            help="How the actors move the coordinates",
        )
        power.add_argument("--prime", dest="prime", type=int, required=True, help="Exponent of the actors")
        power.add_argument(
            "--automorphism",
            dest="automorphism",
            type=str,
            required=False,
            default=None,
            help="Automorphism of J in cycle notation, for the diagonal, coordinatewise and mixed patterns",
        )
        power.add_argument(
            "--copies",
            dest="copies",
            type=int,
            required=False,
            default=None,
            help="Number of coordinates. Defaults to the prime for the cycling patterns.",
        )
        add_out_argument(power, "the action spec")

    def handle(self, args: argparse.Namespace):
        if args.construct_command == "psl2":
            if not is_prime(args.k):
                CLI.print_info(f"The Frobenius has composite order {args.k}; writing the group alone")
            emit(self.psl2_spec(args.k), args.out)
        else:
            factor = read_group_spec(args.j)
            automorphism = parse_cycles(args.automorphism, factor.degree) if args.automorphism else None
            action = build_power_action(
                factor, args.pattern, prime=args.prime, automorphism=automorphism, copies=args.copies
            )
            emit(format_action_spec(action), args.out)

    @staticmethod
    def psl2_spec(k: int) -> str:
        """An action spec with the Frobenius as actor when `k` is prime, otherwise a group spec."""
        group, frobenius = build_psl2(k)
        if not is_prime(k):
            return format_group_spec(group)
        actors = PermGroup(group.degree, [frobenius])
        cls = CoprimeAction if math.gcd(k, group.order) == 1 else GroupAction
        return format_action_spec(cls.from_parts(group, actors, k))


class ExampleCliExtension(CliExtension):
    COMMAND_NAME = "example"
    COMMAND_DESCRIPTION = "Verifies the worked example of a solvable-component not embedded in an A-component"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        commands = parser.add_subparsers(dest="example_command", metavar="{lg}")
        commands.required = True
        lg = commands.add_parser("lg", help="J = PSL(2,2^r) with its Frobenius, K a simple group of order n")
        lg.add_argument(
            "--r",
            dest="r",
            type=int,
            required=False,
            default=5,
            choices=sorted(SUPPORTED_PRIMES),
            help="Prime order of the Frobenius",
        )
        lg.add_argument(
            "--k-label",
            dest="k_label",
            type=str,
            required=False,
            default=DEFAULT_K_LABEL,
            help="Simple group K, e.g. A5 or L2(8)",
        )
        lg.add_argument(
            "--spec-out",
            dest="spec_out",
            type=str,
            required=False,
            default=None,
            help="Also write the factor-level action of the Frobenius on J as an action spec",
        )
        add_out_argument(lg)

    def handle(self, args: argparse.Namespace):
        instance = build_lg_example(args.r, args.k_label)
        if args.spec_out is not None:
            write_text(args.spec_out, format_action_spec(instance.factor_action()))
        report = verify_lg_example(instance)
        emit_dto(report.to_dto(), args.out)
        if not report.passed:
            failed = ", ".join(c.name for c in report.failed)
            CLI.fail(f"Example claims failing: {failed}", EXIT_FINDINGS)
