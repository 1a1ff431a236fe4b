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

from cli_rack import CLI
from cli_rack.modular import CliExtension

from pclose import const
from pclose.output import add_out_argument, emit, emit_dto
from pclose.properties.registry import get_property
from pclose.signalizer.completeness import completeness
from pclose.signalizer.derived import derive_functor, subfunctor_psi
from pclose.signalizer.functor import functor_verify
from pclose.signalizer.gorenstein_lyons import gorenstein_lyons_check
from pclose.signalizer.text_format import format_functor_spec, read_functor_spec

EXIT_FINDINGS = 1


class FunctorCliExtension(CliExtension):
    COMMAND_NAME = "functor"
    COMMAND_DESCRIPTION = "Verifies, completes and derives signalizer functors given as functor-spec files"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        commands = parser.add_subparsers(dest="functor_command", metavar="{verify,complete,derive,psi,glcheck}")
        commands.required = True
        verify = commands.add_parser("verify", help="Check the containment and balance conditions")
        complete = commands.add_parser("complete", help="Compute the closure and test completeness")
        derive = commands.add_parser("derive", help="Emit theta_P or theta_nP as a functor spec")
        derive.add_argument(
            "--mode",
            "-m",
            dest="mode",
            type=str,
            required=False,
            default=const.FunctorMode.P.value,
            choices=[m.value for m in const.FunctorMode],
            help="P for O_P(theta(a);A), nP for O_nP(theta(a);A)",
        )
        derive.add_argument(
            "--property",
            "-p",
            dest="property",
            type=str,
            required=False,
            default="solvable",
            help="trivial, nilpotent, solvable, odd-order or pi:<primes>",
        )
        psi = commands.add_parser("psi", help="Emit the subfunctor psi for an actor t as a functor spec")
        psi.add_argument(
            "--t",
            dest="t",
            type=str,
            required=True,
            help="The actor as a word in the actor generators, e.g. `e1*e2^2`",
        )
        glcheck = commands.add_parser("glcheck", help="Test the fixed-components hypothesis and completeness")
        for command in (verify, complete, glcheck):
            command.add_argument("spec", metavar="spec", type=str, help="Functor-spec file")
            add_out_argument(command)
        for command in (derive, psi):
            command.add_argument("spec", metavar="spec", type=str, help="Functor-spec file")
            add_out_argument(command, "the functor spec")

    def handle(self, args: argparse.Namespace):
        functor = read_functor_spec(args.spec)
        match args.functor_command:
            case "verify":
                report = functor_verify(functor)
                emit_dto(report.to_dto(), args.out)
                if not report.passed:
                    CLI.fail(f"{len(report.violations)} violations", EXIT_FINDINGS)
            case "complete":
                closure = completeness(functor)
                CLI.print_info("Complete" if closure.complete else "Not complete")
                emit_dto(closure.to_dto(), args.out)
            case "derive":
                derived = derive_functor(functor, args.mode, get_property(args.property))
                emit(format_functor_spec(derived), args.out)
            case "psi":
                frame = functor.action.frame
                t = frame.element(frame.parse_word(args.t))
                emit(format_functor_spec(subfunctor_psi(functor, t)), args.out)
            case "glcheck":
                check = gorenstein_lyons_check(functor)
                emit_dto(check.to_dto(), args.out)
                if not check.passed:
                    CLI.fail("The actors fix every solvable-component but the functor is not complete", EXIT_FINDINGS)
