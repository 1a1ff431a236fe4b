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
from pathlib import Path

from cli_rack import CLI
from cli_rack.modular import CliExtension

from pclose import const
from pclose.corpus.runner import available_cores, run_suite
from pclose.corpus.suite import SuiteResult
from pclose.corpus.suites import get_registry
from pclose.output import dto_json, write_text
from pclose.settings import override_settings

EXIT_FINDINGS = 1


class SuiteCliExtension(CliExtension):
    COMMAND_NAME = "suite"
    COMMAND_DESCRIPTION = "Runs and lists the corpus suites"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        commands = parser.add_subparsers(dest="suite_command", metavar="{run,list}")
        commands.required = True
        run = commands.add_parser("run", help="Run one suite over a corpus tier")
        run.add_argument("--id", dest="suite_id", type=str, required=True, help="Suite identifier, e.g. `pc:3(b)`")
        run.add_argument(
            "--tier",
            dest="tier",
            type=str,
            choices=[t.value for t in const.CorpusTier],
            default=const.CorpusTier.Small.value,
            help="Corpus tier to run over",
        )
        run.add_argument("--seed", dest="seed", type=int, default=None, help="Seed of the random sampling")
        run.add_argument(
            "--workers",
            dest="workers",
            type=int,
            default=None,
            help=f"Number of worker processes. Defaults to the available cores ({available_cores()}).",
        )
        run.add_argument(
            "--instance",
            dest="instances",
            type=str,
            action="append",
            default=None,
            help="Restrict the run to the given instance. May be repeated.",
        )
        run.add_argument("--json", dest="json_out", type=str, default=None, help="Write the JSON report to this file")
        run.add_argument(
            "--timing",
            dest="timing",
            action="store_true",
            default=False,
            help="Record wall time in the report. Reports with timing are not byte-identical between runs.",
        )
        run.add_argument(
            "--oracle-bound",
            dest="oracle_bound",
            type=int,
            default=None,
            help="Override PCLOSE_ORACLE_BOUND for this run",
        )
        commands.add_parser("list", help="List the registered suites")

    def handle(self, args: argparse.Namespace):
        if args.suite_command == "list":
            self.list_suites()
        else:
            self.run(args)

    def list_suites(self) -> None:
        for suite in get_registry().suites.values():
            marker = " [negative control]" if suite.negative_control else ""
            CLI.print_data(f"{suite.suite_id:<16} {suite.domain:<8} {suite.description}{marker}")

    def run(self, args: argparse.Namespace) -> None:
        override_settings(oracle_bound=args.oracle_bound)
        result = run_suite(
            args.suite_id,
            args.tier,
            args.seed,
            workers=args.workers,
            instance_ids=args.instances,
            timing=args.timing,
        )
        if args.json_out is not None:
            write_report(result, Path(args.json_out))
        CLI.print_info(result.summary())
        for finding in result.findings:
            CLI.print_info(f"  {finding.instance_id}: {finding.claim}")
        if result.negative_control:
            if not result.has_findings:
                CLI.fail(f"Negative control {result.suite_id} reported no findings", EXIT_FINDINGS)
        elif result.has_findings:
            CLI.fail(f"{len(result.findings)} findings in {result.suite_id}", EXIT_FINDINGS)


def write_report(result: SuiteResult, path: Path) -> None:
    write_text(path, dto_json(result))
