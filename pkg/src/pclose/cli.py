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
from contextlib import contextmanager
import sys
from typing import Iterator

from cli_rack import CLI
from cli_rack.modular import CliAppManager, CliExtension

from pclose import __version__
from pclose.errors import InternalConsistencyError, ResourceLimitError, TheoremViolationError

EXIT_FINDINGS = 1
EXIT_USAGE = 2


class VersionCliExtension(CliExtension):
    COMMAND_NAME = "version"
    COMMAND_DESCRIPTION = "Prints application version"

    @classmethod
    def setup_parser(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--short",
            "-s",
            dest="short",
            action="store_true",
            default=False,
            required=False,
            help="Print short version",
        )

    def handle(self, args: argparse.Namespace):
        if args.short:
            CLI.print_info(f"{__version__.VERSION}")
        else:
            CLI.print_info(f"Version: {__version__.VERSION}")


@contextmanager
def exit_codes() -> Iterator[None]:
    """Map errors escaping a command to the exit codes: findings exit with 1, bad input and limits with 2."""
    try:
        yield
    except TheoremViolationError as e:
        CLI.fail(f"{e} (witness: {e.witness})", EXIT_FINDINGS)
    except InternalConsistencyError as e:
        CLI.fail(f"Internal consistency check failed: {e}", EXIT_FINDINGS)
    except (ValueError, ResourceLimitError) as e:
        CLI.fail(str(e), EXIT_USAGE)
    except Exception as e:
        CLI.print_error(e)
        CLI.fail(f"Unexpected {type(e).__name__}, rerun with --debug for details", EXIT_FINDINGS)


def main(argv: list[str]):
    CLI.setup()
    app_manager = CliAppManager(
        "pclose",
        description="Property closures, P-components and signalizer functors on finite permutation groups",
        epilog=f"Exit codes: 0 all claims hold, 1 findings present, 2 usage or resource error.\n"
        f"\nVersion {__version__.VERSION}",
    )
    app_manager.parse_and_handle_global()
    app_manager.register_extension(VersionCliExtension)
    from pclose.closures import cli as closures_cli
    from pclose.components import cli as components_cli
    from pclose.constructions import cli as constructions_cli
    from pclose.corpus import cli as corpus_cli
    from pclose.signalizer import cli as signalizer_cli
    from pclose.structure import cli as structure_cli

    app_manager.register_extension(structure_cli.AnalyzeCliExtension)
    app_manager.register_extension(components_cli.ComponentsCliExtension)
    app_manager.register_extension(closures_cli.ClosureCliExtension)
    app_manager.register_extension(signalizer_cli.FunctorCliExtension)
    app_manager.register_extension(constructions_cli.ConstructCliExtension)
    app_manager.register_extension(constructions_cli.ExampleCliExtension)
    app_manager.register_extension(corpus_cli.SuiteCliExtension)
    app_manager.setup()
    with exit_codes():
        # Parse arguments
        parsed_commands = app_manager.parse(argv)
        if len(parsed_commands) == 1 and parsed_commands[0].cmd is None:
            app_manager.args_parser.print_help()
            CLI.fail("At least one command is required", EXIT_USAGE)
        # Run
        exec_manager = app_manager.create_execution_manager()
        exec_manager.run(parsed_commands)


def entrypoint():
    main(sys.argv[1:])


if __name__ == "__main__":
    entrypoint()
