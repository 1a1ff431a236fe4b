#!/usr/bin/env python3
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
"""
Run every registered suite over a tier through the installed `pclose` command and collect the JSON reports.

Usage: run-suites.py <tier> <target_dir> [seed]
"""
from pathlib import Path
import shutil
import sys

from cli_rack import CLI
from cli_rack.utils import ensure_dir, run_executable

EXIT_FINDINGS = 1


def list_suites() -> list[str]:
    p = run_executable("pclose", "suite", "list", hide_output=True, mute_output=False)
    if p.returncode != 0:
        CLI.fail("Failed to list suites: \n" + str(p.stderr), 1)
    result = []
    output = p.stdout.decode("utf-8") if isinstance(p.stdout, bytes) else str(p.stdout)
    for line in output.splitlines():
        if line.strip():
            result.append(line.split()[0])
    return result


def report_name(suite_id: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in suite_id) + ".json"


def run_one(suite_id: str, tier: str, target_dir: Path, seed: str | None) -> int:
    report = target_dir / report_name(suite_id)
    params = ["pclose", "suite", "run", "--id", suite_id, "--tier", tier, "--json", str(report)]
    if seed is not None:
        params += ["--seed", seed]
    p = run_executable(*params, hide_output=True, mute_output=False)
    return p.returncode


def run(args: list[str]):
    CLI.setup()
    if len(args) < 2:
        CLI.fail("Usage: run-suites.py <tier> <target_dir> [seed]", 2)
    tier, target_dir = args[0], Path(args[1])
    seed: str | None = args[2] if len(args) > 2 else None
    if target_dir.is_file():
        CLI.fail("Target must be a directory, not a file: " + str(target_dir), 1)
    if target_dir.is_dir():
        shutil.rmtree(target_dir)
    ensure_dir(target_dir)
    failed = []
    for suite_id in list_suites():
        CLI.print_info(f"Running {suite_id} over the {tier} tier")
        code = run_one(suite_id, tier, target_dir, seed)
        if code == EXIT_FINDINGS:
            failed.append(suite_id)
        elif code != 0:
            CLI.fail(f"pclose exited with {code} on {suite_id}", code)
    if failed:
        CLI.fail("Suites with unexpected outcome: " + ", ".join(failed), EXIT_FINDINGS)
    CLI.print_info(f"All suites passed, reports in {target_dir}")


if __name__ == "__main__":
    run(sys.argv[1:])
