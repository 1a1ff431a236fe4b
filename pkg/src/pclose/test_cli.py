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

from cli_rack import CLI

from pclose.cli import EXIT_FINDINGS, EXIT_USAGE, exit_codes
from pclose.const import PropertyAxiom
from pclose.errors import (
    ConstructionError,
    InternalConsistencyError,
    PreconditionError,
    ResourceLimitError,
    TheoremViolationError,
)


class ExitCodesTestCase(TestCase):
    @classmethod
    def setUpClass(cls):
        CLI.setup()

    def assert_exit(self, error: Exception, expected: int):
        with self.assertRaises(SystemExit) as context:
            with exit_codes():
                raise error
        self.assertEqual(expected, context.exception.code)

    def test_findings(self):
        test_cases = [
            TheoremViolationError(PropertyAxiom.NormalProduct, {}, "join is not a P-group"),
            InternalConsistencyError("component is not quasisimple"),
            RuntimeError("unexpected"),
        ]
        for error in test_cases:
            with self.subTest(error=type(error).__name__):
                self.assert_exit(error, EXIT_FINDINGS)

    def test_usage_and_limits(self):
        test_cases = [
            ConstructionError("broken spec"),
            PreconditionError("axiom not validated"),
            ResourceLimitError("oracle bound"),
        ]
        for error in test_cases:
            with self.subTest(error=type(error).__name__):
                self.assert_exit(error, EXIT_USAGE)

    def test_success(self):
        with exit_codes():
            pass
