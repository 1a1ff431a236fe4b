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
"""The registered suites, keyed by the claim they check."""
from functools import lru_cache

from pclose.corpus.suite import Suite, SuiteRegistry
from pclose.corpus.suites import closures, components, controls, engine, properties, signalizer


def default_registry() -> SuiteRegistry:
    """Return a registry holding every built-in suite, negative controls included."""
    registry = SuiteRegistry()
    for module in (engine, properties, components, closures, signalizer, controls):
        module.register(registry)
    return registry


@lru_cache(maxsize=1)
def get_registry() -> SuiteRegistry:
    return default_registry()


def get_suite(suite_id: str) -> Suite:
    """
    Look a suite up in the default registry.

    :raise ValueError: if the identifier is unknown.
    """
    return get_registry().get(suite_id)
