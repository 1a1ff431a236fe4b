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
from pclose import const
from pclose.compat.pydantic import BaseSettings, pyd


class PcloseSettings(BaseSettings):
    """Runtime knobs, read from `PCLOSE_*` environment variables."""

    oracle_bound: int = pyd.Field(
        default=const.DEFAULT_ORACLE_BOUND,
        gt=0,
        description="Largest group order enumerated by the element-table oracles.",
    )
    quotient_degree_cap: int = pyd.Field(
        default=const.DEFAULT_QUOTIENT_DEGREE_CAP,
        gt=0,
        description="Largest degree of a coset action built for a quotient group.",
    )
    exhaustive_order_limit: int = pyd.Field(
        default=const.DEFAULT_EXHAUSTIVE_ORDER_LIMIT,
        gt=0,
        description="Largest order for which element counts are checked exhaustively.",
    )
    probe_count: int = pyd.Field(
        default=const.DEFAULT_PROBE_COUNT,
        ge=0,
        description="Number of seeded random elements drawn by heuristic probes.",
    )
    default_seed: int = pyd.Field(default=0, ge=0, description="Seed used when none is given.")

    class Config:
        env_prefix = "PCLOSE_"


_SETTINGS: PcloseSettings | None = None


def get_settings() -> PcloseSettings:
    """Return the process-wide settings, reading the environment on first use."""
    global _SETTINGS
    if _SETTINGS is None:
        _SETTINGS = PcloseSettings()
    return _SETTINGS


def reset_settings() -> None:
    """Forget cached settings so that the next `get_settings` call re-reads the environment."""
    global _SETTINGS
    _SETTINGS = None


def override_settings(**values: int | None) -> PcloseSettings:
    """Replace the cached settings by a copy carrying the given non-`None` values."""
    global _SETTINGS
    _SETTINGS = get_settings().copy(update={k: v for k, v in values.items() if v is not None})
    return _SETTINGS
