# Copyright 2026 The pruw authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Private read-update-write for top-r sparse federated learning.

The heavy lifting lives in the compiled ``_core`` module. Field elements
are plain integers, rationals come back as ``fractions.Fraction``, and
indices are ``(subpacket, segment)`` tuples, both one-based.
"""

from __future__ import annotations

import json
import os

from ._core import (
    MERSENNE61,
    ConfigError,
    DimensionError,
    DivisionByZeroError,
    IndexError,
    OracleViolation,
    Permutation,
    PermutationSet,
    PrimeField,
    ProtocolError,
    PruwError,
    SingularMatrixError,
    SystemParams,
    UnderdeterminedError,
    brute_force_entropies,
    combine_update,
    decode_read_answers,
    encode_subpacket,
    entropy_hat,
    entropy_tilde,
    formula_costs,
    is_prime,
    permuted_to_real,
    pmf_hat,
    pmf_tilde,
    real_to_permuted,
    reference_permutations,
    storage_complexity,
    subpacketization,
    sweep_leakage,
    top_r_select,
    verify_examples,
)
from ._core import simulate as _simulate

__version__ = "0.1.0"


def simulate(config, seed=None):
    """Runs a simulation and returns one report dict per round.

    ``config`` may be a dict, a JSON string, or a path to a JSON file.
    """
    if isinstance(config, os.PathLike) or (
        isinstance(config, str) and not config.lstrip().startswith("{")
    ):
        with open(config, encoding="utf-8") as f:
            config = json.load(f)
    return _simulate(config, seed)


__all__ = [name for name in dir() if not name.startswith("_")]
