# Copyright 2026 The pmlkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Pointwise maximal leakage for finite mechanisms.

Distributions are lists of floats, channels are lists of rows, and symbols
are indexed from 0. Invalid input raises ValueError.
"""

from pmlkit._core import (
    binomial_cdf,
    capacity_entropy_floor,
    chernoff_tail_bound,
    construct_min_cost,
    dp_epsilon,
    epsilon_max,
    free_lunch_epsilon,
    kl_bernoulli,
    laplace_leakage_bound,
    laplace_leakage_exact,
    laplace_leakage_simplified,
    laplace_pml_at_y,
    leakage_capacity,
    min_entropy,
    output_marginal,
    pml,
    pml_profile,
    posterior,
    renyi_div_inf,
    singles_out,
    threshold_query_leakage,
    verify_equivalences,
)

__version__ = "0.1.0"

__all__ = [
    "binomial_cdf",
    "capacity_entropy_floor",
    "chernoff_tail_bound",
    "construct_min_cost",
    "dp_epsilon",
    "epsilon_max",
    "free_lunch_epsilon",
    "kl_bernoulli",
    "laplace_leakage_bound",
    "laplace_leakage_exact",
    "laplace_leakage_simplified",
    "laplace_pml_at_y",
    "leakage_capacity",
    "min_entropy",
    "output_marginal",
    "pml",
    "pml_profile",
    "posterior",
    "renyi_div_inf",
    "singles_out",
    "threshold_query_leakage",
    "verify_equivalences",
]
