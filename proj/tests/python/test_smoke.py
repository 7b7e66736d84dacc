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

"""Smoke tests for the pmlkit extension module."""

import math

import pytest

import pmlkit

FLIP = [[0.75, 0.25], [0.25, 0.75]]
FLIP_FIRST_ENTRY = [[0.75, 0.25], [0.75, 0.25], [0.25, 0.75], [0.25, 0.75]]


def test_version():
    assert pmlkit.__version__ == "0.1.0"


def test_information_measures():
    assert pmlkit.min_entropy([0.25] * 4) == pytest.approx(math.log(4))
    assert pmlkit.min_entropy([0.7, 0.3]) == pytest.approx(0.3566749439387324)
    assert pmlkit.renyi_div_inf([0.75, 0.25], [0.5, 0.5]) == pytest.approx(
        math.log(1.5))
    assert pmlkit.kl_bernoulli(0.1, 0.3) == pytest.approx(0.1163217565860045)


def test_bayes():
    assert pmlkit.output_marginal(FLIP, [0.7, 0.3]) == pytest.approx([0.6, 0.4])
    assert pmlkit.posterior(FLIP, [0.5, 0.5], 0) == pytest.approx([0.75, 0.25])


def test_pml_and_profile():
    assert pmlkit.pml(FLIP, [0.5, 0.5], 0) == pytest.approx(math.log(1.5))
    profile = pmlkit.pml_profile(FLIP, [0.5, 0.5])
    assert profile["sup"] == pytest.approx(math.log(1.5))
    assert profile["witness"] == 0
    assert pmlkit.leakage_capacity(FLIP) == pytest.approx(math.log(3))
    assert math.isinf(pmlkit.leakage_capacity([[1.0, 0.0], [0.0, 1.0]]))
    assert pmlkit.epsilon_max([0.7, 0.3]) == pytest.approx(math.log(1 / 0.3))


def test_database_parameters_and_equivalences():
    assert pmlkit.dp_epsilon(FLIP_FIRST_ENTRY, 2, 2) == pytest.approx(
        math.log(3), abs=1e-12)
    assert pmlkit.free_lunch_epsilon(FLIP_FIRST_ENTRY, 2, 2) == pytest.approx(
        math.log(3), abs=1e-12)
    report = pmlkit.verify_equivalences(FLIP_FIRST_ENTRY, 2, 2)
    assert report["passed"]
    assert len(report["traces"]) == 6
    for trace in report["traces"].values():
        assert trace["monotone"] and trace["strictly_below"]
        assert trace["gap"] < 1e-4


def test_disclosure_and_constructions():
    floor = pmlkit.capacity_entropy_floor([0.25, 0.75], math.log(3))
    assert floor == pytest.approx(math.log(10 / 9))
    assert pmlkit.singles_out([[1.0, 0.0], [0.0, 1.0]], [0.5, 0.5], 1e-9)
    assert not pmlkit.singles_out(FLIP, [0.5, 0.5], 0.2)
    mc = pmlkit.construct_min_cost([0.7, 0.3], 0.1)
    assert mc["x_min"] == 1
    sup = pmlkit.pml_profile(mc["mechanism"], [0.7, 0.3])["sup"]
    assert sup == pytest.approx(-math.log(0.7), abs=1e-12)


def test_mechanisms():
    t = pmlkit.threshold_query_leakage(1000, 100, 0.3, 1)
    assert t["exact"] == pytest.approx(1.7183404004684617e-52, rel=1e-9)
    assert t["exact"] <= t["chernoff_bound"]
    assert pmlkit.laplace_leakage_bound(1000, 0.01, 0.0) == 0.1
    assert pmlkit.laplace_leakage_bound(1000, 0.01, 0.3) == pytest.approx(
        0.06893623813510889, abs=1e-12)
    assert pmlkit.laplace_leakage_simplified(1000, 0.01, 0.3) == pytest.approx(
        0.07045)
    exact = pmlkit.laplace_leakage_exact(100, 0.1, 0.3)
    assert pmlkit.laplace_pml_at_y(100, 0.1, 0.3, 1.5) == pytest.approx(
        exact, abs=1e-9)


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError, match="pmf sum out of tolerance"):
        pmlkit.min_entropy([0.5, 0.48])
    with pytest.raises(ValueError):
        pmlkit.construct_min_cost([0.7, 0.3], 0.9)
    with pytest.raises(IndexError):
        pmlkit.pml(FLIP, [0.5, 0.5], 2)
