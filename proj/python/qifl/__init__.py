# Copyright 2026 The qifl Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact leakage analysis of finite channels.

Probabilities are ``fractions.Fraction``; an infinite capacity is
``float('inf')``.
"""

from ._qifl import (
    Channel,
    GainFunction,
    Joint,
    Prior,
    QiflError,
    bayes_capacity,
    check_ordering_chain,
    compose,
    dalenius_capacity_bound,
    dalenius_lift,
    factorize,
    gid,
    hyper,
    identity_channel,
    joint,
    lift,
    lift_capacity,
    max_case_leakage,
    max_posterior_vulnerability,
    max_prior_vulnerability,
    mult_leakage,
    parse_channel_csv,
    parse_gain_csv,
    parse_joint_csv,
    parse_prior_csv,
    pointwise_gain,
    posterior_vulnerability,
    prior_vulnerability,
    reciprocal_gain,
    run_cli,
    run_registry,
    to_csv,
    verify_ldp,
    verify_lip,
)

__all__ = [name for name in dir() if not name.startswith("_")]
