# Copyright 2026 The robustnet Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Robust IP/optical backbone design."""

from ._robustnet import (
    Design,
    InfeasibleError,
    Instance,
    OracleRefused,
    ParseError,
    TimeLimitError,
    TopologyError,
    design,
    export_lp,
    load_instance,
    oracle,
    parse_instance,
    transient,
)

ALGORITHMS = ("optimal", "simple", "greedy", "legacy")

__all__ = [
    "ALGORITHMS",
    "Design",
    "InfeasibleError",
    "Instance",
    "OracleRefused",
    "ParseError",
    "TimeLimitError",
    "TopologyError",
    "design",
    "export_lp",
    "load_instance",
    "oracle",
    "parse_instance",
    "transient",
]
