# Copyright 2026 The Authors.
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

"""Python bindings for the minorient C++ library."""

import json as _json

from . import _core
from ._core import MinorientError, criterion_group, criterion_sigma, extension_feasible

DEFAULT_BUDGET = 10_000_000


def _dump(matroid):
  return matroid if isinstance(matroid, str) else _json.dumps(matroid)


def build_m_prime(n):
  return _json.loads(_core.build_m_prime(n))


def build_m_sigma(n, perm):
  return _json.loads(_core.build_m_sigma(n, perm))


def build_group_matroid(group, g0, g1):
  return _json.loads(_core.build_group_matroid(group, str(g0), str(g1)))


def find_chirotope(matroid, budget=DEFAULT_BUDGET, workers=1):
  return _json.loads(_core.find_chirotope(_dump(matroid), budget, workers))


def certify_minimal(matroid, budget=DEFAULT_BUDGET, workers=1):
  return _json.loads(_core.certify_minimal(_dump(matroid), budget, workers))


def verify_psi_prime(p):
  return _json.loads(_core.verify_psi_prime(p))


def verify_psi_subgroup(m, p, t):
  return _json.loads(_core.verify_psi_subgroup(m, p, t))


def complex_check(n, tol_zero=1e-9, tol_nonzero=1e-6):
  return _json.loads(_core.complex_check(n, tol_zero, tol_nonzero))


def run_cli(args):
  """Runs the command-line interface; returns (exit_code, stdout, stderr)."""
  return _core.run_cli(list(args))


__all__ = [
    "DEFAULT_BUDGET",
    "MinorientError",
    "build_group_matroid",
    "build_m_prime",
    "build_m_sigma",
    "certify_minimal",
    "complex_check",
    "criterion_group",
    "criterion_sigma",
    "extension_feasible",
    "find_chirotope",
    "run_cli",
    "verify_psi_prime",
    "verify_psi_subgroup",
]
