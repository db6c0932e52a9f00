# Copyright 2026 The hwenc Authors
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

"""Hamming-weight state loaders: circuit construction, CNOT lowering and counting."""

import json

from ._core import (
    Error,
    InvalidArgument,
    ParseError,
    VerificationError,
    amplitudes,
    binomial,
    count_binary,
    count_dense,
    encode_binary,
    encode_dense,
    encode_sparse,
    lower,
    qgaussian_demo,
    qgaussian_probabilities,
    rbs_cnots,
    sample,
    to_qasm,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "ParseError",
    "VerificationError",
    "amplitudes",
    "binomial",
    "budget",
    "count_binary",
    "count_dense",
    "encode_binary",
    "encode_dense",
    "encode_sparse",
    "lower",
    "qgaussian_demo",
    "qgaussian_probabilities",
    "rbs_cnots",
    "sample",
    "to_qasm",
]


def budget(n, k=None, complex=False):
    """CNOT budget as a dict; k=None counts the binary loader."""
    text = count_binary(n) if k is None else count_dense(n, k, complex)
    return json.loads(text)
