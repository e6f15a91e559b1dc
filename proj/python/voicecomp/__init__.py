# Copyright 2026 The voicecomp Authors.
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


"""Python access to the voicecomp pipeline (spoken transcript to composition)."""

import json

from ._voicecomp import (  # noqa: F401
    ContractError,
    DataError,
    Error,
    RequestError,
    align,
    augment,
    bleu,
    classify_intent,
    normalize,
    punct_round_trip,
    rouge,
    sensitivity_score,
    wer_wrr,
)
from . import _voicecomp

__all__ = [
    "compose",
    "normalize",
    "classify_intent",
    "sensitivity_score",
    "augment",
    "align",
    "wer_wrr",
    "bleu",
    "rouge",
    "punct_round_trip",
]


def compose(transcript, content_type=None, seed=0, trace=False):
    """Runs the full pipeline and returns the result as a dict."""
    return json.loads(_voicecomp.compose_json(transcript, content_type, seed, trace))
