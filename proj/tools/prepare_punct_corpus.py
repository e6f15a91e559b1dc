#!/usr/bin/env python3
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


"""Extract the bundled punctuation-training corpus from State of the Union
addresses (US Government works, public domain), as packaged by the
@stdlib/datasets-sotu npm package.

Usage: prepare_punct_corpus.py <sotu data dir> <out file> [--from-year 1990]

Keeps sentences that use only letters, digits, apostrophes, internal hyphens
and the punctuation set {. , ; : - ? !}, with 5-30 words, no internal periods
and no all-caps words, so every line survives label extraction exactly.
"""
import argparse
import pathlib
import re

ALLOWED = re.compile(r"^[A-Za-z0-9' ,;:?!.-]+$")
SPLIT = re.compile(r"(?<=[.?!])\s+(?=[A-Z])")


def keep(sentence: str) -> bool:
    if not ALLOWED.match(sentence):
        return False
    if sentence[-1] not in ".?!" or "." in sentence[:-1]:
        return False
    words = sentence.split()
    if not 5 <= len(words) <= 30:
        return False
    for w in words:
        core = w.strip(",;:-?!.")
        if not core or core.startswith("'") or core.endswith("'"):
            return False
        if sum(c.isupper() for c in core) > 1 or (core[1:] != core[1:].lower()):
            return False
    return not sentence.startswith("-")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("data_dir")
    ap.add_argument("out")
    ap.add_argument("--from-year", type=int, default=1990)
    args = ap.parse_args()
    seen = set()
    out = []
    for path in sorted(pathlib.Path(args.data_dir).glob("*.txt")):
        if int(path.name[:4]) < args.from_year:
            continue
        text = " ".join(path.read_text(encoding="utf-8").split())
        text = text.replace("’", "'").replace(" -- ", " - ").replace("--", " - ")
        for s in SPLIT.split(text):
            s = " ".join(s.split())
            if keep(s) and s not in seen:
                seen.add(s)
                out.append(s)
    pathlib.Path(args.out).write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"{len(out)} sentences")


if __name__ == "__main__":
    main()
