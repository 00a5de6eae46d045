#!/usr/bin/env python3
# Copyright 2026 The UltraSumm Authors.
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
"""Builds a form<TAB>lemma dictionary covering the words of a corpus.

Usage: make_lemma_dict.py LANG OUT.tsv FILE_OR_DIR...
Only forms whose lemma differs from the form are written.
"""

import argparse
import pathlib
import re

import simplemma

WORD = re.compile(r"[^\W\d_]+")


def words(paths):
    for p in paths:
        p = pathlib.Path(p)
        files = sorted(p.rglob("*.txt")) if p.is_dir() else [p]
        for f in files:
            yield from WORD.findall(f.read_text(encoding="utf-8").lower())


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("lang")
    ap.add_argument("out")
    ap.add_argument("inputs", nargs="+")
    args = ap.parse_args()

    entries = {}
    for w in set(words(args.inputs)):
        lemma = simplemma.lemmatize(w, lang=args.lang).lower()
        if lemma != w and WORD.fullmatch(lemma):
            entries[w] = lemma
    with open(args.out, "w", encoding="utf-8") as out:
        for form in sorted(entries):
            out.write(f"{form}\t{entries[form]}\n")
    print(f"{args.out}: {len(entries)} entries")


if __name__ == "__main__":
    main()
