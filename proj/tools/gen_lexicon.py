#!/usr/bin/env python3
# Copyright 2026 The jstyle Authors.
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

"""Regenerates data/lexicon.tsv from WordNet 3.0 index files.

Usage: gen_lexicon.py <wordnet-dict-dir> > data/lexicon.tsv

Only single-word, purely alphabetic lemmas are kept. A part of speech is
attached to a word when its sense count is at least DOMINANCE times the
word's largest per-POS sense count, so that rare readings (e.g. "fast" as a
noun) do not mask the dominant ones.
"""

import collections
import os
import re
import sys

DOMINANCE = 0.2
POS_FILES = [("noun", "n"), ("verb", "v"), ("adj", "a"), ("adv", "r")]


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    root = sys.argv[1]
    senses = collections.defaultdict(dict)
    for name, letter in POS_FILES:
        with open(os.path.join(root, "index." + name)) as f:
            for line in f:
                if line.startswith(" "):
                    continue
                fields = line.split()
                word = fields[0]
                if not re.fullmatch(r"[a-z]{2,24}", word):
                    continue
                ptr_count = int(fields[3])
                senses[word][letter] = int(fields[4 + ptr_count])
    out = sys.stdout
    out.write("# word<TAB>categories (n=noun v=verb a=adjective r=adverb)\n")
    out.write("# derived from Princeton WordNet 3.0, see data/WORDNET-LICENSE\n")
    for word in sorted(senses):
        counts = senses[word]
        top = max(counts.values())
        cats = [l for _, l in POS_FILES if l in counts and counts[l] >= DOMINANCE * top]
        out.write(f"{word}\t{','.join(cats)}\n")


if __name__ == "__main__":
    main()
