#!/usr/bin/env python3
"""Regenerate data/lexicon.tsv from the two upstream word lists.

Usage:
    build_lexicon.py EN_SENTIMENT_XML VADER_LEXICON_TXT > data/lexicon.tsv

EN_SENTIMENT_XML is en-sentiment.xml from the textblob/pattern distribution
(PDDL). VADER_LEXICON_TXT is vader_lexicon.txt from vaderSentiment (MIT).

Adjective-sense entries are averaged per surface form. VADER fills in words
the first list lacks: polarity = valence / 4, subjectivity = min(1, 0.25 +
|valence| / 4). Words that appear in data/negators.txt or
data/intensifiers.tsv are excluded so modifiers never double as matches.
"""

import collections
import pathlib
import re
import sys
import xml.etree.ElementTree as ET

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"
WORD = re.compile(r"^[a-z][a-z'-]*$")


def read_list(path):
    out = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.add(line.split("\t")[0].lower())
    return out


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    excluded = read_list(DATA / "negators.txt") | read_list(DATA / "intensifiers.tsv")

    senses = collections.defaultdict(list)
    for w in ET.parse(sys.argv[1]).getroot().iter("word"):
        form = w.get("form").lower()
        if WORD.match(form):
            senses[form].append((float(w.get("polarity")), float(w.get("subjectivity"))))

    entries = {}
    for form, vals in senses.items():
        pol = sum(v[0] for v in vals) / len(vals)
        subj = sum(v[1] for v in vals) / len(vals)
        entries[form] = (pol, subj)

    for line in pathlib.Path(sys.argv[2]).read_text(encoding="utf-8").splitlines():
        cols = line.split("\t")
        if len(cols) < 2:
            continue
        form = cols[0].lower()
        if not WORD.match(form) or form in entries:
            continue
        valence = float(cols[1])
        pol = max(-1.0, min(1.0, valence / 4.0))
        subj = min(1.0, 0.25 + abs(valence) / 4.0)
        entries[form] = (pol, subj)

    print("# lemma\tpolarity\tsubjectivity")
    print("# generated by tools/scripts/build_lexicon.py; see data/NOTICE")
    for form in sorted(entries):
        if form in excluded:
            continue
        pol, subj = entries[form]
        print(f"{form}\t{round(pol, 4):g}\t{round(subj, 4):g}")


if __name__ == "__main__":
    main()
