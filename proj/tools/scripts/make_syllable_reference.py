"""Write the syllable reference fixture.

usage: make_syllable_reference.py CMUDICT WORDFREQ_SMALL_EN > tests/fixtures/syllables.tsv

Words: a seeded random sample of 100 from the 5000 most frequent English
words (wordfreq small_en list) that are purely alphabetic, at least three
letters long and present in the CMU Pronouncing Dictionary. Counts: stressed
vowel phones in the word's first CMU pronunciation. Needs msgpack.
"""

import gzip
import random
import sys

import msgpack


def main(cmudict_path, wordfreq_path):
    pron = {}
    with open(cmudict_path, encoding="utf-8") as fh:
        for line in fh:
            parts = line.split()
            if parts and "(" not in parts[0]:
                pron.setdefault(parts[0], parts[1:])

    with gzip.open(wordfreq_path) as fh:
        buckets = msgpack.load(fh, raw=False)[1:]
    ranked = [w for bucket in buckets for w in bucket]

    pool = []
    for word in ranked:
        if len(pool) == 5000:
            break
        if word.isascii() and word.isalpha() and len(word) >= 3 and word in pron:
            pool.append(word)

    sample = sorted(random.Random(0).sample(pool, 100))
    print("# word\tsyllables (CMU Pronouncing Dictionary, first pronunciation)")
    for word in sample:
        print(f"{word}\t{sum(p[-1].isdigit() for p in pron[word])}")


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
