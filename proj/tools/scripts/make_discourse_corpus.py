"""Generate the synthetic discourse corpora used by the classifier tests.

usage: make_discourse_corpus.py SEED DOCS > corpus.jsonl

Each document is ten sentences. A sentence's mode is drawn first, then a
template written for that mode is filled from small word pools, so the label
is known by construction. Several templates deliberately share surface cues
with other modes (reporting verbs in narration, numbers in background, modals
in narration) so the task is not a lookup.
"""

import json
import random
import sys

NAMES = ["Maria Lopez", "John Carter", "Aisha Bello", "Chen Wei", "Paul Novak", "Sara Lind", "Omar Haddad"]
PLACES = ["Dunmore", "Eastbrook", "Kelso", "Port Ardent", "Valmont", "Greyhaven"]
ORGS = ["the ministry", "the union", "the council", "the company", "the agency", "the board"]
THINGS = ["the bridge", "the plan", "the budget", "the factory", "the contract", "the hospital"]
ADJ = ["cold", "dark", "loud", "crowded", "muddy", "bright", "quiet", "narrow"]
VERBS = ["approved", "delayed", "rejected", "reviewed", "announced", "cancelled", "signed"]
OPINION = ["a disgrace", "a terrible mistake", "a wise move", "an absurd idea", "reckless", "foolish"]

TEMPLATES = {
    "narration": [
        "{org} {verb} {thing} on {day}.",
        "{name} arrived in {place} late in the evening.",
        "Officials said {thing} was {verb} after a short meeting.",
        "{name} met members of {org} to discuss {thing}.",
        "Workers left the site before the inspection began.",
        "{org} will meet again next week.",
        "{name} told reporters that {thing} had been {verb}.",
        "The vote on {thing} took place behind closed doors.",
    ],
    "argument": [
        "I think {thing} is {opinion}.",
        "Clearly, {org} has failed the people of {place}.",
        "We should not accept {thing}, and we must say so.",
        "This decision is {opinion} and deserves scrutiny.",
        "Frankly, {name} should resign.",
        "{org} could fix this, and it should.",
        "Perhaps {thing} was never a good idea.",
        "In my opinion the whole process was {opinion}.",
    ],
    "quote": [
        "\"We did everything we could,\" {name} said.",
        "\"This is not over,\" said {name}.",
        "\"{thing_cap} will be finished by spring,\" a spokesman said.",
        "\"Nobody warned us,\" one resident said.",
        "{name} said the report was \"deeply flawed.\"",
        "\"We are still waiting for answers.\"",
        "\"It was {adj} and frightening,\" a witness told reporters.",
    ],
    "description": [
        "The hall was {adj} and {adj2}.",
        "{thing_cap} is {n1} meters long and {n2} meters wide.",
        "The streets around the square were {adj} by noon.",
        "It has {n1} floors, {n2} rooms and {n3} exits.",
        "A {adj} wind blew across the {adj2} yard.",
        "The room smelled of smoke and the walls were {adj}.",
        "Prices rose {n1} percent to {n2} dollars.",
    ],
    "background": [
        "{name_last} first joined {org} in {year}.",
        "{place} was founded in {year} as a fishing village.",
        "{name_last} led a similar review in {year}.",
        "In {year}, {place} suffered a major flood.",
        "{name_last} was elected to the council in {year} and again in {year2}.",
        "{place} has hosted the festival every year since {year}.",
    ],
}

MODE_WEIGHTS = {"narration": 0.34, "argument": 0.17, "quote": 0.17, "description": 0.16, "background": 0.16}
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday"]


def fill(template, rng, cast):
    name = rng.choice(cast)
    values = {
        "name": name,
        "name_last": name.split()[-1],
        "place": rng.choice(PLACES),
        "org": rng.choice(ORGS),
        "thing": rng.choice(THINGS),
        "verb": rng.choice(VERBS),
        "opinion": rng.choice(OPINION),
        "adj": rng.choice(ADJ),
        "adj2": rng.choice(ADJ),
        "day": rng.choice(DAYS),
        "n1": rng.randint(2, 90),
        "n2": rng.randint(2, 90),
        "n3": rng.randint(2, 9),
        "year": rng.randint(1950, 2015),
        "year2": rng.randint(2016, 2023),
    }
    values["thing_cap"] = values["thing"][0].upper() + values["thing"][1:]
    text = template.format(**values)
    return text[0].upper() + text[1:]


def main(seed, docs):
    rng = random.Random(seed)
    modes = list(MODE_WEIGHTS)
    weights = [MODE_WEIGHTS[m] for m in modes]
    for d in range(docs):
        cast = rng.sample(NAMES, 3)
        doc = f"s{seed}-d{d:03d}"
        for i in range(10):
            # Background needs an entity introduced earlier, so it never opens a document.
            mode = rng.choices(modes, weights)[0]
            while i == 0 and mode == "background":
                mode = rng.choices(modes, weights)[0]
            text = fill(rng.choice(TEMPLATES[mode]), rng, cast)
            print(json.dumps({"text": text, "mode": mode, "doc": doc, "index": i}))


if __name__ == "__main__":
    main(int(sys.argv[1]), int(sys.argv[2]))
