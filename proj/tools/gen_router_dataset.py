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


"""Generate the bundled synthetic router dataset (JSONL, {"text", "label"}).

Open-ended instructions that ask for new content are labeled LLM; closed
instructions and dictation (including addressed note-style dictation) are
labeled FT.

Usage: gen_router_dataset.py <out.jsonl> [--count 1000] [--seed 7]
"""
import argparse
import json
import random

NAMES = ["Joe", "Sam", "Jim", "Anna", "Priya", "Kofi", "Mei", "Omar", "Laura", "Tom", "Kate", "Ravi"]
PRONOUN = {"Joe": "him", "Sam": "him", "Jim": "him", "Kofi": "him", "Omar": "him", "Tom": "him",
           "Ravi": "him", "Anna": "her", "Priya": "her", "Mei": "her", "Laura": "her", "Kate": "her"}
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "tomorrow", "next week"]
TIMES = ["at 5 pm", "at 9 am", "at noon", "in the morning", "after lunch", "at 3:30 pm"]
ITEMS = ["groceries", "the dry cleaning", "milk and eggs", "the package", "a birthday cake", "printer paper"]
TASKS = ["call the dentist", "pay the rent", "renew the passport", "book the flight", "water the plants"]
FACTS = [
    "the fundraiser is a go",
    "the report is ready for review",
    "the meeting moved to room four",
    "the budget was approved",
    "the launch slipped by a week",
    "the client signed the contract",
    "dinner is at seven",
    "the tickets are booked",
]
NOTE_FACTS = [
    "we met with the vendor today",
    "the demo went well",
    "follow up with legal next week",
    "pricing needs another pass",
    "the team wants more time",
    "send the slides on Friday",
]
TOPICS = ["remote work", "climate change", "AI", "healthy eating", "city gardens", "space travel", "jazz"]
STYLES = ["witty", "funny", "thoughtful", "heartfelt", "playful", "inspiring", "catchy"]
PIECES = ["birthday wish", "thank you note", "toast", "poem", "short story", "invitation", "farewell message"]
PERSONAS = ["a 30-year-old adult", "a retired teacher", "a first-time founder", "a cat", "a student"]


def a(word: str) -> str:
    return ("an " if word[0] in "aeiou" else "a ") + word


def llm_example(r: random.Random) -> str:
    name = r.choice(NAMES)
    form = r.randrange(6)
    if form == 0:
        return (f"Write {a(r.choice(STYLES))} {r.choice(PIECES)} for {name}. "
                f"{name} is turning {r.randint(20, 70)}.")
    if form == 1:
        return f"Write a blog post on {r.choice(TOPICS)} from the perspective of {r.choice(PERSONAS)}."
    if form == 2:
        return f"Compose {a(r.choice(STYLES))} message to {name} about {r.choice(TOPICS)}."
    if form == 3:
        return f"Come up with {a(r.choice(STYLES))} slogan for our {r.choice(TOPICS)} campaign."
    if form == 4:
        return (f"Send an email to {name} about {r.choice(TOPICS)}. "
                f"Make it {r.choice(STYLES)}.")
    return f"Write a short essay on {r.choice(TOPICS)} for the newsletter."


def ft_example(r: random.Random) -> str:
    name = r.choice(NAMES)
    form = r.randrange(8)
    if form == 0:
        return f"Pick up {r.choice(ITEMS)} {r.choice(TIMES)} {r.choice(DAYS)}."
    if form == 1:
        return f"Remind me to {r.choice(TASKS)} on {r.choice(DAYS[:5])}."
    if form == 2:
        return (f"Send an email to {name}. Let {PRONOUN[name]} know that "
                f"{r.choice(FACTS)} and it happens {r.choice(DAYS)} {r.choice(TIMES)}.")
    if form == 3:
        return f"Text {name} that {r.choice(FACTS)}."
    if form == 4:
        return f"Hey {name}, are you coming to the meeting {r.choice(DAYS)}?"
    if form == 5:
        facts = r.sample(NOTE_FACTS, 3)
        return f"Email {name}, {', '.join(facts)}."
    if form == 6:
        return f"Schedule a call with {name} on {r.choice(DAYS[:5])} {r.choice(TIMES)}."
    fact = r.choice(FACTS)
    return f"{fact[0].upper()}{fact[1:]}, so {r.choice(NOTE_FACTS)}."


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    r = random.Random(args.seed)
    with open(args.out, "w", encoding="utf-8") as f:
        for _ in range(args.count):
            if r.random() < 0.4:
                record = {"text": llm_example(r), "label": "LLM"}
            else:
                record = {"text": ft_example(r), "label": "FT"}
            f.write(json.dumps(record, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
