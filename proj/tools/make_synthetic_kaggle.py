#
# Copyright 2026 The NewsBreaker Authors
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
#

"""Writes a synthetic corpus in the Kaggle Fake-News CSV layout.

Columns are id,title,author,text,label with label 1 for unreliable (fake)
and 0 for reliable. Word choice mixes neutral function and topic words,
class-leaning cue words, politician names, auxiliaries, intensifying adverbs
and one-off rare words, with a little label noise.

  python3 tools/make_synthetic_kaggle.py --rows 2000 --seed 42 \
      --out tests/data/kaggle_synthetic_2000.csv
"""

import argparse
import csv
import random

FUNCTION_WORDS = (
    "the of and to in for on with at by from about as into over after "
    "before under against between during without this that these those "
    "its their his her our a an new more most").split()

TOPIC_WORDS = (
    "election campaign senate congress vote voters president governor "
    "policy tax taxes budget economy jobs health care insurance border "
    "immigration trade deal court judge law bill state states city "
    "police report reports data poll polls debate rally speech media "
    "press week year years plan program school schools energy oil gas "
    "climate water war military troops security emails server foundation "
    "bank banks market markets workers wages prices housing families "
    "country nation world leaders party parties district "
    "county mayor council agency department investigation inquiry "
    "vote record video interview letter "
    "summit talks visit crisis plan deficit debt spending cuts growth "
    "union unions factory farms farmers veterans students teachers").split()

FAKE_CUES = (
    "shocking exposed secret hoax bombshell truth leaked globalist "
    "rigged scandal cover-up insider destroy panic outrage banned "
    "miracle conspiracy elite elites censored wake warning unbelievable "
    "stunning horrifying explosive furious traitor treason evil sinister "
    "hidden agenda propaganda lies liar fraud crooked corrupt puppet "
    "shadow deep-state plot scheme sheeple mainstream suppressed silenced "
    "whistleblower revealed reveals exposes caught busted disgrace "
    "humiliated meltdown collapse apocalypse invasion takeover chaos "
    "terrifying alarming insane crazy viral must-see breaking urgent "
    "deadly poison toxic cure forbidden").split()

REAL_CUES = (
    "said announced according reuters officials statement spokesman "
    "percent quarter analysts agreed confirmed reported approved "
    "committee hearing measure estimated survey testified told "
    "spokeswoman representative legislation proposal negotiations "
    "ministry administration regulators regulation filing filed "
    "quarterly fiscal revenue forecast economists index indicated "
    "declined rose fell increased decreased monday tuesday wednesday "
    "thursday friday briefing delegation bipartisan amendment ruling "
    "appeals docket census bureau federal provisional preliminary "
    "audit memo transcript cited noted added").split()

NAMES = [
    "Barack Obama", "Hillary Clinton", "John Kerry", "Elizabeth Warren",
    "Nancy Pelosi", "Joe Biden", "Harry Reid", "Tim Kaine",
    "Donald Trump", "Mike Pence", "Mitt Romney", "Paul Ryan", "Ted Cruz",
    "Marco Rubio", "Mitch McConnell", "John McCain", "Chris Christie",
]

AUXILIARIES = "is was will can should would could has have does did are".split()

ADVERBS = "totally absolutely completely extremely really very".split()

SYLLABLES = "ka lo mi ner tus vel dra po quin ser bal tor fen ri mu gan".split()


def rare_word(rng):
  return "".join(rng.choice(SYLLABLES) for _ in range(rng.randint(3, 4)))


def zipf_choice(rng, words):
  # Weight 1/rank so a few words dominate.
  weights = [1.0 / (rank + 1) for rank in range(len(words))]
  return rng.choices(words, weights=weights, k=1)[0]


def sentence(rng, fake, min_words, max_words):
  words = []
  if rng.random() < 0.4:
    words.extend(rng.choice(NAMES).split())
  if rng.random() < 0.7:
    words.append(rng.choice(AUXILIARIES))
    if rng.random() < 0.15:
      words.append(rng.choice(ADVERBS))
  cue_rate = 0.3
  for _ in range(rng.randint(min_words, max_words)):
    roll = rng.random()
    if roll < cue_rate:
      own, other = (FAKE_CUES, REAL_CUES) if fake else (REAL_CUES, FAKE_CUES)
      words.append(rng.choice(own if rng.random() < 0.9 else other))
    elif roll < 0.55:
      words.append(zipf_choice(rng, FUNCTION_WORDS))
    elif roll < 0.93:
      words.append(zipf_choice(rng, TOPIC_WORDS))
    else:
      words.append(rare_word(rng))
  first = words[0]
  words[0] = first[0].upper() + first[1:]
  return " ".join(words) + "."


def main():
  parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
  parser.add_argument("--rows", type=int, default=2000)
  parser.add_argument("--seed", type=int, default=42)
  parser.add_argument("--noise", type=float, default=0.05)
  parser.add_argument("--out", required=True)
  args = parser.parse_args()

  rng = random.Random(args.seed)
  with open(args.out, "w", newline="", encoding="utf-8") as f:
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(["id", "title", "author", "text", "label"])
    for row in range(args.rows):
      fake = rng.random() < 0.5
      title = sentence(rng, fake, 5, 10)[:-1]
      body = " ".join(sentence(rng, fake, 6, 14) for _ in range(rng.randint(2, 4)))
      if rng.random() < args.noise:
        fake = not fake
      author = rng.choice(["Staff", "Reuters", "Anonymous", "Editor", ""])
      writer.writerow([str(row), title, author, body, "1" if fake else "0"])


if __name__ == "__main__":
  main()
