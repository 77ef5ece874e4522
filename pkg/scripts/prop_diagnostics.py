"""List catalog-simple words and which necessary conditions each one violates.

Catalog-simplicity is relative to the implemented move set, so any word
reported here with violations marks either a missing move or a condition
that does not hold as stated.

    python3 scripts/prop_diagnostics.py --max-crossings 8 --max-length 5 --entry-bound 5
"""

import argparse
import collections

from trigonal.diagram import format_word
from trigonal.search import is_catalog_simple
from trigonal.verify import EnumBounds, enumerate_words, prop_violations


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=8)
    ap.add_argument("--max-length", type=int, default=5)
    ap.add_argument("--entry-bound", type=int, default=5)
    ap.add_argument("--show-simple", action="store_true", help="also list clean simple words")
    args = ap.parse_args()

    bounds = EnumBounds(args.max_crossings, args.max_length, args.entry_bound)
    tally = collections.Counter()
    simple = 0
    for w in enumerate_words(bounds):
        if len(w) < 2 or not is_catalog_simple(w):
            continue
        simple += 1
        inner, left = prop_violations(w)
        for clause in inner + left:
            tally[clause.split(" at ")[0]] += 1
        if inner or left or args.show_simple:
            print(f"{format_word(w):24} inner={inner} left={left}")
    print(f"catalog-simple words with k > 1: {simple}")
    for clause, n in tally.most_common():
        print(f"  {n:6}  {clause}")


if __name__ == "__main__":
    main()
