"""Scramble normal forms with random class-preserving rewrites and try to simplify back.

Reports how often slide moves alone recover an alternating word; failures
are expected for classes outside the torus and twist families.

    python3 scripts/scramble_roundtrip.py --steps 4 --seeds 50
"""

import argparse

from trigonal.diagram import format_word, is_alternating, theorem1_applicable, link_class
from trigonal.generators import scramble
from trigonal.search import NotReached, SearchBudgetExceeded, SearchLimits, simplify_to_alternating


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=4)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--max-states", type=int, default=50_000)
    args = ap.parse_args()

    limits = SearchLimits(max_states=args.max_states)
    starts = [(5,), (2, 3), (3, 1, 2), (2, 2, 2), (4, 1, 3)]
    for nf in starts:
        counts = {"reached": 0, "not_reached": 0, "budget": 0}
        for seed in range(args.seeds):
            w = scramble(nf, args.steps, seed)
            try:
                result = simplify_to_alternating(w, limits)
            except SearchBudgetExceeded:
                counts["budget"] += 1
                continue
            ok = not isinstance(result, NotReached) and is_alternating(result.final)
            counts["reached" if ok else "not_reached"] += 1
        family = "torus/twist" if theorem1_applicable(link_class(nf)) else "other"
        print(f"{format_word(nf, 'C'):12} {family:12} {counts}")


if __name__ == "__main__":
    main()
