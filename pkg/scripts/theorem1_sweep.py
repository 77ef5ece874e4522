"""Sweep torus and twist classes, reporting per-class word counts and closure sizes.

    python3 scripts/theorem1_sweep.py --max-m 7 --slack 2 --max-length 7
"""

import argparse
import json
import time

from trigonal.diagram import crossing_count, link_class, mirror_class, normal_form
from trigonal.search import closure
from trigonal.verify import EnumBounds, check_theorem1, words_in_class


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=7)
    ap.add_argument("--max-twist", type=int, default=4)
    ap.add_argument("--slack", type=int, default=2)
    ap.add_argument("--max-length", type=int, default=7)
    ap.add_argument("--entry-bound", type=int, default=10)
    args = ap.parse_args()

    normals = [(m,) for m in range(2, args.max_m + 1)]
    normals += [(m, n) for m in range(2, args.max_twist + 1) for n in range(2, args.max_twist + 1)]
    classes = {}
    for nf in normals:
        for c in (link_class(nf), mirror_class(link_class(nf))):
            classes.setdefault(c, nf)

    for c, nf in classes.items():
        bounds = EnumBounds(crossing_count(normal_form(c)) + args.slack, args.max_length, args.entry_bound)
        t0 = time.perf_counter()
        report = check_theorem1(c, bounds)
        sizes = [len(closure(w)) for w in words_in_class(c, bounds)]
        print(json.dumps({
            "class": str(c),
            "from": list(nf),
            "words": report.tested,
            "failures": len(report.failures),
            "largest_closure": max(sizes, default=0),
            "seconds": round(time.perf_counter() - t0, 2),
        }))


if __name__ == "__main__":
    main()
