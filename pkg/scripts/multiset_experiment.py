"""Do matrices with equal multisets of linking numbers share their HP?

For n = 3 every assignment of a multiset to the pairs is a relabelling of the
complete graph, so equality is automatic; from n = 4 on it is not. This script
enumerates all 4x4 matrices with entries in [-bound, bound] (one per
multiset-and-shape), groups them by multiset, and reports the groups whose
members have different homotopy polynomials. Which coefficient w_k first
differs is reported too.

    python scripts/multiset_experiment.py --n 4 --bound 1
"""

import argparse
import itertools
import json
from collections import Counter, defaultdict

from qhomotopy.linkhp import LinkingMatrix, coefficient_w, homotopy_polynomial
from qhomotopy.polyring import render


def matrices(n, bound):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for values in itertools.product(range(-bound, bound + 1), repeat=len(pairs)):
        yield LinkingMatrix.from_pairs(n, dict(zip(pairs, values)))


def first_difference(a, b, n):
    for k in range(n):
        if coefficient_w(a, k) != coefficient_w(b, k):
            return k
    return None


def run(n, bound):
    groups = defaultdict(dict)
    for m in matrices(n, bound):
        key = tuple(sorted(Counter(v for _, _, v in m.pairs()).items()))
        hp = homotopy_polynomial(m)
        groups[key].setdefault(hp, m)
    split = []
    for key, by_hp in sorted(groups.items()):
        if len(by_hp) > 1:
            (h1, m1), (h2, m2) = list(by_hp.items())[:2]
            split.append({
                "multiset": [list(kv) for kv in key],
                "distinct_hp": len(by_hp),
                "first_differing_w": first_difference(h1, h2, n),
                "example": [m1.to_json()["matrix"], m2.to_json()["matrix"]],
                "hp": [render(h1), render(h2)],
            })
    return {"n": n, "bound": bound, "multisets": len(groups), "split_multisets": len(split), "splits": split}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--bound", type=int, default=1)
    ap.add_argument("--limit", type=int, default=3, help="print at most this many split groups")
    args = ap.parse_args()
    result = run(args.n, args.bound)
    result["splits"] = result["splits"][: args.limit]
    print(json.dumps(result, indent=2))


if __name__ == "__main__":
    main()
