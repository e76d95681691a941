"""Exploratory: is HP a function of the multiset of linking numbers?

Not an invariant of the library; this records what the enumeration in
scripts/multiset_experiment.py finds, so a change in behaviour is noticed.
"""

import sys
from pathlib import Path

from qhomotopy.linkhp import LinkingMatrix, coefficient_w, homotopy_polynomial

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "scripts"))
from multiset_experiment import run  # noqa: E402


def test_three_components_never_split():
    assert run(3, 2)["split_multisets"] == 0


def test_four_components_split_only_from_w2_on():
    result = run(4, 1)
    assert result["split_multisets"] > 0
    assert all(s["first_differing_w"] >= 2 for s in result["splits"])


def test_explicit_split_pair():
    # same multiset {-1, 0, 1, 1, 1, 1}, both K4 minus one edge; the -1 edge meets
    # the missing edge in `a` and is disjoint from it in `b`
    a = LinkingMatrix(((0, -1, 0, 1), (-1, 0, 1, 1), (0, 1, 0, 1), (1, 1, 1, 0)))
    b = LinkingMatrix(((0, -1, 1, 1), (-1, 0, 1, 1), (1, 1, 0, 0), (1, 1, 0, 0)))
    ha, hb = homotopy_polynomial(a), homotopy_polynomial(b)
    assert ha != hb
    assert coefficient_w(ha, 0) == coefficient_w(hb, 0)
    assert coefficient_w(ha, 1) == coefficient_w(hb, 1)
    assert coefficient_w(ha, 2) != coefficient_w(hb, 2)
