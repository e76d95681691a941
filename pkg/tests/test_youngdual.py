import random
from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhomotopy.linkhp import LinkingMatrix, homotopy_polynomial
from qhomotopy.polyring import HPoly, QLaurent, parse, substitute_q
from qhomotopy.verify import random_linking_matrix
from qhomotopy.youngdual import (
    columns_from_sigma,
    dual_columns,
    recover_from_w1,
    recover_linking,
    sigma_of,
    to_rows,
    unimodal_check,
    w1_from_linking,
)


def ql(text):
    return parse(text, QLaurent)


def test_sigma_examples():
    assert sigma_of(Counter({2: 1, 3: 1, -2: 1})) == ql("q^5 + 2q^3 + 2q - q^-1 - q^-3")
    assert sigma_of(Counter()) == 0
    assert sigma_of(Counter({1: 1})) == ql("q")
    with pytest.raises(ValueError):
        sigma_of(Counter({0: 1}))


def test_dual_columns_examples():
    assert dual_columns(Counter({-4: 1, 1: 1})) == {1: 1, -1: -1, -2: -1, -3: -1, -4: -1}
    assert dual_columns(Counter({2: 1, 3: 1, -2: 1})) == {1: 2, 2: 2, 3: 1, -1: -1, -2: -1}
    assert to_rows({1: 2, 2: 2, 3: 1, -1: -1, -2: -1}) == Counter({2: 1, 3: 1, -2: 1})


@pytest.mark.parametrize(
    "columns",
    [{1: 1, 2: 2}, {2: 1}, {1: -1}, {-1: 1}, {0: 1}, {1: 1, 3: 1}, {-1: -1, -2: -2}],
)
def test_to_rows_rejects_non_diagrams(columns):
    with pytest.raises(ValueError):
        to_rows(columns)


def test_columns_from_sigma_rejects_even_powers():
    with pytest.raises(ValueError):
        columns_from_sigma(ql("q^2 + q"))


def test_w1_examples():
    assert w1_from_linking(LinkingMatrix.from_pairs(3, {(0, 1): 2, (0, 2): 3, (1, 2): -2})) == ql(
        "q + 2q^3 + 2q^5 - q^7 - q^9"
    )
    assert w1_from_linking(LinkingMatrix.from_pairs(3, {(0, 1): 4, (0, 2): -1})) == ql("q^-1 + q + q^3 + q^5 - q^7")
    assert w1_from_linking(LinkingMatrix.zero(4)) == 0


def test_recover_printed_polynomials():
    hp2 = parse("q^6 t^3 + (q + 2q^3 + 2q^5 - q^7 - q^9) z t^2 - (q^4 + 2q^6 + q^8) z^2 t")
    rec = recover_linking(hp2)
    assert (rec.n, rec.lk, rec.nonzero, rec.zero_count) == (3, 3, Counter({2: 1, 3: 1, -2: 1}), 0)
    hp1 = parse("q^6 t^3 + (q^-1 + q + q^3 + q^5 - q^7) z t^2 - (1 + q^2 + q^4 + q^6) z^2 t")
    rec = recover_linking(hp1)
    assert (rec.n, rec.lk, rec.nonzero, rec.zero_count) == (3, 3, Counter({4: 1, -1: 1}), 1)
    # forward check of the recovered assignment
    assert homotopy_polynomial(LinkingMatrix.from_pairs(3, {(0, 1): 4, (0, 2): -1})) == hp1


def test_decode_and_mirror_of_small_w1():
    w1 = ql("-q^3 - q + 2q^-1")
    rec = recover_from_w1(w1, 0)
    assert rec.nonzero == Counter({1: 2, -2: 1})
    assert rec.n is None and rec.zero_count is None
    assert substitute_q(w1, "neg_inverse") == ql("q^-3 + q^-1 - 2q")
    assert recover_from_w1(w1, 0, n=3).zero_count == 0


@pytest.mark.parametrize("n", range(0, 6))
def test_recover_unlink(n):
    rec = recover_linking(HPoly.monomial(t=n))
    assert (rec.n, rec.lk, dict(rec.nonzero), rec.zero_count) == (n, 0, {}, comb(n, 2))


def test_recover_rejects_bad_polynomials():
    for text in ["0", "2 t^2", "q t^2 + z t", "q^2 t^2 + z^2", "q^2 t^2 + q^2 z t", "(q^2 + 1) t^2"]:
        with pytest.raises(ValueError):
            recover_linking(parse(text))
    with pytest.raises(ValueError):
        recover_from_w1(ql("-q^3 - q + 2q^-1"), 1)  # lk inconsistent with the decoded values
    with pytest.raises(ValueError):
        recover_from_w1(ql("-q^3 - q + 2q^-1"), 0, n=2)  # three values need at least three pairs


def test_recovery_json():
    rec = recover_from_w1(ql("-q^3 - q + 2q^-1"), 0, n=4)
    assert rec.to_json() == {"n": 4, "lk": 0, "nonzero": [[-2, 1], [1, 2]], "zeros": 3}


def test_unimodal_examples():
    assert unimodal_check(ql("q + 2q^3 + 2q^5 - q^7 - q^9"))
    assert unimodal_check(QLaurent.zero())
    assert not unimodal_check(ql("q + 3q^5 + q^9"))
    with pytest.raises(ValueError):
        unimodal_check(ql("q^2 + q"))


# --- properties -------------------------------------------------------------

multisets = st.dictionaries(
    st.integers(-6, 6).filter(bool), st.integers(1, 3), max_size=5
).map(Counter)


@settings(max_examples=300, deadline=None)
@given(multisets)
def test_duality_round_trip(a):
    assert to_rows(dual_columns(a)) == a
    assert columns_from_sigma(sigma_of(a)) == dual_columns(a)


@settings(max_examples=300, deadline=None)
@given(multisets)
def test_sigma_decodes_back(a):
    lk = sum(v * k for v, k in a.items())
    negated = Counter({-v: k for v, k in a.items()})
    w1 = -(QLaurent.q(2 * lk) * sigma_of(negated))
    assert recover_from_w1(w1, lk).nonzero == a
    assert unimodal_check(w1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_linking_matrix_round_trip(seed):
    m = random_linking_matrix(random.Random(seed), max_n=5, bound=4)
    rec = recover_linking(homotopy_polynomial(m))
    values = [v for _, _, v in m.pairs()]
    assert rec.n == m.n
    assert rec.lk == m.total_linking()
    assert rec.nonzero == Counter(v for v in values if v)
    assert rec.zero_count == values.count(0)
    assert unimodal_check(w1_from_linking(m))
