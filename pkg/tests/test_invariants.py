"""Cross-module bounds that tie the search to the algebraic side."""

import pytest

from davlab import (Sequence, davenport_ordered, davenport_unordered, is_product_one,
                    loewy_length, olson_white_bound)
from davlab.errors import BudgetExceededError
from davlab.zerosum import SearchBudget

P_GROUPS = ["c[2]", "c[4]", "c[8]", "c[9]", "ab[2,2]", "ab[3,3]",
            "d[8]", "q[8]", "d[16]", "q[16]", "sd[16]", "m2[16]"]


@pytest.mark.parametrize("text", P_GROUPS)
def test_davenport_at_most_loewy(text, grp):
    G = grp(text)
    assert davenport_ordered(G).value <= loewy_length(G), text


@pytest.mark.parametrize("text", ["ab[2,2]", "ab[3,3]", "d[6]", "d[8]", "q[8]",
                                  "q[12]", "d[16]", "sd[16]", "m2[16]"])
def test_davenport_at_most_olson_white(text, grp):
    G = grp(text)
    assert davenport_ordered(G).value <= olson_white_bound(G), text


@pytest.mark.parametrize("text", P_GROUPS + ["c[5]", "c[7]", "d[6]", "q[12]"])
def test_davenport_at_most_order(text, grp):
    # the reach set grows strictly until the identity appears
    G = grp(text)
    assert davenport_ordered(G).value <= G.order, text


def test_unordered_budget_trips_gracefully(grp):
    res = davenport_unordered(grp("m2[16]"), SearchBudget(max_states=50))
    assert not res.exact
    assert res.value >= 1


def test_arrangement_search_length_cap(grp):
    G = grp("c[2]")
    with pytest.raises(BudgetExceededError):
        is_product_one(Sequence(G, (1,) * 17))
