from fractions import Fraction

import pytest

from onepart.relations import (
    appendix_poly,
    load_appendix,
    run_suite,
    verify_appendix,
    verify_exchange,
    verify_exchange_grid,
    verify_prop_chiodo_series,
    verify_spin,
    verify_thm_comparison,
)
from onepart.hurwitz import double_cutjoin, one_part_polynomial


def test_comparison_suite():
    report = verify_thm_comparison(5, 8)
    assert report.passed
    assert report.counts()["pass"] == 6 * 8
    by = {(p.params["g"], p.params["d"]): p for p in report.points}
    assert by[(1, 2)].lhs == by[(1, 2)].rhs == Fraction(1, 24)
    for d in range(1, 9):
        assert by[(0, d)].lhs == by[(0, d)].rhs == Fraction(1, d * d)
    for g in range(1, 6):
        assert by[(g, 1)].lhs == by[(g, 1)].rhs == 0


def test_exchange_examples():
    r = verify_exchange(0, 1, 2, 2)
    assert r.passed
    oracle = [p for p in r.points if p.params["route"] == "oracle"][0]
    assert oracle.lhs == oracle.rhs == Fraction(1, 2)
    assert verify_exchange(0, 2, 3, 6, budget=10**10).passed
    with pytest.raises(ValueError):
        verify_exchange(0, 2, 3, 4)


def test_exchange_one_part_against_single():
    # h_{g;(d)} = h^{one-part}_{g;(1^d)} / d!
    for d in range(2, 6):
        r = verify_exchange(1, 1, d, d)
        assert r.passed


def test_exchange_grid_and_thread_independence():
    one = verify_exchange_grid(2, 5)
    many = verify_exchange_grid(2, 5, threads=3)
    assert one.passed
    assert one.to_json() == many.to_json()
    assert one.counts()["fail"] == 0 and one.counts()["pass"] > 0


def test_appendix_fixture_transcription():
    table = load_appendix()
    assert sorted(table) == [0, 1, 2, 3, 4, 5]
    assert appendix_poly(4, 1).terms[(8,)] == Fraction(5, 464486400)
    assert appendix_poly(5, 1).terms[()] == Fraction(-2555, 122624409600)
    assert appendix_poly(0, 3).terms == {(): 1}


def test_appendix_agrees_up_to_genus_three_and_for_short_profiles():
    r = verify_appendix(5, 5)
    status = {(p.params["g"], p.params["n"]): p.status for p in r.points}
    for (g, n), s in status.items():
        if g <= 3 or n <= 2:
            assert s == "pass", (g, n)


def test_appendix_printed_terms_are_a_subset_of_computed():
    for g in (4, 5):
        computed = one_part_polynomial(g, 5).terms
        for key, value in appendix_poly(g, 5).terms.items():
            assert computed[key] == value


def test_cutjoin_sides_with_computed_polynomial_where_table_is_short():
    # g = 4, mu = (1,1,1): the printed table omits three-index terms
    d, g = 3, 4
    h = double_cutjoin(g, (1, 1, 1), (3,))
    computed = Fraction(d) ** (2 * g - 2 + 3) * one_part_polynomial(g, 3).evaluate([1, 1, 1])
    printed = Fraction(d) ** (2 * g - 2 + 3) * appendix_poly(g, 3).evaluate([1, 1, 1])
    assert h == computed
    assert h != printed


def test_chiodo_series_suite():
    r = verify_prop_chiodo_series(4, 8)
    assert r.passed
    notes = {p.note for p in r.points if p.params["case"] == "b"}
    assert notes == {"odd", "even"}


def test_spin_suite():
    r = verify_spin(2, 4, 3)
    assert r.passed
    counts = r.counts()
    assert counts["smoke"] > 0 and counts["skip"] > 0 and counts["pass"] > 0


def test_report_serialisation_is_deterministic():
    a = run_suite("chiodo", 2, 5).to_json()
    b = run_suite("chiodo", 2, 5, threads=2).to_json()
    assert a == b
    assert "elapsed" not in a
    assert "elapsed_s" in run_suite("chiodo", 1, 2).to_json(with_timing=True)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
