"""Stretch targets beyond the acceptance set; run with --runslow."""

import pytest

import solvcover as sc


@pytest.mark.slow
def test_product_psl24_psl24_materialized_agreement():
    # order 3600: the product rule against a full materialized solve
    t = sc.build(sc.direct_product(sc.psl2(4), sc.psl2(4)))
    assert t.order == 3600
    fast = sc.solve_product([sc.build(sc.psl2(4)), sc.build(sc.psl2(4))], "all")
    full = sc.solve_alpha(t, "all", sc.SolveBudget(time_limit=600))
    assert fast.status == full.status == sc.EXACT
    assert fast.lower == full.lower == 3


@pytest.mark.slow
def test_pgl2_13():
    out = sc.solve_alpha(sc.build(sc.pgl2(13)), "all", sc.SolveBudget(time_limit=600))
    assert out.status == sc.EXACT and out.lower == 13
    inv = sc.solve_alpha(sc.build(sc.pgl2(13)), "involutions", sc.SolveBudget(time_limit=600))
    assert inv.status == sc.EXACT and inv.lower == 13


@pytest.mark.slow
def test_psl2_16():
    table = sc.build(sc.psl2(16))
    assert table.order == 4080
    out = sc.solve_alpha(table, "all", sc.SolveBudget(time_limit=600))
    assert out.status == sc.EXACT and out.lower == 15
    inv = sc.solve_alpha(table, "involutions", sc.SolveBudget(time_limit=600))
    assert inv.status == sc.EXACT and inv.lower == 15
