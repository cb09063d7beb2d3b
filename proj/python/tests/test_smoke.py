import json
from math import comb

import pytest

import realtight as rt


def test_slopes_and_farey():
    assert str(rt.Slope(2, -4)) == "-1/2"
    assert rt.Slope.parse("inf") == rt.Slope.infinity()
    assert rt.farey_distance("-2", "-1") == 1
    assert rt.farey_distance("-3", "-1") == 2
    assert rt.farey_walk("-3", "-1") == ["-3", "-2", "-1"]


def test_continued_fractions():
    assert rt.neg_cf_expand("-7/2") == [-4, -2]
    assert rt.neg_cf_eval([-2, -2, -2, -2]) == "-5/4"
    with pytest.raises(rt.DomainError):
        rt.neg_cf_expand("1/2")
    with pytest.raises(ValueError):
        rt.neg_cf_expand("inf")


def test_catalan_against_binomials():
    for m in range(9):
        assert len(rt.disk_matchings(m)) == comb(2 * m, m) // (m + 1)
        assert rt.catalan(m) == str(comb(2 * m, m) // (m + 1))


def test_counts():
    assert rt.honda_count_lens(9, 1) == 8
    assert rt.honda_count_lens(9, 8) == 1
    c = rt.count_real_tight("c1", "-3")
    assert c["upper"] == 2 and c["exact"] is False
    assert rt.count_real_tight("c1", "-1")["lower"] == 2


def test_table_and_tb():
    rows = rt.bounds_table(3, 6)
    assert {r["type"] for r in rows} == {"A", "B", "C*", "C'*", "honda"}
    assert all(set(r) == {"p", "q", "type", "lower", "upper", "exact", "note", "witnesses"} for r in rows)
    assert rt.tb(7, 6, "C") == "-13/7"
    assert rt.tb_singularity_link(7, 1) == "-1/7"
    assert rt.lens_from_chain([-2, -2, -2, -2]) == "L(5,4)"


def test_replays():
    assert rt.replay_proof("nobasic")["tight_survivors"] == 0
    v = rt.replay_proof("vardouble")
    assert v["tight_survivors"] == 1 and v["sign_decorations"] == 2
    assert rt.replay_proof("c2_T_minus1_minus2")["tight_survivors"] == 0


def test_cli_in_process():
    code, out, _ = rt.run_cli(["tb", "--p", "7", "--q", "6", "--type", "C"])
    assert (code, out) == (0, "-13/7\n")
    code, out, _ = rt.run_cli(["table", "--p", "3..4", "--format", "json"])
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4 * 5
    assert {(r["p"], r["q"]) for r in rows} == {(3, 1), (3, 2), (4, 1), (4, 3)}
    assert rt.run_cli(["frobnicate"])[0] == 2
    assert rt.run_cli(["cf", "expand", "1/2"])[0] == 1
