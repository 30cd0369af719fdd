from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramm import (DivertVariant, EtcMatrix, PolicyId, improved_max_min, max_min, min_min,
                  optimal_makespan, ramm, run_policy, validate_schedule)

PC, STRICT = DivertVariant.PAPER_CONSISTENT, DivertVariant.STRICT


def trace(s):
    return [(f"T{a.task + 1}", f"R{a.resource + 1}") for a in s.assignments]


@pytest.mark.parametrize("name,expected", [("p1", 9), ("p2", 11), ("p3", 4)])
def test_min_min_benchmarks(request, name, expected):
    assert min_min(request.getfixturevalue(name)).makespan == expected


def test_min_min_p1_all_on_r1(p1):
    assert {r for _, r in trace(min_min(p1))} == {"R1"}


@pytest.mark.parametrize("name,expected", [("p1", 9), ("p2", 11), ("p3", 4)])
def test_max_min_benchmarks(request, name, expected):
    assert max_min(request.getfixturevalue(name)).makespan == expected


def test_max_min_p1_trace(p1):
    # T3 and T4 tie at 3; lowest index goes first
    assert trace(max_min(p1)) == [("T3", "R1"), ("T4", "R1"), ("T1", "R1"), ("T2", "R1")]


def test_max_min_textbook_reading_differs_on_p1(p1):
    s = max_min(p1, textbook=True)
    assert trace(s) == [("T3", "R1"), ("T4", "R1"), ("T1", "R2"), ("T2", "R1")]
    assert s.makespan == 7


def test_improved_max_min_p1(p1):
    s = improved_max_min(p1, PC)
    assert trace(s) == [("T4", "R1"), ("T3", "R2"), ("T1", "R1"), ("T2", "R1")]
    assert s.makespan == 8


@pytest.mark.parametrize("name,expected", [("p2", 13), ("p3", 14)])
def test_improved_max_min_benchmarks(request, name, expected):
    assert improved_max_min(request.getfixturevalue(name), PC).makespan == expected


def test_improved_max_min_strict_p1(p1):
    s = improved_max_min(p1, STRICT)
    assert trace(s) == [("T4", "R1"), ("T3", "R1"), ("T1", "R2"), ("T2", "R1")]
    assert s.makespan == 7


def test_ramm_p1(p1):
    s = ramm(p1)
    assert trace(s) == [("T2", "R1"), ("T1", "R2"), ("T3", "R1"), ("T4", "R1")]
    assert s.makespan == 7


def test_ramm_p2(p2):
    s = ramm(p2, PC)
    assert trace(s) == [("T4", "R1"), ("T1", "R2"), ("T2", "R1"), ("T3", "R1")]
    assert s.makespan == 10


def test_ramm_p3(p3):
    s = ramm(p3, PC)
    assert trace(s) == [("T1", "R1"), ("T4", "R2"), ("T2", "R1"), ("T3", "R1")]
    assert s.makespan == 4


def test_ramm_strict_agrees_on_p1(p1):
    assert trace(ramm(p1, STRICT)) == trace(ramm(p1, PC))


def test_ramm_strict_moves_selected_task():
    # T1 is the shortest task; once R1 is busy, strict sends T2 (next shortest)
    # to idle R2 while paper_consistent sends the task fastest on R2 (T3).
    etc = EtcMatrix.from_rows([[1, 9], [2, 8], [5, 3]])
    assert trace(ramm(etc, STRICT))[:2] == [("T1", "R1"), ("T2", "R2")]
    assert trace(ramm(etc, PC))[:2] == [("T1", "R1"), ("T3", "R2")]


def test_ramm_among_several_idle_resources():
    etc = EtcMatrix.from_rows([[1, 5, 4], [2, 6, 3], [3, 2, 9]])
    # after T1->R1: min ET over idle {R2, R3} is T3 on R2 (2)
    assert trace(ramm(etc))[:2] == [("T1", "R1"), ("T3", "R2")]


@pytest.mark.parametrize("alt", [False, True])
def test_p1_alt_matrix_agrees(p1, p1_alt, alt):
    etc = p1_alt if alt else p1
    got = [run_policy(p, etc).makespan for p in PolicyId]
    assert got == [9, 9, 8, 7]


def test_single_resource_is_column_sum():
    etc = EtcMatrix.from_rows([[3], [1], ["5/2"]])
    for p in PolicyId:
        for v in DivertVariant:
            assert run_policy(p, etc, v).makespan == Fraction(13, 2)


def test_trivial_instance():
    etc = EtcMatrix.from_rows([[5]])
    for p in PolicyId:
        assert run_policy(p, etc).makespan == 5


def test_run_policy_accepts_strings(p1):
    assert run_policy("ramm", p1, "strict").makespan == 7
    with pytest.raises(ValueError):
        run_policy("heft", p1)


# -- properties ------------------------------------------------------------

def matrices(max_n=6, max_m=3, max_v=20):
    return st.integers(1, max_m).flatmap(lambda m: st.lists(
        st.lists(st.integers(0, max_v), min_size=m, max_size=m), min_size=1, max_size=max_n))


ALL = [(p, v) for p in PolicyId for v in DivertVariant]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_policies_complete_deterministic_and_above_optimum(rows):
    etc = EtcMatrix.from_rows(rows)
    opt = optimal_makespan(etc).optimal_makespan
    for p, v in ALL:
        s = run_policy(p, etc, v)
        assert validate_schedule(s, etc) == []
        assert s == run_policy(p, etc, v)
        assert s.makespan >= opt


@st.composite
def tie_free(draw):
    """Distinct powers of two: every subset sum is unique, so no CT or ET ever ties."""
    n = draw(st.integers(1, 5))
    m = draw(st.integers(1, 3))
    exps = draw(st.permutations(range(n * m)))
    rows = [[2 ** exps[i * m + j] for j in range(m)] for i in range(n)]
    perm = draw(st.permutations(range(n)))
    return rows, perm


@settings(max_examples=150, deadline=None)
@given(tie_free())
def test_permutation_covariance_without_ties(case):
    rows, perm = case
    etc = EtcMatrix.from_rows(rows)
    permuted = etc.permute_tasks(perm)
    for p, v in ALL:
        base = run_policy(p, etc, v).mapping()
        moved = run_policy(p, permuted, v).mapping()
        assert moved == tuple(base[perm[k]] for k in range(len(perm)))


def _simple_tail(etc, remaining, rt, order):
    et = etc.et
    remaining = list(remaining)
    rt = list(rt)
    while remaining:
        k = min(remaining, key=lambda i: (min(et[i]), i))
        j = min(range(etc.m), key=lambda r: (et[k][r] + rt[r], r))
        order.append((k, j))
        rt[j] += et[k][j]
        remaining.remove(k)
    return order


@settings(max_examples=150, deadline=None)
@given(matrices(max_n=7, max_v=12), st.sampled_from(list(DivertVariant)))
def test_ramm_all_busy_fallback(rows, variant):
    etc = EtcMatrix.from_rows(rows)
    order = ramm(etc, variant).order()
    rt = [Fraction(0)] * etc.m
    for step, (i, j) in enumerate(order):
        if all(r > 0 for r in rt):
            break
        rt[j] += etc.et[i][j]
    else:
        return
    done = {i for i, _ in order[:step]}
    rest = [i for i in range(etc.n) if i not in done]
    assert _simple_tail(etc, rest, rt, list(order[:step])) == order


def test_ramm_beats_baselines_on_benchmarks(p1, p2, p3):
    for etc in (p1, p2, p3):
        r = ramm(etc).makespan
        assert all(r <= run_policy(p, etc).makespan for p in PolicyId)
