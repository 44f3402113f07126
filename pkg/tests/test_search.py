import json

import pytest

from islide import (
    InvalidParameterError,
    complete_graph,
    confirm_non_realizable,
    cycle_graph,
    diamond_graph,
    enumerate_labeled_graphs,
    find_seed,
    i_graph,
    is_isomorphic,
    scan_for_targets,
    theta_graph,
    verify_table,
    wheel_graph,
)
from islide.seeds import house_seed


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(2)) == 2
    assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
    assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
    assert sum(1 for _ in enumerate_labeled_graphs(4, connected_only=True)) == 38
    assert sum(1 for _ in enumerate_labeled_graphs(5)) == 1024


def test_enumeration_bounds():
    with pytest.raises(InvalidParameterError):
        list(enumerate_labeled_graphs(0))
    with pytest.raises(InvalidParameterError):
        list(enumerate_labeled_graphs(9))


def test_find_k1_seed():
    rep = find_seed(complete_graph(1), max_n=2)
    assert rep.found
    assert rep.witnesses[0].n == 1


def test_find_c4_seed_includes_wheel_complement():
    rep = find_seed(cycle_graph(4), max_n=5, find_all=True)
    assert rep.found
    target_seed = wheel_graph(4).complement()
    assert any(is_isomorphic(w, target_seed) for w in rep.witnesses)
    for w in rep.witnesses:
        assert is_isomorphic(i_graph(w).skeleton, cycle_graph(4))


def test_find_house_seed():
    rep = find_seed(theta_graph(1, 2, 3), max_n=5)
    assert rep.found
    assert is_isomorphic(rep.witnesses[0], house_seed()[0])


def test_sanity_inversion_k3():
    rep = confirm_non_realizable(complete_graph(3), max_n=3)
    assert rep.found
    assert is_isomorphic(rep.witnesses[0], complete_graph(3))


def test_diamond_has_no_seed_up_to_six():
    rep = confirm_non_realizable(diamond_graph(), max_n=6)
    assert not rep.found
    assert rep.graphs_examined == sum(1 << (n * (n - 1) // 2) for n in range(1, 7))


def test_filters_do_not_change_results():
    for target in (cycle_graph(4), theta_graph(1, 2, 3)):
        fast = find_seed(target, max_n=5, find_all=True, use_filters=True)
        slow = find_seed(target, max_n=5, find_all=True, use_filters=False)
        assert [w.adj for w in fast.witnesses] == [w.adj for w in slow.witnesses]
        assert fast.graphs_examined == slow.graphs_examined


def test_parallel_scan_matches_serial():
    targets = [cycle_graph(4), diamond_graph()]
    serial = scan_for_targets(targets, max_n=5, jobs=1)
    parallel = scan_for_targets(targets, max_n=5, jobs=2)
    for a, b in zip(serial, parallel):
        assert a.graphs_examined == b.graphs_examined
        assert [w.adj for w in a.witnesses] == [w.adj for w in b.witnesses]


def test_connected_only_filter():
    rep = find_seed(cycle_graph(4), max_n=5, connected_only=True, find_all=True)
    assert all(w.is_connected() for w in rep.witnesses)
    assert rep.graphs_examined < sum(1 << (n * (n - 1) // 2) for n in range(1, 6))


def test_report_json():
    rep = find_seed(complete_graph(1), max_n=2)
    payload = json.loads(rep.to_json())
    for key in ("target_graph6", "max_n", "graphs_examined", "witnesses_graph6",
                "elapsed_seconds", "connected_only"):
        assert key in payload


def test_verify_table_small():
    report = verify_table(12, corroborate_max_n=5)
    assert report.passed, report.failures
    outcomes = {e.spec: e.outcome for e in report.entries}
    assert outcomes[(2, 2, 4)] == "exception"
    assert outcomes[(2, 3, 4)] == "exception"
    assert outcomes[(1, 4, 5)] == "verified"
    assert outcomes[(2, 2, 5)] == "verified"
    assert outcomes[(2, 4, 4)] == "verified"
    assert sum(1 for e in report.entries if e.outcome == "exception") == 7
    assert len(report.corroboration) == 7
    assert all(not r.found for r in report.corroboration)


def test_search_bounds():
    from islide import path_graph

    with pytest.raises(InvalidParameterError):
        find_seed(cycle_graph(4), max_n=9)
    with pytest.raises(InvalidParameterError):
        find_seed(path_graph(31), max_n=4)


def test_obstruction_minimality():
    # every theta graph induced in the 9-vertex obstruction is realizable,
    # and at least one induced theta exists
    import itertools

    from islide import THETA_EXCEPTIONS, classify_theta, mask_of, obstruction_t_graph

    t = obstruction_t_graph()
    induced_thetas = []
    for r in range(4, t.n + 1):
        for combo in itertools.combinations(range(t.n), r):
            sub, _ = t.induced(mask_of(combo))
            spec = classify_theta(sub)
            if spec is None:
                continue
            induced_thetas.append(spec.as_tuple())
            assert spec.as_tuple() not in THETA_EXCEPTIONS
    assert induced_thetas
    assert classify_theta(t) is None
