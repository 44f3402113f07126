import random

import pytest

from islide import (
    InvalidParameterError,
    cartesian_product,
    complete_graph,
    cycle_graph,
    disjoint_union,
    fan_graph,
    build_slide_graph,
    house_graph,
    i_graph,
    alpha_graph,
    independence_report,
    is_isomorphic,
    mask_of,
    max_induced_star_center_degree,
    path_graph,
    slide_graph_from_json,
    slide_graph_to_dot,
    slide_graph_to_json,
    structural_violations,
    theta_graph,
    wheel_graph,
)
from islide.seeds import house_seed

from bruteforce import random_graph


def test_cycle4_isets_do_not_slide():
    g = cycle_graph(4)
    sg = build_slide_graph(g, [mask_of([0, 2]), mask_of([1, 3])])
    assert sg.node_count() == 2
    assert sg.edges == ()


def test_house_seed_slides_into_house():
    g, _ = house_seed()
    sg = i_graph(g)
    assert sg.node_count() == 5
    assert is_isomorphic(sg.skeleton, house_graph())
    assert is_isomorphic(sg.skeleton, theta_graph(1, 2, 3))


def test_cycle5_igraph_is_cycle5():
    sg = i_graph(cycle_graph(5))
    assert sg.node_count() == 5
    assert is_isomorphic(sg.skeleton, cycle_graph(5))


def test_complete_graph_igraph_is_itself():
    for n in (1, 2, 4, 6):
        sg = i_graph(complete_graph(n))
        assert is_isomorphic(sg.skeleton, complete_graph(n))


def test_mixed_cardinalities_rejected():
    g = path_graph(4)
    with pytest.raises(InvalidParameterError):
        build_slide_graph(g, [mask_of([0]), mask_of([0, 2])])


def test_move_labels_are_slides():
    sg = i_graph(cycle_graph(5))
    for a, b, x, y in sg.edges:
        assert sg.nodes[a] ^ sg.nodes[b] == mask_of([x, y])
        assert sg.base.has_edge(x, y)


def test_structural_invariants_on_standard_instances():
    instances = [
        i_graph(cycle_graph(5)),
        i_graph(house_seed()[0]),
        i_graph(wheel_graph(6).complement()),
        alpha_graph(wheel_graph(6).complement()),
        i_graph(fan_graph(5).complement()),
        i_graph(complete_graph(5)),
    ]
    for sg in instances:
        assert structural_violations(sg) == []


def test_structural_invariants_random():
    rng = random.Random(61)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert structural_violations(i_graph(g)) == []


def test_star_center_degree_bounded_by_i():
    rng = random.Random(67)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        sg = i_graph(g)
        i_val = independence_report(g).i
        for node in range(sg.node_count()):
            assert max_induced_star_center_degree(sg, node) <= i_val


def test_disjoint_union_gives_cartesian_product():
    rng = random.Random(71)
    for _ in range(40):
        g1 = random_graph(rng, rng.randint(1, 5), rng.random())
        g2 = random_graph(rng, rng.randint(1, 5), rng.random())
        combined = i_graph(disjoint_union(g1, g2))
        product = cartesian_product(i_graph(g1).skeleton, i_graph(g2).skeleton)
        assert is_isomorphic(combined.skeleton, product)


def test_known_disconnected_seed():
    # one isolated vertex plus two disjoint edges slides into a 4-cycle
    g = wheel_graph(4).complement()
    sg = i_graph(g)
    assert is_isomorphic(sg.skeleton, cycle_graph(4))


def test_json_roundtrip():
    sg = i_graph(house_seed()[0])
    text = slide_graph_to_json(sg)
    back = slide_graph_from_json(text)
    assert back.nodes == sg.nodes
    assert set(back.edges) == set(sg.edges)
    assert back.skeleton == sg.skeleton


def test_dot_labels():
    sg = i_graph(cycle_graph(5))
    text = slide_graph_to_dot(sg)
    assert "SlideGraph" in text
    assert "{v0,v2}" in text
