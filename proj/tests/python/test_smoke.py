import pytest

import firefight as ff


def test_tadpole_run_and_opt():
    inst = ff.Instance(ff.make_tadpole(10, 3), [1, 1], "tadpole")
    assert inst.n == 14
    assert ff.run_algorithm(inst, "alg-a").profit == 9
    value, schedule = ff.solve_opt(inst)
    assert value == 9
    assert ff.replay(inst, schedule) == 9


def test_tight_instance():
    inst = ff.make_alge_tight(4)
    assert inst.n == 51
    assert inst.sequence == [2, 0, 0, 0, 4]
    assert ff.run_algorithm(inst, "alg-e").profit == 20
    assert ff.replay(inst, ff.alge_tight_witness(4)) == 34


def test_adversary():
    r = ff.tadpole_adversary_run("alg-a", 3)
    assert (r["opt_profit"], r["alg_profit"]) == (3, 1)
    assert r["lower_bound_met"]


def test_covered_set_and_graph():
    g = ff.Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)], 0)
    assert g.graph_class() == "one-almost-tree"
    assert ff.covered_set(g, [2]) == [2, 3]
    assert ff.covered_set(g, [1, 2]) == [1, 2, 3]


def test_round_trip_and_errors():
    g = ff.random_cactus(12, 0.5, 6, 7)
    inst = ff.Instance(g, ff.random_sequence(3, 4, True, 7), "rand")
    back = ff.parse_instance(ff.serialize_instance(inst))
    assert back.graph.edges() == g.edges()
    assert back.sequence == inst.sequence
    with pytest.raises(ff.ParseError):
        ff.parse_instance("firefight 1\nn 3\nroot 0\nedges\n3 three\n")
    with pytest.raises(ff.FirefightError):
        ff.run_algorithm(ff.Instance(ff.make_tadpole(5, 2), [1]), "greedy-tree")
    with pytest.raises(ValueError):
        ff.run_algorithm(inst, "nope")
