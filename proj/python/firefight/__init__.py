"""Online firefighting on trees, 1-almost trees and cacti."""

from ._firefight import (
    FirefightError,
    Graph,
    Instance,
    ParseError,
    RunResult,
    alge_tight_witness,
    covered_set,
    make_alge_tight,
    make_tadpole,
    parse_instance,
    random_cactus,
    random_sequence,
    random_tree,
    replay,
    run_algorithm,
    serialize_instance,
    solve_opt,
    tadpole_adversary_run,
)

ALGORITHMS = ("greedy-tree", "alg-a", "alg-c", "alg-e")

__all__ = [
    "ALGORITHMS",
    "FirefightError",
    "Graph",
    "Instance",
    "ParseError",
    "RunResult",
    "alge_tight_witness",
    "covered_set",
    "make_alge_tight",
    "make_tadpole",
    "parse_instance",
    "random_cactus",
    "random_sequence",
    "random_tree",
    "replay",
    "run_algorithm",
    "serialize_instance",
    "solve_opt",
    "tadpole_adversary_run",
]
