"""Decide and construct (2,3)-cordial digraphs and orientations."""

from ._cordial import (
    CapExceeded,
    ConstructionResult,
    Digraph,
    Graph,
    LambdaTriple,
    Scope,
    Verdict,
    canonical_form,
    census,
    cordial_feasible_triple,
    friendly_count,
    gen_complete_graph,
    gen_cycle,
    gen_cycle_out_fan,
    gen_cycle_out_wheel,
    gen_fan,
    gen_parallel_edges_graph,
    gen_wheel,
    is_23_cordial,
    is_23_orientable,
    label_5_tournament,
    lambda_triple,
    max_arcs,
    orient_fan,
    orient_wheel,
    parse_graph_text,
    reverse_digraph,
    run_harness,
    tournament_from_index,
    wheel_case,
)

__all__ = [name for name in dir() if not name.startswith("_")]
