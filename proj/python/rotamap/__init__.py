"""Coset graphs, rotary pairs and their maps on surfaces."""

from ._rotamap import (
    CatalogEntry,
    CosetGraph,
    FlagRegularTriple,
    Group,
    GraphParams,
    Map,
    MultiGraph,
    Perm,
    RotamapError,
    RotaryPair,
    base_graph,
    biro_map,
    catalog,
    catalog_names,
    center,
    classify,
    conj,
    core,
    coset_graph,
    cyclic,
    graph_isomorphic,
    map_isomorphic,
    maps_equal,
    parse_map,
    reg_map,
    rota_map,
    run_suite,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
