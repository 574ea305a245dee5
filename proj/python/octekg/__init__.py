"""OCEL 2.0 logs to temporal event knowledge graphs."""

from ._octekg import (
    Graph,
    GraphHandleError,
    LogInvalidError,
    OcelLog,
    OcelLookupError,
    OcelParseError,
    OctekgError,
    add_dfs,
    conforms_to_tekg,
    export_graph,
    parse_ocel_json,
    stats_json,
    transform,
    validate_node_contracts,
    write_ocel_json,
    __version__,
)


def transform_file(path, **kwargs):
    """Parse the OCEL 2.0 JSON file at `path` and transform it."""
    with open(path, "r", encoding="utf-8") as handle:
        return transform(parse_ocel_json(handle.read()), **kwargs)


__all__ = [
    "Graph",
    "GraphHandleError",
    "LogInvalidError",
    "OcelLog",
    "OcelLookupError",
    "OcelParseError",
    "OctekgError",
    "add_dfs",
    "conforms_to_tekg",
    "export_graph",
    "parse_ocel_json",
    "stats_json",
    "transform",
    "transform_file",
    "validate_node_contracts",
    "write_ocel_json",
    "__version__",
]
