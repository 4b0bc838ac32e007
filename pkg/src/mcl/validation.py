"""Input checks shared by the estimator and the CLI."""
from __future__ import annotations

import os

from .kb import ConceptAssertion, ModularKB, RoleAssertion, StrictInclusion, TypicalityInclusion

_QUERY_TYPES = (TypicalityInclusion, StrictInclusion, ConceptAssertion, RoleAssertion)


def check_kb(kb) -> ModularKB:
    """Accept a ModularKB, KB text, or a path to a KB file."""
    from .parser import load_kb, parse_kb

    if isinstance(kb, ModularKB):
        return kb
    if isinstance(kb, os.PathLike):
        return load_kb(kb)
    if isinstance(kb, str):
        if "\n" not in kb and kb.endswith(".kb") and os.path.exists(kb):
            return load_kb(kb)
        return parse_kb(kb)
    raise TypeError(f"expected a ModularKB, KB text or a path, got {type(kb).__name__}")


def check_queries(queries) -> list:
    from .parser import parse_query

    if isinstance(queries, (str,) + _QUERY_TYPES):
        queries = [queries]
    out = []
    for q in queries:
        if isinstance(q, str):
            q = parse_query(q)
        if not isinstance(q, _QUERY_TYPES):
            raise TypeError(f"not a query: {q!r}")
        out.append(q)
    return out


def check_mode(mode: str, kb: ModularKB | None = None) -> str:
    if mode in ("mcl", "mclt", "classical"):
        return mode
    if isinstance(mode, str) and mode.startswith("module="):
        name = mode.split("=", 1)[1]
        if not name:
            raise ValueError("module mode needs a name: module=<name>")
        if kb is not None:
            kb.module(name)
        return mode
    raise ValueError(f"unknown mode {mode!r}; expected mcl, mclt, module=<name> or classical")


def check_max_atoms(value) -> int:
    n = int(value)
    if n < 1:
        raise ValueError("max atoms must be at least 1")
    return n
