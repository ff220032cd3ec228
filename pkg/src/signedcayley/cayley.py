"""Cayley graphs Cay(S:G): vertices are group elements, a ~ b iff a b^-1 in S."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .graphs import (Graph, SmallGraphClass, classify_triple,
                     complete_multipartite_partition, induced_subgraph)
from .groups import FiniteGroup, GroupError, is_generating, is_subgroup, make_group, right_cosets


class ConnectionSetError(ValueError):
    """S contains the identity or is not closed under inverses."""


@dataclass(frozen=True)
class CayleySpec:
    group: FiniteGroup
    connection_set: frozenset[int]

    def __post_init__(self):
        G, S = self.group, frozenset(self.connection_set)
        object.__setattr__(self, "connection_set", S)
        for s in sorted(S):
            if not 0 <= s < G.order:
                raise ConnectionSetError(f"element index {s} out of range")
        if G.identity in S:
            raise ConnectionSetError(f"identity {G.name(G.identity)!r} is in the connection set")
        for s in sorted(S):
            if G.inv(s) not in S:
                raise ConnectionSetError(
                    f"connection set not inverse-closed: {G.name(s)!r} is present "
                    f"but its inverse {G.name(G.inv(s))!r} is not")

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def generating(self) -> bool:
        return is_generating(self.group, self.connection_set)

    def names(self) -> list[str]:
        return [self.group.name(s) for s in sorted(self.connection_set)]


def build_cayley(spec: CayleySpec) -> Graph:
    G, S = spec.group, spec.connection_set
    t, inv = G.table, G.inv
    adj = [{j for j in range(G.order) if j != i and t[i][inv(j)] in S} for i in range(G.order)]
    return Graph(G.order, tuple(adj), G.names)


def cayley_graph(G: FiniteGroup, S: Iterable[Union[int, str]]) -> Graph:
    return build_cayley(CayleySpec(G, frozenset(G.element(s) for s in S)))


def verify_coset_multipartite(G: FiniteGroup, H: Iterable[int]) -> bool:
    """Cay(G minus H : G) is complete multipartite with the cosets of H as parts.

    Under a ~ b iff a b^-1 in S, two vertices are non-adjacent exactly when
    a b^-1 in H, i.e. a in Hb, so the parts are the right cosets Hb.  They
    coincide with the left cosets when H is normal.
    """
    H = frozenset(H)
    if not is_subgroup(G, H) or len(H) == G.order:
        raise GroupError("H must be a proper subgroup")
    graph = build_cayley(CayleySpec(G, frozenset(range(G.order)) - H))
    parts = complete_multipartite_partition(graph)
    if parts is None:
        return False
    return {frozenset(p) for p in parts} == set(right_cosets(G, H))


def triple_complement_class(G: FiniteGroup, excluded: Iterable[int]) -> tuple[bool, SmallGraphClass]:
    """Classify the subgraph induced on {a,b,c} in Cay(G minus {e,a,b,c} : G)."""
    A = frozenset(excluded)
    if len(A) != 3 or G.identity in A:
        raise ConnectionSetError("excluded set must be three non-identity elements")
    spec = CayleySpec(G, frozenset(range(G.order)) - A - {G.identity})
    sub = induced_subgraph(build_cayley(spec), A)
    return G.order % 2 == 0, classify_triple(sub)


def split_names(text: str) -> list[str]:
    """Split a comma list, keeping commas inside parentheses: ``"(1,0),(0,1)"``."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]


def parse_group_spec(text: str) -> FiniteGroup:
    """``"cyclic:8"``, ``"dihedral:8"``, ``"direct_product:2x6"``, ``"Q8"``, ``"Z2xZ4"``."""
    text = text.strip()
    if ":" in text:
        family, param = text.split(":", 1)
        family = family.strip()
        if family == "direct_product":
            return make_group(family, [int(x) for x in re.split(r"[x,]", param) if x])
        if not param.strip().isdigit():
            raise GroupError(f"malformed group spec {text!r}")
        return make_group(family, int(param))
    return make_group(text)


def parse_cayley_spec(text: str) -> CayleySpec:
    """Parse ``"group:params:gens"`` (or ``"tag:gens"`` for parameterless groups).

    >>> parse_cayley_spec("dihedral:8:s,rs,r2").names()
    ['r2', 's', 'rs']
    """
    head, sep, gens = text.rpartition(":")
    if not sep:
        raise GroupError(f"malformed Cayley spec {text!r}")
    G = parse_group_spec(head)
    return CayleySpec(G, frozenset(G.element(tok) for tok in split_names(gens)))


def connection_set_from_names(G: FiniteGroup, names: Optional[str]) -> frozenset[int]:
    if not names:
        return frozenset()
    return frozenset(G.element(tok) for tok in split_names(names))
