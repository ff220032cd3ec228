"""Signed domination: labelings, exact solvers, closed forms and certificates.

A labeling ``f: V -> {-1, +1}`` is signed dominating when every closed
neighbourhood sum ``f[v]`` is positive.  With ``W`` the set of ``-1``
vertices, ``f[v] = |N[v]| - 2 |N[v] & W|``, so ``f[v] > 0`` is the same as
``|N[v] & W| <= deg(v) // 2``.  The exact solver therefore maximises ``|W|``
under these per-vertex capacities and reports ``gamma = n - 2 |W|``.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .cayley import CayleySpec, build_cayley
from .graphs import Graph, bfs_distances, regular_degree, standard_graph

NAIVE_LIMIT = 14

# callbacks (graph, result) fired after every exact or naive solve
_observers: list[Callable] = []


@contextlib.contextmanager
def observe_results(callback: Callable) -> Iterator[None]:
    """Call ``callback(graph, result)`` for every solve inside the block."""
    _observers.append(callback)
    try:
        yield
    finally:
        _observers.remove(callback)


def _notify(g, res):
    for cb in list(_observers):
        cb(g, res)
    return res


class CertificateError(RuntimeError):
    """A construction from the high-degree theorems failed validation.

    Carries the offending labeling; this is a counterexample, not a bug to
    be patched over.
    """

    def __init__(self, message: str, labeling: "SignLabeling"):
        super().__init__(message)
        self.labeling = labeling


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, incumbent: frozenset[int]):
        super().__init__(f"branch-and-bound budget exhausted after {nodes} nodes")
        self.nodes = nodes
        self.incumbent = incumbent


@dataclass(frozen=True)
class SignLabeling:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        if any(x not in (-1, 1) for x in values):
            raise ValueError("labels must be -1 or +1")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_negatives(cls, n: int, negatives: Iterable[int]) -> "SignLabeling":
        neg = set(negatives)
        if any(not 0 <= v < n for v in neg):
            raise ValueError("negative vertex out of range")
        return cls(tuple(-1 if v in neg else 1 for v in range(n)))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def negatives(self) -> list[int]:
        return [v for v, x in enumerate(self.values) if x < 0]


@dataclass(frozen=True)
class GammaResult:
    gamma: int
    labeling: SignLabeling
    lower_bound_used: int
    nodes_explored: int
    method: str

    @property
    def n(self) -> int:
        return len(self.labeling)

    @property
    def negatives(self) -> list[int]:
        return self.labeling.negatives

    def to_dict(self) -> dict:
        return {"n": self.n, "gamma": self.gamma, "negatives": self.negatives,
                "method": self.method, "nodes": self.nodes_explored}


def closed_neighborhood_sum(g: Graph, lab: SignLabeling, v: int) -> int:
    return lab.values[v] + sum(lab.values[u] for u in g.adj[v])


def is_signed_dominating(g: Graph, lab: SignLabeling) -> bool:
    if len(lab) != g.n:
        raise ValueError(f"labeling has {len(lab)} entries for {g.n} vertices")
    return all(closed_neighborhood_sum(g, lab, v) > 0 for v in range(g.n))


def respects_capacities(g: Graph, negatives: Iterable[int]) -> bool:
    """``|N[v] & W| <= deg(v) // 2`` at every vertex."""
    W = set(negatives)
    return all(len(g.closed_neighborhood(v) & W) <= g.degree(v) // 2 for v in range(g.n))


def _fix_parity(bound: int, n: int) -> int:
    return bound if (bound - n) % 2 == 0 else bound + 1


def regular_lower_bound(n: int, k: int) -> int:
    """Lower bound on gamma for a k-regular graph of order n, lifted to n's parity."""
    if not 0 <= k <= max(n - 1, 0):
        raise ValueError(f"degree {k} impossible on {n} vertices")
    raw = -(-2 * n // (k + 1)) if k % 2 else -(-n // (k + 1))
    return _fix_parity(raw, n)


def capacity_lower_bound(g: Graph) -> int:
    """gamma >= n - 2 floor(sum_v floor(deg v / 2) / (min degree + 1)).

    Each -1 vertex w uses deg(w) + 1 >= delta + 1 units of the total capacity.
    For k-regular graphs this is the same bound as :func:`regular_lower_bound`.
    """
    if g.n == 0:
        return 0
    total = sum(d // 2 for d in g.degrees)
    return g.n - 2 * (total // (g.min_degree + 1))


def lower_bound(g: Graph) -> int:
    k = regular_degree(g)
    if k is not None and g.n > 0:
        return max(regular_lower_bound(g.n, k), capacity_lower_bound(g))
    return capacity_lower_bound(g)


def _search(g: Graph, budget: Optional[int] = None,
            warm_start: Optional[Iterable[int]] = None) -> tuple[frozenset[int], int]:
    n = g.n
    cap = [d // 2 for d in g.degrees]
    closed = [sorted(g.closed_neighborhood(v)) for v in range(n)]
    ceiling = sum(cap) // (g.min_degree + 1) if n else 0

    best: list[int] = []
    if warm_start is not None:
        best = sorted(set(warm_start))
        if not respects_capacities(g, best):
            raise ValueError("warm start is not a feasible negative set")
    cur: list[int] = []
    cap_left = sum(cap)
    nodes = 0
    delta1 = g.min_degree + 1

    def feasible(v: int) -> bool:
        return all(cap[u] > 0 for u in closed[v])

    def dfs(i: int) -> bool:
        # returns True when the global ceiling is reached and the search can stop
        nonlocal best, nodes, cap_left
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchBudgetExceeded(nodes, frozenset(best))
        if len(cur) > len(best):
            best = list(cur)
            if len(best) >= ceiling:
                return True
        if i == n:
            return False
        remaining = sum(1 for v in range(i, n) if feasible(v))
        if len(cur) + min(remaining, cap_left // delta1) <= len(best):
            return False
        if feasible(i):
            for u in closed[i]:
                cap[u] -= 1
            cap_left -= len(closed[i])
            cur.append(i)
            stop = dfs(i + 1)
            cur.pop()
            cap_left += len(closed[i])
            for u in closed[i]:
                cap[u] += 1
            if stop:
                return True
        return dfs(i + 1)

    if len(best) < ceiling:
        dfs(0)
    return frozenset(best), nodes


def max_negative_set(g: Graph, budget: Optional[int] = None) -> frozenset[int]:
    """Largest W with ``|N[v] & W| <= deg(v) // 2`` for all v.

    Depth-first branch and bound over vertices in index order, include-branch
    first; among maximum sets the one found first (lexicographically least
    sorted index list) is returned.  Raises :class:`SearchBudgetExceeded`
    if more than ``budget`` nodes are needed.
    """
    return _search(g, budget)[0]


def gamma_exact(g: Graph, warm_start: Optional[Iterable[int]] = None,
                budget: Optional[int] = None) -> GammaResult:
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    W, nodes = _search(g, budget, warm_start)
    lab = SignLabeling.from_negatives(g.n, W)
    return _notify(g, GammaResult(g.n - 2 * len(W), lab, lower_bound(g), nodes, "branch_and_bound"))


def gamma_naive(g: Graph) -> GammaResult:
    """Exhaustive minimum over all 2^n labelings (n <= 14), checked by direct sums."""
    n = g.n
    if n > NAIVE_LIMIT:
        raise ValueError(f"naive enumeration limited to {NAIVE_LIMIT} vertices")
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    nbrs = [sorted(g.closed_neighborhood(v)) for v in range(n)]
    examined = 0
    for k in range(n, -1, -1):
        for W in itertools.combinations(range(n), k):
            examined += 1
            values = [1] * n
            for w in W:
                values[w] = -1
            if all(sum(values[u] for u in nbrs[v]) > 0 for v in range(n)):
                return _notify(g, GammaResult(n - 2 * k, SignLabeling(tuple(values)),
                                              lower_bound(g), examined, "naive"))
    raise AssertionError("the all-positive labeling is always signed dominating")


def gamma_formula(kind: str, n: int) -> int:
    if kind == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return 1 if n % 2 else 2
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return n - 2 * (n // 3)
    raise ValueError(f"no closed form for {kind!r}")


def formula_result(kind: str, n: int) -> GammaResult:
    """Closed-form gamma together with an explicit optimal labeling."""
    gamma = gamma_formula(kind, n)
    k = (n - gamma) // 2
    if kind == "complete":
        negatives = range(k)
    else:
        negatives = [3 * i for i in range(k)]
    g = standard_graph(kind, n)
    lab = SignLabeling.from_negatives(n, negatives)
    assert is_signed_dominating(g, lab)
    return GammaResult(gamma, lab, lower_bound(g), 0, "formula")


def construct_high_degree_certificate(spec: CayleySpec) -> SignLabeling:
    """Explicit signed dominating labeling for |S| in {n-1, n-2, n-3, n-4}.

    Negative vertices are taken inside S in index order:

    * n-1: complete graph, (n-1)//2 negatives (weight 1 or 2);
    * n-2: n/2 - 1 negatives, never both ends of a non-edge ``{x, a x}``;
    * n-3: (n-3)/2 negatives for odd n (weight 3), (n-4)/2 for even n (weight 4);
    * n-4: n/2 - 2 negatives (weight 4).

    Raises :class:`CertificateError` if the result is not signed dominating.
    """
    G, S = spec.group, sorted(spec.connection_set)
    n, size = G.order, len(S)
    if size < n - 4 or size > n - 1:
        raise ValueError(f"|S| = {size} outside n-4..n-1 for n = {n}")
    if not spec.generating:
        raise ValueError("connection set does not generate the group")
    graph = build_cayley(spec)
    if size == n - 1:
        negatives = S[: (n - 1) // 2]
        target = 1 if n % 2 else 2
    elif size == n - 2:
        (a,) = set(range(n)) - set(S) - {G.identity}
        negatives, blocked = [], set()
        for x in S:
            if len(negatives) == n // 2 - 1:
                break
            if x not in blocked:
                negatives.append(x)
                blocked.add(G.mul(a, x))
        target = 2
    elif size == n - 3:
        negatives = S[: (n - 3) // 2] if n % 2 else S[: (n - 4) // 2]
        target = 3 if n % 2 else 4
    else:
        negatives = S[: n // 2 - 2]
        target = 4
    lab = SignLabeling.from_negatives(n, negatives)
    if not is_signed_dominating(graph, lab) or lab.weight != target:
        raise CertificateError(
            f"construction for {G.catalog_name} with |S|={size} gives weight {lab.weight}, "
            f"expected a signed dominating labeling of weight {target}", lab)
    return lab


def check_negative_pair_distance(g: Graph, lab: SignLabeling) -> bool:
    """All pairs of -1 vertices are at distance >= 3 (graphs of max degree <= 3)."""
    if g.max_degree > 3:
        raise ValueError("requires maximum degree at most 3")
    if not is_signed_dominating(g, lab):
        raise ValueError("labeling is not signed dominating")
    neg = lab.negatives
    for i, u in enumerate(neg):
        dist = bfs_distances(g, u)
        if any(dist[v] < 3 for v in neg[i + 1:]):
            return False
    return True


def check_result(g: Graph, res: GammaResult) -> list[str]:
    """Invariant violations of a solved instance (empty list when all hold)."""
    problems = []
    if not is_signed_dominating(g, res.labeling):
        problems.append("labeling is not signed dominating")
    if res.labeling.weight != res.gamma:
        problems.append(f"labeling weight {res.labeling.weight} != gamma {res.gamma}")
    if (res.gamma - g.n) % 2:
        problems.append("gamma has the wrong parity")
    if res.gamma < res.lower_bound_used:
        problems.append(f"gamma {res.gamma} below lower bound {res.lower_bound_used}")
    k = regular_degree(g)
    if k is not None and res.gamma < regular_lower_bound(g.n, k):
        problems.append("regular lower bound violated")
    if not respects_capacities(g, res.negatives):
        problems.append("negative set exceeds a capacity")
    return problems
