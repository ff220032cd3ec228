"""Finite groups stored as full multiplication tables.

Elements are the integers ``0..n-1``; ``table[i][j]`` is the index of the
product ``g_i * g_j``.  Every constructor fixes a naming convention so that
connection sets can be written by element name:

* cyclic ``Zn``: ``"0" .. "n-1"`` (index = residue).
* dihedral of order ``2m``: ``r^i`` at index ``i`` and ``r^i s`` at index
  ``m + i``, named ``"e", "r", "r2", ..., "s", "rs", "r2s", ...``.
  Multiplication follows ``s r = r^-1 s``.
* symmetric / alternating: permutations of ``1..m`` in lexicographic order,
  named in compact cycle notation (``"(12)"``, ``"(123)"``, ``"(12)(34)"``),
  identity ``"e"``.  The product ``p * q`` is the composition "apply q,
  then p".
* quaternion ``Q8``: ``"1", "-1", "i", "-i", "j", "-j", "k", "-k"``.
* dicyclic ``Dic3`` (``a^4 = b^3 = e``, ``a^-1 b a = b^-1``): ``a^i b^j`` at
  index ``3 i + j``, named ``"e", "b", "b2", "a", "ab", "ab2", "a2", ...``.
* direct products: tuples of factor names, e.g. ``"(1,3)"`` in ``Z2xZ6``.

Dihedral groups are indexed by their ORDER: ``D8`` has 8 elements.
"""

from __future__ import annotations

import itertools
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union


class GroupError(ValueError):
    """Raised for unknown groups, bad parameters or invalid tables."""


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    names: tuple[str, ...]
    catalog_name: str = ""
    _inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "names", tuple(str(s) for s in self.names))
        validate_table(self.order, table, self.identity, self.names)
        inv = tuple(row.index(self.identity) for row in table)
        object.__setattr__(self, "_inverses", inv)
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.catalog_name or '?'}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def name(self, a: int) -> str:
        return self.names[a]

    def element(self, token: Union[str, int]) -> int:
        """Resolve an element name to its index.

        Accepts exact names, names with ``^``/braces/spaces dropped (``"r^2"``
        matches ``"r2"``), ``"#k"`` for raw index k, and bare digits when they
        are not already a name.
        """
        if isinstance(token, int):
            if not 0 <= token < self.order:
                raise GroupError(f"element index {token} out of range for {self.catalog_name}")
            return token
        token = token.strip()
        if token.startswith("#") and token[1:].isdigit():
            return self.element(int(token[1:]))
        if token in self._index:
            return self._index[token]
        alias = _normalize_name(token)
        for i, name in enumerate(self.names):
            if _normalize_name(name) == alias:
                return i
        if token.isdigit() and int(token) < self.order:
            return int(token)
        raise GroupError(f"unknown element {token!r} in {self.catalog_name or 'group'}")

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(
            a for a in range(self.order) if all(t[a][b] == t[b][a] for b in range(self.order))
        )

    def involutions(self) -> list[int]:
        return [a for a in range(self.order) if a != self.identity and self.table[a][a] == self.identity]


def _normalize_name(name: str) -> str:
    return re.sub(r"[\s^{}]", "", name)


def validate_table(order: int, table: Sequence[Sequence[int]], identity: int,
                   names: Optional[Sequence[str]] = None) -> None:
    """Check the group axioms exhaustively; raise :class:`GroupError` on failure."""
    n = order
    if n < 1:
        raise GroupError("group order must be positive")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupError(f"table must be {n}x{n}")
    if names is not None:
        if len(names) != n:
            raise GroupError(f"expected {n} names, got {len(names)}")
        if len(set(names)) != n:
            raise GroupError("element names must be distinct")
    if not 0 <= identity < n:
        raise GroupError("identity index out of range")
    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            raise GroupError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupError(f"column {j} is not a permutation of 0..{n - 1}")
    for i in range(n):
        if table[identity][i] != i or table[i][identity] != i:
            raise GroupError(f"element {identity} is not a two-sided identity")
    for a in range(n):
        ta = table[a]
        for b in range(n):
            tab = table[ta[b]]
            tb = table[b]
            for c in range(n):
                if tab[c] != ta[tb[c]]:
                    raise GroupError(f"associativity fails at ({a}, {b}, {c})")
    # a Latin square with identity already gives unique inverses, checked for clarity
    for a in range(n):
        if [b for b in range(n) if table[a][b] == identity] != [
            b for b in range(n) if table[b][a] == identity
        ]:
            raise GroupError(f"element {a} has no two-sided inverse")


# Constructors -----------------------------------------------------------------

def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(n, table, 0, [str(i) for i in range(n)], f"Z{n}")


def dihedral_group(order: int) -> FiniteGroup:
    if order < 4 or order % 2:
        raise GroupError("dihedral group order must be even and >= 4")
    m = order // 2

    def rname(i):
        return "" if i == 0 else ("r" if i == 1 else f"r{i}")

    names = [rname(i) or "e" for i in range(m)] + [rname(i) + "s" for i in range(m)]
    table = []
    for x in range(order):
        a, fx = x % m, x // m
        row = []
        for y in range(order):
            b, fy = y % m, y // m
            c = (a + (-b if fx else b)) % m
            row.append(c + m * ((fx + fy) % 2))
        table.append(row)
    return FiniteGroup(order, table, 0, names, f"D{order}")


def _cycle_name(perm: Sequence[int]) -> str:
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def _permutation_group(perms: list[tuple[int, ...]], tag: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return FiniteGroup(len(perms), table, 0, [_cycle_name(p) for p in perms], tag)


def symmetric_group(m: int) -> FiniteGroup:
    if not 1 <= m <= 4:
        raise GroupError("symmetric group supported for 1 <= m <= 4 (order <= 24)")
    return _permutation_group(list(itertools.permutations(range(m))), f"S{m}")


def _parity(perm: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j]) % 2


def alternating_group(m: int) -> FiniteGroup:
    if not 1 <= m <= 4:
        raise GroupError("alternating group supported for 1 <= m <= 4")
    perms = [p for p in itertools.permutations(range(m)) if _parity(p) == 0]
    return _permutation_group(perms, f"A{m}")


_QUAT_UNIT = {  # (u, v) -> (sign, w) for basis units 0=1, 1=i, 2=j, 3=k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group() -> FiniteGroup:
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    names = [("" if s > 0 else "-") + "1ijk"[u] for s, u in elems]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, w = _QUAT_UNIT[u1, u2]
            row.append(index[(s1 * s2 * s, w)])
        table.append(row)
    return FiniteGroup(8, table, 0, names, "Q8")


def dicyclic12() -> FiniteGroup:
    """The order-12 group with a^4 = b^3 = e and a^-1 b a = b^-1."""

    def nm(i, j):
        s = ("a" if i == 1 else f"a{i}" if i else "") + ("b" if j == 1 else f"b{j}" if j else "")
        return s or "e"

    names = [nm(i, j) for i in range(4) for j in range(3)]
    table = []
    for i in range(4):
        for j in range(3):
            row = []
            for k in range(4):
                for l in range(3):
                    # b^j a^k = a^k b^((-1)^k j)
                    row.append(3 * ((i + k) % 4) + ((-j if k % 2 else j) + l) % 3)
            table.append(row)
    return FiniteGroup(12, table, 0, names, "Dic3")


def direct_product(*factors: FiniteGroup) -> FiniteGroup:
    if len(factors) < 2:
        raise GroupError("direct product needs at least two factors")
    # flatten names so Z2xZ2xZ2 reads "(1,0,1)" rather than "((1,0),1)"
    parts = [[name.strip("()").split(",") if f.catalog_name.count("x") else [name]
              for name in f.names] for f in factors]
    elems = list(itertools.product(*[range(f.order) for f in factors]))
    index = {e: i for i, e in enumerate(elems)}
    names = ["(" + ",".join(sum((parts[k][e[k]] for k in range(len(factors))), [])) + ")"
             for e in elems]
    table = [[index[tuple(f.table[a[k]][b[k]] for k, f in enumerate(factors))] for b in elems]
             for a in elems]
    identity = index[tuple(f.identity for f in factors)]
    tag = "x".join(f.catalog_name for f in factors)
    return FiniteGroup(len(elems), table, identity, names, tag)


_FIXED = {
    "S3": lambda: symmetric_group(3),
    "A4": lambda: alternating_group(4),
    "Q8": quaternion_group,
    "Dic3": dicyclic12,
}

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion8",
            "dicyclic12", "direct_product")


def make_group(catalog_name: str, parameter: Union[int, Sequence[int], None] = None) -> FiniteGroup:
    """Build a group from a family name plus parameter, or from a catalog tag.

    ``make_group("cyclic", 6)``, ``make_group("dihedral", 8)`` (order 8),
    ``make_group("direct_product", (2, 6))`` (product of cyclic groups),
    ``make_group("Z2xZ6")``, ``make_group("Dic3")``.
    """
    name = catalog_name.strip()
    key = name.lower()
    if key in ("cyclic", "dihedral", "symmetric", "alternating"):
        if parameter is None or isinstance(parameter, (list, tuple)):
            raise GroupError(f"family {name!r} needs one integer parameter")
        p = int(parameter)
        if p < 1:
            raise GroupError("parameter must be positive")
        return {"cyclic": cyclic_group, "dihedral": dihedral_group,
                "symmetric": symmetric_group, "alternating": alternating_group}[key](p)
    if key == "quaternion8":
        return quaternion_group()
    if key == "dicyclic12":
        return dicyclic12()
    if key == "direct_product":
        if parameter is None or isinstance(parameter, int):
            raise GroupError("direct_product needs a sequence of cyclic orders")
        return direct_product(*[cyclic_group(int(k)) for k in parameter])
    if parameter is not None:
        make_group(name)  # raises for names that are neither family nor tag
        raise GroupError(f"catalog tag {name!r} takes no parameter")
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"Z(\d+)((?:xZ\d+)*)", name)
    if m:
        orders = [int(x) for x in re.findall(r"\d+", name)]
        if len(orders) == 1:
            return cyclic_group(orders[0])
        return direct_product(*[cyclic_group(k) for k in orders])
    m = re.fullmatch(r"D(\d+)", name)
    if m:
        return dihedral_group(int(m.group(1)))
    m = re.fullmatch(r"([SA])(\d)", name)
    if m:
        return (symmetric_group if m.group(1) == "S" else alternating_group)(int(m.group(2)))
    raise GroupError(f"unknown group {catalog_name!r}")


# One representative per isomorphism class, orders 1..12.
CATALOG: dict[int, tuple[str, ...]] = {
    1: ("Z1",),
    2: ("Z2",),
    3: ("Z3",),
    4: ("Z4", "Z2xZ2"),
    5: ("Z5",),
    6: ("Z6", "S3"),
    7: ("Z7",),
    8: ("Z8", "Z2xZ4", "Z2xZ2xZ2", "D8", "Q8"),
    9: ("Z9", "Z3xZ3"),
    10: ("Z10", "D10"),
    11: ("Z11",),
    12: ("Z12", "Z2xZ6", "D12", "A4", "Dic3"),
}

_cache: dict[str, FiniteGroup] = {}


def catalog_group(tag: str) -> FiniteGroup:
    if tag not in _cache:
        _cache[tag] = make_group(tag)
    return _cache[tag]


def groups_of_order(n: int) -> list[FiniteGroup]:
    if n not in CATALOG:
        raise GroupError(f"catalog is complete only for orders 1..12, got {n}")
    return [catalog_group(tag) for tag in CATALOG[n]]


def catalog_groups(max_order: int = 12, min_order: int = 1) -> list[FiniteGroup]:
    return [g for n in range(min_order, max_order + 1) for g in groups_of_order(n)]


# Element-level operations ------------------------------------------------------

def element_order(G: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != G.identity:
        x = G.table[x][g]
        k += 1
    assert G.order % k == 0
    return k


def closure(G: FiniteGroup, S: Iterable[int]) -> frozenset[int]:
    """Subgroup generated by S (iterative closure under multiplication)."""
    gens = set(S)
    result = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.table[x][s]
                if y not in result:
                    result.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(result)


def is_generating(G: FiniteGroup, S: Iterable[int]) -> bool:
    return len(closure(G, S)) == G.order


def is_inverse_closed(G: FiniteGroup, S: Iterable[int]) -> bool:
    S = set(S)
    return all(G.inv(s) in S for s in S)


def inverse_closed_subsets(G: FiniteGroup, size: Optional[int] = None,
                           require_generating: bool = False) -> Iterator[frozenset[int]]:
    """Yield every S subset of G minus e with S = S^-1, lexicographically by sorted index list.

    Involutions are chosen independently and ``{x, x^-1}`` pairs as units.
    """
    units = []
    for a in range(G.order):
        if a == G.identity:
            continue
        b = G.inv(a)
        if a <= b:
            units.append((a,) if a == b else (a, b))
    found = []
    for mask in range(1 << len(units)):
        S = [x for i, u in enumerate(units) if mask >> i & 1 for x in u]
        if size is not None and len(S) != size:
            continue
        if require_generating and not is_generating(G, S):
            continue
        found.append(tuple(sorted(S)))
    for S in sorted(found):
        yield frozenset(S)


def is_subgroup(G: FiniteGroup, H: Iterable[int]) -> bool:
    H = set(H)
    return (G.identity in H and all(G.inv(h) in H for h in H)
            and all(G.table[a][b] in H for a in H for b in H))


def subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """All subgroups, as joins of cyclic subgroups; sorted by (size, elements)."""
    cyclic = {closure(G, [g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for H in frontier:
            for C in cyclic:
                J = closure(G, H | C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def left_cosets(G: FiniteGroup, H: Iterable[int]) -> list[frozenset[int]]:
    """Partition of G into left cosets gH, ordered by smallest element."""
    H = frozenset(H)
    if not is_subgroup(G, H):
        raise GroupError("H is not a subgroup")
    blocks, seen = [], set()
    for g in range(G.order):
        if g in seen:
            continue
        coset = frozenset(G.table[g][h] for h in H)
        seen |= coset
        blocks.append(coset)
    return blocks


def right_cosets(G: FiniteGroup, H: Iterable[int]) -> list[frozenset[int]]:
    """Partition of G into right cosets Hg, ordered by smallest element."""
    H = frozenset(H)
    if not is_subgroup(G, H):
        raise GroupError("H is not a subgroup")
    blocks, seen = [], set()
    for g in range(G.order):
        if g not in seen:
            coset = frozenset(G.table[h][g] for h in H)
            seen |= coset
            blocks.append(coset)
    return blocks


def invariant_vector(G: FiniteGroup) -> tuple:
    """Isomorphism invariant: (order, element-order multiset, center size, abelian)."""
    orders = Counter(element_order(G, g) for g in range(G.order))
    return (G.order, tuple(sorted(orders.items())), len(G.center()), G.is_abelian)


# JSON interchange -------------------------------------------------------------

def group_to_dict(G: FiniteGroup) -> dict:
    return {"name": G.catalog_name, "order": G.order, "identity": G.identity,
            "names": list(G.names), "table": [list(r) for r in G.table]}


def group_from_dict(data: dict) -> FiniteGroup:
    try:
        return FiniteGroup(int(data["order"]), data["table"], int(data["identity"]),
                           data["names"], str(data.get("name", "")))
    except (KeyError, TypeError) as exc:
        raise GroupError(f"malformed group document: {exc}") from exc


def save_group(G: FiniteGroup, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(group_to_dict(G), indent=1) + "\n")


def load_group(path: Union[str, Path]) -> FiniteGroup:
    return group_from_dict(json.loads(Path(path).read_text()))
