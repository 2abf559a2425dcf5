"""Small finite groups as explicit multiplication tables.

Elements are integer indices into a canonical ordering with the identity at
index 0.  Groups built from permutation generators order elements by
breadth-first discovery (deterministic given the generator list), so a
cyclic group generated by s comes out as e, s, s^2, ...  Multiplication is
function composition: (p * q)(x) = p(q(x)).

Explicit tables are accepted too and fully law-checked; a failing input is
rejected with a witnessing triple.  Everything here is desk scale, capped at
order 360.
"""

from __future__ import annotations

import math
from functools import lru_cache

MAX_ORDER = 360


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)" into a 0-based
    permutation tuple.  Commas and spaces both separate points."""
    text = text.strip()
    if not text or text == "()":
        d = degree or 1
        return tuple(range(d))
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for chunk in text[1:-1].split(")("):
        pts = [int(t) for t in chunk.replace(",", " ").split()]
        if len(pts) != len(set(pts)) or any(x < 1 for x in pts):
            raise ValueError(f"bad cycle: ({chunk})")
        cycles.append(pts)
    d = max((max(c) for c in cycles), default=0)
    if degree is not None:
        d = max(d, degree)
    perm = list(range(d))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def cycle_string(perm: tuple[int, ...]) -> str:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = perm[x]
        out.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(out) if out else "()"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[x]] for x in range(len(p)))


class FiniteGroup:
    """A finite group given by its full Cayley table."""

    def __init__(self, table: list[list[int]], names: list[str] | None = None,
                 _trusted: bool = False):
        n = len(table)
        if n == 0 or n > MAX_ORDER:
            raise ValueError(f"group order must be in 1..{MAX_ORDER}")
        self.n = n
        self.table = [list(row) for row in table]
        self.names = list(names) if names else [f"g{i}" for i in range(n)]
        if not _trusted:
            self._check_laws()
        self.identity = 0
        self.inv = [next(j for j in range(n) if self.table[i][j] == 0)
                    for i in range(n)]

    def _check_laws(self):
        n = self.n
        for i, row in enumerate(self.table):
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise ValueError(f"row {i} is not closed over 0..{n - 1}")
        if any(self.table[0][j] != j for j in range(n)) or \
           any(self.table[i][0] != i for i in range(n)):
            raise ValueError("index 0 is not a two-sided identity")
        for i in range(n):
            if 0 not in self.table[i]:
                raise ValueError(f"element {i} has no inverse")
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = t[ta[b]]
                tb = t[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise ValueError(
                            f"not associative at triple ({a}, {b}, {c})")

    @classmethod
    def from_generators(cls, perms: list[tuple[int, ...]]) -> "FiniteGroup":
        if not perms:
            raise ValueError("need at least one generator")
        deg = max(len(p) for p in perms)
        gens = [tuple(p) + tuple(range(len(p), deg)) for p in perms]
        ident = tuple(range(deg))
        elements = [ident]
        index = {ident: 0}
        queue = [ident]
        while queue:
            cur = queue.pop(0)
            for g in gens:
                nxt = _compose(cur, g)
                if nxt not in index:
                    if len(elements) >= MAX_ORDER:
                        raise ValueError(f"closure exceeds order {MAX_ORDER}")
                    index[nxt] = len(elements)
                    elements.append(nxt)
                    queue.append(nxt)
        table = [[index[_compose(a, b)] for b in elements] for a in elements]
        names = [cycle_string(e) for e in elements]
        grp = cls(table, names, _trusted=True)
        grp.perms = elements
        return grp

    # -- basic structure ---------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.inv[i]

    def power(self, i: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[i], -k)
        acc = 0
        base = i
        while k:
            if k & 1:
                acc = self.table[acc][base]
            k >>= 1
            if k:
                base = self.table[base][base]
        return acc

    def conjugate(self, t: int, s: int) -> int:
        """t s t^{-1}"""
        return self.table[self.table[t][s]][self.inv[t]]

    def element_order(self, i: int) -> int:
        k = 1
        x = i
        while x != 0:
            x = self.table[x][i]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for i in range(self.n):
            e = math.lcm(e, self.element_order(i))
        return e

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.n) for j in range(i))

    def conjugacy_classes(self) -> list[list[int]]:
        """Classes as sorted index lists, ordered by smallest member; the
        identity class comes first."""
        placed = [False] * self.n
        classes = []
        for s in range(self.n):
            if placed[s]:
                continue
            orbit = {self.conjugate(t, s) for t in range(self.n)}
            for x in orbit:
                placed[x] = True
            classes.append(sorted(orbit))
        return classes

    def cyclic_subgroup(self, s: int) -> list[int]:
        """[s^0, s^1, ..., s^{m-1}] for m the order of s."""
        out = [0]
        x = s
        while x != 0:
            out.append(x)
            x = self.table[x][s]
        return out

    def subgroup_closure(self, gens: list[int]) -> list[int]:
        seen = {0}
        queue = [0]
        while queue:
            cur = queue.pop(0)
            for g in gens:
                nxt = self.table[cur][g]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return sorted(seen)

    def right_transversal(self, sub: list[int]) -> list[int]:
        """One representative per right coset Hx, in index order."""
        hset = set(sub)
        if 0 not in hset or any(self.table[a][b] not in hset
                                 for a in sub for b in sub):
            raise ValueError("not a subgroup")
        covered = [False] * self.n
        reps = []
        for g in range(self.n):
            if not covered[g]:
                reps.append(g)
                for h in sub:
                    covered[self.table[h][g]] = True
        if len(reps) * len(sub) != self.n:
            raise AssertionError("coset cover mismatch")
        return reps


class Subgroup:
    """A subgroup presented as its own FiniteGroup plus the inclusion map."""

    def __init__(self, parent: FiniteGroup, elements: list[int]):
        elems = sorted(set(elements))
        eset = set(elems)
        for a in elems:
            for b in elems:
                if parent.table[a][b] not in eset:
                    raise ValueError(
                        f"not closed: {a} * {b} = {parent.table[a][b]} escapes")
        if 0 not in eset:
            raise ValueError("subgroup must contain the identity")
        self.parent = parent
        self.elements = elems          # parent indices, identity first
        pos = {g: i for i, g in enumerate(elems)}
        table = [[pos[parent.table[a][b]] for b in elems] for a in elems]
        names = [parent.names[g] for g in elems]
        self.group = FiniteGroup(table, names, _trusted=True)
        self.to_parent = elems
        self.from_parent = pos

    @classmethod
    def cyclic(cls, parent: FiniteGroup, s: int) -> "Subgroup":
        return cls(parent, parent.cyclic_subgroup(s))


def _quaternion_table():
    # elements 1, -1, i, -i, j, -j, k, -k as (axis, sign), axis 0 = scalar
    units = [(0, 1), (0, -1), (1, 1), (1, -1), (2, 1), (2, -1), (3, 1), (3, -1)]
    mul3 = {(1, 2): (3, 1), (2, 1): (3, -1),
            (2, 3): (1, 1), (3, 2): (1, -1),
            (3, 1): (2, 1), (1, 3): (2, -1)}

    def qmul(a, b):
        (ax, sa), (bx, sb) = a, b
        s = sa * sb
        if ax == 0:
            return (bx, s)
        if bx == 0:
            return (ax, s)
        if ax == bx:
            return (0, -s)
        cx, cs = mul3[(ax, bx)]
        return (cx, cs * s)

    idx = {u: i for i, u in enumerate(units)}
    table = [[idx[qmul(a, b)] for b in units] for a in units]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return table, names


_PRESET_GENS = {
    "S3": ["(1 2)", "(1 2 3)"],
    "D5": ["(1 2 3 4 5)", "(2 5)(3 4)"],
    "A4": ["(1 2 3)", "(1 2)(3 4)"],
    "F21": ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"],
}


@lru_cache(maxsize=None)
def preset(name: str) -> FiniteGroup:
    """Named small groups: C<n>, S3, D5, A4, Q8, F21 (= C7 : C3)."""
    if name.startswith("C") and name[1:].isdigit():
        n = int(name[1:])
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"bad cyclic order {n}")
        grp = FiniteGroup.from_generators([tuple(range(1, n)) + (0,)])
    elif name == "Q8":
        table, names = _quaternion_table()
        grp = FiniteGroup(table, names)
    elif name in _PRESET_GENS:
        grp = FiniteGroup.from_generators(
            [parse_cycles(c) for c in _PRESET_GENS[name]])
    else:
        raise ValueError(f"unknown group preset {name!r}; "
                         f"known: C<n>, {', '.join(sorted(_PRESET_GENS) + ['Q8'])}")
    grp.label = name
    return grp


PRESET_NAMES = ("C3", "C5", "C7", "C9", "S3", "D5", "A4", "Q8", "F21")


def from_spec(data: dict) -> FiniteGroup:
    """Build a group from a JSON-style dict: either {"perm_gens": [cycles]}
    with 1-based cycle strings or point lists, or {"table": [[...]]}."""
    if "perm_gens" in data:
        gens = []
        for g in data["perm_gens"]:
            if isinstance(g, str):
                gens.append(parse_cycles(g))
            else:
                gens.append(parse_cycles(
                    "".join("(" + " ".join(map(str, c)) + ")" for c in g)))
        return FiniteGroup.from_generators(gens)
    if "table" in data:
        table = [list(row) for row in data["table"]]
        names = list(data["names"]) if data.get("names") else None
        n = len(table)
        ident = next((e for e in range(n)
                      if all(table[e][j] == j and table[j][e] == j
                             for j in range(n))), None)
        if ident is None:
            raise ValueError("table has no two-sided identity")
        if ident != 0:
            # renumber so the identity sits at index 0
            order = [ident] + [i for i in range(n) if i != ident]
            pos = {g: i for i, g in enumerate(order)}
            table = [[pos[table[a][b]] for b in order] for a in order]
            if names:
                names = [names[g] for g in order]
        return FiniteGroup(table, names)
    if "preset" in data:
        return preset(data["preset"])
    raise ValueError("group spec needs 'perm_gens', 'table', or 'preset'")
