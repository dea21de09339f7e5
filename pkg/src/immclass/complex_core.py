"""Tetrahedral triangulations, their validation, and integer chain presentations.

Conventions
-----------
* Vertices are dense 0-based integers. Faces of every dimension are stored as
  ascending vertex tuples and indexed in lexicographic order.
* A tetrahedron listed as ``tet v0 v1 v2 v3 s`` carries the orientation
  ``parity(v0 v1 v2 v3 -> ascending) * s`` relative to its ascending tuple.
* The boundary of an ascending simplex (v0, ..., vk) is
  ``sum_i (-1)^i (v0, ..., ^vi, ..., vk)``.
"""
from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from immclass.snf import matmul


class ParseError(ValueError):
    pass


class PresentationError(ValueError):
    pass


def permutation_parity(seq: Sequence[int]) -> int:
    """+1 if sorting ``seq`` takes an even number of transpositions, else -1."""
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class SimplicialComplex3:
    vertex_count: int
    tetrahedra: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        tets = tuple(tuple(t) for t in self.tetrahedra)
        object.__setattr__(self, "tetrahedra", tets)
        signs = tuple(self.signs) or (1,) * len(tets)
        if len(signs) != len(tets) or any(s not in (1, -1) for s in signs):
            raise ValueError("one sign of +1 or -1 is needed per tetrahedron")
        object.__setattr__(self, "signs", signs)
        seen = set()
        for t in tets:
            if len(t) != 4:
                raise ValueError(f"tetrahedron {t} does not have four vertices")
            if len(set(t)) != 4:
                raise ValueError(f"tetrahedron {t} repeats a vertex")
            if any(v < 0 or v >= self.vertex_count for v in t):
                raise ValueError(f"tetrahedron {t} has a vertex outside 0..{self.vertex_count - 1}")
            key = frozenset(t)
            if key in seen:
                raise ValueError(f"duplicate tetrahedron {sorted(t)}")
            seen.add(key)

    @cached_property
    def _canonical(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        pairs = sorted((tuple(sorted(t)), permutation_parity(t) * s)
                       for t, s in zip(self.tetrahedra, self.signs))
        return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)

    @cached_property
    def _faces(self) -> dict[int, tuple[tuple[int, ...], ...]]:
        tets = self._canonical[0]
        tris = sorted({f for t in tets for f in combinations(t, 3)})
        edges = sorted({f for t in tets for f in combinations(t, 2)})
        return {
            0: tuple((v,) for v in range(self.vertex_count)),
            1: tuple(edges),
            2: tuple(tris),
            3: tets,
        }

    def simplices(self, k: int) -> tuple[tuple[int, ...], ...]:
        """Canonically ordered k-simplices as ascending vertex tuples."""
        return self._faces[k]

    @cached_property
    def index(self) -> dict[int, dict[tuple[int, ...], int]]:
        return {k: {s: i for i, s in enumerate(self._faces[k])} for k in range(4)}

    @property
    def declared_orientation(self) -> tuple[int, ...]:
        """Orientation signs from the listing, indexed like ``simplices(3)``."""
        return self._canonical[1]

    def counts(self) -> tuple[int, int, int, int]:
        return tuple(len(self._faces[k]) for k in range(4))


def parse_complex(text: str) -> SimplicialComplex3:
    """Read the line-oriented triangulation format.

    ``# comment`` lines are skipped, ``vertices N`` must precede the
    tetrahedra, and each tetrahedron is ``tet a b c d`` with an optional
    trailing ``+`` or ``-``. Vertex labels that are not already 0..N-1 are
    renumbered in ascending order, which preserves every orientation.
    """
    declared = None
    tets: list[tuple[int, ...]] = []
    signs: list[int] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if declared is not None:
                raise ParseError(f"line {lineno}: repeated vertices header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"line {lineno}: expected 'vertices N'")
            declared = int(parts[1])
        elif parts[0] == "tet":
            if declared is None:
                raise ParseError(f"line {lineno}: 'tet' before 'vertices' header")
            body = parts[1:]
            sign = 1
            if len(body) == 5 and body[4] in "+-":
                sign = -1 if body.pop() == "-" else 1
            if len(body) != 4:
                raise ParseError(f"line {lineno}: expected 'tet v0 v1 v2 v3 [+|-]'")
            try:
                tet = tuple(int(x) for x in body)
            except ValueError:
                raise ParseError(f"line {lineno}: vertex labels must be integers") from None
            if any(v < 0 for v in tet):
                raise ParseError(f"line {lineno}: negative vertex label")
            if len(set(tet)) != 4:
                raise ParseError(f"line {lineno}: repeated vertex in tetrahedron {list(tet)}")
            key = frozenset(tet)
            if key in seen:
                raise ParseError(f"line {lineno}: duplicate tetrahedron (first on line {seen[key]})")
            seen[key] = lineno
            tets.append(tet)
            signs.append(sign)
        else:
            raise ParseError(f"line {lineno}: unknown keyword {parts[0]!r}")
    if declared is None:
        raise ParseError("missing 'vertices N' header")
    used = sorted({v for t in tets for v in t})
    if used != list(range(len(used))) or (used and used[-1] >= declared):
        relabel = {v: i for i, v in enumerate(used)}
        tets = [tuple(relabel[v] for v in t) for t in tets]
    if len(used) != declared:
        raise ParseError(f"header declares {declared} vertices but {len(used)} are used")
    return SimplicialComplex3(declared, tuple(tets), tuple(signs))


def format_complex(c: SimplicialComplex3, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {line}" for line in comment.splitlines()]
    lines.append(f"vertices {c.vertex_count}")
    for t, s in zip(c.tetrahedra, c.signs):
        lines.append("tet " + " ".join(map(str, t)) + (" -" if s < 0 else " +"))
    return "\n".join(lines) + "\n"


@dataclass
class ValidationReport:
    is_closed: bool
    is_connected: bool
    euler_characteristic: int
    orientation: tuple[int, ...] | None
    orientation_failure: str | None
    orientable: bool
    link_check: bool
    link_failures: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return (self.is_closed and self.is_connected and self.orientation is not None
                and self.link_check and self.euler_characteristic == 0)

    def failures(self) -> list[str]:
        out = []
        if not self.is_closed:
            out.append("not closed: some triangle does not lie in exactly two tetrahedra")
        if not self.is_connected:
            out.append("not connected")
        if self.orientation is None:
            out.append(f"orientation: {self.orientation_failure}")
        if not self.link_check:
            out.extend(self.link_failures or ["link check failed"])
        if self.euler_characteristic != 0:
            out.append(f"Euler characteristic {self.euler_characteristic} != 0")
        return out


def _is_single_cycle(edges: list[tuple[int, int]]) -> bool:
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if len(adj) < 3 or len(edges) != len(adj):
        return False
    if any(len(n) != 2 for n in adj.values()):
        return False
    return _connected(adj)


def _connected(adj: dict) -> bool:
    if not adj:
        return True
    start = next(iter(adj))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(adj)


def _vertex_link_ok(triangles: list[tuple[int, int, int]]) -> bool:
    edge_count = defaultdict(int)
    adj = defaultdict(set)
    for tri in triangles:
        for e in combinations(tri, 2):
            edge_count[e] += 1
        for a, b in combinations(tri, 2):
            adj[a].add(b)
            adj[b].add(a)
    if any(n != 2 for n in edge_count.values()):
        return False
    if not _connected(adj):
        return False
    return len(adj) - len(edge_count) + len(triangles) == 2


def _dual_graph(tets):
    """Cofaces of every triangle, and tetrahedron adjacency with the sign
    relation a coherent orientation must satisfy across each shared triangle."""
    cofaces: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
    for ti, t in enumerate(tets):
        for pos in range(4):
            cofaces[t[:pos] + t[pos + 1:]].append((ti, pos))
    neighbours: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for pairs in cofaces.values():
        if len(pairs) == 2:
            (a, pa), (b, pb) = pairs
            # the two induced coefficients on the shared face must cancel
            rel = -((-1) ** (pa + pb))
            neighbours[a].append((b, rel))
            neighbours[b].append((a, rel))
    return cofaces, neighbours


def validate_closed_oriented(c: SimplicialComplex3) -> ValidationReport:
    """Run the closedness, connectivity, Euler characteristic, orientation and link checks."""
    tets = c.simplices(3)
    declared = c.declared_orientation
    V, E, F, T = c.counts()
    chi = V - E + F - T

    cofaces, neighbours = _dual_graph(tets)
    closed = all(len(v) == 2 for v in cofaces.values())

    adj = {i: [j for j, _ in neighbours[i]] for i in range(len(tets))}
    connected = _connected(adj) if tets else False

    orientable = True
    propagated: dict[int, int] = {}
    failure = None
    for seed in range(len(tets)):
        if seed in propagated:
            continue
        propagated[seed] = declared[seed]
        queue = deque([seed])
        while queue:
            a = queue.popleft()
            for b, rel in neighbours[a]:
                want = propagated[a] * rel
                if b not in propagated:
                    propagated[b] = want
                    queue.append(b)
                elif propagated[b] != want:
                    orientable = False
    if not tets:
        failure = "empty complex"
    elif not orientable:
        failure = "complex is not orientable"
    else:
        bad = [i for i in range(len(tets)) if propagated[i] != declared[i]]
        if bad:
            failure = (f"declared orientation of tetrahedron {list(tets[bad[0]])} disagrees with "
                       f"propagation from its neighbours ({len(bad)} tetrahedra affected)")
    orientation = None if failure else tuple(declared)

    link_failures = []
    by_vertex = defaultdict(list)
    by_edge = defaultdict(list)
    for t in tets:
        for v in t:
            by_vertex[v].append(tuple(x for x in t if x != v))
        for e in combinations(t, 2):
            by_edge[e].append(tuple(x for x in t if x not in e))
    for v in range(c.vertex_count):
        if not _vertex_link_ok(by_vertex.get(v, [])):
            link_failures.append(f"link of vertex {v} is not a 2-sphere")
    for e in c.simplices(1):
        if not _is_single_cycle(by_edge[e]):
            link_failures.append(f"link of edge {list(e)} is not a circle")

    return ValidationReport(
        is_closed=closed,
        is_connected=connected,
        euler_characteristic=chi,
        orientation=orientation,
        orientation_failure=failure,
        orientable=orientable,
        link_check=not link_failures,
        link_failures=link_failures,
    )


def coherent_orientation(c: SimplicialComplex3) -> tuple[int, ...] | None:
    """Some coherent orientation of a closed complex, ignoring the declared signs."""
    flat = SimplicialComplex3(c.vertex_count, c.simplices(3))
    report = validate_closed_oriented(flat)
    if not (report.orientable and report.is_closed and report.is_connected):
        return None
    _, neighbours = _dual_graph(flat.simplices(3))
    signs = {0: 1}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b, rel in neighbours[a]:
            if b not in signs:
                signs[b] = signs[a] * rel
                queue.append(b)
    return tuple(signs[i] for i in range(len(signs)))


def _as_matrix(rows, nrows: int, ncols: int, name: str) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise PresentationError(f"{name} must be {nrows}x{ncols}")
    return rows


@dataclass(frozen=True)
class ChainPresentation:
    """Integer chain complex C3 -> C2 -> C1 -> C0 of a closed oriented 3-manifold.

    ``boundary_k`` is stored as ``cells[k-1]`` rows by ``cells[k]`` columns.
    ``simplices`` is present only for presentations built from a
    triangulation and enables the Alexander-Whitney cup product; direct
    presentations supply ``cup_tensor`` entries ``(edge, triangle, tet, coeff)``
    instead.
    """

    cells: tuple[int, int, int, int]
    boundary_1: tuple[tuple[int, ...], ...]
    boundary_2: tuple[tuple[int, ...], ...]
    boundary_3: tuple[tuple[int, ...], ...]
    fundamental_cycle: tuple[int, ...]
    cup_tensor: tuple[tuple[int, int, int, int], ...] | None = None
    simplices: tuple | None = None
    name: str | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        n = tuple(int(x) for x in self.cells)
        if len(n) != 4 or any(x < 0 for x in n):
            raise PresentationError("cells must list four non-negative counts")
        object.__setattr__(self, "cells", n)
        for k in (1, 2, 3):
            attr = f"boundary_{k}"
            object.__setattr__(self, attr, _as_matrix(getattr(self, attr), n[k - 1], n[k], attr))
        cyc = tuple(int(x) for x in self.fundamental_cycle)
        if len(cyc) != n[3]:
            raise PresentationError(f"fundamental_cycle needs {n[3]} entries")
        object.__setattr__(self, "fundamental_cycle", cyc)
        if self.cup_tensor is not None:
            entries = tuple(tuple(int(x) for x in e) for e in self.cup_tensor)
            for e in entries:
                if len(e) != 4:
                    raise PresentationError(f"cup tensor entry {list(e)} needs 4 integers")
                if not (0 <= e[0] < n[1] and 0 <= e[1] < n[2] and 0 <= e[2] < n[3]):
                    raise PresentationError(f"cup tensor entry {list(e)} is out of range")
            object.__setattr__(self, "cup_tensor", entries)

    def boundary(self, k: int) -> list[list[int]]:
        """The matrix of d_k : C_k -> C_{k-1}; d_0 and d_4 are the empty maps."""
        if k in (1, 2, 3):
            return [list(r) for r in getattr(self, f"boundary_{k}")]
        if k == 0:
            return []
        if k == 4:
            return [[] for _ in range(self.cells[3])]
        raise ValueError(f"no boundary map in degree {k}")

    def boundary_shape(self, k: int) -> tuple[int, int]:
        n = self.cells
        if k == 0:
            return (0, n[0])
        if k == 4:
            return (n[3], 0)
        return (n[k - 1], n[k])

    def check(self) -> None:
        """Raise PresentationError unless d∘d = 0 and the fundamental cycle is a ±1 cycle."""
        n = self.cells
        for k in (1, 2):
            prod = matmul(self.boundary(k), self.boundary(k + 1), n[k + 1])
            if any(any(r) for r in prod):
                raise PresentationError(f"boundary_{k} * boundary_{k + 1} != 0")
        if any(x not in (1, -1) for x in self.fundamental_cycle):
            raise PresentationError("fundamental_cycle entries must be +1 or -1")
        d3 = matmul(self.boundary(3), [[x] for x in self.fundamental_cycle], 1)
        if any(r[0] for r in d3):
            raise PresentationError("fundamental_cycle is not a cycle")

    def to_json(self) -> dict:
        doc = {
            "cells": list(self.cells),
            "boundary_1": [list(r) for r in self.boundary_1],
            "boundary_2": [list(r) for r in self.boundary_2],
            "boundary_3": [list(r) for r in self.boundary_3],
            "fundamental_cycle": list(self.fundamental_cycle),
        }
        if self.cup_tensor is not None:
            doc["cup_tensor"] = [list(e) for e in self.cup_tensor]
        if self.name:
            doc["name"] = self.name
        return doc


def parse_presentation(text: str) -> ChainPresentation:
    """Read a direct chain presentation from its JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"presentation is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("presentation must be a JSON object")
    missing = [k for k in ("boundary_1", "boundary_2", "boundary_3", "fundamental_cycle")
               if k not in doc]
    if missing:
        raise ParseError(f"presentation lacks keys: {', '.join(missing)}")
    if "cells" in doc:
        cells = doc["cells"]
    else:
        b1, b2, b3 = doc["boundary_1"], doc["boundary_2"], doc["boundary_3"]
        cells = [len(b1), len(b2), len(b3), len(doc["fundamental_cycle"])]
    try:
        p = ChainPresentation(
            cells=tuple(cells),
            boundary_1=doc["boundary_1"],
            boundary_2=doc["boundary_2"],
            boundary_3=doc["boundary_3"],
            fundamental_cycle=doc["fundamental_cycle"],
            cup_tensor=doc.get("cup_tensor"),
            name=doc.get("name"),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    p.check()
    return p


def chain_presentation(c: SimplicialComplex3, orientation: Sequence[int],
                       name: str | None = None) -> ChainPresentation:
    """Simplicial chain complex of ``c`` with ``orientation`` as fundamental cycle."""
    idx = c.index
    faces = {k: c.simplices(k) for k in range(4)}
    mats = {}
    for k in (1, 2, 3):
        rows = [[0] * len(faces[k]) for _ in faces[k - 1]]
        for j, s in enumerate(faces[k]):
            for pos in range(k + 1):
                rows[idx[k - 1][s[:pos] + s[pos + 1:]]][j] = (-1) ** pos
        mats[k] = rows
    orientation = tuple(orientation)
    if len(orientation) != len(faces[3]) or any(s not in (1, -1) for s in orientation):
        raise PresentationError("orientation needs one sign per tetrahedron")
    p = ChainPresentation(
        cells=tuple(len(faces[k]) for k in range(4)),
        boundary_1=mats[1], boundary_2=mats[2], boundary_3=mats[3],
        fundamental_cycle=orientation,
        simplices=tuple(faces[k] for k in range(4)),
        name=name,
    )
    try:
        p.check()
    except PresentationError as exc:
        raise PresentationError(f"orientation inconsistent with the complex: {exc}") from None
    return p
