"""Compressed zero-divisor graphs built combinatorially from a factorization.

Given n = prod(p_i ** s_i) in a UFD, the nonzero zero-divisor classes of
D/(n) correspond one-to-one with the proper divisors of n up to associates,
i.e. with exponent vectors strictly between all-zeros and s.  Two classes
are adjacent exactly when the divisors multiply into (n): v + w >= s
componentwise.  A class squares to zero exactly when 2v >= s componentwise;
with loops=True such classes carry a self-loop.

Everything here is pure combinatorics on exponent vectors; the brute-force
ring oracle in finite_ring computes the same graphs with no reference to
factorizations, and the two routes are compared in the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product as _cartesian

from .arithmetic import (
    Factorization,
    FpPoly,
    format_poly_compact,
    gcd_exponents,
    multiplicity_vector,
)

__all__ = [
    "Vertex",
    "CompressedGraph",
    "Graph",
    "ZERO_CLASS",
    "ZeroDivisorBasis",
    "zero_divisor_basis",
    "graph_from_factorization",
    "graph_from_exponents",
    "gcd_class_representative",
    "signature",
    "vertex_count",
    "expand_to_full_graph",
    "to_json",
    "from_json",
    "to_dot",
]


class _ZeroClassMarker:
    """Sentinel for the class of 0 (elements of the ideal itself)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_CLASS"


ZERO_CLASS = _ZeroClassMarker()


@dataclass(frozen=True)
class Vertex:
    """One annihilator class: a distinct label, plus optional metadata.

    exponents is set on the factorization path, size on the oracle path;
    either may be None when unknown.
    """

    label: str
    exponents: tuple[int, ...] | None = None
    size: int | None = None
    loop: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("vertex label must be a nonempty string")
        if self.exponents is not None:
            object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if self.size is not None and self.size < 1:
            raise ValueError(f"class size must be >= 1, got {self.size}")


@dataclass(frozen=True)
class CompressedGraph:
    """Vertices sorted by label, edges as index pairs i < j, loops on vertices.

    Construction canonicalizes: vertices are sorted by label and edges are
    renumbered, deduplicated and sorted, so equal graphs compare equal.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...] = ()
    loops_admitted: bool = False

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        labels = [v.label for v in verts]
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be pairwise distinct")
        order = sorted(range(len(verts)), key=lambda i: labels[i])
        rank = {old: new for new, old in enumerate(order)}
        remapped = set()
        for i, j in self.edges:
            if not (0 <= i < len(verts) and 0 <= j < len(verts)):
                raise ValueError(f"edge ({i},{j}) out of range")
            if i == j:
                raise ValueError("self-edges are not stored as edges; use the vertex loop flag")
            a, b = rank[i], rank[j]
            remapped.add((a, b) if a < b else (b, a))
        if not self.loops_admitted and any(v.loop for v in verts):
            raise ValueError("loop flags set on a graph built without loops")
        object.__setattr__(self, "vertices", tuple(verts[i] for i in order))
        object.__setattr__(self, "edges", tuple(sorted(remapped)))

    @property
    def loop_count(self) -> int:
        return sum(1 for v in self.vertices if v.loop)

    def degree_multiset(self) -> tuple[int, ...]:
        deg = [0] * len(self.vertices)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(sorted(deg))


@dataclass(frozen=True)
class Graph:
    """A plain simple graph (full zero-divisor graphs, blow-ups).

    Same canonical form as CompressedGraph: labels sorted, edges i < j.
    """

    labels: tuple[str, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("vertex labels must be pairwise distinct")
        order = sorted(range(len(labels)), key=lambda i: labels[i])
        rank = {old: new for new, old in enumerate(order)}
        remapped = set()
        for i, j in self.edges:
            if not (0 <= i < len(labels) and 0 <= j < len(labels)):
                raise ValueError(f"edge ({i},{j}) out of range")
            if i == j:
                raise ValueError("simple graph admits no loops")
            a, b = rank[i], rank[j]
            remapped.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "labels", tuple(labels[i] for i in order))
        object.__setattr__(self, "edges", tuple(sorted(remapped)))

    def as_compressed(self) -> CompressedGraph:
        """View as a loop-free CompressedGraph (for the isomorphism search)."""
        return CompressedGraph(tuple(Vertex(s) for s in self.labels), self.edges, False)

    def to_json(self) -> str:
        payload = {"vertices": list(self.labels), "edges": [list(e) for e in self.edges]}
        return json.dumps(payload, indent=2) + "\n"

    def to_dot(self) -> str:
        lines = ["graph zero_divisor_graph {"]
        for i, s in enumerate(self.labels):
            lines.append(f'  n{i} [label="{_dot_escape(s)}"];')
        for i, j in self.edges:
            lines.append(f"  n{i} -- n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# --- the zero-divisor basis -------------------------------------------------


@dataclass(frozen=True)
class ZeroDivisorBasis:
    """Exponent vectors of the nontrivial divisors of n, one per associate class."""

    factorization: Factorization
    vectors: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        s = self.factorization.exponents()
        if not s:
            raise ValueError("n must be neither zero nor a unit")
        vecs = []
        for v in _cartesian(*(range(e + 1) for e in s)):
            if any(v) and v != s:
                vecs.append(v)
        object.__setattr__(self, "vectors", tuple(vecs))

    def __len__(self) -> int:
        return len(self.vectors)

    def divisors(self) -> tuple:
        """The canonical divisor elements, aligned with vectors."""
        return tuple(self.factorization.divisor(v) for v in self.vectors)


def zero_divisor_basis(fact: Factorization) -> ZeroDivisorBasis:
    """All exponent vectors strictly between (0,...,0) and s."""
    return ZeroDivisorBasis(fact)


def _element_label(x) -> str:
    if isinstance(x, FpPoly):
        return format_poly_compact(x)
    return str(x)


def graph_from_exponents(s: tuple[int, ...], loops: bool) -> CompressedGraph:
    """Compressed graph of any element with irreducible exponents s.

    By the sufficiency theorem the graph depends only on s, not on which
    irreducibles occur or in which UFD.  Vertex labels are the exponent
    vectors rendered as comma-joined integers.
    """
    s = tuple(int(e) for e in s)
    if not s or any(e < 1 for e in s):
        raise ValueError(f"exponents must be a nonempty tuple of positive integers, got {s}")
    vecs = [v for v in _cartesian(*(range(e + 1) for e in s)) if any(v) and v != s]
    verts = []
    for v in vecs:
        loop = loops and all(2 * v[i] >= s[i] for i in range(len(s)))
        verts.append(Vertex(",".join(str(e) for e in v), exponents=v, loop=loop))
    edges = []
    for a, b in combinations(range(len(vecs)), 2):
        va, vb = vecs[a], vecs[b]
        if all(va[i] + vb[i] >= s[i] for i in range(len(s))):
            edges.append((a, b))
    return CompressedGraph(tuple(verts), tuple(edges), loops)


def graph_from_factorization(fact: Factorization, loops: bool) -> CompressedGraph:
    """Gamma_C of D/(n) from the factorization of n.

    Vertices are the basis divisors (labels are the divisor elements);
    edge between v, w iff v + w >= s componentwise; loop at v iff 2v >= s.
    """
    basis = zero_divisor_basis(fact)
    s = fact.exponents()
    verts = []
    for vec, d in zip(basis.vectors, basis.divisors()):
        loop = loops and all(2 * vec[i] >= s[i] for i in range(len(s)))
        verts.append(Vertex(_element_label(d), exponents=vec, loop=loop))
    edges = []
    for a, b in combinations(range(len(basis.vectors)), 2):
        va, vb = basis.vectors[a], basis.vectors[b]
        if all(va[i] + vb[i] >= s[i] for i in range(len(s))):
            edges.append((a, b))
    return CompressedGraph(tuple(verts), tuple(edges), loops)


def gcd_class_representative(a, fact: Factorization):
    """The basis vector whose class contains the image of a, or a marker.

    Returns ZERO_CLASS when a is 0 or a multiple of n; the all-zeros vector
    when a is coprime to n (the class of units); otherwise the exponent
    vector min(k_i, s_i) of gcd(a, n), which lies in the basis.
    """
    zero = a == 0 if not isinstance(a, FpPoly) else a.is_zero
    if zero:
        return ZERO_CLASS
    k, _ = multiplicity_vector(a, fact)
    clipped = gcd_exponents(k, fact.exponents())
    if clipped == fact.exponents():
        return ZERO_CLASS
    return clipped


def signature(fact: Factorization) -> tuple[int, ...]:
    """The exponent multiset, sorted non-increasing; the isomorphism invariant."""
    return tuple(sorted(fact.exponents(), reverse=True))


def vertex_count(fact: Factorization) -> int:
    """prod(s_i + 1) - 2: the number of vertices of the compressed graph."""
    s = fact.exponents()
    if not s:
        raise ValueError("n must be neither zero nor a unit")
    out = 1
    for e in s:
        out *= e + 1
    return out - 2


def expand_to_full_graph(g: CompressedGraph) -> Graph:
    """Blow Gamma_C back up to Gamma: cliques for looped classes,
    independent sets for unlooped ones, complete joins across edges.

    Needs class sizes on every vertex and a loop-admitting build, since an
    unlooped graph cannot distinguish cliques from independent sets.
    Expanded vertices are labeled "<class label>#<t>" for t = 1..size.
    """
    if not g.loops_admitted:
        raise ValueError("expansion needs a loop-admitting graph")
    if any(v.size is None for v in g.vertices):
        raise ValueError("expansion needs a class size on every vertex")
    labels = []
    groups = []
    for v in g.vertices:
        idx = []
        for t in range(1, v.size + 1):
            idx.append(len(labels))
            labels.append(f"{v.label}#{t}")
        groups.append(idx)
    edges = []
    for vi, v in enumerate(g.vertices):
        if v.loop:
            edges.extend(combinations(groups[vi], 2))
    for i, j in g.edges:
        for a in groups[i]:
            for b in groups[j]:
                edges.append((a, b))
    return Graph(tuple(labels), tuple(edges))


# --- serialization ----------------------------------------------------------


def to_json(g: CompressedGraph) -> str:
    """Canonical JSON: vertices sorted by label, edges as [i, j] with i < j."""
    payload = {
        "vertices": [
            {
                "label": v.label,
                "exponents": list(v.exponents) if v.exponents is not None else None,
                "size": v.size,
                "loop": v.loop,
            }
            for v in g.vertices
        ],
        "edges": [list(e) for e in g.edges],
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> CompressedGraph:
    """Inverse of to_json; loop admission is inferred from the loop flags."""
    payload = json.loads(text)
    if not isinstance(payload, dict) or set(payload) != {"vertices", "edges"}:
        raise ValueError("expected an object with 'vertices' and 'edges'")
    verts = []
    for item in payload["vertices"]:
        if set(item) != {"label", "exponents", "size", "loop"}:
            raise ValueError(f"malformed vertex entry {item!r}")
        exps = item["exponents"]
        verts.append(
            Vertex(
                item["label"],
                exponents=tuple(exps) if exps is not None else None,
                size=item["size"],
                loop=bool(item["loop"]),
            )
        )
    edges = tuple((int(i), int(j)) for i, j in payload["edges"])
    return CompressedGraph(tuple(verts), edges, any(v.loop for v in verts))


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(g: CompressedGraph) -> str:
    """DOT text; loops render as self-edges, metadata as node attributes."""
    lines = ["graph compressed_zero_divisor_graph {"]
    for i, v in enumerate(g.vertices):
        attrs = [f'label="{_dot_escape(v.label)}"']
        if v.exponents is not None:
            attrs.append('exponents="' + ",".join(str(e) for e in v.exponents) + '"')
        if v.size is not None:
            attrs.append(f'size="{v.size}"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j in g.edges:
        lines.append(f"  n{i} -- n{j};")
    for i, v in enumerate(g.vertices):
        if v.loop:
            lines.append(f"  n{i} -- n{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
