"""Exhaustive cross-validation sweeps between the two construction routes.

Every sweep compares independent computations: the divisor-basis route knows
only factorizations, the oracle route knows only multiplication tables. A
failure string means a contract was broken. Findings are observations a sweep
is asked to report (necessity counterexamples) without treating them as
errors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arithmetic import Factorization, factor_integer, factor_polynomial, monic_polys
from .compressed_graph import (
    ZERO_CLASS,
    expand_to_full_graph,
    gcd_class_representative,
    graph_from_factorization,
    signature,
    vertex_count,
)
from .finite_ring import (
    IntegersMod,
    PolyQuotient,
    _model,
    _scan,
    element_label,
    full_zero_divisor_graph,
    oracle_compressed_graph,
    zero_divisor_classes,
)
from .isomorphism import graphs_isomorphic


@dataclass(frozen=True)
class SweepOutcome:
    name: str
    checked: int
    failures: tuple[str, ...]
    findings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def _graph_as_maps(g):
    labels = [v.label for v in g.vertices]
    edges = {frozenset((labels[i], labels[j])) for i, j in g.edges}
    loops = {v.label for v in g.vertices if v.loop}
    return labels, edges, loops


def _compare_routes(fact: Factorization, spec, residue, failures, tag):
    """Check d -> residue(d) maps the basis graph onto the oracle graph."""
    for loops in (False, True):
        basis = graph_from_factorization(fact, loops=loops)
        oracle = oracle_compressed_graph(spec, loops=loops)
        mapped = {
            v.label: element_label(spec, residue(fact.divisor(v.exponents)))
            for v in basis.vertices
        }
        o_labels, o_edges, o_loops = _graph_as_maps(oracle)
        if len(set(mapped.values())) != len(mapped):
            failures.append(f"{tag}: residue map merges basis vertices (loops={loops})")
            return
        if sorted(mapped.values()) != sorted(o_labels):
            failures.append(f"{tag}: vertex sets differ under residue map (loops={loops})")
            return
        _, b_edges, b_loops = _graph_as_maps(basis)
        if {frozenset(mapped[l] for l in e) for e in b_edges} != o_edges:
            failures.append(f"{tag}: edge sets differ under residue map (loops={loops})")
            return
        if loops and {mapped[l] for l in b_loops} != o_loops:
            failures.append(f"{tag}: loop sets differ under residue map (loops={loops})")
            return
        if vertex_count(fact) != len(o_labels):
            failures.append(f"{tag}: vertex_count formula disagrees with oracle")
            return


def oracle_equivalence_sweep(max_n: int = 2000) -> SweepOutcome:
    """Basis route vs oracle route on Z/n for every n up to max_n."""
    failures: list[str] = []
    checked = 0
    for n in range(2, max_n + 1):
        _compare_routes(
            factor_integer(n), IntegersMod(n), lambda d, n=n: d % n, failures, f"Z/{n}"
        )
        checked += 1
        if len(failures) > 20:
            break
    return SweepOutcome("oracle_equivalence", checked, tuple(failures))


def polynomial_oracle_sweep(ps=(2, 3, 5), max_deg: int = 4) -> SweepOutcome:
    """Basis route vs oracle route on F_p[x]/(f) for every monic f."""
    failures: list[str] = []
    checked = 0
    for p in ps:
        for deg in range(2, max_deg + 1):
            for f in monic_polys(p, deg):
                spec = PolyQuotient(p, f)
                _compare_routes(
                    factor_polynomial(f, p),
                    spec,
                    lambda d, f=f: d % f,
                    failures,
                    f"F{p}[x]/({f})",
                )
                checked += 1
                if len(failures) > 20:
                    return SweepOutcome("polynomial_oracle", checked, tuple(failures))
    return SweepOutcome("polynomial_oracle", checked, tuple(failures))


def gcd_theorem_sweep(max_n: int = 500) -> SweepOutcome:
    """Every a shares its annihilator with the element built from its
    clipped exponent vector."""
    failures: list[str] = []
    checked = 0
    for n in range(2, max_n + 1):
        fact = factor_integer(n)
        ids = _scan(IntegersMod(n)).class_ids
        for a in range(n):
            rep = gcd_class_representative(a, fact)
            recon = 0 if rep is ZERO_CLASS else fact.divisor(rep) % n
            checked += 1
            if ids[a] != ids[recon]:
                failures.append(f"Z/{n}: a={a} lands in a different class than {recon}")
                if len(failures) > 20:
                    return SweepOutcome("gcd_theorem", checked, tuple(failures))
    return SweepOutcome("gcd_theorem", checked, tuple(failures))


def _blowup_object_check(spec, failures, tag):
    compressed = oracle_compressed_graph(spec, loops=True)
    if not compressed.vertices:
        return
    expanded = expand_to_full_graph(compressed)
    full = full_zero_divisor_graph(spec)
    rename = {}
    for cls in zero_divisor_classes(spec):
        label = element_label(spec, cls.representative)
        for t, m in enumerate(cls.members, 1):
            rename[f"{label}#{t}"] = element_label(spec, m)
    got_vertices = sorted(rename[l] for l in expanded.labels)
    if got_vertices != sorted(full.labels):
        failures.append(f"{tag}: expansion vertex set differs from full graph")
        return
    got_edges = {
        frozenset((rename[expanded.labels[i]], rename[expanded.labels[j]]))
        for i, j in expanded.edges
    }
    want_edges = {frozenset((full.labels[i], full.labels[j])) for i, j in full.edges}
    if got_edges != want_edges:
        failures.append(f"{tag}: expansion edge set differs from full graph")


def _blowup_matrix_check(spec, failures, tag):
    scan = _scan(spec)
    model = _model(spec)
    if not scan.zd_gids:
        return
    gid_to_row = {gid: i for i, gid in enumerate(scan.zd_gids)}
    reps = np.array([scan.groups[gid].first for gid in scan.zd_gids], dtype=np.int64)
    adj = model.mul_rows(reps)[:, reps] == 0
    zds = np.flatnonzero(np.isin(scan.class_ids, list(scan.zd_gids)))
    rows_of = np.full(model.size, -1, dtype=np.int64)
    for gid, row in gid_to_row.items():
        rows_of[np.array(scan.groups[gid].members, dtype=np.int64)] = row
    cid = rows_of[zds]
    block = max(1, model.row_block)
    for start in range(0, len(zds), block):
        chunk = zds[start : start + block]
        actual = model.mul_rows(chunk)[:, zds] == 0
        predicted = adj[rows_of[chunk][:, None], cid[None, :]]
        if not np.array_equal(actual, predicted):
            failures.append(f"{tag}: class adjacency fails to predict element products")
            return


def blowup_sweep(max_n: int = 2000, object_level_max: int = 300, extra_specs=()) -> SweepOutcome:
    """Compressed-graph blow-up reproduces the full zero-divisor graph.

    Rings up to object_level_max (and every extra spec) are checked through
    the public expand_to_full_graph path; the rest are checked as adjacency
    matrices, which is the same identity without graph packaging.
    """
    failures: list[str] = []
    checked = 0
    for n in range(2, max_n + 1):
        spec = IntegersMod(n)
        if n <= object_level_max:
            _blowup_object_check(spec, failures, f"Z/{n}")
        _blowup_matrix_check(spec, failures, f"Z/{n}")
        checked += 1
        if len(failures) > 20:
            return SweepOutcome("blowup", checked, tuple(failures))
    for spec in extra_specs:
        tag = repr(spec)
        _blowup_object_check(spec, failures, tag)
        _blowup_matrix_check(spec, failures, tag)
        checked += 1
    return SweepOutcome("blowup", checked, tuple(failures))


def nz_lemma_sweep(specs) -> SweepOutcome:
    """Multiplying by a regular element never moves anything across classes."""
    failures: list[str] = []
    checked = 0
    for spec in specs:
        scan = _scan(spec)
        model = _model(spec)
        ids = scan.class_ids
        units = np.concatenate(
            [
                np.array(g.members, dtype=np.int64)
                for g in scan.groups
                if g.ann_count == 1
            ]
            or [np.array([], dtype=np.int64)]
        )
        block = max(1, model.row_block)
        ok = True
        for start in range(0, len(units), block):
            chunk = units[start : start + block]
            rows = model.mul_rows(chunk)
            if not np.array_equal(ids[rows], np.broadcast_to(ids, rows.shape)):
                failures.append(f"{spec!r}: a regular multiple changed class")
                ok = False
                break
        if ok:
            checked += len(units) * model.size
    return SweepOutcome("nz_lemma", checked, tuple(failures))


def signature_sufficiency_sweep(max_n: int = 300) -> SweepOutcome:
    """Equal signatures force isomorphic compressed graphs, looped or not."""
    failures: list[str] = []
    checked = 0
    by_sig: dict[tuple, list[int]] = {}
    for n in range(2, max_n + 1):
        by_sig.setdefault(signature(factor_integer(n)), []).append(n)
    for sig, ns in sorted(by_sig.items()):
        base_l = graph_from_factorization(factor_integer(ns[0]), loops=True)
        base_u = graph_from_factorization(factor_integer(ns[0]), loops=False)
        for n in ns[1:]:
            g_l = graph_from_factorization(factor_integer(n), loops=True)
            g_u = graph_from_factorization(factor_integer(n), loops=False)
            checked += 1
            if not graphs_isomorphic(base_l, g_l).isomorphic:
                failures.append(f"signature {sig}: Z/{ns[0]} vs Z/{n} looped graphs differ")
            if not graphs_isomorphic(base_u, g_u, respect_loops=False).isomorphic:
                failures.append(f"signature {sig}: Z/{ns[0]} vs Z/{n} unlooped graphs differ")
            if len(failures) > 20:
                return SweepOutcome("signature_sufficiency", checked, tuple(failures))
    return SweepOutcome("signature_sufficiency", checked, tuple(failures))


def looped_necessity_sweep(max_n: int = 300) -> SweepOutcome:
    """Scan for looped-isomorphic pairs with different signatures.

    Any hit is reported as a finding, not a failure: this direction is a
    belief to probe, not a theorem to enforce.
    """
    findings: list[str] = []
    checked = 0
    graphs = {}
    sigs = {}
    for n in range(2, max_n + 1):
        fact = factor_integer(n)
        sigs[n] = signature(fact)
        graphs[n] = graph_from_factorization(fact, loops=True)
    ns = sorted(graphs)
    for i, n1 in enumerate(ns):
        g1 = graphs[n1]
        key1 = (len(g1.vertices), g1.loop_count, g1.degree_multiset())
        for n2 in ns[i + 1 :]:
            if sigs[n1] == sigs[n2]:
                continue
            g2 = graphs[n2]
            if key1 != (len(g2.vertices), g2.loop_count, g2.degree_multiset()):
                continue
            checked += 1
            if graphs_isomorphic(g1, g2).isomorphic:
                findings.append(
                    f"Z/{n1} (signature {sigs[n1]}) and Z/{n2} (signature {sigs[n2]}) "
                    "have isomorphic looped graphs"
                )
    return SweepOutcome("looped_necessity", checked, (), tuple(findings))
