"""Cospectral surveys, exhaustive DS checks and the multiplicity-of-(-1) scans."""

from __future__ import annotations

import hashlib
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .canon import CanonicalForm, canonical_form
from .errors import CapacityError, ClassificationError, GraphArgumentError
from .generate import generate_by_edges, generate_graphs
from .graph import (Graph, complement, complete, complete_bipartite, disjoint_union,
                    kn_minus)
from .graph6 import to_graph6
from .invariants import _codegree_traces, profile
from .spectra import CharPoly, GeneralizedSpectralKey, char_poly, generalized_key, multiplicity_by_rank

DS_MAX_N = 9
MODES = ("plain", "generalized")

__all__ = [
    "CospectralClass", "SurveyReport", "generate_graphs", "generate_by_edges",
    "survey_kn_minus", "first_non_ds_order", "ds_verify", "multiplicity_survey", "expected_multiplicity_forms",
]


def spectral_key(g: Graph, mode: str) -> CharPoly | GeneralizedSpectralKey:
    if mode == "plain":
        return char_poly(g)
    if mode == "generalized":
        return generalized_key(g)
    raise GraphArgumentError(f"mode must be one of {MODES}, got {mode!r}")


def key_text(key: CharPoly | GeneralizedSpectralKey) -> str:
    return key.text()


def key_hash(key: CharPoly | GeneralizedSpectralKey) -> str:
    return hashlib.sha1(key.text().encode()).hexdigest()[:12]


@dataclass(frozen=True)
class CospectralClass:
    key: CharPoly | GeneralizedSpectralKey
    members: tuple[Graph, ...]  # pairwise non-isomorphic, sorted by canonical form

    @property
    def size(self) -> int:
        return len(self.members)

    def csv_row(self) -> str:
        return f"{key_hash(self.key)},{self.size},{' '.join(to_graph6(g) for g in self.members)}"


@dataclass
class SurveyReport:
    n: int
    m: int
    mode: str
    classes: list[CospectralClass]
    patterns: list[Graph] = field(default_factory=list)  # H for each survey graph, same order
    skipped: int = 0

    @property
    def total(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def nontrivial(self) -> list[CospectralClass]:
        return [c for c in self.classes if c.size >= 2]

    @property
    def singletons(self) -> int:
        return sum(1 for c in self.classes if c.size == 1)

    def summary(self) -> str:
        lines = [
            f"K_{self.n} minus {self.m} edges ({self.mode} spectrum)",
            f"patterns: {self.total + self.skipped} ({self.skipped} skipped: more than {self.n} vertices)",
            f"graphs: {self.total}, singleton classes: {self.singletons}, "
            f"nontrivial classes: {len(self.nontrivial)}",
        ]
        for cls in self.nontrivial:
            lines.append(f"class {key_hash(cls.key)} [{key_text(cls.key)}]")
            for g in cls.members:
                lines.append(f"  {to_graph6(g)}  removed: {sorted(complement(g).edges())}")
        return "\n".join(lines)

    def csv(self) -> str:
        rows = ["key_hash,size,members"]
        rows.extend(c.csv_row() for c in self.classes)
        return "\n".join(rows)

    def write_class_files(self, directory: str | os.PathLike) -> list[Path]:
        """One graph6 list file per nontrivial class."""
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for cls in self.nontrivial:
            p = out / f"n{self.n}_m{self.m}_{self.mode}_{key_hash(cls.key)}.g6"
            p.write_text(f"# key {key_text(cls.key)}\n" + "".join(to_graph6(g) + "\n" for g in cls.members))
            written.append(p)
        return written


def _parallel_map(func: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))


def _group(graphs: Sequence[Graph], mode: str, jobs: int = 1) -> list[CospectralClass]:
    """Two-stage grouping: invariant profile first, exact key inside each bucket."""
    profiles = _parallel_map(profile, graphs, jobs)
    buckets: dict = defaultdict(list)
    for g, prof in zip(graphs, profiles):
        buckets[prof].append(g)
    classes = []
    for members in buckets.values():
        by_key: dict = defaultdict(list)
        for g in members:
            by_key[spectral_key(g, mode)].append(g)
        for key, gs in by_key.items():
            ranked = sorted(gs, key=canonical_form)
            classes.append(CospectralClass(key, tuple(ranked)))
    classes.sort(key=lambda c: canonical_form(c.members[0]))
    return classes


def survey_kn_minus(n: int, m: int, mode: str = "plain", jobs: int = 1) -> SurveyReport:
    """Group K_n minus H, over every H with m edges and no isolated vertices, by spectrum."""
    if mode not in MODES:
        raise GraphArgumentError(f"mode must be one of {MODES}, got {mode!r}")
    patterns = [h for h in generate_by_edges(m)]
    fitting = [h for h in patterns if h.n <= n]
    graphs = [kn_minus(n, h) for h in fitting]
    classes = _group(graphs, mode, jobs)
    return SurveyReport(n=n, m=m, mode=mode, classes=classes, patterns=fitting,
                        skipped=len(patterns) - len(fitting))


def first_non_ds_order(m: int, n_max: int, mode: str = "plain") -> int | None:
    """Smallest n <= n_max at which some K_n minus (m edges) has a cospectral mate
    of the same kind.  Only mates that are themselves K_n minus m edges are seen."""
    for n in range(2, n_max + 1):
        if survey_kn_minus(n, m, mode).nontrivial:
            return n
    return None


# -- exhaustive DS checks ---------------------------------------------------------


def _mates_in_partition(args) -> list[Graph]:
    g, mode, partition = args
    key = spectral_key(g, mode)
    tr = _codegree_traces(g)
    co_tr = _codegree_traces(complement(g)) if mode == "generalized" else None
    own = canonical_form(g)
    mates = []
    for h in generate_graphs(g.n, edges=g.edge_count, partition=partition):
        if _codegree_traces(h) != tr:
            continue
        if co_tr is not None and _codegree_traces(complement(h)) != co_tr:
            continue
        if spectral_key(h, mode) != key:
            continue
        if canonical_form(h) != own:
            mates.append(h)
    return mates


def ds_verify(g: Graph, mode: str = "plain", jobs: int = 1) -> list[Graph]:
    """Every graph of the same order, not isomorphic to ``g``, with the same key.

    An empty result means ``g`` is determined by its spectrum (or by its
    generalized spectrum in ``generalized`` mode) among graphs of its order.
    Cospectral graphs share the edge count, so only that slice is searched.
    """
    if mode not in MODES:
        raise GraphArgumentError(f"mode must be one of {MODES}, got {mode!r}")
    if g.n > DS_MAX_N:
        raise CapacityError(f"exhaustive DS search limited to {DS_MAX_N} vertices")
    jobs = max(1, jobs)
    parts = [(g, mode, (i, jobs) if jobs > 1 else None) for i in range(jobs)]
    found = [h for chunk in _parallel_map(_mates_in_partition, parts, jobs) for h in chunk]
    return sorted(found, key=canonical_form)


# -- multiplicity of -1 ----------------------------------------------------------------


def _compositions(total: int, parts: int, smallest: int = 1) -> Iterable[tuple[int, ...]]:
    """Non-increasing tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 1:
        if total >= smallest:
            yield (total,)
        return
    for first in range(smallest, total // parts + 1):
        for rest in _compositions(total - first, parts - 1, first):
            yield rest + (first,)


def expected_multiplicity_forms(n: int, deficiency: int) -> list[Graph]:
    """Graphs on n vertices whose eigenvalue -1 has multiplicity n - deficiency."""
    if deficiency == 1:
        return [complete(n)]
    if deficiency == 2:
        return [disjoint_union(*(complete(p) for p in parts)) for parts in _compositions(n, 2)]
    if deficiency == 3:
        forms = [disjoint_union(*(complete(p) for p in parts)) for parts in _compositions(n, 3)]
        for left in range(1, n):
            for right in range(left, n - left):
                forms.append(kn_minus(n, complete_bipartite(left, right)))
        return forms
    raise GraphArgumentError(f"deficiency must be 1, 2 or 3, got {deficiency}")


def _multiplicity_partition(args) -> list[Graph]:
    n, target, partition = args
    return [g for g in generate_graphs(n, partition=partition)
            if multiplicity_by_rank(g, -1) == target]


def multiplicity_survey(n: int, deficiency: int, jobs: int = 1) -> list[Graph]:
    """All graphs on n vertices with eigenvalue -1 of multiplicity n - deficiency.

    Raises :class:`ClassificationError` if the result differs from the known
    classification (K_n; two cliques; K_n minus K_{l,m} or three cliques).
    """
    if n > DS_MAX_N:
        raise CapacityError(f"multiplicity survey limited to {DS_MAX_N} vertices")
    if deficiency not in (1, 2, 3):
        raise GraphArgumentError(f"deficiency must be 1, 2 or 3, got {deficiency}")
    if n < deficiency:
        return []
    jobs = max(1, jobs)
    parts = [(n, n - deficiency, (i, jobs) if jobs > 1 else None) for i in range(jobs)]
    found = [g for chunk in _parallel_map(_multiplicity_partition, parts, jobs) for g in chunk]
    found.sort(key=canonical_form)
    expected: set[CanonicalForm] = {canonical_form(g) for g in expected_multiplicity_forms(n, deficiency)}
    got = [canonical_form(g) for g in found]
    if set(got) != expected or len(got) != len(set(got)):
        raise ClassificationError(
            f"n={n}, deficiency={deficiency}: found {len(got)} graphs, expected {len(expected)}")
    return found
