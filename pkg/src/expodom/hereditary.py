"""Hereditary equality classes, minimal obstructions, exhaustive sweeps.

A graph belongs to the EXPONENTIAL class when every induced subgraph H has
gamma_e(H) = gamma(H), and to the POROUS class when every induced subgraph
has gamma_e_star(H) = gamma(H).  Component additivity of all three
parameters means only connected induced subgraphs need checking, and the
membership recursion "g is in the class iff equality holds for g and g-v is
in the class for every v" memoizes on canonical codes so sweeps share work
across the whole enumeration.

The recursion actually computes, per canonical class, the minimum order of
a connected induced violator (or None), which yields minimum-order
witnesses for free.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Optional

from . import __version__
from .cache import ResultsCache
from .domination import parameter_values
from .enumeration import GraphStream, connected_graphs, trees
from .graphs import (
    Graph,
    SizeCapError,
    canonical_code,
    canonical_graph,
    connected_components,
    decode_graph6,
    encode_graph6,
    induced_subgraph,
    is_connected,
    without_vertex,
)
from . import patterns
from .patterns import (
    OBSTRUCTION_NAMES,
    RESTRICTION_NAMES,
    TRIANGLE_RESTRICTION_NAMES,
)

#: in_class works by exhausting connected induced subgraph classes; past
#: this order the recursion footprint stops being desk-scale.
MEMBERSHIP_ORDER_CAP = 12

DEFAULT_MAX_N = {
    "theorem1": 9,
    "corollary1": 9,
    "corollary2": 12,
    "conjecture3": 8,
}

TREE_OBSTRUCTION_NAMES: tuple[str, ...] = ("P7", "F1")


class ClassKind(Enum):
    """Which parameter must match gamma on every induced subgraph."""

    EXPONENTIAL = "gamma_e"
    POROUS = "gamma_e_star"


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    witness: Optional[str]  # canonical graph6 of a minimum-order violator


@dataclass
class VerificationReport:
    sweep: str
    max_n: int
    stream: str
    restriction: tuple[str, ...]
    kind: str
    counts: dict[int, int]
    counterexamples: list[str]
    extras: dict = field(default_factory=dict)
    elapsed_seconds: float = 0.0
    config_hash: str = ""

    @property
    def verified(self) -> bool:
        return not self.counterexamples

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "sweep": self.sweep,
            "max_n": self.max_n,
            "stream": self.stream,
            "restriction": list(self.restriction),
            "kind": self.kind,
            "counts": {str(n): c for n, c in sorted(self.counts.items())},
            "counterexamples": list(self.counterexamples),
            "verified": self.verified,
            "config_hash": self.config_hash,
        }
        for key, value in self.extras.items():
            out[key] = value
        if include_timing:
            out["elapsed_seconds"] = self.elapsed_seconds
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2,
                          sort_keys=True)


def _config_hash(**config) -> str:
    payload = {"package": "expodom", "version": __version__}
    payload.update(config)
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("ascii")).hexdigest()[:16]


# ----------------------------------------------------------------------
# Parameter store
# ----------------------------------------------------------------------

class ParamStore:
    """Process memo of (gamma, gamma_e, gamma_e_star) per canonical code.

    Optionally backed by an append-only results cache file; the memo of the
    membership recursion lives here too so sweeps sharing a store share all
    derived work.
    """

    def __init__(self, results_cache: Optional[ResultsCache] = None):
        self.results_cache = results_cache
        self._params: dict[bytes, tuple[int, int, int]] = {}
        self._violators: dict[bytes, tuple] = {}
        self.obstructions_checked = False
        if results_cache is not None:
            from .cache import records

            for rec in records(results_cache):
                vals = (rec.gamma, rec.gamma_e, rec.gamma_e_star)
                self._params[rec.graph6.encode("ascii")] = vals

    def known(self, code: bytes) -> bool:
        return code in self._params

    def params_for_code(self, code: bytes,
                        g: Optional[Graph] = None) -> tuple[int, int, int]:
        got = self._params.get(code)
        if got is not None:
            return got
        if g is None:
            g = decode_graph6(code.decode("ascii"))
        vals = parameter_values(g)
        self.store(code, vals)
        return vals

    def params(self, g: Graph) -> tuple[int, int, int]:
        """Values for a connected graph (any labeling)."""
        return self.params_for_code(canonical_code(g), g)

    def store(self, code: bytes, vals: tuple[int, int, int]) -> None:
        self._params[code] = vals
        gamma, gamma_e, gamma_e_star = vals
        chain_ok = gamma_e_star <= gamma_e <= gamma
        if self.results_cache is not None and chain_ok:
            self.results_cache.put(code.decode("ascii"), vals)


_DEFAULT_STORE = ParamStore()


def default_store() -> ParamStore:
    return _DEFAULT_STORE


# ----------------------------------------------------------------------
# Membership
# ----------------------------------------------------------------------

def equality_holds(g: Graph, store: Optional[ParamStore] = None) -> bool:
    """gamma(g) == gamma_e(g), computed per component and summed."""
    store = store or _DEFAULT_STORE
    gamma = gamma_e = 0
    for comp in connected_components(g):
        a, b, _ = store.params(induced_subgraph(g, comp))
        gamma += a
        gamma_e += b
    return gamma == gamma_e


def _merge(a, b):
    # each is None or (order, code); smaller order wins, code breaks ties
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _min_violators(g: Graph, store: ParamStore) -> tuple:
    """((order, code) or None) per kind: minimum-order connected violators."""
    if g.n == 0:
        return (None, None)
    comps = connected_components(g)
    if len(comps) > 1:
        best_e = best_p = None
        for comp in comps:
            r_e, r_p = _min_violators(induced_subgraph(g, comp), store)
            best_e = _merge(best_e, r_e)
            best_p = _merge(best_p, r_p)
        return (best_e, best_p)
    code = canonical_code(g)
    got = store._violators.get(code)
    if got is not None:
        return got
    gamma, gamma_e, gamma_e_star = store.params_for_code(code, g)
    best_e = best_p = None
    for v in range(g.n):
        r_e, r_p = _min_violators(without_vertex(g, v), store)
        best_e = _merge(best_e, r_e)
        best_p = _merge(best_p, r_p)
    if best_e is None and gamma_e != gamma:
        best_e = (g.n, code)
    if best_p is None and gamma_e_star != gamma:
        best_p = (g.n, code)
    result = (best_e, best_p)
    store._violators[code] = result
    return result


def _violator_for_kind(g: Graph, kind: ClassKind, store: ParamStore):
    pair = _min_violators(g, store)
    return pair[0] if kind is ClassKind.EXPONENTIAL else pair[1]


def in_class(g: Graph, kind: ClassKind = ClassKind.EXPONENTIAL,
             store: Optional[ParamStore] = None) -> MembershipResult:
    """Hereditary-equality membership with a minimum-order witness."""
    if g.n > MEMBERSHIP_ORDER_CAP:
        raise SizeCapError(
            f"membership capped at order {MEMBERSHIP_ORDER_CAP}")
    store = store or _DEFAULT_STORE
    hit = _violator_for_kind(g, kind, store)
    if hit is None:
        return MembershipResult(True, None)
    return MembershipResult(False, hit[1].decode("ascii"))


def is_minimal_forbidden(g: Graph, kind: ClassKind = ClassKind.EXPONENTIAL,
                         store: Optional[ParamStore] = None) -> bool:
    """g violates equality but every proper induced subgraph is clean.

    Disconnected graphs are never minimal: a violating component is a
    proper induced violator, and without one the sums stay equal.
    """
    if g.n > MEMBERSHIP_ORDER_CAP:
        raise SizeCapError(
            f"membership capped at order {MEMBERSHIP_ORDER_CAP}")
    if not is_connected(g) or g.n == 0:
        return False
    store = store or _DEFAULT_STORE
    hit = _violator_for_kind(g, kind, store)
    return hit is not None and hit[0] == g.n


# ----------------------------------------------------------------------
# Sweeps
# ----------------------------------------------------------------------

def _params_worker(g6: str) -> tuple[str, tuple[int, int, int]]:
    return g6, parameter_values(decode_graph6(g6))


def _warm_params(store: ParamStore, graphs: list[Graph], jobs: int) -> None:
    """Fill the store for every graph in the batch, optionally in parallel.

    Results merge in submission order, so worker count never changes any
    report.  Only the leaf solver calls parallelize; the recursion stays in
    this process where the memo lives.
    """
    missing = []
    for g in graphs:
        code = canonical_code(g)
        if not store.known(code):
            missing.append(code.decode("ascii"))
    if not missing:
        return
    if jobs > 1 and len(missing) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            results = pool.map(_params_worker, missing, chunksize=64)
    else:
        results = [_params_worker(g6) for g6 in missing]
    for g6, vals in results:
        store.store(g6.encode("ascii"), vals)


def _obstruction_self_check(store: ParamStore) -> None:
    """Startup gate for every sweep: the obstruction catalog must be sane.

    Guards against mistranscribed shapes.  Every listed obstruction must be
    an equality violator with parameters (3, 2), and any smaller violator
    embedded in one must itself be a catalog member.  Exact minimality of
    every entry would be the wrong invariant: six of the seven are minimal,
    but the cycle-with-tail-and-pendant graph properly contains the
    three-pendant caterpillar.  Coherence in this form is what the
    equivalence sweeps actually rely on, since it makes freeness from the
    full list coincide with freeness from its minimal members.
    """
    patterns.verify_catalog()
    if store.obstructions_checked:
        return
    codes = {canonical_code(patterns.pattern(name).graph)
             for name in OBSTRUCTION_NAMES}
    for name in OBSTRUCTION_NAMES:
        g = patterns.pattern(name).graph
        hit = _violator_for_kind(g, ClassKind.EXPONENTIAL, store)
        if hit is None:
            raise AssertionError(f"obstruction {name} is not a violator")
        if hit[0] < g.n and hit[1] not in codes:
            raise AssertionError(
                f"obstruction {name} contains a violator from outside "
                f"the catalog")
    store.obstructions_checked = True


LevelSource = Callable[[int], Iterable[Graph]]


def _stream_source(mode: str, free_of: Iterable[str]) -> LevelSource:
    names = tuple(free_of)

    def source(n: int) -> GraphStream:
        if mode == "trees":
            return trees(n, names)
        return connected_graphs(n, names)

    return source


def levels_from_graphs(graphs: Iterable[Graph], max_n: int,
                       free_of: Iterable[str] = (),
                       trees_only: bool = False) -> LevelSource:
    """Adapt an external graph collection to a sweep source.

    Keeps connected graphs within the order bound that satisfy the
    restriction, canonicalizes, dedups, and sorts each level by code.
    """
    names = tuple(free_of)
    buckets: dict[int, dict[bytes, Graph]] = {}
    for g in graphs:
        if g.n < 1 or g.n > max_n or not is_connected(g):
            continue
        if trees_only and g.m != g.n - 1:
            continue
        if names and not patterns.is_free(g, names):
            continue
        rep = canonical_graph(g)
        code = encode_graph6(rep).encode("ascii")
        buckets.setdefault(g.n, {})[code] = rep

    def source(n: int) -> list[Graph]:
        level = buckets.get(n, {})
        return [g for _, g in sorted(level.items())]

    return source


def _equivalence_sweep(sweep: str, stream: str, restriction: tuple[str, ...],
                       obstructions: tuple[str, ...], max_n: int, jobs: int,
                       store: Optional[ParamStore],
                       source: Optional[LevelSource]) -> VerificationReport:
    """Check in_class(g) ⟺ obstruction-freeness over a whole stream."""
    if max_n > MEMBERSHIP_ORDER_CAP:
        raise SizeCapError(
            f"membership capped at order {MEMBERSHIP_ORDER_CAP}")
    store = store or _DEFAULT_STORE
    started = time.perf_counter()
    _obstruction_self_check(store)
    if source is None:
        source = _stream_source(stream, restriction)
    counts: dict[int, int] = {}
    counterexamples: list[str] = []
    for n in range(1, max_n + 1):
        level = list(source(n))
        counts[n] = len(level)
        _warm_params(store, level, jobs)
        for g in level:
            member = _violator_for_kind(g, ClassKind.EXPONENTIAL, store) is None
            free = patterns.is_free(g, obstructions)
            if member != free:
                counterexamples.append(encode_graph6(g))
    return VerificationReport(
        sweep=sweep,
        max_n=max_n,
        stream=stream,
        restriction=restriction,
        kind=ClassKind.EXPONENTIAL.value,
        counts=counts,
        counterexamples=counterexamples,
        extras={"obstructions": list(obstructions)},
        elapsed_seconds=round(time.perf_counter() - started, 3),
        config_hash=_config_hash(sweep=sweep, max_n=max_n, stream=stream,
                                 restriction=list(restriction),
                                 obstructions=list(obstructions)),
    )


def verify_theorem1(max_n: int = DEFAULT_MAX_N["theorem1"], jobs: int = 1,
                    store: Optional[ParamStore] = None,
                    source: Optional[LevelSource] = None) -> VerificationReport:
    """Membership ⟺ obstruction-freeness over the restricted class."""
    return _equivalence_sweep("theorem1", "connected", RESTRICTION_NAMES,
                              OBSTRUCTION_NAMES, max_n, jobs, store, source)


def verify_corollary1(max_n: int = DEFAULT_MAX_N["corollary1"], jobs: int = 1,
                      store: Optional[ParamStore] = None,
                      source: Optional[LevelSource] = None) -> VerificationReport:
    """Same equivalence over the triangle-free restricted class."""
    return _equivalence_sweep("corollary1", "connected",
                              TRIANGLE_RESTRICTION_NAMES, OBSTRUCTION_NAMES,
                              max_n, jobs, store, source)


def verify_corollary2(max_n: int = DEFAULT_MAX_N["corollary2"], jobs: int = 1,
                      store: Optional[ParamStore] = None,
                      source: Optional[LevelSource] = None) -> VerificationReport:
    """Tree membership ⟺ freeness from the two tree obstructions."""
    return _equivalence_sweep("corollary2", "trees", (),
                              TREE_OBSTRUCTION_NAMES, max_n, jobs, store,
                              source)


def probe_conjecture3(max_n: int = DEFAULT_MAX_N["conjecture3"], jobs: int = 1,
                      store: Optional[ParamStore] = None,
                      source: Optional[LevelSource] = None) -> VerificationReport:
    """Compare the two hereditary classes over all connected graphs.

    A divergence would be a publishable find, so it is reported in-band,
    never raised.  The parameter chain gamma_e_star <= gamma_e <= gamma is
    asserted per scanned instance; a violation would be a solver bug and
    lands in its own report list.
    """
    if max_n > MEMBERSHIP_ORDER_CAP:
        raise SizeCapError(
            f"membership capped at order {MEMBERSHIP_ORDER_CAP}")
    store = store or _DEFAULT_STORE
    started = time.perf_counter()
    _obstruction_self_check(store)
    if source is None:
        source = _stream_source("connected", ())
    counts: dict[int, int] = {}
    divergences: list[str] = []
    chain_violations: list[str] = []
    for n in range(1, max_n + 1):
        level = list(source(n))
        counts[n] = len(level)
        _warm_params(store, level, jobs)
        for g in level:
            gamma, gamma_e, gamma_e_star = store.params(g)
            if not gamma_e_star <= gamma_e <= gamma:
                chain_violations.append(encode_graph6(g))
            viol_e, viol_p = _min_violators(g, store)
            if (viol_e is None) != (viol_p is None):
                divergences.append(encode_graph6(g))
    return VerificationReport(
        sweep="conjecture3",
        max_n=max_n,
        stream="connected",
        restriction=(),
        kind="both",
        counts=counts,
        counterexamples=[],
        extras={"divergences": divergences,
                "chain_violations": chain_violations},
        elapsed_seconds=round(time.perf_counter() - started, 3),
        config_hash=_config_hash(sweep="conjecture3", max_n=max_n,
                                 stream="connected", restriction=[]),
    )


def find_minimal_forbidden(max_n: int, kind: ClassKind = ClassKind.EXPONENTIAL,
                           restriction: Iterable[str] = (), jobs: int = 1,
                           store: Optional[ParamStore] = None,
                           source: Optional[LevelSource] = None
                           ) -> VerificationReport:
    """All minimal forbidden graphs up to max_n, with their parameters."""
    if max_n > MEMBERSHIP_ORDER_CAP:
        raise SizeCapError(
            f"membership capped at order {MEMBERSHIP_ORDER_CAP}")
    store = store or _DEFAULT_STORE
    restriction = tuple(restriction)
    started = time.perf_counter()
    _obstruction_self_check(store)
    if source is None:
        source = _stream_source("connected", restriction)
    counts: dict[int, int] = {}
    found: list[dict] = []
    for n in range(1, max_n + 1):
        level = list(source(n))
        counts[n] = len(level)
        _warm_params(store, level, jobs)
        for g in level:
            hit = _violator_for_kind(g, kind, store)
            if hit is not None and hit[0] == g.n:
                gamma, gamma_e, gamma_e_star = store.params(g)
                found.append({
                    "graph6": encode_graph6(g),
                    "n": g.n,
                    "gamma": gamma,
                    "gamma_e": gamma_e,
                    "gamma_e_star": gamma_e_star,
                })
    return VerificationReport(
        sweep="minimal_forbidden",
        max_n=max_n,
        stream="connected",
        restriction=restriction,
        kind=kind.value,
        counts=counts,
        counterexamples=[],
        extras={"found": found},
        elapsed_seconds=round(time.perf_counter() - started, 3),
        config_hash=_config_hash(sweep="minimal_forbidden", max_n=max_n,
                                 stream="connected",
                                 restriction=list(restriction),
                                 kind=kind.value),
    )
