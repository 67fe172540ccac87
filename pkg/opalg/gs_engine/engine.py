# opalg/gs_engine/engine.py

from __future__ import annotations

import itertools
import logging
import time
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from core.errors import StabilityViolation
from core.orders import OrderKind
from core.patterns import (
    OPIPattern,
    PatternInstance,
    PatternWord,
    derive_lead_shape,
    fresh_arguments,
    instantiate,
    match_args,
    resolve_params,
)
from core.polynomials import render_coefficient
from core.words import (
    IDENTITY_CONTEXT,
    Alphabet,
    Bracket,
    BracketedWord,
    Generator,
    iter_occurrences,
    structural_key,
)
from opalg.catalog import catalog
from opalg.gs_engine.models import (
    CompositionKind,
    CompositionRecord,
    GSReport,
    InstanceRef,
    InstantiationBounds,
    Verdict,
)
from opalg.gs_engine.span import SpanLimits, span_triviality
from opalg.rewrite_engine.engine import RewriteEngine
from opalg.rewrite_engine.models import ReductionMode

logger = logging.getLogger("GSEngine")


# ----------------------------------------------------------------------
# Argument words
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def _primes_exact(gens: Tuple[Generator, ...], z: int, l: int, depth: int) -> Tuple:
    out: List = []
    if z == 1 and l == 0:
        out.extend(gens)
    if l >= 1 and depth >= 1:
        out.extend(Bracket(w) for w in _words_exact(gens, z, l - 1, depth - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _words_exact(gens: Tuple[Generator, ...], z: int, l: int, depth: int) -> Tuple[BracketedWord, ...]:
    """Words with z_degree == z, l_degree == l and depth <= depth."""
    out: List[BracketedWord] = [BracketedWord((p,)) for p in _primes_exact(gens, z, l, depth)]
    for z1 in range(1, z):
        for l1 in range(0, l + 1):
            for p in _primes_exact(gens, z1, l1, depth):
                for rest in _words_exact(gens, z - z1, l - l1, depth):
                    out.append(BracketedWord((p,) + rest.primes))
    return tuple(out)


def argument_words(bounds: InstantiationBounds, alphabet: Optional[Alphabet] = None) -> List[BracketedWord]:
    """Every argument word within bounds, sorted by structural key."""
    gens = tuple(alphabet or Alphabet.pool(bounds.pool_size))
    words: List[BracketedWord] = []
    for z in range(1, bounds.max_z_degree + 1):
        for l in range(0, bounds.max_l_degree + 1):
            words.extend(_words_exact(gens, z, l, bounds.max_depth))
    return sorted(words, key=structural_key)


# ----------------------------------------------------------------------
# Stability
# ----------------------------------------------------------------------
def check_pairing_stability(pattern: OPIPattern, order: OrderKind, params: Mapping[str, object]) -> None:
    """The designated lead must be the true lead at fresh generators."""
    shape = pattern.designated_lead(order, params)
    derived = derive_lead_shape(pattern, order, params)
    if shape != derived:
        args = fresh_arguments(pattern)
        raise StabilityViolation(
            pattern_id=pattern.id,
            args=[str(a) for a in args],
            instance=pattern.render_body(),
            expected_lead=str(shape.instantiate(args)),
            actual_lead=str(derived.instantiate(args)),
            order=str(order),
        )


def instantiate_bounded(
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Mapping[str, object],
    words: Sequence[BracketedWord],
) -> List[PatternInstance]:
    instances: List[PatternInstance] = []
    for pattern in patterns:
        shape = pattern.designated_lead(order, params)
        for args in itertools.product(words, repeat=pattern.arity):
            instances.append(instantiate(pattern, args, order, params, lead_shape=shape))
    return instances


# ----------------------------------------------------------------------
# Compositions
# ----------------------------------------------------------------------
def _leads(patterns: Sequence[OPIPattern], order: OrderKind, params) -> List[Tuple[OPIPattern, PatternWord]]:
    return [(p, p.designated_lead(order, params)) for p in patterns]


def including_compositions(
    f: PatternInstance,
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Optional[Mapping[str, object]] = None,
) -> List[CompositionRecord]:
    """Every g whose lead sits inside the lead of f, with q != ⋆ or g != f."""
    params = resolve_params(params)
    return list(_including(f, _leads(patterns, order, params), order, params))


def _including(f: PatternInstance, leads, order: OrderKind, params) -> Iterator[CompositionRecord]:
    w = f.lead
    for occ in iter_occurrences(w):
        sub = occ.subword(w)
        q = occ.context(w)
        for pattern, shape in leads:
            if shape.breadth != sub.breadth:
                continue
            for args in match_args(shape, sub, pattern.arity):
                if q == IDENTITY_CONTEXT and pattern.id == f.pattern_id and args == f.args:
                    continue
                g = instantiate(pattern, args, order, params, lead_shape=shape)
                yield CompositionRecord(
                    kind=CompositionKind.INCLUDING,
                    f=InstanceRef.of(f),
                    g=InstanceRef.of(g),
                    w=w,
                    context=q,
                    composition=f.polynomial - g.polynomial.placed(q),
                )


class PrefixIndex:
    """Instances with lead breadth >= 2, keyed by their leading prime prefixes."""

    def __init__(self, instances: Iterable[PatternInstance]):
        self._by_prefix: Dict[Tuple, List[PatternInstance]] = defaultdict(list)
        for inst in instances:
            primes = inst.lead.primes
            for k in range(1, len(primes)):
                self._by_prefix[primes[:k]].append(inst)

    def starting_with(self, primes: Tuple) -> List[PatternInstance]:
        return self._by_prefix.get(primes, [])


def intersection_compositions(f: PatternInstance, index: PrefixIndex) -> Iterator[CompositionRecord]:
    """Overlaps w = f̄·u = v·ḡ with max(|f̄|, |ḡ|) < |w| < |f̄| + |ḡ|."""
    fp = f.lead.primes
    for k in range(1, len(fp)):
        suffix = fp[-k:]
        for g in index.starting_with(suffix):
            gp = g.lead.primes
            if k >= len(gp):
                continue
            u = BracketedWord(gp[k:])
            v = BracketedWord(fp[:-k])
            yield CompositionRecord(
                kind=CompositionKind.INTERSECTION,
                f=InstanceRef.of(f),
                g=InstanceRef.of(g),
                w=f.lead * u,
                u=u,
                v=v,
                composition=f.polynomial * u - v * g.polynomial,
            )


def _iter_compositions(
    instances: Sequence[PatternInstance],
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params,
) -> Iterator[CompositionRecord]:
    leads = _leads(patterns, order, params)
    index = PrefixIndex(i for i in instances if i.lead.breadth >= 2)
    seen = set()
    for f in instances:
        for rec in itertools.chain(intersection_compositions(f, index), _including(f, leads, order, params)):
            if rec.dedupe_key in seen:
                continue
            seen.add(rec.dedupe_key)
            yield rec


def enumerate_compositions(
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    bounds: Optional[InstantiationBounds] = None,
    params: Optional[Mapping[str, object]] = None,
) -> List[CompositionRecord]:
    """All compositions among bounded instances, canonically sorted, triviality not yet checked."""
    order = OrderKind(order)
    bounds = bounds or InstantiationBounds()
    params = resolve_params(params)
    for pattern in patterns:
        check_pairing_stability(pattern, order, params)
    instances = instantiate_bounded(patterns, order, params, argument_words(bounds))
    return sorted(_iter_compositions(instances, patterns, order, params), key=lambda r: r.sort_key)


# ----------------------------------------------------------------------
# Triviality
# ----------------------------------------------------------------------
def check_triviality(
    rec: CompositionRecord,
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    params: Optional[Mapping[str, object]] = None,
    engine: Optional[RewriteEngine] = None,
    span_limits: Optional[SpanLimits] = None,
) -> CompositionRecord:
    """
    Reduce the composition in instance mode; when that does not reach 0,
    decide membership in the span of placements below w exactly.
    """
    params = resolve_params(params)
    engine = engine or RewriteEngine(patterns, order, params, ReductionMode.INSTANCE)
    try:
        rec.trace = engine.reduce(rec.composition)
    except StabilityViolation as e:
        rec.note = f"reduction stopped: {e}"
        rec.trace = None
    if rec.trace is not None and rec.trace.reached_zero:
        rec.trivial, rec.method = True, "reduction"
        rec.remainder = rec.trace.result
        return rec

    span = span_triviality(rec.composition, rec.w, patterns, order, params, span_limits)
    rec.trivial, rec.method = span.trivial, "span"
    rec.remainder = span.remainder
    rec.span_complete = span.complete
    if not span.trivial and not span.complete:
        rec.note = (rec.note + "; " if rec.note else "") + "placement closure hit its limits"
    return rec


def check_gs(
    patterns: Sequence[OPIPattern],
    order: OrderKind,
    bounds: Optional[InstantiationBounds] = None,
    params: Optional[Mapping[str, object]] = None,
    emit_records: bool = False,
    fail_fast: bool = False,
    span_limits: Optional[SpanLimits] = None,
) -> GSReport:
    """
    Bounded GS check of one pairing. Raises StabilityViolation when a
    designated lead is not the true lead of some bounded instance.
    """
    order = OrderKind(order)
    bounds = bounds or InstantiationBounds()
    params = resolve_params(params)
    started = time.perf_counter()

    for pattern in patterns:
        check_pairing_stability(pattern, order, params)
    words = argument_words(bounds)
    instances = instantiate_bounded(patterns, order, params, words)

    used = sorted({name for p in patterns for name in p.parameters})
    report = GSReport(
        patterns=[p.id for p in patterns],
        order=order,
        bounds=bounds,
        params={name: render_coefficient(params[name]) for name in used},
        n_instances=len(instances),
        emit_records=emit_records,
    )
    logger.info(
        "checking %s under %s: %d argument words, %d instances",
        ", ".join(report.patterns),
        order,
        len(words),
        len(instances),
    )

    engine = RewriteEngine(patterns, order, params, ReductionMode.INSTANCE)
    failures: List[CompositionRecord] = []
    inconclusive: List[CompositionRecord] = []
    for rec in _iter_compositions(instances, patterns, order, params):
        check_triviality(rec, patterns, order, params, engine=engine, span_limits=span_limits)
        if rec.kind == CompositionKind.INTERSECTION:
            report.n_intersection += 1
        else:
            report.n_including += 1
        if rec.trivial:
            report.n_trivial += 1
            if rec.method == "span":
                report.n_by_span += 1
        elif rec.span_complete is False:
            inconclusive.append(rec)
        else:
            failures.append(rec)
        if emit_records:
            report.records.append(rec)
        if fail_fast and failures:
            report.stopped_early = True
            break

    report.records.sort(key=lambda r: r.sort_key)
    if failures:
        report.verdict = Verdict.COUNTEREXAMPLE
        report.counterexample = min(failures, key=lambda r: r.sort_key)
    elif inconclusive:
        report.verdict = Verdict.INCONCLUSIVE
    report.n_inconclusive = len(inconclusive)
    logger.info(
        "%s: %d records, %d trivial, %d inconclusive, %.2fs",
        report.verdict,
        report.n_records,
        report.n_trivial,
        report.n_inconclusive,
        time.perf_counter() - started,
    )
    return report
