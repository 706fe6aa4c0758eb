"""
Enumeration of admissible parameters, exact two-sided checks and reports.

A verification run for one (identity, field) pair enumerates the parameter
tuples that satisfy the identity's hypotheses, optionally samples them, and
compares both sides exactly at every point of the identity's domain.
Suites split the work into (identity, field, tuple chunk) items that can run
in a process pool; results are merged in work-item order.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.constant import (DEFAULT_PSI_SHIFT, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED,
                          EXHAUSTIVE_THRESHOLD, IdentityId, VerifyMode)
from src.errors import FiniteHgfError, UnknownIdentityError
from src.gf import FiniteField, construct_field
from src.identities import CATALOG, Identity, IdentityContext, get_identity

logger = logging.getLogger(__name__)

# tuples per work item in a parallel suite
CHUNK_SIZE = 64


@dataclass
class VerificationReport:
    identity: str
    field: Dict[str, int]
    mode: str
    tuples_enumerated: int
    tuples_checked: int
    lambdas_per_tuple: int
    failures: List[Dict[str, Any]] = dc_field(default_factory=list)
    elapsed_ms: Optional[float] = None
    seed: Optional[int] = None
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        data = asdict(self)
        if not timing:
            data["elapsed_ms"] = None
        data["passed"] = self.passed
        return data


def catalog() -> List[Dict[str, Any]]:
    """Catalog metadata, in declaration order."""
    return [{
        "id": str(entry.identity_id),
        "formula": entry.formula,
        "arity": entry.arity,
        "domain": entry.domain.name.lower(),
        "requires_odd": entry.requires_odd,
        "divisor": entry.divisor,
    } for entry in CATALOG.values()]


def resolve_ids(ids: Union[str, Sequence[str], None]) -> List[IdentityId]:
    """Expands `all` (or None) to the full catalog and validates explicit ids."""
    if ids is None or ids == "all":
        return list(CATALOG)
    if isinstance(ids, str):
        ids = [token for token in ids.split(",") if token.strip()]
    if list(ids) == ["all"]:
        return list(CATALOG)
    return [get_identity(token.strip()).identity_id for token in ids]


def _json_params(params: Any) -> Any:
    if isinstance(params, tuple):
        return [_json_params(p) for p in params]
    return params


def enumerate_admissible(identity_id: str, field: FiniteField,
                         psi_shift: int = DEFAULT_PSI_SHIFT) -> Tuple[List[tuple], Optional[str]]:
    """
    All parameter tuples satisfying the identity's hypotheses over `field`.

    Returns:
        (tuples, reason): `reason` explains an empty result and is None
        otherwise.
    """
    entry = get_identity(identity_id)
    ctx = IdentityContext(field, psi_shift)
    reason = entry.precondition(ctx)
    if reason:
        logger.warning("%s over GF(%d) not applicable: %s", entry.identity_id, field.q, reason)
        return [], reason
    admissible = [params for params in entry.candidates(ctx)
                  if entry.hypothesis(ctx, params)]
    if not admissible:
        reason = "no admissible tuples"
        logger.warning("%s over GF(%d): %s", entry.identity_id, field.q, reason)
    else:
        logger.info("%s over GF(%d): %d admissible tuples",
                    entry.identity_id, field.q, len(admissible))
    return admissible, reason


def _select(entry: Identity, ctx: IdentityContext, admissible: List[tuple], mode: str,
            sample_size: int, seed: int, threshold: int) -> Tuple[List[tuple], str]:
    if not admissible:
        return [], mode
    if mode == VerifyMode.EXHAUSTIVE:
        work = len(admissible) * max(1, len(entry.points(ctx, admissible[0])))
        if work <= threshold:
            return admissible, VerifyMode.EXHAUSTIVE.value
        logger.warning("%s over GF(%d): %d evaluations exceed %d, sampling %d tuples",
                       entry.identity_id, ctx.q, work, threshold, sample_size)
    picked = random.Random(seed).sample(range(len(admissible)),
                                        min(sample_size, len(admissible)))
    return [admissible[i] for i in sorted(picked)], VerifyMode.SAMPLE.value


def check_tuples(identity_id: str, field: FiniteField, tuples: Iterable[tuple],
                 psi_shift: int = DEFAULT_PSI_SHIFT,
                 perturb: bool = False) -> List[Dict[str, Any]]:
    """Evaluates both sides at every point; returns the mismatches."""
    entry = get_identity(identity_id)
    ctx = IdentityContext(field, psi_shift)
    failures = []
    for params in tuples:
        for point in entry.points(ctx, params):
            record = {"tuple": _json_params(params), "point": _json_params(point)}
            try:
                lhs = entry.lhs(ctx, params, point)
                rhs = (entry.perturbed_rhs(ctx, params, point) if perturb
                       else entry.rhs(ctx, params, point))
            except (FiniteHgfError, ArithmeticError) as e:
                record["error"] = f"{type(e).__name__}: {e}"
                failures.append(record)
                continue
            if lhs != rhs:
                record["lhs"] = lhs.to_json()
                record["rhs"] = rhs.to_json()
                failures.append(record)
    return failures


def _check_work_item(item: Tuple[str, Tuple[int, int, tuple], int, List[tuple], bool]):
    identity_id, (p, f, modulus), psi_shift, tuples, perturb = item
    return check_tuples(identity_id, construct_field(p, f, modulus), tuples, psi_shift, perturb)


@dataclass
class _Plan:
    entry: Any
    field: FiniteField
    report: VerificationReport
    tuples: List[tuple]


def _plan(identity_id: str, field: FiniteField, mode: str, sample_size: int, seed: int,
          threshold: int, psi_shift: int) -> _Plan:
    entry = get_identity(identity_id)
    ctx = IdentityContext(field, psi_shift)
    admissible, reason = enumerate_admissible(identity_id, field, psi_shift)
    chosen, used_mode = _select(entry, ctx, admissible, str(mode), sample_size, seed, threshold)
    points = len(entry.points(ctx, chosen[0])) if chosen else 0
    report = VerificationReport(
        identity=str(entry.identity_id),
        field={"p": field.p, "f": field.f, "q": field.q},
        mode=used_mode,
        tuples_enumerated=len(admissible),
        tuples_checked=len(chosen),
        lambdas_per_tuple=points,
        seed=seed if used_mode == VerifyMode.SAMPLE else None,
        reason=reason,
    )
    return _Plan(entry, field, report, chosen)


def verify(identity_id: str, field: FiniteField, mode: str = VerifyMode.EXHAUSTIVE,
           sample_size: int = DEFAULT_SAMPLE_SIZE, seed: int = DEFAULT_SEED,
           threshold: int = EXHAUSTIVE_THRESHOLD, psi_shift: int = DEFAULT_PSI_SHIFT,
           perturb: bool = False) -> VerificationReport:
    """
    Checks one identity over one field.

    Args:
        identity_id (str): A catalog id, e.g. "euler-transformation".
        field (FiniteField): The field to check over.
        mode (str): "exhaustive" or "sample".
        sample_size (int): Tuples drawn in sample mode.
        seed (int): Seed of the sampler.
        threshold (int): Exhaustive mode samples once tuples x points exceeds this.
        psi_shift (int): Encoding of a in ψ_a.
        perturb (bool): Compare against each entry's mutated right side
            (`Identity.perturbed_rhs`); a working check then reports failures.

    Returns:
        VerificationReport
    """
    started = time.perf_counter()
    plan = _plan(identity_id, field, mode, sample_size, seed, threshold, psi_shift)
    plan.report.failures = check_tuples(identity_id, field, plan.tuples, psi_shift, perturb)
    plan.report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    logger.info("%s over GF(%d): %d tuples, %d failures",
                plan.report.identity, field.q, plan.report.tuples_checked,
                len(plan.report.failures))
    return plan.report


def verify_suite(fields: Iterable[FiniteField], ids: Union[str, Sequence[str], None],
                 mode: str = VerifyMode.EXHAUSTIVE, sample_size: int = DEFAULT_SAMPLE_SIZE,
                 seed: int = DEFAULT_SEED, threads: int = 1,
                 threshold: int = EXHAUSTIVE_THRESHOLD,
                 psi_shift: int = DEFAULT_PSI_SHIFT) -> List[VerificationReport]:
    """
    Runs every (identity, field) pair, identities outermost.

    With threads > 1 the tuple lists are cut into chunks and checked in a
    process pool; failures are concatenated in chunk order, so the reports
    do not depend on scheduling.
    """
    fields = list(fields)
    identity_ids = resolve_ids(ids)
    if not identity_ids or not fields:
        return []

    started = time.perf_counter()
    plans = [_plan(identity_id, field, mode, sample_size, seed, threshold, psi_shift)
             for identity_id in identity_ids for field in fields]

    if threads <= 1:
        for plan in plans:
            t0 = time.perf_counter()
            plan.report.failures = check_tuples(plan.report.identity, plan.field,
                                                plan.tuples, psi_shift)
            plan.report.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    else:
        items, owners = [], []
        for index, plan in enumerate(plans):
            field = plan.field
            for start in range(0, len(plan.tuples), CHUNK_SIZE):
                chunk = plan.tuples[start:start + CHUNK_SIZE]
                items.append((plan.report.identity, field.key, psi_shift, chunk, False))
                owners.append(index)
        logger.info("Dispatching %d work items to %d workers", len(items), threads)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_work_item, items))
        for index, failures in zip(owners, results):
            plans[index].report.failures.extend(failures)
        elapsed = round((time.perf_counter() - started) * 1000, 3)
        for plan in plans:
            plan.report.elapsed_ms = elapsed

    return [plan.report for plan in plans]


def suite_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(report.passed for report in reports)


def unknown_ids(ids: Sequence[str]) -> List[str]:
    """The ids in `ids` that name no catalog entry."""
    out = []
    for token in ids:
        try:
            get_identity(token)
        except UnknownIdentityError:
            out.append(token)
    return out
