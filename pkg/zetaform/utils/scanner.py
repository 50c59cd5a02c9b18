"""Exhaustive Ball-Rivoal parameter scans persisted as JSON Lines."""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Set, Tuple

from zetaform.core.exactalg import format_rational
from zetaform.core.forms import ball_rivoal_form, is_integrable, tau_symmetry
from zetaform.core.zeta_coeffs import coefficients, predict_vanishing, weight_drop_predicted
from zetaform.utils.output import ScanRecord, coefficient_strings

logger = logging.getLogger(__name__)

Parameters = Tuple[Tuple[int, ...], Tuple[int, ...], int]


def enumerate_parameters(n: int, max_N: int, well_poised: bool = False, max_uv: int = 3) -> Iterator[Parameters]:
    """
    Enumerate Ball-Rivoal parameter tuples.

    Tuples are sorted multisets of (u_i, v_i) pairs, since permuting variables
    leaves the coefficients unchanged.

    Args:
        n: Number of variables
        max_N: Largest pole order; N runs over 1..max_N
        well_poised: Only pairs with 2*u_i + v_i = N + 1
        max_uv: Bound for u_i and v_i when not well-poised

    Returns:
        Iterator of (u, v, N) in lexicographic order for each N
    """
    if n < 1 or max_N < 1 or max_uv < 1:
        raise ValueError("n, max_N and max_uv must be >= 1")
    for N in range(1, max_N + 1):
        if well_poised:
            pairs = [(u, N + 1 - 2 * u) for u in range(1, N // 2 + 1)]
        else:
            pairs = [(u, v) for u in range(1, max_uv + 1) for v in range(1, max_uv + 1)]
        for combo in combinations_with_replacement(pairs, n):
            yield tuple(p[0] for p in combo), tuple(p[1] for p in combo), N


def evaluate_parameters(params: Parameters) -> ScanRecord:
    """
    Evaluate one tuple: integrability, exact coefficients and parity predictions.

    Args:
        params: (u, v, N) as produced by enumerate_parameters

    Returns:
        ScanRecord; a0 and coeffs stay empty when the form diverges
    """
    u, v, N = params
    form = ball_rivoal_form(u, v, N)
    integrable = is_integrable(form)
    a0 = None
    coeffs = {}
    if integrable:
        c = coefficients(form)
        a0 = format_rational(c.a0)
        coeffs = coefficient_strings(c)
    return ScanRecord(
        u=list(u),
        v=list(v),
        N=N,
        n=len(u),
        integrable=integrable,
        a0=a0,
        coeffs=coeffs,
        tau=tau_symmetry(form).value,
        predicted_zeros=sorted(predict_vanishing(form)),
        weight_drop=weight_drop_predicted(u, v, N),
    )


def completed_keys(path: Path) -> Set[Parameters]:
    """
    Collect the tuples already present in a JSON Lines output file.

    Args:
        path: Scan output file; a missing file counts as empty

    Returns:
        Set of (u, v, N) keys. Unreadable lines are logged and skipped.
    """
    done: Set[Parameters] = set()
    if not path.exists():
        return done
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if not line:
                continue
            try:
                done.add(ScanRecord.model_validate_json(line).key())
            except ValueError as e:
                logger.warning("Skipping unreadable line in %s: %s", path, e)
    return done


def _evaluate_all(todo: List[Parameters], workers: int) -> Iterable[ScanRecord]:
    if workers <= 1 or len(todo) <= 1:
        return map(evaluate_parameters, todo)
    executor = ProcessPoolExecutor(max_workers=workers)
    return _drain(executor, todo)


def _drain(executor: ProcessPoolExecutor, todo: List[Parameters]) -> Iterator[ScanRecord]:
    with executor:
        # map keeps submission order, so output order does not depend on scheduling
        yield from executor.map(evaluate_parameters, todo)


def run_scan(
    n: int,
    max_N: int,
    well_poised: bool = False,
    max_uv: int = 3,
    workers: int = 1,
    out: Optional[Path] = None,
    resume: bool = False,
) -> Iterator[ScanRecord]:
    """
    Evaluate every tuple, appending to ``out`` as results arrive.

    Args:
        n, max_N, well_poised, max_uv: Passed to enumerate_parameters
        workers: Worker processes; 1 evaluates in this process
        out: JSON Lines file, only ever appended to
        resume: Skip tuples that ``out`` already holds

    Returns:
        Iterator of ScanRecord in enumeration order
    """
    params = list(enumerate_parameters(n, max_N, well_poised, max_uv))
    skip = completed_keys(out) if (resume and out is not None) else set()
    todo = [p for p in params if p not in skip]
    logger.debug("scan: %d tuples, %d already done, %d workers", len(params), len(params) - len(todo), workers)
    handle = open(out, "a", encoding="utf-8") if out is not None else None
    try:
        for record in _evaluate_all(todo, workers):
            if handle is not None:
                handle.write(record.model_dump_json() + "\n")
                handle.flush()
            yield record
    finally:
        if handle is not None:
            handle.close()
