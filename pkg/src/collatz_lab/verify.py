"""Range checkers for the structural claims the sequence engines rely on.

Every checker sweeps an inclusive integer range, optionally fanned out over
worker processes, and returns a :class:`TheoremReport`.  Reports are
deterministic: violation lists are sorted by input and truncated at a
configurable cap (the full count is retained), budget-exhausted inputs are
listed separately, and the partitioning of the range cannot influence any
reported field.  Wall-clock time lives only on the in-memory report, never
in serialized output.

The `u-residues-odd-starts` checker is observational: the residue pattern
for odd seeds holds empirically on every range tried but is not a proved
statement, so its findings are reported without affecting exit status.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, NamedTuple

from collatz_lab import kernels
from collatz_lab.errors import ConfigurationError, DomainError
from collatz_lab.reverse_tree import reverse_affine_step
from collatz_lab.sequences import mapt_even_step, mapt_odd_step

#: Default violation-list cap; the total count is always kept.
DEFAULT_VIOLATION_CAP = 32

#: Default step budget for checkers that trace orbits.
DEFAULT_BUDGET = 100_000


class Violation(NamedTuple):
    input: int
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    lo: int
    hi: int
    checked: int
    violations: tuple[Violation, ...]
    violation_count: int
    budget_exhausted: tuple[int, ...]
    elapsed: float
    observational: bool = False


ScanPart = tuple[int, list, list]   # (checked, violations, exhausted)


# --- span workers (top-level so process pools can pickle them) ---------------


def _span_covering(lo: int, hi: int, budget: int) -> ScanPart:
    violations = []
    exhausted = []
    for n in range(lo, hi + 1):
        c_len, t_len, a_len, ok = kernels.covering_chain(n, budget)
        if ok == 0:
            violations.append((n, "orbit containment failed"))
        elif ok < 0:
            exhausted.append(n)
        elif not (a_len <= t_len <= c_len):
            violations.append(
                (n, f"length chain broken: {a_len}, {t_len}, {c_len}")
            )
    return hi - lo + 1, violations, exhausted


def _span_parity_runs(lo: int, hi: int, budget: int) -> ScanPart:
    violations = []
    for n in range(lo, hi + 1):
        if n & 1 == 0:
            # halving run in the plain orbit
            x = n
            run = 0
            while x & 1 == 0:
                x >>= 1
                run += 1
            expected = kernels.ruler(n >> 1)
        else:
            # odd run in the half-step orbit
            x = n
            run = 0
            while x & 1:
                x = (3 * x + 1) >> 1
                run += 1
            expected = kernels.ruler((n + 1) >> 1)
        if run != expected:
            violations.append((n, f"run length {run}, expected {expected}"))
        elif x != kernels.apt_step(n):
            violations.append((n, f"run lands on {x}, not the accelerated step"))
    return hi - lo + 1, violations, []


def _span_u_residues(lo: int, hi: int, budget: int) -> ScanPart:
    # Every image is 2 mod 6.  The mod-18 refinement needs an input that is
    # already 2 mod 6, so it starts at the second image: seeds divisible by
    # 6 have first images like 18 -> 14 that sit outside {2, 8} mod 18.
    violations = []
    exhausted = []
    start = max(lo, 2)
    if start & 1:
        start += 1
    checked = 0
    for u in range(start, hi + 1, 2):
        checked += 1
        x = u
        reached = x == 2
        for step in range(1, budget + 1):
            if x == 2:
                reached = True
                break
            x = kernels.emapt_step_pq(x)
            if x % 6 != 2:
                violations.append((u, f"element {x} is not 2 mod 6"))
                break
            if step >= 2 and x % 18 not in (2, 8):
                violations.append((u, f"element {x} is not 2 or 8 mod 18"))
                break
        else:
            reached = x == 2
        if not reached and not (violations and violations[-1][0] == u):
            exhausted.append(u)
    return checked, violations, exhausted


def _span_u_residues_odd(lo: int, hi: int, budget: int) -> ScanPart:
    # Odd seeds: the ruler-form step applies once, then the even engine.
    # Only elements beyond that first image are claimed to be 2 or 8 mod 18.
    violations = []
    exhausted = []
    start = max(lo, 1)
    if start & 1 == 0:
        start += 1
    checked = 0
    for seed in range(start, hi + 1, 2):
        checked += 1
        x = kernels.emapt_step_ruler(seed)
        reached = False
        for _ in range(budget):
            if x == 2:
                reached = True
                break
            x = kernels.emapt_step_pq(x)
            if x % 18 not in (2, 8):
                violations.append((seed, f"element {x} is not 2 or 8 mod 18"))
                break
        if not reached and not (violations and violations[-1][0] == seed):
            exhausted.append(seed)
    return checked, violations, exhausted


def _span_x_residues(lo: int, hi: int, budget: int) -> ScanPart:
    bad = kernels.scan_x_residues(lo, hi)
    return hi - lo + 1, [(x, "image is 2 mod 3") for x in bad], []


def _span_p3n(lo: int, hi: int, budget: int) -> ScanPart:
    bad = kernels.scan_p3n(lo, hi)
    return hi - lo + 1, [(n, "p(3n) is 1 mod 3") for n in bad], []


def _span_dual_forms(lo: int, hi: int, budget: int) -> ScanPart:
    violations = [
        (u, "pq and ruler forms disagree")
        for u in kernels.scan_emapt_forms(lo, hi)
    ]
    first_even = max(lo, 2) + (max(lo, 2) & 1)
    checked = (hi - first_even) // 2 + 1 if hi >= first_even else 0
    for n in range(max(lo, 0), hi + 1):
        checked += 1
        even, odd_succ = mapt_even_step(n)
        if odd_succ != kernels.apt_step(even):
            violations.append((n, "even index map disagrees with accelerated step"))
        odd, even_succ = mapt_odd_step(n)
        if even_succ != kernels.apt_step(odd):
            violations.append((n, "odd index map disagrees with accelerated step"))
    return checked, violations, []


def _span_linear_fixed_point(lo: int, hi: int, budget: int) -> ScanPart:
    violations = []
    start = max(lo, 2)
    checked = 0
    for u in range(start, hi + 1):
        if u & 1 or u % 6 != 2:
            continue
        checked += 1
        succ = kernels.emapt_step_pq(u)
        v = kernels.odd_part(u)
        alpha = ((v + 1) & -(v + 1)).bit_length() - 1
        beta = (u & -u).bit_length() - 1
        lhs = (succ << (alpha + beta))
        rhs = 3**alpha * u + (3**alpha - 2**alpha) * 2**beta
        if lhs != rhs:
            violations.append((u, "linear relation failed"))
            continue
        if (succ + 1) << alpha != (v + 1) * 3**alpha:
            violations.append((u, "fixed-point relation failed"))
            continue
        if reverse_affine_step(succ, alpha, beta) != u:
            violations.append((u, "inverse step does not recover the input"))
    return checked, violations, []


def _span_conjecture_apt(lo: int, hi: int, budget: int) -> ScanPart:
    exhausted = [
        n for n in range(lo, hi + 1) if kernels.apt_stopping(n, budget) < 0
    ]
    return hi - lo + 1, [], exhausted


def _span_conjecture_emapt(lo: int, hi: int, budget: int) -> ScanPart:
    exhausted = [
        n
        for n in range(lo, hi + 1)
        if kernels.emapt_stopping(6 * n + 2, budget) < 0
    ]
    return hi - lo + 1, [], exhausted


@dataclass(frozen=True)
class CheckerSpec:
    span: Callable[[int, int, int], ScanPart]
    min_lo: int
    observational: bool = False


CHECKERS: dict[str, CheckerSpec] = {
    "covering": CheckerSpec(_span_covering, 1),
    "parity-runs": CheckerSpec(_span_parity_runs, 1),
    "u-residues": CheckerSpec(_span_u_residues, 2),
    "u-residues-odd-starts": CheckerSpec(_span_u_residues_odd, 1, observational=True),
    "x-residues": CheckerSpec(_span_x_residues, 0),
    "p3n": CheckerSpec(_span_p3n, 0),
    "dual-forms": CheckerSpec(_span_dual_forms, 0),
    "linear-fixed-point": CheckerSpec(_span_linear_fixed_point, 2),
    "conjecture-apt": CheckerSpec(_span_conjecture_apt, 1),
    "conjecture-emapt": CheckerSpec(_span_conjecture_emapt, 0),
}


def run_check(
    theorem_id: str,
    lo: int,
    hi: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    cap: int = DEFAULT_VIOLATION_CAP,
) -> TheoremReport:
    """Run one registered checker over [lo, hi] and assemble its report."""
    spec = CHECKERS.get(theorem_id)
    if spec is None:
        raise ConfigurationError(f"unknown theorem {theorem_id!r}")
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise DomainError("range bounds must be integers")
    if lo < spec.min_lo:
        raise DomainError(f"{theorem_id} requires lo >= {spec.min_lo}, got {lo}")
    if hi < lo:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if budget < 1:
        raise DomainError(f"budget must be >= 1, got {budget}")
    if cap < 1:
        raise ConfigurationError(f"violation cap must be >= 1, got {cap}")
    from collatz_lab.parallel import run_chunked

    t0 = time.perf_counter()
    parts = run_chunked(spec.span, lo, hi, workers, args=(budget,))
    checked = 0
    violations: list[tuple[int, str]] = []
    exhausted: list[int] = []
    for part_checked, part_violations, part_exhausted in parts:
        checked += part_checked
        violations.extend(part_violations)
        exhausted.extend(part_exhausted)
    violations.sort()
    exhausted.sort()
    return TheoremReport(
        theorem_id=theorem_id,
        lo=lo,
        hi=hi,
        checked=checked,
        violations=tuple(Violation(n, d) for n, d in violations[:cap]),
        violation_count=len(violations),
        budget_exhausted=tuple(exhausted),
        elapsed=time.perf_counter() - t0,
        observational=spec.observational,
    )


# --- the public checker surface ----------------------------------------------


def check_covering(
    lo: int, hi: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> TheoremReport:
    """Accelerated orbit embeds in half-step orbit embeds in plain orbit,
    with the matching length chain, for every n in range that finishes."""
    return run_check("covering", lo, hi, budget, workers)


def check_parity_runs(lo: int, hi: int, workers: int = 1) -> TheoremReport:
    """Observed parity-run lengths match the closed-form exponents."""
    return run_check("parity-runs", lo, hi, workers=workers)


def check_u_residues(
    lo: int, hi: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> TheoremReport:
    """Even-engine images are 2 mod 6, and 2 or 8 mod 18 past the first image."""
    return run_check("u-residues", lo, hi, budget, workers)


def check_u_residues_odd_starts(
    lo: int, hi: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> TheoremReport:
    """Observational: odd seeds show the same mod-18 pattern past the first image."""
    return run_check("u-residues-odd-starts", lo, hi, budget, workers)


def check_x_residues(lo: int, hi: int, workers: int = 1) -> TheoremReport:
    """Index-map images avoid residue 2 mod 3."""
    return run_check("x-residues", lo, hi, workers=workers)


def check_p3n(lo: int, hi: int, workers: int = 1) -> TheoremReport:
    """p(3n) avoids residue 1 mod 3."""
    return run_check("p3n", lo, hi, workers=workers)


def check_dual_forms(lo: int, hi: int, workers: int = 1) -> TheoremReport:
    """The two even-engine formulations agree, and both index maps agree
    with the accelerated step."""
    return run_check("dual-forms", lo, hi, workers=workers)


def check_linear_and_fixed_point(lo: int, hi: int, workers: int = 1) -> TheoremReport:
    """Exact linear and fixed-point identities for consecutive even pairs,
    plus round-trip through the inverse affine step."""
    return run_check("linear-fixed-point", lo, hi, workers=workers)


def check_conjectures(
    lo: int,
    hi: int,
    budget: int = DEFAULT_BUDGET,
    family: str = "apt",
    workers: int = 1,
) -> TheoremReport:
    """Sweep reach/no-reach per start; never asserts beyond the range.

    family "apt": does the accelerated orbit of n reach 1 within budget.
    family "emapt": does the even engine reach 2 from 6n + 2 within budget.
    Non-reaching starts are reported as budget-exhausted, not violations.
    """
    if family == "apt":
        return run_check("conjecture-apt", lo, hi, budget, workers)
    if family == "emapt":
        return run_check("conjecture-emapt", lo, hi, budget, workers)
    raise ConfigurationError(f"unknown conjecture family {family!r}")
