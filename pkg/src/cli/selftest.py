"""Fast acceptance subset run by the selftest command."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from ..catdata import CategoryData, validate
from ..config.settings import Settings
from ..exactnum import ONE, SQRT2, THETA, ZERO, AlgNum, Sign, parse, render, sign
from ..mednykh import bundled_groups, mednykh_check
from ..models.reports import SelftestReport, SuiteResult, format_move
from ..pachner import spot_check, split_for
from ..surfacecalc import kernel_relations, minimal_idempotents, quotient_dim, rp_check
from ..utils.logger import logger


class SuiteFailure(AssertionError):
    pass


def _require(condition: bool, message: str = "check failed") -> None:
    if not condition:
        raise SuiteFailure(message)


def _random_algnum(rng: random.Random) -> AlgNum:
    return AlgNum(*(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4)))


def _exactnum_suite(seed: int) -> str:
    rng = random.Random(seed)
    _require(THETA**4 == 2 and SQRT2 * SQRT2 == 2)
    for _ in range(200):
        a, b, c = (_random_algnum(rng) for _ in range(3))
        _require((a + b) * c == a * c + b * c)
        _require((a * b) * c == a * (b * c))
        if a:
            _require(a * a.inv() == ONE)
        _require(sign(a * b) is Sign(sign(a) * sign(b)))
        _require(parse(render(a)) == a)
    _require(sign(ZERO) is Sign.ZERO)
    return "field axioms on 200 random triples"


def _gram_suite() -> str:
    for m in range(1, 5):
        _require(quotient_dim(m) == 2 ** (m - 1), f"rank at m={m}")
        _require(rp_check(m), f"psd at m={m}")
    _require(len(kernel_relations(3)) == 1)
    for m in range(1, 5):
        dims = [e.trace() for e in minimal_idempotents(m).values()]
        _require(sum(1 for d in dims if d) == 2 ** (m - 1), f"idempotents at m={m}")
    return "ranks 1, 2, 4, 8, psd and minimal idempotents for m <= 4"


def _mednykh_suite() -> str:
    groups = bundled_groups()
    for name, (table, dims) in groups.items():
        for genus in range(4):
            _require(mednykh_check(table, dims, genus), f"{name} at genus {genus}")
    return f"{len(groups)} groups at genus 0..3"


def _run(name: str, check: Callable[[], str]) -> SuiteResult:
    try:
        detail = check()
        return SuiteResult(name=name, passed=True, detail=detail)
    except AssertionError as exc:
        return SuiteResult(name=name, passed=False, detail=str(exc) or "assertion failed")
    except Exception as exc:
        logger.error("cli", f"Suite {name} raised", error=exc)
        return SuiteResult(name=name, passed=False, detail=f"{type(exc).__name__}: {exc}")


def run_selftest(
    d: CategoryData,
    sample_size: Optional[int] = None,
    seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> SelftestReport:
    """
    Run the suites in a fixed order and collect pass/fail per suite.

    Suites: validate-data, exactnum, gram, mednykh, then one Pachner spot
    check per move type of the dataset.
    """
    seed = Settings.DEFAULT_SEED if seed is None else seed

    def dataset_suite() -> str:
        report = validate(d)
        _require(report.ok, "; ".join(report.violations[:3]))
        return f"{len(d.rows)} rows"

    def pachner_suite(k: int) -> Callable[[], str]:
        def check() -> str:
            report = spot_check(d, k, sample_size=sample_size, seed=seed, jobs=jobs)
            _require(report.ok, f"{report.failed} of {report.total} sampled equations fail")
            return f"{report.passed}/{report.total} sampled"

        return check

    suites: list[tuple[str, Callable[[], str]]] = [
        ("validate-data", dataset_suite),
        ("exactnum", lambda: _exactnum_suite(seed)),
        ("gram", _gram_suite),
        ("mednykh", _mednykh_suite),
    ]
    for k in range(1, (d.n + 3) // 2 + 1):
        suites.append((f"pachner-{format_move(split_for(d, k).type)}", pachner_suite(k)))

    report = SelftestReport(suites=[_run(name, check) for name, check in suites])
    logger.info(
        "cli",
        "Selftest finished",
        context={"passed": sum(s.passed for s in report.suites), "suites": len(report.suites)},
    )
    return report
