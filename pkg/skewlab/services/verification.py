"""Randomized verification of every relation over seeded random inputs."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import TYPE_CHECKING, Any, Final, get_args

from skewlab.factory import (
    random_density,
    random_operator,
    random_params,
    stream_generator,
)
from skewlab.inequalities import (
    check_corollary1,
    check_corollary2,
    check_lemma1_product,
    check_lemma1_quadratic,
    check_lemma2,
    check_ordering,
    check_theorem1,
    check_theorem1_cross,
    check_theorem2,
    check_theorem2_cross,
)
from skewlab.models import SkewParams
from skewlab.settings import get_tolerances
from skewlab.types import RelationName
from skewlab.utils import utc_now_iso

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.random import Generator

    from skewlab.models import CheckResult, DensityOperator, HSOperator
    from skewlab.settings import Tolerances

logger = logging.getLogger(__name__)

#: Order of the relations in a report summary
RELATION_ORDER: Final[tuple[str, ...]] = get_args(RelationName)


class VerificationService:
    """
    Runs the inequality suite over random states, operators and exponents.

    Sample ``i`` of dimension ``d`` draws everything from the stream
    ``(seed, d, i)``, so any failing sample can be replayed on its own and
    the report does not depend on the number of threads.
    """

    #: The exponent pairs every sample is also checked at, for each relation
    THEOREM1_PAIR: Final[tuple[float, float]] = (0.55, 0.4)
    THEOREM2_PAIR: Final[tuple[float, float]] = (0.75, 0.2)
    #: Upper end of the scalars drawn for the lemmas valid on all of [0, inf)
    SCALAR_RANGE: Final[float] = 10.0

    def __init__(self, threads: int = 1, tolerances: Tolerances | None = None) -> None:
        """
        Initialize the service.

        Args:
            threads: Maximum number of worker threads
            tolerances: Kernel and slack tolerances; the configured ones if None

        """
        self.threads = max(1, threads)
        self.tolerances = tolerances or get_tolerances()

    def _relations(
        self,
        rho: DensityOperator,
        a: HSOperator,
        b: HSOperator,
        params: SkewParams,
        *,
        theorem: int,
    ) -> list[CheckResult]:
        tol = self.tolerances
        if theorem == 1:
            checks = (check_theorem1, check_corollary1)
            cross = check_theorem1_cross
        else:
            checks = (check_theorem2, check_corollary2)
            cross = check_theorem2_cross
        results = [check(rho, a, b, params, audit=True, tolerances=tol) for check in checks]
        results.append(cross(rho, a, b, params, tolerances=tol))
        return results

    def _lemmas(self, generator: Generator) -> list[CheckResult]:
        """
        The scalar lemmas on the parameter ranges where each one holds.

        The product form is drawn on ``alpha + beta = 1``, the quadratic form
        on ``x, y`` in ``[0, 1]`` and the last form with ``beta <= 2 alpha``.
        """
        x, y = (float(v) for v in generator.uniform(0.0, self.SCALAR_RANGE, 2))
        alpha = float(generator.uniform(0.5, 1.0))
        product = check_lemma1_product(x, y, SkewParams(alpha, 1.0 - alpha))

        u, v = (float(value) for value in generator.uniform(0.0, 1.0, 2))
        quadratic = check_lemma1_quadratic(u, v, random_params("theorem1", generator))

        alpha = float(generator.uniform(0.0, 1.0))
        beta = float(generator.uniform(0.0, 1.0)) * min(2 * alpha, 1.0 - alpha)
        x, y = (float(v) for v in generator.uniform(0.0, self.SCALAR_RANGE, 2))
        lemma = check_lemma2(x, y, SkewParams(alpha, beta))
        return [product, quadratic, lemma]

    def sample(self, seed: int, dim: int, index: int) -> list[CheckResult]:
        """
        Run every check on one random instance.

        Args:
            seed: The run seed
            dim: The Hilbert space dimension
            index: The sample index within the dimension

        Raises:
            NumericalInconsistency: the two computation paths disagree

        Returns:
            The checks, in a fixed order

        """
        generator = stream_generator(seed, dim, index)
        rank = int(generator.integers(1, dim + 1))
        rho = random_density(dim, rank, generator)
        a = random_operator(dim, generator)
        b = random_operator(dim, generator)
        params1 = random_params("theorem1", generator)
        params2 = random_params("theorem2", generator)

        results = check_ordering(rho, a, params1, tolerances=self.tolerances)
        results += self._relations(rho, a, b, params1, theorem=1)
        results += self._relations(rho, a, b, SkewParams(*self.THEOREM1_PAIR), theorem=1)
        results += self._relations(rho, a, b, params2, theorem=2)
        results += self._relations(rho, a, b, SkewParams(*self.THEOREM2_PAIR), theorem=2)
        results += self._lemmas(generator)
        return results

    def run(self, dims: Sequence[int], samples: int, seed: int) -> dict[str, Any]:
        """
        Verify every relation on ``samples`` instances per dimension.

        Args:
            dims: Hilbert space dimensions, each at least 2
            samples: Number of instances per dimension
            seed: The run seed

        Raises:
            ValueError: ``samples`` is smaller than 1 or ``dims`` is empty

        Returns:
            The report: ``checks`` (one record per check, tagged with its
            ``dim`` and ``sample``), ``summary`` and ``timestamp``

        """
        if samples < 1:
            msg = f"samples must be at least 1, got {samples}"
            raise ValueError(msg)
        if not dims:
            msg = "at least one dimension is required"
            raise ValueError(msg)
        jobs = [(dim, index) for dim in dims for index in range(samples)]
        logger.info(
            f"Verifying {samples} sample(s) per dimension for dims {list(dims)} "
            f"with seed {seed}"
        )

        def work(job: tuple[int, int]) -> list[CheckResult]:
            return self.sample(seed, *job)

        if self.threads == 1:
            outcomes = [work(job) for job in jobs]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as executor:
                outcomes = list(executor.map(work, jobs))

        records: list[dict[str, Any]] = []
        for (dim, index), results in zip(jobs, outcomes, strict=True):
            for result in results:
                if not result.holds:
                    logger.warning(
                        f"{result.name} failed on dim={dim} sample={index}: "
                        f"slack={result.slack:.3e} tol={result.tol:.1e} "
                        f"digest={result.inputs_digest}"
                    )
                records.append({**result.to_json(), "dim": dim, "sample": index})
        summary = self.summarize(records)
        summary.update({"seed": seed, "dims": list(dims), "samples": samples})
        logger.info(
            f"Verified {summary['total']} checks, {summary['passed']} passed, "
            f"worst slack {summary['worst_slack']:.3e}"
        )
        return {"checks": records, "summary": summary, "timestamp": utc_now_iso()}

    @staticmethod
    def summarize(records: Sequence[dict[str, Any]]) -> dict[str, Any]:
        """
        Summarize check records overall and per relation.

        Args:
            records: Check records as produced by :meth:`run`

        Returns:
            ``total``, ``passed``, ``worst_slack`` and ``by_relation``, the
            latter mapping each relation name to its ``count``, ``passed``
            and ``worst_slack``

        """
        by_relation: dict[str, dict[str, Any]] = {
            name: {"count": 0, "passed": 0, "worst_slack": None}
            for name in RELATION_ORDER
        }
        for record in records:
            entry = by_relation.setdefault(
                record["name"], {"count": 0, "passed": 0, "worst_slack": None}
            )
            entry["count"] += 1
            entry["passed"] += int(record["holds"])
            if entry["worst_slack"] is None or record["slack"] < entry["worst_slack"]:
                entry["worst_slack"] = record["slack"]
        slacks = [record["slack"] for record in records]
        return {
            "total": len(records),
            "passed": sum(int(record["holds"]) for record in records),
            "worst_slack": min(slacks) if slacks else None,
            "by_relation": {
                name: entry for name, entry in by_relation.items() if entry["count"]
            },
        }

    @staticmethod
    def all_passed(report: dict[str, Any]) -> bool:
        """Whether every check of ``report`` holds."""
        summary = report["summary"]
        return summary["passed"] == summary["total"]

    @staticmethod
    def write_report(report: dict[str, Any], filename: Path | str) -> Path:
        """
        Write a report as JSON.

        Raises:
            OSError: the file could not be written

        """
        path = Path(filename)
        with path.open("w", encoding="utf-8") as f:
            json.dump(report, f, indent=2)
            f.write("\n")
        return path
