"""Sweeps and grids of the uncertainty relations over the state families."""

from __future__ import annotations

import csv
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from statistics import fmean
from typing import TYPE_CHECKING, Final, TextIO

import numpy as np

from skewlab.factory import example_operators
from skewlab.inequalities import (
    check_theorem1,
    check_theorem2,
    in_theorem1_domain,
    in_theorem2_domain,
)
from skewlab.models import DensityOperator, FamilyParam, SkewParams, SweepRow
from skewlab.models.params import SIMPLEX_EPS
from skewlab.quantities import u_quantity
from skewlab.settings import get_tolerances
from skewlab.types import Family

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

    from skewlab.settings import Tolerances

logger = logging.getLogger(__name__)

#: One point to evaluate: the family point, its state, alpha and beta
Point = tuple[FamilyParam, DensityOperator, float, float]


class SweepService:
    """
    Evaluates both uncertainty relations on the fixed operator pair.

    Points are evaluated on up to ``threads`` worker threads; results always
    come back in grid order, so serial and parallel runs write identical
    files.
    """

    #: The exponent pairs of the published family sweeps
    FIGURE_PAIRS: Final[tuple[tuple[float, float], ...]] = ((0.55, 0.4), (0.75, 0.2))
    #: The fixed states of the published alpha-beta grids
    FIGURE_GRIDS: Final[tuple[tuple[Family, float], ...]] = (
        (Family.WERNER, 0.3),
        (Family.WERNER, 0.9),
        (Family.ISOTROPIC, 0.4),
        (Family.ISOTROPIC, 0.7),
    )
    #: Name of the gap summary written by :meth:`figures`
    GAP_SUMMARY: Final[str] = "gap_summary.json"

    def __init__(self, threads: int = 1, tolerances: Tolerances | None = None) -> None:
        """
        Initialize the service.

        Args:
            threads: Maximum number of worker threads
            tolerances: Kernel and slack tolerances; the configured ones if None

        """
        self.threads = max(1, threads)
        self.tolerances = tolerances or get_tolerances()
        self.operators = example_operators()

    def evaluate(self, point: Point) -> SweepRow:
        """
        Evaluate one point.

        Cells outside the admissible simplex keep every value empty; a
        relation whose domain excludes ``(alpha, beta)`` keeps its right-hand
        side and gap empty.

        Args:
            point: The family point, its state, alpha and beta

        Returns:
            The row

        """
        family_param, state, alpha, beta = point
        row = SweepRow(
            family=family_param.family.value,
            param=family_param.value,
            alpha=alpha,
            beta=beta,
        )
        if min(alpha, beta) < -SIMPLEX_EPS or alpha + beta > 1 + SIMPLEX_EPS:
            return row
        params = SkewParams(alpha, beta)
        a, b = self.operators
        values: dict[str, float] = {}
        relations = (
            ("14", check_theorem1, in_theorem1_domain),
            ("17", check_theorem2, in_theorem2_domain),
        )
        for suffix, check, in_domain in relations:
            if not in_domain(params):
                continue
            result = check(state, a, b, params, tolerances=self.tolerances)
            values[f"lhs{suffix}"] = result.lhs
            values[f"rhs{suffix}"] = result.rhs
            values[f"gap{suffix}"] = result.slack
        lhs = values.get("lhs17")
        if lhs is None:
            lhs = self._u_product(state, params)
        values.setdefault("lhs14", lhs)
        values.setdefault("lhs17", lhs)
        logger.debug(
            f"{row.family}({row.param:g}) alpha={alpha:g} beta={beta:g}: {values}"
        )
        return replace(row, **values)

    def _u_product(self, state: DensityOperator, params: SkewParams) -> float:
        a, b = self.operators
        u_a = u_quantity(state, a, params, tolerances=self.tolerances).real
        u_b = u_quantity(state, b, params, tolerances=self.tolerances).real
        return u_a * u_b

    def _run(self, points: Sequence[Point]) -> list[SweepRow]:
        if self.threads == 1:
            return [self.evaluate(point) for point in points]
        with ThreadPoolExecutor(max_workers=self.threads) as executor:
            return list(executor.map(self.evaluate, points))

    def sweep(
        self,
        family: Family | str,
        start: float,
        end: float,
        steps: int,
        pairs: Iterable[tuple[float, float]],
    ) -> list[SweepRow]:
        """
        Sweep the family parameter at fixed exponent pairs.

        Args:
            family: The state family
            start: First family parameter
            end: Last family parameter
            steps: Number of parameter values, endpoints included
            pairs: The ``(alpha, beta)`` pairs evaluated at every parameter

        Raises:
            ValueError: ``steps`` is smaller than 1
            ParamOutOfRange: ``start`` or ``end`` is outside ``[0, 1]``
            InvalidParams: a pair is outside the admissible simplex

        Returns:
            Rows ordered by parameter, then by pair order

        """
        if steps < 1:
            msg = f"steps must be at least 1, got {steps}"
            raise ValueError(msg)
        family = Family(family)
        FamilyParam(family, start)
        FamilyParam(family, end)
        checked = [SkewParams(alpha, beta) for alpha, beta in pairs]
        points: list[Point] = []
        for value in np.linspace(start, end, steps):
            family_param = FamilyParam(family, float(value))
            state = family_param.state()
            points.extend(
                (family_param, state, params.alpha, params.beta) for params in checked
            )
        logger.info(
            f"Sweeping {family.value} over [{start:g}, {end:g}] in {steps} steps "
            f"at {len(checked)} exponent pair(s)"
        )
        rows = self._run(points)
        logger.info(f"Evaluated {len(rows)} sweep rows")
        return rows

    def grid(
        self,
        family: Family | str,
        param: float,
        alpha_steps: int,
        beta_steps: int,
    ) -> list[SweepRow]:
        """
        Evaluate a fixed state over an alpha-beta grid on ``[0, 1]^2``.

        Cells outside the admissible simplex are kept with empty values so the
        grid stays rectangular.

        Args:
            family: The state family
            param: The family parameter
            alpha_steps: Number of alpha values
            beta_steps: Number of beta values

        Raises:
            ValueError: a step count is smaller than 1
            ParamOutOfRange: ``param`` is outside ``[0, 1]``

        Returns:
            Rows ordered by alpha, then beta

        """
        if alpha_steps < 1 or beta_steps < 1:
            msg = f"grid steps must be at least 1, got {alpha_steps}x{beta_steps}"
            raise ValueError(msg)
        family_param = FamilyParam(family, param)
        state = family_param.state()
        points: list[Point] = [
            (family_param, state, float(alpha), float(beta))
            for alpha in np.linspace(0.0, 1.0, alpha_steps)
            for beta in np.linspace(0.0, 1.0, beta_steps)
        ]
        logger.info(
            f"Grid for {family_param.family.value}({param:g}): "
            f"{alpha_steps}x{beta_steps} cells"
        )
        return self._run(points)

    @staticmethod
    def write_csv(rows: Iterable[SweepRow], target: Path | str | TextIO) -> None:
        """
        Write rows as CSV with ``\\n`` line endings.

        Args:
            rows: The rows, written in order
            target: A path, or an open text stream

        Raises:
            OSError: the file could not be written

        """
        if isinstance(target, Path | str):
            with Path(target).open("w", encoding="utf-8", newline="") as f:
                SweepService.write_csv(rows, f)
            return
        writer = csv.writer(target, lineterminator="\n")
        writer.writerow(SweepRow.HEADER)
        writer.writerows(row.to_csv_row() for row in rows)

    @staticmethod
    def mean_gap(rows: Iterable[SweepRow], column: str = "gap14") -> float | None:
        """
        Mean of a gap column over the rows where it is defined.

        Args:
            rows: The rows
            column: ``"gap14"`` or ``"gap17"``

        Returns:
            The mean, or None if no row defines the column

        """
        gaps = [getattr(row, column) for row in rows]
        defined = [gap for gap in gaps if gap is not None]
        return fmean(defined) if defined else None

    def figures(
        self, out_dir: Path | str, steps: int = 101, grid_steps: int = 50
    ) -> dict[str, Path]:
        """
        Write the data behind the published family sweeps and grids.

        Writes one sweep per family (both exponent pairs), one grid per fixed
        state, and ``gap_summary.json`` with the mean gap of the first
        relation over each grid.  The gaps are reported, never asserted.

        Args:
            out_dir: Output directory, created if missing
            steps: Number of family parameter values of the sweeps
            grid_steps: Number of alpha and of beta values of the grids

        Raises:
            OSError: a file could not be written

        Returns:
            Written paths keyed by dataset name

        """
        directory = Path(out_dir)
        directory.mkdir(parents=True, exist_ok=True)
        written: dict[str, Path] = {}
        for family in Family:
            rows = self.sweep(family, 0.0, 1.0, steps, self.FIGURE_PAIRS)
            name = f"{family.value}_sweep"
            written[name] = directory / f"{name}.csv"
            self.write_csv(rows, written[name])
        summary: dict[str, dict[str, float | None]] = {}
        for family, value in self.FIGURE_GRIDS:
            rows = self.grid(family, value, grid_steps, grid_steps)
            name = f"{family.value}_grid_{value:g}"
            written[name] = directory / f"{name}.csv"
            self.write_csv(rows, written[name])
            summary.setdefault(family.value, {})[f"{value:g}"] = self.mean_gap(rows)
        written["gap_summary"] = directory / self.GAP_SUMMARY
        with written["gap_summary"].open("w", encoding="utf-8") as f:
            json.dump(summary, f, indent=2, sort_keys=True)
            f.write("\n")
        logger.info(f"Wrote {len(written)} figure datasets to {directory!s}")
        return written
