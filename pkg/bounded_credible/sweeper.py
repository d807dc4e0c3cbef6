import asyncio
import logging
from asyncio import CancelledError
from functools import partial
from typing import Optional, Sequence, Tuple

from bounded_credible.coverage import (
    DEFAULT_QUADRATURE_NODES,
    build_report,
    coverage_mc,
    coverage_quadrature,
    ensure_admissible,
    tau_grid,
)
from bounded_credible.schemas.coverage import CoverageReport
from bounded_credible.schemas.pivot_models import PivotModel
from bounded_credible.schemas.spending import SpendingFunction

logger = logging.getLogger(__name__)

PointResult = Tuple[float, float, Optional[float]]


class CoverageSweeper:
    """
    Evaluates coverage at every grid point as its own task. Point i draws from
    the stream derived from (seed, i), so results do not depend on scheduling.
    """

    def __init__(
        self,
        max_concurrency: int = 4,
        quadrature_nodes: int = DEFAULT_QUADRATURE_NODES,
    ):
        self.max_concurrency = max_concurrency
        self.quadrature_nodes = quadrature_nodes

    async def sweep(
        self,
        model: PivotModel,
        spending: SpendingFunction,
        alpha: float,
        grid: Sequence[float],
        replicates: int,
        seed: int,
        quadrature: bool = True,
    ) -> CoverageReport:
        ensure_admissible(spending, model)

        use_quadrature = quadrature and model.constant_a2
        semaphore = asyncio.Semaphore(self.max_concurrency)

        tasks = [
            asyncio.ensure_future(
                self.safe_evaluate_point(
                    semaphore,
                    model,
                    spending,
                    alpha,
                    float(tau),
                    index,
                    replicates,
                    seed,
                    use_quadrature,
                )
            )
            for index, tau in enumerate(grid)
        ]
        logger.info(
            f"Gathered {len(tasks)} grid points for {model.name} with {spending.label}"
        )

        try:
            results = await asyncio.gather(*tasks)
        except CancelledError:
            logger.info("Requested to exit, cleaning up...")
            raise
        except Exception as e:
            logger.error(f"Sweep exited due to {type(e)}")
            raise

        logger.info(f"Finished sweep of {len(tasks)} grid points")

        return build_report(
            model,
            spending,
            alpha,
            grid,
            [(estimate, std_error) for estimate, std_error, _ in results],
            [value for _, _, value in results] if use_quadrature else None,
            replicates,
            seed,
        )

    async def safe_evaluate_point(
        self,
        semaphore: asyncio.Semaphore,
        model: PivotModel,
        spending: SpendingFunction,
        alpha: float,
        tau: float,
        index: int,
        replicates: int,
        seed: int,
        use_quadrature: bool,
    ) -> PointResult:
        async with semaphore:
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(
                None,
                partial(
                    self.evaluate_point,
                    model,
                    spending,
                    alpha,
                    tau,
                    index,
                    replicates,
                    seed,
                    use_quadrature,
                ),
            )

    def evaluate_point(
        self,
        model: PivotModel,
        spending: SpendingFunction,
        alpha: float,
        tau: float,
        index: int,
        replicates: int,
        seed: int,
        use_quadrature: bool,
    ) -> PointResult:
        estimate, std_error = coverage_mc(
            model,
            spending,
            alpha,
            tau,
            replicates,
            seed,
            stream_index=index,
            check_admissible=False,
        )

        quadrature = None
        if use_quadrature:
            quadrature = coverage_quadrature(
                model, spending, alpha, tau, nodes=self.quadrature_nodes
            )

        return estimate, std_error, quadrature


def theta_sweep(
    model: PivotModel,
    spending: SpendingFunction,
    alpha: float,
    tau_min: float,
    tau_max: float,
    grid_points: int,
    replicates: int,
    seed: int,
    quadrature: bool = True,
    quadrature_nodes: int = DEFAULT_QUADRATURE_NODES,
    max_concurrency: int = 4,
) -> CoverageReport:
    grid = tau_grid(tau_min, tau_max, grid_points)
    sweeper = CoverageSweeper(
        max_concurrency=max_concurrency, quadrature_nodes=quadrature_nodes
    )

    return asyncio.run(
        sweeper.sweep(
            model, spending, alpha, grid, replicates, seed, quadrature=quadrature
        )
    )
