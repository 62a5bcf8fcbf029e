# analytics/services.py
import logging
from dataclasses import dataclass
from pathlib import Path

from epidemic.dynamics import state_field
from epidemic.equilibrium import endemic_equilibrium, field_residual
from epidemic.presets import PUBLISHED_INITIAL_STATE
from epidemic.sweep import objective, run_sweep
from epidemic.models import ControlSignal
from fractional.exceptions import FracToolkitError
from fractional.solvers import solve_euler, solve_pece
from .exporters import write_trajectory_csv
from .plotting import emit_plot_script
from .reports import compare_report

logger = logging.getLogger('analytics')


def _output_dir(run):
    path = Path(run.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


class SimulationService:
    """Service class for single solver runs"""

    @staticmethod
    def solve(params, grid, method='pece', predictor=None, y0=PUBLISHED_INITIAL_STATE):
        field = state_field(params)
        if method == 'euler':
            return solve_euler(field, y0.as_array(), grid)
        if predictor is None:
            return solve_pece(field, y0.as_array(), grid)
        return solve_pece(field, y0.as_array(), grid, predictor)

    @staticmethod
    def simulate(run):
        """Solve the uncontrolled model and write ``<method>.csv``."""
        try:
            trajectory = SimulationService.solve(run.params, run.grid, run.method, run.predictor)
            path = write_trajectory_csv(trajectory, _output_dir(run) / f"{run.method}.csv")
            return trajectory, path
        except (FracToolkitError, OSError) as e:
            logger.error(f"Simulation error: {str(e)}")
            raise


class ComparisonService:
    """Service class for Euler / PECE accuracy tables"""

    @staticmethod
    def compare(run):
        try:
            euler = SimulationService.solve(run.params, run.grid, 'euler')
            pece = SimulationService.solve(run.params, run.grid, 'pece', run.predictor)
            fine = SimulationService.solve(run.params, run.reference_grid, 'pece', run.predictor)
            reference = fine.downsample(run.refine)
            report = compare_report(euler, pece, reference)

            output_dir = _output_dir(run)
            csv_paths = [
                write_trajectory_csv(trajectory, output_dir / f"{name}.csv")
                for name, trajectory in (('euler', euler), ('pece', pece), ('reference', reference))
            ]
            for column in euler.names:
                emit_plot_script(
                    csv_paths,
                    [column],
                    output_dir / f"compare_{column}.gp",
                    title=f"{column}(t): Euler and PECE against the refined reference",
                )
            (output_dir / 'compare_table.txt').write_text(report.to_text(), encoding='utf-8')
            (output_dir / 'compare_table.csv').write_text(report.to_csv(), encoding='utf-8')
            logger.info(f"Comparison tables written to {output_dir}")
            return report
        except (FracToolkitError, OSError) as e:
            logger.error(f"Comparison error: {str(e)}")
            raise


@dataclass(frozen=True, eq=False)
class ControlOutcome:
    result: object
    uncontrolled: object
    controlled_objective: float
    uncontrolled_objective: float


class ControlService:
    """Service class for the optimal treatment sweep"""

    @staticmethod
    def optimize(run):
        try:
            config = run.sweep
            grid = run.grid
            result = run_sweep(run.params, PUBLISHED_INITIAL_STATE, grid, config)
            uncontrolled = SimulationService.solve(run.params, grid, 'pece', config.predictor)
            outcome = ControlOutcome(
                result=result,
                uncontrolled=uncontrolled,
                controlled_objective=result.objective,
                uncontrolled_objective=objective(
                    uncontrolled, ControlSignal.zeros(grid), config.k1, config.k2
                ),
            )
            ControlService._export(outcome, _output_dir(run))
            return outcome
        except (FracToolkitError, OSError) as e:
            logger.error(f"Control sweep error: {str(e)}")
            raise

    @staticmethod
    def _export(outcome, output_dir):
        result = outcome.result
        controlled_csv = write_trajectory_csv(
            result.state, output_dir / 'focp.csv', control=result.control, costate=result.costate
        )
        uncontrolled_csv = write_trajectory_csv(outcome.uncontrolled, output_dir / 'uncontrolled.csv')
        for column in result.state.names:
            emit_plot_script(
                [controlled_csv, uncontrolled_csv],
                [column],
                output_dir / f"focp_{column}.gp",
                title=f"{column}(t) with and without treatment",
            )
        emit_plot_script(controlled_csv, ['T'], output_dir / 'focp_control.gp', title='Optimal treatment T(t)')


class EquilibriumService:
    """Service class for the endemic fixed point"""

    @staticmethod
    def compute(run):
        try:
            params = run.params.autonomous()
            state = endemic_equilibrium(params)
            return state, field_residual(params, state)
        except FracToolkitError as e:
            logger.error(f"Equilibrium error: {str(e)}")
            raise
