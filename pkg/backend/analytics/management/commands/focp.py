from analytics.management.base import ScenarioCommand
from analytics.models import RunConfig
from analytics.services import ControlService


class Command(ScenarioCommand):
    help = 'Compute the optimal treatment control by forward-backward sweep'
    scenario = RunConfig.FOCP
    run_options = ('preset', 'alpha', 'n', 'tfinal', 'out', 'predictor')
    sweep_options = ('k1', 'k2', 'tmax', 'tol', 'relaxation', 'max_iter')

    def execute_run(self, run):
        outcome = ControlService.optimize(run)
        result = outcome.result
        self.stdout.write(f'objective (controlled): {outcome.controlled_objective:.9f}')
        self.stdout.write(f'objective (uncontrolled): {outcome.uncontrolled_objective:.9f}')
        self.stdout.write(f'iterations: {result.iterations}')
        self.stdout.write(f'converged: {"yes" if result.converged else "no"}')
        if not result.converged:
            self.stderr.write(
                self.style.WARNING(f'Sweep did not converge; last change {result.metric:.3e}%')
            )
