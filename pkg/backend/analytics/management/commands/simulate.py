from analytics.management.base import ScenarioCommand
from analytics.models import RunConfig
from analytics.services import SimulationService


class Command(ScenarioCommand):
    help = 'Solve the seasonal SEIRS model with one method and write its trajectory as CSV'
    scenario = RunConfig.SIMULATE
    run_options = ('method', 'preset', 'alpha', 'n', 'tfinal', 'out', 'predictor')

    def execute_run(self, run):
        trajectory, path = SimulationService.simulate(run)
        self.stdout.write(
            self.style.SUCCESS(f'Wrote {len(trajectory.times)} nodes ({run.method}) to {path}')
        )
