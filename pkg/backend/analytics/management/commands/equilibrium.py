from analytics.management.base import ScenarioCommand
from analytics.models import RunConfig
from analytics.services import EquilibriumService


class Command(ScenarioCommand):
    help = 'Print the endemic equilibrium of the model with seasonal forcing removed'
    scenario = RunConfig.EQUILIBRIUM
    run_options = ('preset', 'alpha')

    def execute_run(self, run):
        state, residual = EquilibriumService.compute(run)
        for name in ('S', 'E', 'I', 'R'):
            self.stdout.write(f'{name} = {getattr(state, name):.12f}')
        self.stdout.write(f'residual = {residual:.3e}')
