from analytics.management.base import ScenarioCommand
from analytics.models import RunConfig
from analytics.services import ComparisonService


class Command(ScenarioCommand):
    help = 'Compare Euler and PECE runs against a refined PECE reference'
    scenario = RunConfig.COMPARE
    run_options = ('preset', 'alpha', 'n', 'tfinal', 'out', 'predictor', 'refine')

    def execute_run(self, run):
        report = ComparisonService.compare(run)
        self.stdout.write(report.to_text())
        self.stdout.write(self.style.SUCCESS(f'Tables written to {run.output_dir}'))
