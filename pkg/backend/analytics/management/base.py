# analytics/management/base.py
import logging

from decouple import Config, RepositoryEnv
from django.core.management.base import BaseCommand, CommandError

from fractional.exceptions import FracToolkitError
from fractional.solvers import Predictor
from analytics.serializers import RunConfigSerializer, describe_errors

logger = logging.getLogger('analytics')

# option name -> (cast, serializer field, help); sweep fields are nested under 'sweep'
RUN_OPTIONS = {
    'method': (str, 'method', 'integration method (euler or pece)'),
    'preset': (str, 'preset', 'parameter preset name'),
    'alpha': (float, 'alpha', 'derivative order in (0, 1]'),
    'n': (int, 'n_points', 'number of grid points'),
    'tfinal': (float, 't_final', 'final time in years'),
    'out': (str, 'output_dir', 'output directory'),
    'predictor': (str, 'predictor', 'PECE predictor variant'),
    'refine': (int, 'refine', 'reference refinement factor'),
}
SWEEP_OPTIONS = {
    'k1': (float, 'k1', 'weight of infectious individuals'),
    'k2': (float, 'k2', 'weight of treatment cost'),
    'tmax': (float, 't_max_control', 'upper bound of the treatment rate'),
    'tol': (float, 'tol_percent', 'convergence tolerance in percent'),
    'relaxation': (float, 'relaxation', 'weight of the new control per update'),
    'max_iter': (int, 'max_iterations', 'iteration limit'),
}
CHOICES = {
    'method': ['euler', 'pece'],
    'predictor': [predictor.value for predictor in Predictor],
}


def load_config_file(path):
    """decouple Config over a flat ``key = value`` file; environment variables still take precedence."""
    return Config(RepositoryEnv(str(path)))


class ToolkitCommand(BaseCommand):
    """Common flags, config-file merging and error translation."""

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--config', help='flat key = value file supplying any flag')

    def merged_options(self, options, names):
        """Explicit flags win over config-file values; unset options are dropped."""
        file_config = load_config_file(options['config']) if options.get('config') else None
        merged = {}
        for name, cast in names.items():
            value = options.get(name)
            if value is None and file_config is not None:
                raw = file_config(name, default=None)
                try:
                    value = None if raw is None else cast(raw)
                except ValueError:
                    raise self.usage_error(f"invalid-config: {name} = {raw!r}")
            if value is not None:
                merged[name] = value
        return merged

    def usage_error(self, message):
        """Print the command help and build the exit-2 CommandError."""
        self.print_help('manage.py', self.__module__.rsplit('.', 1)[-1])
        return CommandError(message, returncode=2)

    def handle(self, *args, **options):
        try:
            return self.run(options)
        except FracToolkitError as e:
            raise CommandError(str(e))
        except OSError as e:
            raise CommandError(f"io-error: {e}")

    def run(self, options):
        raise NotImplementedError


class ScenarioCommand(ToolkitCommand):
    scenario = None
    run_options = ()
    sweep_options = ()

    def add_arguments(self, parser):
        super().add_arguments(parser)
        for name in self.run_options:
            self._add_option(parser, name, RUN_OPTIONS[name])
        for name in self.sweep_options:
            self._add_option(parser, name, SWEEP_OPTIONS[name])

    def _add_option(self, parser, name, option):
        cast, _, help_text = option
        flag = '--' + name.replace('_', '-')
        if name in CHOICES:
            parser.add_argument(flag, dest=name, choices=CHOICES[name], help=help_text)
        else:
            parser.add_argument(flag, dest=name, type=cast, help=help_text)

    def build_run(self, options):
        casts = {name: RUN_OPTIONS[name][0] for name in self.run_options}
        casts.update({name: SWEEP_OPTIONS[name][0] for name in self.sweep_options})
        merged = self.merged_options(options, casts)

        data = {'scenario': self.scenario}
        for name in self.run_options:
            if name in merged:
                data[RUN_OPTIONS[name][1]] = merged[name]
        sweep = {SWEEP_OPTIONS[name][1]: merged[name] for name in self.sweep_options if name in merged}
        if sweep:
            data['sweep'] = sweep

        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise self.usage_error(describe_errors(serializer.errors))
        run = serializer.save()
        logger.debug(f"Run configuration: {run}")
        return run

    def run(self, options):
        self.execute_run(self.build_run(options))

    def execute_run(self, run):
        raise NotImplementedError
