from decouple import Csv

from analytics.management.base import ToolkitCommand
from analytics.plotting import emit_plot_script


class Command(ToolkitCommand):
    help = 'Write a gnuplot script drawing CSV columns against t'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--csv', action='append', help='trajectory CSV; repeat for an overlay')
        parser.add_argument('--columns', help='comma-separated column names, e.g. S,I')
        parser.add_argument('--out', help='script path')
        parser.add_argument('--title', help='plot title')

    def run(self, options):
        merged = self.merged_options(options, {'csv': Csv(), 'columns': Csv(), 'out': str, 'title': str})
        if not merged.get('csv') or not merged.get('out'):
            raise self.usage_error('--csv and --out are required')
        columns = merged.get('columns', [])
        if isinstance(columns, str):
            columns = Csv()(columns)
        path = emit_plot_script(merged['csv'], columns, merged['out'], title=merged.get('title'))
        self.stdout.write(self.style.SUCCESS(f'Wrote {path}'))
