# analytics/cli.py
import os
import sys

from django.core.management import ManagementUtility

SUBCOMMANDS = ('simulate', 'compare', 'focp', 'equilibrium', 'plot')
PROG = 'fracsim'


def usage():
    lines = [f"usage: {PROG} <subcommand> [options]", '', 'subcommands:']
    lines.extend(f"  {name}" for name in SUBCOMMANDS)
    lines.append(f"\nrun '{PROG} <subcommand> --help' for the options of one subcommand")
    return '\n'.join(lines)


def cli_main(argv=None):
    """Run one toolkit subcommand and return its exit code."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv[:1] in (['-h'], ['--help']):
        sys.stdout.write(usage() + '\n')
        return 0
    if not argv or argv[0] not in SUBCOMMANDS:
        if argv:
            sys.stderr.write(f"unknown subcommand: {argv[0]}\n")
        sys.stderr.write(usage() + '\n')
        return 2

    try:
        ManagementUtility([PROG, *argv]).execute()
    except SystemExit as stop:
        if stop.code is None:
            return 0
        return stop.code if isinstance(stop.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(cli_main())
