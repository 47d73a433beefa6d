# billiards/management/base.py
from dataclasses import fields
from pathlib import Path

from django.core.management.base import BaseCommand

from billiards.application.curves import INCIDENCES
from billiards.application.use_cases import OUTPUT_FORMATS, RunConfig, run
from config.interfaces.cli.exceptions import command_error_for
from core.exceptions import DomainError

RUN_CONFIG_FIELDS = {f.name for f in fields(RunConfig)}


class BilliardsCommand(BaseCommand):
    """
    Shared plumbing for the pi-billiards subcommands.

    Subclasses name their subcommand and add their own options; parsed
    options whose names match RunConfig fields are passed through.
    """

    subcommand: str = ""
    uses_geometry = True
    writes_curve = False

    def add_arguments(self, parser):
        if self.uses_geometry:
            geometry = parser.add_mutually_exclusive_group()
            geometry.add_argument("--beta", type=float, help="Wedge angle in radians.")
            geometry.add_argument(
                "--mass-ratio", dest="mass_ratio", help="M/m as an integer, decimal or p/q."
            )
            geometry.add_argument("--N", dest="N", type=int, help="Digit count; M/m = 100**N.")
            geometry.add_argument(
                "--params",
                dest="params_json",
                help='JSON {"M": ..., "m": ..., "hbar": ...} or a path to a .json file.',
            )

        self.add_model_arguments(parser)

        if self.writes_curve:
            parser.add_argument("--samples", type=int, help="Number of curve samples.")
            parser.add_argument("--out", type=Path, help="Output file (stdout if omitted).")
            parser.add_argument(
                "--format", dest="output_format", choices=OUTPUT_FORMATS, default="csv"
            )
        parser.add_argument(
            "--digits",
            dest="significant_digits",
            type=int,
            help="Significant digits of numeric output.",
        )
        parser.add_argument("--manifest", type=Path, help="Write a JSON manifest here.")

    def add_model_arguments(self, parser):
        """Hook for subcommand-specific options."""

    @staticmethod
    def add_level_argument(parser, *, help_text="Lower quantum number / channel index."):
        parser.add_argument("--n", dest="n", type=int, required=True, help=help_text)

    @staticmethod
    def add_incidence_arguments(parser):
        parser.add_argument("--v0", type=float, help="Initial big-ball speed.")
        parser.add_argument("--x0", type=float, help="Initial big-ball position.")
        parser.add_argument("--y0", type=float, help="Initial small-ball position.")
        parser.add_argument("--incidence", choices=INCIDENCES, default="standard")

    def build_config(self, options) -> RunConfig:
        values = {
            name: value
            for name, value in options.items()
            if name in RUN_CONFIG_FIELDS and value is not None
        }
        return RunConfig(subcommand=self.subcommand, **values)

    def handle(self, *args, **options):
        try:
            outcome = run(self.build_config(options))
        except DomainError as exc:
            raise command_error_for(exc) from exc

        for line in outcome.lines:
            self.stdout.write(line)
