from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Sample the mean angle theta/beta of the sector scattering model against eta."

    subcommand = "quantum"
    writes_curve = True

    def add_model_arguments(self, parser):
        self.add_level_argument(parser)
        parser.add_argument("--k", type=float, help="Wavenumber (default 1).")
        parser.add_argument(
            "--trip",
            action="store_true",
            help="Signed eta over incident and outgoing waves instead of the incident leg.",
        )
