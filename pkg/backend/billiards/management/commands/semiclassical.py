from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Sample the mean small-ball position y/x of the adiabatic model against alpha."

    subcommand = "semiclassical"
    writes_curve = True

    def add_model_arguments(self, parser):
        self.add_level_argument(parser)
        parser.add_argument("--x-min", dest="x_min", type=float, help="Retracing point.")
