from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = (
        "Write the classical/semiclassical (fig3_*) and classical/quantum (fig5_*) "
        "comparison curves and a manifest into --out. Geometry defaults to beta = pi/10."
    )

    subcommand = "figures"
    writes_curve = True

    def add_model_arguments(self, parser):
        parser.add_argument("--x-min", dest="x_min", type=float, help="Retracing point.")
