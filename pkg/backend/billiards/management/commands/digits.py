from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Print floor(pi * 10**N), certified by collision counting and a Machin series."

    subcommand = "digits"
    uses_geometry = False

    def add_model_arguments(self, parser):
        parser.add_argument("--N", dest="N", type=int, required=True, help="Number of decimals.")
