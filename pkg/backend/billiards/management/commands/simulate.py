from pathlib import Path

from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Run the event-driven billiard; optionally write the event trace and y/x curve."

    subcommand = "simulate"
    writes_curve = True

    def add_model_arguments(self, parser):
        self.add_incidence_arguments(parser)
        parser.add_argument(
            "--trace",
            dest="trace_out",
            type=Path,
            help="CSV of events (index,kind,t,x,y,vx,vy).",
        )
