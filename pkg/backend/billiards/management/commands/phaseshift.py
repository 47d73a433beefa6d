from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Print the phase shift of channel n and the adjacent-channel difference."

    subcommand = "phaseshift"

    def add_model_arguments(self, parser):
        self.add_level_argument(parser, help_text="Channel index.")
