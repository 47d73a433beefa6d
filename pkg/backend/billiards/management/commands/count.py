from billiards.management.base import BilliardsCommand


class Command(BilliardsCommand):
    help = "Print the closed-form collision count ceil(pi/beta) - 1."

    subcommand = "count"
