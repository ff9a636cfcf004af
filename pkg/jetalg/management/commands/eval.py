from django.core.management.base import BaseCommand, CommandError

from jetalg.exceptions import JetAlgError
from jetalg.expressions import Algebra, eval_expr


class Command(BaseCommand):
    help = 'Evaluate an expression in one of the algebras and print its canonical form'

    def add_arguments(self, parser):
        parser.add_argument('expression', help='For example "[X2((0,1)), X2((0,2))]"')
        parser.add_argument('--in', dest='algebra', required=True, choices=Algebra.values,
                            help='Target algebra')

    def handle(self, *args, **options):
        try:
            result = eval_expr(options['expression'], options['algebra'])
        except JetAlgError as e:
            raise CommandError(f"{type(e).__name__}: {e}", returncode=2)
        self.stdout.write(result)
