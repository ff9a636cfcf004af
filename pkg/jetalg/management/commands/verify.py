from django.core.management.base import BaseCommand, CommandError

from jetalg.checks import CATALOG, get_check, run_check
from jetalg.exceptions import InvalidConfig, UnknownCheck
from jetalg.forms import CheckConfigForm
from jetalg.reports import render, save_report

FORM_OPTIONS = ('m1', 'm2', 's1', 's2', 'a1', 'a2', 'variant', 'rep', 'jobs', 'samples', 'seed', 'format')


class Command(BaseCommand):
    help = 'Run one check of the catalog and print its report'

    def add_arguments(self, parser):
        parser.add_argument('check_id', help=f"One of: {', '.join(CATALOG)}")
        parser.add_argument('--m1', help='Range lo..hi of m1 (default JETALG_M1_RANGE)')
        parser.add_argument('--m2', help='Range lo..hi of m2, nonnegative (default JETALG_M2_RANGE)')
        parser.add_argument('--s1', help='Range lo..hi of s1 (default JETALG_S1_RANGE)')
        parser.add_argument('--s2', help='Range lo..hi of s2, nonnegative (default JETALG_S2_RANGE)')
        parser.add_argument('--a1', help='Weight a1 of the module P, rational p/q')
        parser.add_argument('--a2', help='Weight a2 of the module P, rational p/q')
        parser.add_argument('--variant', help='poly, laurent or quotient')
        parser.add_argument('--rep', help='gl2-module: natural, adjoint or sym2')
        parser.add_argument('--jobs', help='Worker processes for the sweep (default JETALG_JOBS)')
        parser.add_argument('--samples', help='Random samples for sampled checks (default JETALG_SAMPLES)')
        parser.add_argument('--seed', help='Seed for sampled checks (default JETALG_SEED)')
        parser.add_argument('--format', default='json', help='json or text')
        parser.add_argument('--save', action='store_true',
                            help='Also write the report to JETALG_REPORT_DIR/<check>.json')

    def handle(self, *args, **options):
        form = CheckConfigForm(data={
            name: options[name] for name in FORM_OPTIONS if options.get(name) is not None
        })
        if not form.is_valid():
            raise CommandError(form.errors_text(), returncode=2)

        try:
            check = get_check(options['check_id'])
            report = run_check(form.to_config(check.check_id))
        except (UnknownCheck, InvalidConfig) as e:
            raise CommandError(str(e), returncode=2)

        self.stdout.write(render([(report, check)], form.cleaned_data['format']))
        if options['save']:
            path = save_report(report)
            self.stderr.write(self.style.SUCCESS(f"Saved {path}"))

        if report.passed != check.expect_pass:
            outcome = 'failed' if check.expect_pass else 'passed but was expected to fail'
            raise CommandError(f"{check.check_id} {outcome} ({len(report.failures)} failures)", returncode=1)
