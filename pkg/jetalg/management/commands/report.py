from django.core.management.base import BaseCommand, CommandError

from jetalg.checks import get_check, run_catalog
from jetalg.exceptions import InvalidConfig, UnknownCheck
from jetalg.forms import CheckConfigForm
from jetalg.reports import render, save_report


class Command(BaseCommand):
    help = 'Run several checks, or the whole catalog, with default ranges'

    def add_arguments(self, parser):
        parser.add_argument('check_ids', nargs='*', help='Checks to run')
        parser.add_argument('--all', action='store_true', help='Run every check of the catalog')
        parser.add_argument('--jobs', help='Worker processes per sweep (default JETALG_JOBS)')
        parser.add_argument('--format', default='json', help='json or text')
        parser.add_argument('--save', action='store_true',
                            help='Also write each report to JETALG_REPORT_DIR/<check>.json')

    def handle(self, *args, **options):
        if options['all'] == bool(options['check_ids']):
            raise CommandError('Name the checks to run or pass --all, not both', returncode=2)

        form = CheckConfigForm(data={
            name: options[name] for name in ('jobs', 'format') if options.get(name) is not None
        })
        if not form.is_valid():
            raise CommandError(form.errors_text(), returncode=2)

        try:
            reports = run_catalog(options['check_ids'] or None, **form.overrides())
        except (UnknownCheck, InvalidConfig) as e:
            raise CommandError(str(e), returncode=2)

        entries = [(report, get_check(report.check)) for report in reports]
        self.stdout.write(render(entries, form.cleaned_data['format'], many=True))
        if options['save']:
            for report in reports:
                save_report(report)
            self.stderr.write(self.style.SUCCESS(f"Saved {len(reports)} reports"))

        unexpected = [report.check for report, check in entries if report.passed != check.expect_pass]
        if unexpected:
            raise CommandError(f"Unexpected outcome for: {', '.join(unexpected)}", returncode=1)
        self.stderr.write(self.style.SUCCESS(f"{len(reports)} checks, all as expected"))
