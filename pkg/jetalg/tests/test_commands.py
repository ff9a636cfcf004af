import json
import shutil
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from .test_config import DEFAULT_RANGES

SMALL = dict(m1='-1..1', m2='0..1', s1='-1..1', s2='0..1')


class EvalCommandTests(SimpleTestCase):
    def call(self, *args, **options):
        out = StringIO()
        call_command('eval', *args, stdout=out, **options)
        return out.getvalue().strip()

    def test_weyl(self):
        self.assertEqual(self.call('d1 * t1', algebra='D'), 't1*d1 + 1')

    def test_lie(self):
        self.assertEqual(self.call('[X2((0,1)), X2((0,2))]', algebra='L'), 'X2(0,2)')

    def test_syntax_error(self):
        with self.assertRaises(CommandError) as cm:
            self.call('t1^(1/2)', algebra='A')
        self.assertEqual(cm.exception.returncode, 2)
        self.assertIn('ExprSyntaxError', str(cm.exception))

    def test_elaboration_error(self):
        with self.assertRaises(CommandError) as cm:
            self.call('d1', algebra='A')
        self.assertEqual(cm.exception.returncode, 2)
        self.assertIn("'d1'", str(cm.exception))


@override_settings(**DEFAULT_RANGES)
class VerifyCommandTests(SimpleTestCase):
    def call(self, *args, **options):
        out = StringIO()
        call_command('verify', *args, stdout=out, stderr=StringIO(), **options)
        return out.getvalue()

    def test_json_report(self):
        payload = json.loads(self.call('lemma-3.2', **SMALL))
        self.assertEqual(payload['check'], 'lemma-3.2')
        self.assertTrue(payload['pass'])
        self.assertEqual(payload['cases'], 3 * 6 * 6)
        self.assertEqual(payload['failures'], [])

    def test_text_report(self):
        text = self.call('lemma-3.1', format='text', **SMALL)
        self.assertIn('lemma-3.1  PASS', text)
        self.assertIn('m1=-1..1', text)

    def test_negative_control_exits_cleanly_when_it_fails(self):
        payload = json.loads(self.call('negative-control', **SMALL))
        self.assertFalse(payload['pass'])
        self.assertTrue(payload['failures'])

    def test_negative_control_text_lists_counterexamples(self):
        text = self.call('negative-control', format='text', **SMALL)
        self.assertIn('FAIL', text)
        self.assertIn('expected:', text)
        self.assertNotIn('unexpected', text)

    def test_jobs_do_not_change_the_report(self):
        reports = []
        for jobs in ('1', '3'):
            payload = json.loads(self.call('negative-control', jobs=jobs, **SMALL))
            payload.pop('elapsed_ms')
            reports.append(payload)
        self.assertEqual(reports[0], reports[1])

    def test_malformed_range(self):
        with self.assertRaises(CommandError) as cm:
            self.call('lemma-3.2', m1='3')
        self.assertEqual(cm.exception.returncode, 2)

    def test_empty_range(self):
        with self.assertRaises(CommandError) as cm:
            self.call('lemma-3.2', m1='2..1')
        self.assertEqual(cm.exception.returncode, 2)

    def test_unknown_check(self):
        with self.assertRaises(CommandError) as cm:
            self.call('lemma-9.9')
        self.assertEqual(cm.exception.returncode, 2)

    def test_zero_samples(self):
        with self.assertRaises(CommandError) as cm:
            self.call('weyl-assoc', samples='0')
        self.assertEqual(cm.exception.returncode, 2)

    def test_save(self):
        directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, directory)
        with override_settings(JETALG_REPORT_DIR=directory):
            self.call('lemma-3.3', save=True, **SMALL)
        saved = json.loads((Path(directory) / 'lemma-3.3.json').read_text())
        self.assertTrue(saved['pass'])


@override_settings(**DEFAULT_RANGES)
class ReportCommandTests(SimpleTestCase):
    def test_selected_checks(self):
        out = StringIO()
        call_command('report', 'lemma-3.1', 'negative-control', stdout=out, stderr=StringIO())
        payload = json.loads(out.getvalue())
        self.assertEqual([item['check'] for item in payload], ['lemma-3.1', 'negative-control'])
        self.assertEqual([item['pass'] for item in payload], [True, False])

    def test_needs_checks_or_all(self):
        with self.assertRaises(CommandError) as cm:
            call_command('report', stdout=StringIO(), stderr=StringIO())
        self.assertEqual(cm.exception.returncode, 2)

    def test_unknown_check(self):
        with self.assertRaises(CommandError) as cm:
            call_command('report', 'nope', stdout=StringIO(), stderr=StringIO())
        self.assertEqual(cm.exception.returncode, 2)
