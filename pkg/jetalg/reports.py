import json
import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from django.conf import settings
from django.core.files.base import ContentFile
from django.core.files.storage import FileSystemStorage
from django.template.loader import render_to_string

logger = logging.getLogger(__name__)


class Failure(NamedTuple):
    """One failing case: its key and the two renderings that should have matched"""
    key: str
    expected: str
    actual: str


@dataclass
class Report:
    """
    Outcome of one check.

    A report passes exactly when it lists no failures; whether that is the
    outcome the catalog expects is decided by the caller.
    """
    check: str
    config: dict
    cases: int
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            'check': self.check,
            'config': self.config,
            'cases': self.cases,
            'failures': [failure._asdict() for failure in self.failures],
            'elapsed_ms': self.elapsed_ms,
            'pass': self.passed,
        }


def render_json(payload):
    """Stable JSON for a report or a list of reports"""
    if isinstance(payload, Report):
        payload = payload.to_dict()
    elif isinstance(payload, list):
        payload = [item.to_dict() if isinstance(item, Report) else item for item in payload]
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def report_storage():
    return FileSystemStorage(location=settings.JETALG_REPORT_DIR)


def save_report(report):
    """
    Write report as <check>.json under JETALG_REPORT_DIR, replacing the
    previous file for the same check. Returns the absolute path.
    """
    storage = report_storage()
    name = f"{report.check}.json"
    if storage.exists(name):
        storage.delete(name)
    saved = storage.save(name, ContentFile(render_json(report).encode('utf-8')))
    path = storage.path(saved)
    logger.info(f"Saved report {report.check} to {path}")
    return path


def render_text(entries):
    """
    Human-readable table for (report, check) pairs, through
    templates/jetalg/report.txt. Only the first JETALG_TEXT_FAILURES
    failures of each report are listed.
    """
    limit = settings.JETALG_TEXT_FAILURES
    context = {
        'entries': [
            {
                'report': report,
                'title': check.title,
                'expect_pass': check.expect_pass,
                'shown': report.failures[:limit],
                'hidden': max(len(report.failures) - limit, 0),
            }
            for report, check in entries
        ],
    }
    return render_to_string('jetalg/report.txt', context)


def render(entries, fmt='json', many=False):
    """JSON (one object, or a list when many) or the text table"""
    if fmt == 'text':
        return render_text(entries)
    reports = [report for report, _ in entries]
    return render_json(reports if many else reports[0])
