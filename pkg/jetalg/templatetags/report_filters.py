from django import template
from django.conf import settings
from django.template.defaultfilters import stringfilter

register = template.Library()


@register.filter
def verdict(report, expect_pass=True):
    """
    PASS/FAIL for a report, marked when the outcome is not the expected one.
    Example: {{ report|verdict:expect_pass }}
    """
    text = 'PASS' if report.passed else 'FAIL'
    if report.passed != bool(expect_pass):
        return f"{text} (unexpected)"
    return text


@register.filter
@stringfilter
def clip(value, width=None):
    """
    Shortens long renderings to JETALG_CLIP characters, or to width.
    Example: {{ failure.actual|clip }}
    """
    width = int(width) if width else settings.JETALG_CLIP
    if len(value) <= width:
        return value
    return value[:max(width - 3, 0)] + '...'
