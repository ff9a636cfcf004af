from fractions import Fraction

from django import forms

from .config import REP_CHOICES, CheckConfig, IntRange
from .jet_modules import Variant

FORMAT_CHOICES = [
    ('json', 'JSON report'),
    ('text', 'text table'),
]


class CheckConfigForm(forms.Form):
    """Validates verify/report command options before they become a CheckConfig"""
    m1 = forms.CharField(required=False, help_text='lo..hi')
    m2 = forms.CharField(required=False, help_text='lo..hi, lo >= 0')
    s1 = forms.CharField(required=False, help_text='lo..hi')
    s2 = forms.CharField(required=False, help_text='lo..hi, lo >= 0')
    a1 = forms.CharField(required=False, help_text='rational p/q')
    a2 = forms.CharField(required=False, help_text='rational p/q')
    variant = forms.ChoiceField(choices=Variant.choices, required=False)
    rep = forms.ChoiceField(choices=REP_CHOICES, required=False)
    jobs = forms.IntegerField(required=False, min_value=1)
    samples = forms.IntegerField(required=False, min_value=1)
    seed = forms.IntegerField(required=False)
    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False)

    def _clean_range(self, name):
        value = self.cleaned_data.get(name)
        if not value:
            return None
        try:
            return IntRange.parse(value)
        except ValueError as e:
            raise forms.ValidationError(str(e))

    def _clean_rational(self, name):
        value = self.cleaned_data.get(name)
        if not value:
            return None
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise forms.ValidationError(f"'{value}' is not a rational number p/q")

    def clean_m1(self):
        return self._clean_range('m1')

    def clean_m2(self):
        return self._clean_range('m2')

    def clean_s1(self):
        return self._clean_range('s1')

    def clean_s2(self):
        return self._clean_range('s2')

    def clean_a1(self):
        return self._clean_rational('a1')

    def clean_a2(self):
        return self._clean_rational('a2')

    def clean_variant(self):
        return self.cleaned_data.get('variant') or None

    def clean_rep(self):
        return self.cleaned_data.get('rep') or None

    def clean_format(self):
        return self.cleaned_data.get('format') or 'json'

    def clean(self):
        cleaned_data = super().clean()
        a2 = cleaned_data.get('a2')
        variant = cleaned_data.get('variant')
        if variant in (Variant.POLY, Variant.QUOTIENT) and a2 is not None and a2.denominator != 1:
            self.add_error('a2', f"the {variant} module needs an integral a2, got {a2}")
        return cleaned_data

    def overrides(self):
        """Options the user actually gave, ready for CheckConfig.from_settings"""
        names = ('m1', 'm2', 's1', 's2', 'a1', 'a2', 'variant', 'rep', 'jobs', 'samples', 'seed')
        return {name: self.cleaned_data[name] for name in names if self.cleaned_data.get(name) is not None}

    def to_config(self, check_id):
        return CheckConfig.from_settings(check_id, **self.overrides())

    def errors_text(self):
        return '; '.join(
            f"--{name}: {' '.join(messages)}" for name, messages in self.errors.items()
        )
