import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Optional

from django.conf import settings

from .exceptions import InvalidConfig
from .jet_modules import Variant

RANGE_PATTERN = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$')

REP_CHOICES = [
    ('natural', 'natural 2-dimensional module'),
    ('adjoint', 'adjoint module'),
    ('sym2', 'second symmetric power of the natural module'),
]


class IntRange(NamedTuple):
    """Closed integer interval lo..hi"""
    lo: int
    hi: int

    @classmethod
    def parse(cls, text):
        match = RANGE_PATTERN.match(str(text))
        if not match:
            raise ValueError(f"'{text}' is not a range of the form lo..hi")
        return cls(int(match.group(1)), int(match.group(2)))

    def is_empty(self):
        return self.lo > self.hi

    def points(self):
        return range(self.lo, self.hi + 1)

    def __str__(self):
        return f"{self.lo}..{self.hi}"


@dataclass(frozen=True)
class CheckConfig:
    """Everything a check needs to run: its grid, module choice and sampling"""
    check_id: str
    m1: IntRange
    m2: IntRange
    s1: IntRange
    s2: IntRange
    a1: Optional[Fraction] = None
    a2: Optional[Fraction] = None
    variant: Optional[str] = None
    rep: Optional[str] = None
    jobs: int = 1
    samples: int = 500
    seed: int = 0

    @classmethod
    def from_settings(cls, check_id, **overrides):
        """
        Defaults come from settings: JETALG_CHECK_RANGES for the check if it
        has an entry, then JETALG_<AXIS>_RANGE. Keyword overrides win.
        """
        ranges = getattr(settings, 'JETALG_CHECK_RANGES', {}).get(check_id, {})
        values = {}
        for axis in ('m1', 'm2', 's1', 's2'):
            default = ranges.get(axis, getattr(settings, f'JETALG_{axis.upper()}_RANGE'))
            value = overrides.pop(axis, None)
            if value is None:
                value = default
            try:
                values[axis] = value if isinstance(value, IntRange) else IntRange.parse(value)
            except ValueError as e:
                raise InvalidConfig(f"{axis}: {e}")
        values['jobs'] = settings.JETALG_JOBS
        values['samples'] = settings.JETALG_SAMPLES
        values['seed'] = settings.JETALG_SEED
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(check_id=check_id, **values)

    def m_points(self):
        return list(product(self.m1.points(), self.m2.points()))

    def s_points(self):
        return list(product(self.s1.points(), self.s2.points()))

    def validate(self):
        for axis in ('m1', 'm2', 's1', 's2'):
            if getattr(self, axis).is_empty():
                raise InvalidConfig(f"range {axis}={getattr(self, axis)} is empty")
        for axis in ('m2', 's2'):
            if getattr(self, axis).lo < 0:
                raise InvalidConfig(f"range {axis}={getattr(self, axis)} must be nonnegative")
        if self.variant is not None and self.variant not in Variant.values:
            raise InvalidConfig(f"unknown variant '{self.variant}'")
        if self.rep is not None and self.rep not in dict(REP_CHOICES):
            raise InvalidConfig(f"unknown gl2-module '{self.rep}'")
        if self.jobs < 1:
            raise InvalidConfig(f"jobs must be at least 1, got {self.jobs}")
        if self.samples < 1:
            raise InvalidConfig(f"samples must be at least 1, got {self.samples}")
        if self.variant in (Variant.POLY, Variant.QUOTIENT) and self.a2 is not None and Fraction(self.a2).denominator != 1:
            raise InvalidConfig(f"the {self.variant} module needs an integral a2, got {self.a2}")

    def to_dict(self):
        """Config echo for reports; jobs is left out so reports do not depend on it"""
        return {
            'check': self.check_id,
            'm1': str(self.m1),
            'm2': str(self.m2),
            's1': str(self.s1),
            's2': str(self.s2),
            'a1': None if self.a1 is None else str(self.a1),
            'a2': None if self.a2 is None else str(self.a2),
            'variant': None if self.variant is None else str(self.variant),
            'rep': self.rep,
            'samples': self.samples,
            'seed': self.seed,
        }
