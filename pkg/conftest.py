"""Test wiring for pytest: load the same Django settings manage.py uses."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'jetlab.settings')
django.setup()
