from django.apps import AppConfig


class JetalgConfig(AppConfig):
    name = 'jetalg'
    verbose_name = 'Jet algebra verification'
