from django.apps import AppConfig


class InterpolationConfig(AppConfig):
    name = 'apps.interpolation'
    verbose_name = 'Interpolation'
