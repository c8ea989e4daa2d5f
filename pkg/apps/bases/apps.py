from django.apps import AppConfig


class BasesConfig(AppConfig):
    name = 'apps.bases'
    verbose_name = 'Bases'
