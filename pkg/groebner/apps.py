from django.apps import AppConfig


class GroebnerConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'groebner'
