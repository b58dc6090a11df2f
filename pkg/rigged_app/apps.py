"""Django app configuration for rigged_app."""

from django.apps import AppConfig


class RiggedAppConfig(AppConfig):
    name = "rigged_app"
    verbose_name = "Rigged Configurations"
