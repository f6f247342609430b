from django.apps import AppConfig


class HeatConfig(AppConfig):
    name = "heat"
    verbose_name = "Núcleo do calor e transformada G(t)"
