from django.apps import AppConfig


class ZetaConfig(AppConfig):
    name = "zeta"
    verbose_name = "Função zeta de Bartholdi"
