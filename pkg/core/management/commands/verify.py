"""
Verifica exatamente todas as identidades (fNC, cbc, fC, geradora de R_m e
equivalência das rotas da zeta) num grafo.

Uso:
    python manage.py verify --family petersen --order 10
    python manage.py verify --graph grafo.txt --order 8 --roots 0,3 --threads 4

Sai com código 1 quando alguma identidade falha; o relatório JSON sai no stdout.
"""

from django.core.management.base import BaseCommand, CommandError

from core.campaigns import run_campaign
from core.options import COMPUTATION_ERROR, USAGE_ERROR, add_graph_arguments, add_order_argument, build_config
from core.output import render_json


class Command(BaseCommand):
    help = "Campanha de verificação exata das identidades"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        add_order_argument(parser)
        parser.add_argument("--roots", help="Raízes separadas por vírgula (padrão: todas)")
        parser.add_argument("--threads", type=int, default=None, help="Sobrescreve BZK_THREADS")

    def handle(self, *args, **options):
        config = build_config("verify", options)
        roots = None
        if options.get("roots"):
            try:
                roots = [int(item) for item in options["roots"].split(",") if item.strip()]
                for root in roots:
                    config.graph.check_vertex(root)
            except ValueError as exc:
                raise CommandError(f"--roots inválido: {exc}", returncode=USAGE_ERROR) from exc

        report = run_campaign(config.graph, config.order, roots, threads=options.get("threads"))
        self.stdout.write(render_json(dict(report)))
        if not report["passed"]:
            raise CommandError(
                f"{len(report['failures'])} identidade(s) falharam em {report['graph']}", returncode=COMPUTATION_ERROR
            )
        self.stderr.write(self.style.SUCCESS(f"Todas as {report['checks']} verificações passaram"))
