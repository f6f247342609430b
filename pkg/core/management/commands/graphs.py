"""
Descreve um grafo ou lista as famílias disponíveis.

Uso:
    python manage.py graphs --list
    python manage.py graphs --family tree_ball --degree 3 --radius 2
"""

from django.core.management.base import BaseCommand, CommandError

from core.options import USAGE_ERROR, resolve_graph
from core.output import render_json
from graphs.generators import GraphFamily
from graphs.graph import girth
from graphs.io import graph_to_json
from zeta.spectral import eigendecomposition


class Command(BaseCommand):
    help = "Descreve um grafo (graus, regularidade, cintura, espectro) ou lista famílias"

    def add_arguments(self, parser):
        parser.add_argument("--list", action="store_true", help="Lista as famílias disponíveis")
        parser.add_argument("--graph", help="Arquivo do grafo (JSON ou lista de arestas)")
        parser.add_argument("--family", help="Família gerada")
        parser.add_argument("--n", type=int)
        parser.add_argument("--d", type=int)
        parser.add_argument("--degree", type=int, default=3)
        parser.add_argument("--radius", type=int, default=2)
        parser.add_argument("--edges", action="store_true", help="Inclui a lista de arestas")

    def handle(self, *args, **options):
        if options["list"]:
            self.stdout.write(render_json({"families": [family.value for family in GraphFamily]}))
            return
        if not (options.get("graph") or options.get("family")):
            raise CommandError("Informe --graph, --family ou --list", returncode=USAGE_ERROR)

        g = resolve_graph(options)
        eigenvalues, _ = eigendecomposition(g)
        description = {
            "graph": g.name or repr(g),
            "vertices": g.vertex_count,
            "edges": g.edge_count,
            "directed_edges": len(g.directed_edges),
            "degrees": list(g.degrees),
            "regular": g.is_regular(),
            "girth": None if girth(g) == float("inf") else int(girth(g)),
            "laplacian_spectrum": [round(float(value), 12) + 0.0 for value in eigenvalues],
        }
        if options["edges"]:
            description["edge_list"] = graph_to_json(g)["edges"]
        self.stdout.write(render_json(description))
