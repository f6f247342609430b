"""
Produto de Euler sobre os caminhos fechados primitivos na raiz.

Uso:
    python manage.py euler --family petersen --root 0 --order 8
"""

from collections import Counter

from django.core.management.base import BaseCommand

from core.options import add_graph_arguments, add_order_argument, add_vertex_arguments, build_config
from core.output import render_json, write_csv
from paths.oracle import primitive_rooted_closed_paths
from series.serialization import series_to_json
from zeta.routes import euler_product_series, zeta_log_series


class Command(BaseCommand):
    help = "Produto de Euler da zeta enraizada e estatística dos caminhos primitivos"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        add_vertex_arguments(parser)
        add_order_argument(parser)
        parser.add_argument("--out", choices=["json", "csv"], default="json")

    def handle(self, *args, **options):
        config = build_config("euler", options)
        g, x0 = config.graph, config.root
        groups = Counter((length, cbc) for _, length, cbc in primitive_rooted_closed_paths(g, x0, config.order))
        product = euler_product_series(g, x0, config.order).series
        matches = product == zeta_log_series(g, x0, x0, config.order).series

        if config.output == "csv":
            write_csv(
                self.stdout,
                ["length", "cbc", "count"],
                ([length, cbc, count] for (length, cbc), count in sorted(groups.items())),
            )
            return
        payload = {
            "graph": g.name or repr(g),
            "root": x0,
            "order": config.order,
            "primitive_paths": [
                {"length": length, "cbc": cbc, "count": count} for (length, cbc), count in sorted(groups.items())
            ],
            "series": series_to_json(product),
            "matches_log_series": matches,
        }
        self.stdout.write(render_json(payload))
