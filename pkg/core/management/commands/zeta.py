"""
Calcula a zeta de Bartholdi enraizada por uma ou todas as rotas.

Uso:
    python manage.py zeta --family cycle --n 4 --root 0 --order 8 --route all
    python manage.py zeta --graph grafo.json --root 2 --target 5 --route rhs --out csv
    python manage.py zeta --family complete --n 4 --route spectral --u 0.05:0.2:4 --t 0.25
"""

from django.core.management.base import BaseCommand, CommandError

from core.options import (
    COMPUTATION_ERROR,
    USAGE_ERROR,
    add_graph_arguments,
    add_order_argument,
    add_vertex_arguments,
    build_config,
)
from core.output import format_float, render_json, write_csv
from series.algebra import evaluate
from series.serialization import series_to_json
from zeta.exceptions import DomainError, EigensolverFailure, NotRegular
from zeta.routes import euler_product_series, zeta_log_series, zeta_rhs_series
from zeta.spectral import zeta_spectral

SYMBOLIC_ROUTES = {
    "log": lambda g, x0, x, order: zeta_log_series(g, x0, x, order),
    "rhs": lambda g, x0, x, order: zeta_rhs_series(g, x0, x, order),
    "euler": lambda g, x0, x, order: euler_product_series(g, x0, order),
}


class Command(BaseCommand):
    help = "Calcula Z_X(u, t, x0, x) pelas rotas log, rhs, euler e spectral"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        add_vertex_arguments(parser)
        add_order_argument(parser)
        parser.add_argument("--route", choices=["log", "rhs", "spectral", "euler", "all"], default="log")
        parser.add_argument("--t", help="Valor(es) de t: número, lista a,b,c ou grade a:b:n")
        parser.add_argument("--u", help="Valor(es) de u: número, lista a,b,c ou grade a:b:n")
        parser.add_argument("--out", choices=["json", "csv"], default="json")

    def handle(self, *args, **options):
        config = build_config("zeta", options)
        g, x0, x = config.graph, config.root, config.resolved_target
        route = options["route"]

        symbolic = list(SYMBOLIC_ROUTES) if route == "all" else [route] if route in SYMBOLIC_ROUTES else []
        if "euler" in symbolic and x != x0:
            if route == "euler":
                raise CommandError("A rota euler só existe para x = x0", returncode=USAGE_ERROR)
            symbolic.remove("euler")
            self.stderr.write(self.style.WARNING("Rota euler ignorada: alvo diferente da raiz"))
        spectral = route in ("spectral", "all")
        if spectral and not (config.u_values and config.t_values):
            if route == "spectral":
                raise CommandError("A rota spectral exige --u e --t", returncode=USAGE_ERROR)
            spectral = False

        series = {name: SYMBOLIC_ROUTES[name](g, x0, x, config.order).series for name in symbolic}
        values = []
        try:
            for t in config.t_values:
                for u in config.u_values:
                    for name, s in series.items():
                        values.append({"route": name, "u": u, "t": t, "value": evaluate(s, t, u)})
                    if spectral:
                        result = zeta_spectral(g, x0, x, u, t)
                        values.append(
                            {"route": "spectral", "u": u, "t": t, "value": result.value, "tail_bound": result.tail_bound}
                        )
        except (DomainError, NotRegular) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
        except EigensolverFailure as exc:
            raise CommandError(str(exc), returncode=COMPUTATION_ERROR) from exc

        if config.output == "csv":
            self._write_csv(series, values)
            return
        distinct = {s for s in series.values()}
        payload = {
            "graph": g.name or repr(g),
            "root": x0,
            "target": x,
            "order": config.order,
            "routes": {name: series_to_json(s) for name, s in series.items()},
            "coincide": len(distinct) <= 1,
            "values": values,
        }
        self.stdout.write(render_json(payload))

    def _write_csv(self, series, values):
        if values:
            header = ["route", "u", "t", "value"]
            rows = [[v["route"], format_float(v["u"]), format_float(v["t"]), format_float(v["value"])] for v in values]
        else:
            header = ["route", "m", "coefficient"]
            rows = [[name, m, str(c)] for name, s in series.items() for m, c in enumerate(s.coeffs)]
        write_csv(self.stdout, header, rows)
