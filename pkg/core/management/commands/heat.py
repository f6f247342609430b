"""
Núcleo do calor K_X(τ, x0, x) pela série de Bessel e/ou pela rota espectral.

Uso:
    python manage.py heat --family complete --n 4 --root 0 --target 0 --tau-grid 0:5:11 --t 0 --route both
"""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from core.options import COMPUTATION_ERROR, USAGE_ERROR, add_graph_arguments, add_vertex_arguments, build_config
from core.output import format_float, render_json, write_csv
from heat.exceptions import NonconvergentTail, ParameterDomain
from heat.kernel import heat_kernel_bessel, heat_kernel_spectral
from utils.parsing import parse_grid
from zeta.exceptions import EigensolverFailure, NotRegular


class Command(BaseCommand):
    help = "Avalia o núcleo do calor numa grade de τ"

    def add_arguments(self, parser):
        add_graph_arguments(parser)
        add_vertex_arguments(parser)
        parser.add_argument("--tau-grid", default="0:5:11", help="Grade de τ: a:b:n ou lista")
        parser.add_argument("--t", default="0", help="Parâmetro t da série de Bessel")
        parser.add_argument("--route", choices=["bessel", "spectral", "both"], default="both")
        parser.add_argument("--tol", type=float, default=None, help="Tolerância da truncagem da série de Bessel")
        parser.add_argument("--out", choices=["csv", "json"], default="csv")

    def handle(self, *args, **options):
        config = build_config("heat", options)
        g, x0, x = config.graph, config.root, config.resolved_target
        route = options["route"]
        tol = config.tolerance or settings.BZK_HEAT_TOL
        try:
            taus = parse_grid(options["tau_grid"])
        except ValueError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
        if len(config.t_values) != 1:
            raise CommandError("--t deve ser um único valor", returncode=USAGE_ERROR)
        t = config.t_values[0]

        rows = []
        try:
            for tau in taus:
                bessel = heat_kernel_bessel(g, x0, x, tau, t, tol) if route in ("bessel", "both") else None
                spectral = heat_kernel_spectral(g, x0, x, tau) if route in ("spectral", "both") else None
                rows.append((tau, bessel, spectral))
        except (ParameterDomain, NotRegular) as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR) from exc
        except (NonconvergentTail, EigensolverFailure) as exc:
            raise CommandError(str(exc), returncode=COMPUTATION_ERROR) from exc

        if config.output == "json":
            payload = {
                "graph": g.name or repr(g),
                "root": x0,
                "target": x,
                "t": t,
                "rows": [
                    {
                        "tau": tau,
                        "value_bessel": bessel.value if bessel else None,
                        "value_spectral": spectral.value if spectral else None,
                        "abs_diff": abs(bessel.value - spectral.value) if bessel and spectral else None,
                        "tail_bound": bessel.tail_bound if bessel else None,
                    }
                    for tau, bessel, spectral in rows
                ],
            }
            self.stdout.write(render_json(payload))
            return

        def cell(value):
            return "" if value is None else format_float(value)

        write_csv(
            self.stdout,
            ["tau", "value_bessel", "value_spectral", "abs_diff", "tail_bound"],
            (
                [
                    format_float(tau),
                    cell(bessel.value if bessel else None),
                    cell(spectral.value if spectral else None),
                    cell(abs(bessel.value - spectral.value) if bessel and spectral else None),
                    cell(bessel.tail_bound if bessel else None),
                ]
                for tau, bessel, spectral in rows
            ),
        )
