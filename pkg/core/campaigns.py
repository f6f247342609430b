"""
Campanha de verificação: todas as identidades exatas e a equivalência das
rotas da zeta, por raiz, distribuídas num ThreadPoolExecutor.
"""

from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from typing import Callable, TypedDict

from django.conf import settings

from engine.exceptions import IdentityViolation
from engine.identities import IdentityReport, check_cbc, check_fC, check_fNC, check_R_generating, first_series_difference, make_report
from graphs.graph import Graph
from zeta.routes import euler_product_series, zeta_log_series, zeta_rhs_series

logger = getLogger(__name__)


class CampaignReport(TypedDict):
    graph: str
    order: int
    passed: bool
    checks: int
    failures: list[IdentityReport]
    reports: list[IdentityReport]


def check_route_equivalence(g: Graph, x0: int, x: int, order: int) -> IdentityReport:
    """zeta_log_series = zeta_rhs_series (e = euler_product_series quando x = x0), exatamente mod u^{M+1}."""
    log_series = zeta_log_series(g, x0, x, order).series
    failure = first_series_difference("rhs", log_series, zeta_rhs_series(g, x0, x, order).series, entry=[x0, x])
    if failure is None and x == x0:
        failure = first_series_difference("euler", log_series, euler_product_series(g, x0, order).series, entry=[x0, x])
    return make_report("route_equivalence", g, x0 if x == x0 else [x0, x], order, failure)


def _jobs(g: Graph, order: int, roots: list[int]) -> list[tuple[str, Callable[[], IdentityReport]]]:
    jobs = [("fC", lambda: check_fC(g, order))]
    for x0 in roots:
        jobs.append((f"fNC@{x0}", lambda x0=x0: check_fNC(g, x0, order)))
        jobs.append((f"cbc@{x0}", lambda x0=x0: check_cbc(g, x0, order)))
        jobs.append((f"R_generating@{x0}", lambda x0=x0: check_R_generating(g, x0, order)))
        jobs.append((f"route_equivalence@{x0}", lambda x0=x0: check_route_equivalence(g, x0, x0, order)))
    # um alvo fora da diagonal por grafo
    if g.vertex_count > 1:
        x0 = roots[0] if roots else 0
        x = g.neighbors(x0)[0]
        jobs.append((f"route_equivalence@{x0},{x}", lambda: check_route_equivalence(g, x0, x, order)))
    return jobs


def _run(job: Callable[[], IdentityReport]) -> IdentityReport:
    try:
        return job()
    except IdentityViolation as exc:
        return exc.report


def run_campaign(g: Graph, order: int, roots: list[int] | None = None, *, threads: int | None = None) -> CampaignReport:
    roots = list(range(g.vertex_count)) if roots is None else [g.check_vertex(x) for x in roots]
    threads = threads or settings.BZK_THREADS
    jobs = _jobs(g, order, roots)
    logger.info(f"[VERIFY] {len(jobs)} verificações em {g!r}, M={order}, {threads} thread(s)")

    with ThreadPoolExecutor(max_workers=threads) as executor:
        reports = list(executor.map(_run, [job for _, job in jobs]))

    failures = [report for report in reports if not report["pass"]]
    if failures:
        logger.error(f"[VERIFY] {len(failures)} de {len(reports)} verificações falharam em {g!r}")
    else:
        logger.info(f"[VERIFY] Todas as {len(reports)} verificações passaram em {g!r}")
    return CampaignReport(
        graph=g.name or repr(g),
        order=order,
        passed=not failures,
        checks=len(reports),
        failures=failures,
        reports=reports,
    )
