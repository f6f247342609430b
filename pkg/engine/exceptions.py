class IdentityViolation(AssertionError):
    """Identidade verificada falhou; `report` traz o primeiro coeficiente divergente."""

    def __init__(self, report: dict):
        self.report = report
        failure = report.get("first_failure") or {}
        super().__init__(
            f"Identidade '{report.get('identity')}' falhou em {report.get('graph')} "
            f"(raiz {report.get('root')}): {failure.get('display')} na potência u^{failure.get('power')}"
        )
