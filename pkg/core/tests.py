import csv
import json
from io import StringIO
from pathlib import Path
from tempfile import TemporaryDirectory

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.campaigns import check_route_equivalence, run_campaign
from core.options import USAGE_ERROR
from graphs.generators import generate
from graphs.io import dump_graph


def run(*args) -> str:
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue()


class ZetaCommandTests(SimpleTestCase):
    def test_all_routes_coincide_on_cycle_four(self):
        document = json.loads(run("zeta", "--family", "cycle", "--n", "4", "--root", "0", "--order", "8", "--route", "all"))
        self.assertEqual(document["schema"], 1)
        self.assertEqual(set(document["routes"]), {"log", "rhs", "euler"})
        self.assertTrue(document["coincide"])
        self.assertEqual(len(document["routes"]["log"]), 9)

    def test_spectral_values_on_grid(self):
        document = json.loads(
            run("zeta", "--family", "complete", "--n", "4", "--route", "all", "--order", "10", "--u", "0.05,0.1", "--t", "0.25")
        )
        spectral = [v for v in document["values"] if v["route"] == "spectral"]
        log = [v for v in document["values"] if v["route"] == "log"]
        self.assertEqual(len(spectral), 2)
        for a, b in zip(spectral, log):
            self.assertAlmostEqual(a["value"], b["value"], places=6)

    def test_output_is_deterministic(self):
        args = ("zeta", "--family", "path", "--n", "4", "--root", "1", "--order", "6", "--route", "rhs")
        self.assertEqual(run(*args), run(*args))

    def test_csv_coefficients(self):
        rows = list(csv.reader(StringIO(run("zeta", "--family", "cycle", "--n", "3", "--order", "3", "--out", "csv"))))
        self.assertEqual(rows[0], ["route", "m", "coefficient"])
        self.assertEqual(rows[3], ["log", "2", "t^2"])

    def test_euler_rejects_off_diagonal(self):
        with self.assertRaises(CommandError) as ctx:
            run("zeta", "--family", "cycle", "--n", "4", "--target", "1", "--route", "euler")
        self.assertEqual(ctx.exception.returncode, USAGE_ERROR)

    def test_spectral_requires_regular_graph(self):
        with self.assertRaises(CommandError) as ctx:
            run("zeta", "--family", "star", "--n", "3", "--route", "spectral", "--u", "0.1", "--t", "0")
        self.assertEqual(ctx.exception.returncode, USAGE_ERROR)

    def test_graph_file(self):
        with TemporaryDirectory() as tmp:
            path = Path(tmp) / "k4.json"
            dump_graph(generate("complete", n=4), path)
            from_file = json.loads(run("zeta", "--graph", str(path), "--order", "5"))
        generated = json.loads(run("zeta", "--family", "complete", "--n", "4", "--order", "5"))
        self.assertEqual(from_file["routes"], generated["routes"])

    def test_unknown_vertex(self):
        with self.assertRaises(CommandError):
            run("zeta", "--family", "cycle", "--n", "4", "--root", "9")


class HeatCommandTests(SimpleTestCase):
    def test_k4_both_routes(self):
        args = ["--family", "complete", "--n", "4", "--root", "0", "--target", "0", "--tau-grid", "0:5:11"]
        output = run("heat", *args, "--t", "0", "--route", "both")
        rows = list(csv.DictReader(StringIO(output)))
        self.assertEqual(len(rows), 11)
        for row in rows:
            self.assertLess(float(row["abs_diff"]), 1e-8)

    def test_parameter_domain(self):
        with self.assertRaises(CommandError) as ctx:
            run("heat", "--family", "complete", "--n", "4", "--t", "1.5", "--route", "bessel")
        self.assertEqual(ctx.exception.returncode, USAGE_ERROR)


class VerifyCommandTests(SimpleTestCase):
    def test_petersen_passes(self):
        document = json.loads(run("verify", "--family", "petersen", "--order", "10", "--roots", "0"))
        self.assertTrue(document["passed"])
        identities = {report["identity"] for report in document["reports"]}
        self.assertEqual(identities, {"fNC", "cbc", "fC", "R_generating", "route_equivalence"})

    def test_campaign_on_non_regular_graph(self):
        report = run_campaign(generate("star", n=3), 8, threads=2)
        self.assertTrue(report["passed"])
        self.assertEqual(report["failures"], [])

    def test_route_equivalence_report(self):
        report = check_route_equivalence(generate("path", n=4), 0, 2, 8)
        self.assertTrue(report["pass"])
        self.assertEqual(report["root"], [0, 2])


class GraphsCommandTests(SimpleTestCase):
    def test_list(self):
        self.assertIn("petersen", json.loads(run("graphs", "--list"))["families"])

    def test_describe(self):
        document = json.loads(run("graphs", "--family", "petersen"))
        self.assertEqual(document["vertices"], 10)
        self.assertEqual(document["edges"], 15)
        self.assertTrue(document["regular"])
        self.assertEqual(document["girth"], 5)
        self.assertAlmostEqual(document["laplacian_spectrum"][-1], 5.0)

    def test_describe_non_regular(self):
        document = json.loads(run("graphs", "--family", "star", "--n", "3", "--edges"))
        self.assertIs(document["regular"], False)
        self.assertEqual(document["degrees"], [3, 1, 1, 1])
        self.assertIsNone(document["girth"])
        self.assertEqual(len(document["edge_list"]), 3)

    def test_missing_source(self):
        with self.assertRaises(CommandError):
            run("graphs")
