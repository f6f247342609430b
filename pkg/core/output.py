import csv
import json

SCHEMA_VERSION = 1


def render_json(payload: dict) -> str:
    """JSON determinístico com o campo "schema" na frente."""
    document = {"schema": SCHEMA_VERSION, **payload}
    return json.dumps(document, indent=2, ensure_ascii=False)


def write_csv(stream, header: list[str], rows):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def format_float(value: float) -> str:
    return repr(float(value))
