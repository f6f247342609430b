import re
import unicodedata
from fractions import Fraction


def normalize_name(name: str) -> str:
    """Normaliza nomes de famílias/rotas: sem acentos, minúsculo, '-' e espaços viram '_'."""
    nfkd = unicodedata.normalize("NFKD", name)
    no_accent = "".join([c for c in nfkd if not unicodedata.combining(c)])
    no_special = re.sub(r"[^a-zA-Z0-9_]+", "", no_accent.strip().replace(" ", "_").replace("-", "_"))
    return no_special.lower()


def parse_rational(text: str | int | float | Fraction) -> Fraction:
    """
    Converte "p/q", "0.25" ou inteiros em Fraction exata.

    Floats são convertidos pela representação decimal (0.1 -> 1/10), não pelo valor binário.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(repr(text))
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Número racional inválido: {text!r}") from exc


def format_rational(value: int | Fraction) -> str:
    """Formato canônico "p/q" usado nos arquivos JSON."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_grid(text: str) -> list[float]:
    """
    Lê uma grade "a:b:n" (n pontos igualmente espaçados, extremos incluídos)
    ou uma lista "x,y,z" de valores.
    """
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"Grade inválida '{text}': use o formato a:b:n")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError(f"Grade inválida '{text}': n deve ser >= 1")
        if count == 1:
            return [start]
        step = (stop - start) / (count - 1)
        return [start + i * step for i in range(count)]
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise ValueError(f"Lista de valores inválida: '{text}'") from exc
