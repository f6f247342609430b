"""
Django settings for the bartholdi-zeta project.

Sem banco de dados, URLs ou templates: o projeto é usado pelos comandos de
gerenciamento (zeta, heat, euler, verify, graphs) e pelas funções dos apps.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# Variáveis de ambiente
SECRET_KEY = config("SECRET_KEY", default="bartholdi-zeta-local")
DEBUG = config("DEBUG", default=False, cast=bool)
ALLOWED_HOSTS: list[str] = []
LANGUAGE_CODE = "pt-br"


# Application definition

INSTALLED_APPS = [
    "graphs",
    "paths",
    "series",
    "engine",
    "zeta",
    "heat",
    "core",
]

DATABASES: dict = {}


# Parâmetros numéricos
BZK_THREADS = config("BZK_THREADS", default=1, cast=int)
BZK_DEFAULT_ORDER = config("BZK_DEFAULT_ORDER", default=10, cast=int)
BZK_PATH_LENGTH_CAP = config("BZK_PATH_LENGTH_CAP", default=12, cast=int)
BZK_SPECTRAL_ORDER = config("BZK_SPECTRAL_ORDER", default=20, cast=int)
BZK_EIGEN_CLUSTER_TOL = config("BZK_EIGEN_CLUSTER_TOL", default=1e-8, cast=float)
BZK_CHARPOLY_CHECK_LIMIT = config("BZK_CHARPOLY_CHECK_LIMIT", default=10, cast=int)
BZK_HEAT_TOL = config("BZK_HEAT_TOL", default=1e-10, cast=float)
BZK_BESSEL_TOL = config("BZK_BESSEL_TOL", default=1e-15, cast=float)

# Transformada G(t): passo de Simpson, expoente mínimo no corte e tolerância da cauda
BZK_QUADRATURE_STEP = config("BZK_QUADRATURE_STEP", default=1e-3, cast=float)
BZK_QUADRATURE_DECAY = config("BZK_QUADRATURE_DECAY", default=40.0, cast=float)
BZK_QUADRATURE_TOL = config("BZK_QUADRATURE_TOL", default=1e-12, cast=float)

BZK_LOG_DIR = Path(config("BZK_LOG_DIR", default=str(BASE_DIR / "logs")))
BZK_LOG_DIR.mkdir(parents=True, exist_ok=True)
BZK_LOG_MAX_BYTES = config("BZK_LOG_MAX_BYTES", default=10 * 1024 * 1024, cast=int)
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


# Logging Configuration
# stdout fica reservado para os resultados (JSON/CSV); logs vão para stderr e arquivos.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "colored_console": {
            "format": "%(log_color)s%(levelname)-8s%(reset)s %(blue)s%(asctime)s%(reset)s %(cyan)s[%(name)s]%(reset)s %(message)s",
            "datefmt": LOG_DATEFMT,
            "()": "colorlog.ColoredFormatter",
            "log_colors": {
                "DEBUG": "cyan",
                "INFO": "green",
                "WARNING": "yellow",
                "ERROR": "red",
                "CRITICAL": "red,bg_white",
            },
        },
        "detailed": {
            "format": "[{levelname}] {asctime} | {name}:{lineno} | {funcName}() | {message}",
            "datefmt": LOG_DATEFMT,
            "style": "{",
        },
        "simple": {
            "format": "[{levelname}] {asctime} | {message}",
            "datefmt": LOG_DATEFMT,
            "style": "{",
        },
        "json": {
            "format": '{"timestamp": "%(asctime)s", "level": "%(levelname)s", "logger": "%(name)s", "module": "%(module)s", "function": "%(funcName)s", "line": %(lineno)d, "message": "%(message)s"}',
            "datefmt": LOG_DATEFMT,
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG" if DEBUG else "WARNING",
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "colored_console" if DEBUG else "simple",
        },
        "file_app": {
            "level": "INFO",
            "class": "logging.handlers.RotatingFileHandler",
            "filename": BZK_LOG_DIR / "app.log",
            "maxBytes": BZK_LOG_MAX_BYTES,
            "backupCount": 5,
            "formatter": "json" if not DEBUG else "detailed",
        },
        "file_errors": {
            "level": "ERROR",
            "class": "logging.handlers.RotatingFileHandler",
            "filename": BZK_LOG_DIR / "errors.log",
            "maxBytes": BZK_LOG_MAX_BYTES,
            "backupCount": 5,
            "formatter": "detailed",
        },
    },
    "loggers": {
        "": {  # Root logger
            "handlers": ["console", "file_app", "file_errors"],
            "level": "DEBUG" if DEBUG else "INFO",
        },
        "django": {
            "handlers": ["console", "file_app"],
            "level": "INFO",
            "propagate": False,
        },
        **{
            app: {
                "handlers": ["console", "file_app", "file_errors"],
                "level": "DEBUG" if DEBUG else "INFO",
                "propagate": False,
            }
            for app in INSTALLED_APPS
        },
    },
}
