"""
Aplicación de línea de comandos `cspace`.

Códigos de salida: 0 éxito, 1 error de dominio (espacio inválido, límite
exhaustivo superado...), 2 error de uso (etiqueta desconocida, argumentos).
"""

import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Tuple

from ...application.use_cases import (
    AnalysisKind,
    AnalysisRequest,
    AnalyzeSpaceUseCase,
    AuditRequest,
    AuditSpaceUseCase,
    BuildRequest,
    BuildSpaceUseCase,
)
from ...core.rules.propositions import parse_propositions
from ...core.services.builders import BuilderKind
from ...infrastructure.config.constants import EXIT_CODES, Z_MODES
from ...infrastructure.config.settings import settings
from ...infrastructure.export import renderers, serializers
from ...infrastructure.export.report_writer import FileReportWriter
from ...infrastructure.logging import StandardLoggingService, configure_logging, reset_logging
from ...infrastructure.persistence import FormulaFileSource, JsonSpaceRepository
from ...shared.exceptions import CSpaceError, UsageError

logger = logging.getLogger(__name__)

PROG = "cspace"

# Consulta -> (serializador, renderizador de texto)
_ANALYSIS_OUTPUT: Dict[AnalysisKind, Tuple[Callable[..., Dict[str, Any]], Callable[[Dict[str, Any]], str]]] = {
    AnalysisKind.VALIDATE: (
        lambda space, payload: serializers.validation_record(space, payload),
        renderers.render_validation,
    ),
    AnalysisKind.CLASSES: (
        lambda space, payload: serializers.classes_record(space, payload),
        renderers.render_classes,
    ),
    AnalysisKind.NEGATE: (
        lambda space, payload: serializers.negation_record(space, payload),
        renderers.render_negation,
    ),
    AnalysisKind.IMPLIES: (
        lambda space, payload: serializers.implies_record(
            space, payload.lhs, payload.rhs, payload.verdict, payload.mode),
        renderers.render_implies,
    ),
    AnalysisKind.JOIN: (
        lambda space, payload: serializers.join_record(space, payload),
        renderers.render_join,
    ),
    AnalysisKind.MEET: (
        lambda space, payload: serializers.meet_record(space, payload.lhs, payload.rhs, payload.meet),
        renderers.render_meet,
    ),
    AnalysisKind.LUB: (
        lambda space, payload: serializers.lub_record(space, payload),
        renderers.render_lub,
    ),
    AnalysisKind.MINIMAL_INCONSISTENT: (
        lambda space, payload: serializers.minimal_inconsistent_record(space, payload),
        renderers.render_minimal_inconsistent,
    ),
    AnalysisKind.DETECT_BOOLEAN: (
        lambda space, payload: serializers.detect_boolean_record(space, payload),
        renderers.render_detect_boolean,
    ),
}


class _Parser(argparse.ArgumentParser):
    """ArgumentParser que informa los errores de uso con el código de salida del paquete."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CODES["usage_error"], f"{self.prog}: error: {message}\n")


# =====================================================================
# Construcción del parser
# =====================================================================

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"se esperaba un entero: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"se esperaba un entero positivo: {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", metavar="FILE", help="archivo de salida (por defecto stdout)")
    common.add_argument("--json", action="store_true", help="salida legible por máquina")
    common.add_argument("--z-mode", choices=Z_MODES, default=None,
                        help="rango de z en las condiciones de negación (por defecto subsets)")
    common.add_argument("--seed", type=int, default=None, help="semilla de generación")
    common.add_argument("--max-points", type=_positive_int, default=None,
                        help="límite exhaustivo de puntos (también CSPACE_MAX_POINTS)")
    common.add_argument("--force", action="store_true", help="cargar espacios aunque violen los axiomas")
    common.add_argument("-v", "--verbose", action="count", default=0, help="más detalle en stderr")
    return common


def _add_build_args(parser: argparse.ArgumentParser, common: argparse.ArgumentParser) -> None:
    builders = parser.add_subparsers(dest="builder", metavar="{literal,boolean,formulas,random}")
    builders.required = True

    literal = builders.add_parser("literal", parents=[common], help="espacio de literales de n variables")
    literal.add_argument("--vars", type=int, required=True, dest="n_vars")

    boolean = builders.add_parser("boolean", parents=[common], help="álgebra de Boole libre completa")
    boolean.add_argument("--vars", type=int, required=True, dest="n_vars")

    formulas = builders.add_parser("formulas", parents=[common], help="un punto por fórmula de un archivo")
    formulas.add_argument("formulas_path", metavar="FILE")

    random_builder = builders.add_parser("random", parents=[common], help="espacio aleatorio con semilla")
    random_builder.add_argument("--points", type=int, required=True, dest="num_points")
    random_builder.add_argument("--maximal", type=int, required=True, dest="num_maximal")


def build_parser() -> argparse.ArgumentParser:
    """Parser completo de `cspace`."""
    common = _common_options()
    parser = _Parser(prog=PROG, description="Construye, analiza y audita espacios de consistencia finitos.")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    commands.required = True

    _add_build_args(commands.add_parser("build", help="construir un espacio"), common)

    validate = commands.add_parser("validate", parents=[common], help="validar los axiomas")
    validate.add_argument("space", metavar="FILE")

    classes = commands.add_parser("classes", parents=[common], help="clases de equivalencia ~")
    classes.add_argument("space", metavar="FILE")
    classes.add_argument("--max-size", type=int, default=None)

    negate = commands.add_parser("negate", parents=[common], help="negaciones de un conjunto")
    negate.add_argument("space", metavar="FILE")
    negate.add_argument("--set", dest="set_labels", required=True, metavar="LABELS")

    for name, help_text in (("implies", "implicación lhs → rhs"), ("meet", "meet de dos conjuntos")):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("space", metavar="FILE")
        command.add_argument("--lhs", required=True, metavar="LABELS")
        command.add_argument("--rhs", required=True, metavar="LABELS")

    for name, help_text in (("join", "join de dos puntos"), ("lub", "verificar la cota superior mínima")):
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument("space", metavar="FILE")
        command.add_argument("--x", required=True, metavar="LABEL")
        command.add_argument("--y", required=True, metavar="LABEL")

    minimal = commands.add_parser("minimal-inconsistent", parents=[common],
                                  help="conjuntos inconsistentes minimales")
    minimal.add_argument("space", metavar="FILE")
    minimal.add_argument("--partial", action="store_true",
                         help="por encima del límite, búsqueda parcial en lugar de rechazo")

    detect = commands.add_parser("detect-boolean", parents=[common], help="¿es un espacio booleano?")
    detect.add_argument("space", metavar="FILE")

    audit = commands.add_parser("audit", parents=[common], help="auditar proposiciones")
    audit.add_argument("space", metavar="FILE", nargs="?")
    audit.add_argument("--campaign", action="store_true", help="auditar el corpus configurado")
    audit.add_argument("--props", default=None, metavar="IDS", help="lista como P02,P07")
    audit.add_argument("--workers", type=_positive_int, default=None)

    return parser


# =====================================================================
# Comandos
# =====================================================================

class _Context:
    """Dependencias compartidas por los comandos de una ejecución."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.repository = JsonSpaceRepository()
        self.logging_service = StandardLoggingService()
        self.writer = FileReportWriter()

    def emit(self, record: Dict[str, Any], renderer: Callable[[Dict[str, Any]], str]) -> None:
        text = serializers.dumps(record) if self.args.json else renderer(record)
        self.writer.write(text, self.args.output)


def _failure(error: Optional[CSpaceError], message: str) -> int:
    print(f"{PROG}: error: {message}", file=sys.stderr)
    if error is None:
        return EXIT_CODES["domain_error"]
    return error.exit_code


def _build_command(ctx: _Context) -> int:
    args = ctx.args
    request = BuildRequest(
        kind=BuilderKind(args.builder),
        n_vars=getattr(args, "n_vars", None),
        formulas_path=getattr(args, "formulas_path", None),
        num_points=getattr(args, "num_points", None),
        num_maximal=getattr(args, "num_maximal", None),
        seed=args.seed if args.seed is not None else 0,
        output_path=args.output,
    )
    use_case = BuildSpaceUseCase(ctx.repository, FormulaFileSource(), ctx.logging_service)
    result = use_case.execute(request)
    if not result.success:
        return _failure(result.error, result.message)
    if result.saved_path is None:
        ctx.writer.write(serializers.dumps(serializers.space_document(result.space)))
    return EXIT_CODES["ok"]


def _analysis_command(ctx: _Context) -> int:
    args = ctx.args
    kind = AnalysisKind(args.command)
    request = AnalysisRequest(
        space_path=args.space,
        kind=kind,
        set_labels=getattr(args, "set_labels", None),
        lhs=getattr(args, "lhs", None),
        rhs=getattr(args, "rhs", None),
        x=getattr(args, "x", None),
        y=getattr(args, "y", None),
        mode=args.z_mode,
        max_size=getattr(args, "max_size", None),
        allow_partial=getattr(args, "partial", False),
        force=args.force,
    )
    result = AnalyzeSpaceUseCase(ctx.repository, ctx.logging_service).execute(request)
    serialize, render = _ANALYSIS_OUTPUT[kind]
    if result.payload is not None and result.space is not None:
        ctx.emit(serialize(result.space, result.payload), render)
    if not result.success:
        return _failure(result.error, result.message)
    return EXIT_CODES["ok"]


def _audit_command(ctx: _Context) -> int:
    args = ctx.args
    try:
        propositions = parse_propositions(args.props) if args.props else None
    except UsageError as e:
        return _failure(e, str(e))
    request = AuditRequest(
        space_path=args.space,
        campaign=args.campaign,
        propositions=propositions,
        mode=args.z_mode,
        seed=args.seed,
        workers=args.workers,
        force=args.force,
    )
    result = AuditSpaceUseCase(ctx.repository, ctx.logging_service).execute(request)
    if not result.success:
        return _failure(result.error, result.message)
    if result.campaign is not None:
        ctx.emit(serializers.campaign_record(result.campaign), renderers.render_campaign)
    else:
        ctx.emit(serializers.audit_record(result.report), renderers.render_audit)
    return EXIT_CODES["ok"]


_COMMANDS: Dict[str, Callable[[_Context], int]] = {
    "build": _build_command,
    "audit": _audit_command,
}


# =====================================================================
# Punto de entrada
# =====================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta un comando de `cspace`.

    Args:
        argv: Argumentos sin el nombre del programa (por defecto sys.argv[1:])

    Returns:
        int: Código de salida
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CODES["usage_error"]

    level = "DEBUG" if args.verbose > 1 else "INFO" if args.verbose == 1 else None
    configure_logging(settings, level)
    previous_cap = settings.max_points
    try:
        settings.ensure_valid()
        if args.max_points is not None:
            settings.update_setting("limits.max_points", args.max_points)
        command = _COMMANDS.get(args.command, _analysis_command)
        return command(_Context(args))
    except CSpaceError as e:
        return _failure(e, str(e))
    finally:
        settings.update_setting("limits.max_points", previous_cap)
        reset_logging()


if __name__ == "__main__":
    sys.exit(main())
