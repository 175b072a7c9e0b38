"""
Renderizado de resultados como texto para humanos.

Trabaja sobre los registros de serializers.py, de modo que la salida de
texto y la salida --json muestran siempre la misma información.
"""

from typing import Any, Dict, Iterable, List, Optional


def _set(labels: Optional[Iterable[str]]) -> str:
    if labels is None:
        return "-"
    return "{" + ", ".join(labels) + "}"


def _value(value: Optional[str]) -> str:
    return "-" if value is None else value


def _lines(lines: List[str]) -> str:
    return "\n".join(lines) + "\n"


def render_validation(record: Dict[str, Any]) -> str:
    status = "válido" if record["ok"] else "inválido"
    lines = [f"Espacio {status}: {record['points']} puntos, {record['maximal_count']} maximales"]
    for violation in record["violations"]:
        lines.append(f"  [{violation['axiom']}] {violation['message']}")
    return _lines(lines)


def render_classes(record: Dict[str, Any]) -> str:
    bound = "sin límite" if record["max_size"] is None else f"tamaño <= {record['max_size']}"
    lines = [
        f"Clases de equivalencia ({bound}): {record['class_count']}",
        f"Subconjuntos examinados: {record['subsets_examined']}, consistentes: {record['consistent_subsets']}",
    ]
    for cls in record["classes"]:
        kind = "consistente" if cls["consistent"] else "inconsistente"
        lines.append(f"  {_set(cls['representative'])}  tamaño={cls['class_size']}  {kind}")
    return _lines(lines)


def render_negation(record: Dict[str, Any]) -> str:
    lines = [f"Negación de {_set(record['input_set'])} (z: {record['mode']})"]
    if record["candidates"]:
        lines.append(f"  candidatos: {', '.join(record['candidates'])}")
        lines.append(f"  representante: {record['representative']}")
        lines.append(f"  todos equivalentes: {'sí' if record['all_equivalent'] else 'no'}")
    else:
        lines.append("  no existe negación")
    return _lines(lines)


def render_implies(record: Dict[str, Any]) -> str:
    text = {"true": "verdadero", "false": "falso", "undefined": "indefinido"}[record["verdict"]]
    line = f"{_set(record['lhs'])} → {_set(record['rhs'])}: {text}"
    if record["reason"]:
        line += f" ({record['reason']})"
    return _lines([line])


def render_join(record: Dict[str, Any]) -> str:
    line = f"{record['x']} ∨ {record['y']} = {_value(record['join'])}"
    if record["input_set"] is not None:
        line += f"  (negación de {_set(record['input_set'])})"
    lines = [line]
    if record["reason"]:
        lines.append(f"  {record['reason']}")
    return _lines(lines)


def render_meet(record: Dict[str, Any]) -> str:
    kind = "consistente" if record["consistent"] else "inconsistente"
    return _lines([f"{_set(record['lhs'])} ∧ {_set(record['rhs'])} = {_set(record['meet'])} ({kind})"])


def render_lub(record: Dict[str, Any]) -> str:
    lines = [
        f"Cota superior mínima de {record['x']} y {record['y']} (z: {record['mode']})",
        f"  join: {_value(record['join'])}, meet: {_set(record['meet'])}",
        f"  resultado: {'cumple' if record['passed'] else 'refutado'}, omisiones: {record['skipped']}",
    ]
    for entry in record["entries"]:
        lines.append(f"  t={entry['t']}: superior={entry['upper']} inferior={entry['lower']}")
    return _lines(lines)


def render_minimal_inconsistent(record: Dict[str, Any]) -> str:
    lines = [f"Inconsistentes minimales ({len(record['sets'])}):"]
    lines.extend(f"  {_set(s)}" for s in record["sets"])
    if not record["complete"]:
        lines.append(f"  (búsqueda parcial hasta tamaño {record['max_size_searched']})")
    return _lines(lines)


def render_detect_boolean(record: Dict[str, Any]) -> str:
    lines = [f"Espacio booleano: {'sí' if record['is_boolean'] else 'no'}"]
    for condition in record["conditions"]:
        mark = "ok" if condition["passed"] else "FALLA"
        suffix = " (vacía)" if condition["vacuous"] else ""
        lines.append(f"  {condition['name']}: {mark}{suffix}")
        if condition["message"]:
            lines.append(f"    {condition['message']}")
    if record["pairing"]:
        pairs = sorted({tuple(sorted(p)) for p in record["pairing"].items()})
        lines.append("  parejas: " + ", ".join(f"{a}/{b}" for a, b in pairs))
    lines.append(f"  lectura de exactitud: {record['exactness_reading']}")
    return _lines(lines)


def _render_results(record: Dict[str, Any], indent: str) -> List[str]:
    lines = []
    for result in record["results"]:
        line = (f"{indent}{result['proposition']}: {result['status']}"
                f"  verificadas={result['instances_checked']} omitidas={result['skipped_count']}")
        lines.append(line)
        counterexample = result["counterexample"]
        if counterexample:
            bindings = ", ".join(f"{k}={_set(v)}" for k, v in sorted(counterexample["bindings"].items()))
            lines.append(f"{indent}  contraejemplo: {bindings}")
            lines.append(f"{indent}  {counterexample['message']}")
    return lines


def render_audit(record: Dict[str, Any]) -> str:
    space = record["space"]
    config = record["config"]
    lines = [
        f"Auditoría de {space['name']} ({len(space['points'])} puntos, {space['maximal_count']} maximales)",
        f"Modo z: {config['mode']}, límite: {config['cap']}",
    ]
    lines.extend(_render_results(record, "  "))
    for divergence in record["mode_divergences"]:
        lines.append(f"  divergencia en {divergence['point']}: "
                     f"elements={_set(divergence['elements'])} subsets={_set(divergence['subsets'])}")
    return _lines(lines)


def render_campaign(record: Dict[str, Any]) -> str:
    lines = [f"Campaña: {len(record['entries'])} espacios"]
    for entry in record["entries"]:
        if entry["error"] is not None:
            lines.append(f"  {entry['name']}: error: {entry['error']}")
    lines.append("Resumen:")
    for item in record["summary"]:
        lines.append(f"  {item['proposition']}: holds={item['holds']} refuted={item['refuted']} "
                     f"skipped={item['skipped']}")
        first = item["first_counterexample"]
        if first:
            bindings = ", ".join(f"{k}={_set(v)}"
                                 for k, v in sorted(first["counterexample"]["bindings"].items()))
            lines.append(f"    primer contraejemplo en {first['space']}: {bindings}")
    return _lines(lines)
