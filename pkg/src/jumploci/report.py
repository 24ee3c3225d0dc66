"""Deterministic JSON reports and a small structural schema checker.

Reports are serialized with sorted keys and canonical array orders so
identical inputs and configuration produce byte-identical files.
"""

from __future__ import annotations

import json

from . import __version__


def build_report(command, config, results):
    return {
        "tool": "jumploci",
        "version": __version__,
        "command": command,
        "config": config,
        "results": results,
    }


def dumps_canonical(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def write_report(report, path):
    data = dumps_canonical(report)
    if path == "-":
        import sys
        sys.stdout.write(data)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(data)
    return data


class SchemaError(ValueError):
    pass


def check_schema(instance, schema, path="$"):
    """Validate against the subset of JSON Schema the shipped schema
    uses: type, required, properties, items, enum."""
    stype = schema.get("type")
    if stype:
        if not _type_ok(instance, stype):
            raise SchemaError(f"{path}: expected {stype}, got {type(instance).__name__}")
    if "enum" in schema and instance not in schema["enum"]:
        raise SchemaError(f"{path}: {instance!r} not in enum")
    if stype == "object":
        for key in schema.get("required", []):
            if key not in instance:
                raise SchemaError(f"{path}: missing required key {key!r}")
        for key, sub in schema.get("properties", {}).items():
            if key in instance:
                check_schema(instance[key], sub, f"{path}.{key}")
    if stype == "array" and "items" in schema:
        for i, item in enumerate(instance):
            check_schema(item, schema["items"], f"{path}[{i}]")
    return True


def _type_ok(value, stype):
    types = stype if isinstance(stype, list) else [stype]
    for t in types:
        if t == "object" and isinstance(value, dict):
            return True
        if t == "array" and isinstance(value, list):
            return True
        if t == "string" and isinstance(value, str):
            return True
        if t == "boolean" and isinstance(value, bool):
            return True
        if t == "integer" and isinstance(value, int) and not isinstance(value, bool):
            return True
        if t == "number" and isinstance(value, (int, float)) and not isinstance(value, bool):
            return True
        if t == "null" and value is None:
            return True
    return False


def load_schema(path=None):
    if path is None:
        import os
        here = os.path.dirname(os.path.dirname(os.path.dirname(
            os.path.abspath(__file__))))
        path = os.path.join(here, "schema", "report.schema.json")
        if not os.path.exists(path):
            path = None
    if path is None:
        return DEFAULT_SCHEMA
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


DEFAULT_SCHEMA = {
    "type": "object",
    "required": ["tool", "version", "command", "config", "results"],
    "properties": {
        "tool": {"type": "string", "enum": ["jumploci"]},
        "version": {"type": "string"},
        "command": {"type": "string"},
        "config": {"type": "object"},
        "results": {"type": ["object", "array"]},
    },
}
