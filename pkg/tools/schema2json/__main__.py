import argparse
import importlib
import inspect
import json
import os
import pkgutil
from types import ModuleType
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel
from pydantic.json_schema import JsonSchemaMode, models_json_schema


def issubclass_safe(c: type, cls: type) -> bool:
    try:
        return inspect.isclass(c) and issubclass(c, cls)
    except Exception:
        return False


def collect_models(module: ModuleType) -> list[type[BaseModel]]:
    models: list[type[BaseModel]] = []
    for _, obj in inspect.getmembers(module, inspect.isclass):
        if issubclass_safe(obj, BaseModel) and obj.__module__ == module.__name__:
            models.append(obj)
    return sorted(models, key=lambda c: c.__name__)


def package_models(package_name: str) -> list[type[BaseModel]]:
    """Every BaseModel defined in the submodules of ``package_name``, sorted by module then name."""
    package = importlib.import_module(package_name)
    models: list[type[BaseModel]] = []
    for info in sorted(pkgutil.iter_modules(package.__path__), key=lambda i: i.name):
        if info.name.startswith("_"):
            continue
        models.extend(collect_models(importlib.import_module(f"{package_name}.{info.name}")))
    return models


def build_schema(package_name: str, title: str) -> Dict[str, Any]:
    models = package_models(package_name)
    mode: JsonSchemaMode = "serialization"
    pairs: List[Tuple[type[BaseModel], JsonSchemaMode]] = [(model, mode) for model in models]
    _, schema = models_json_schema(pairs, title=title)
    return schema


def main() -> None:
    parser = argparse.ArgumentParser(description="Write the JSON Schema of the report models.")
    parser.add_argument("--package", default="app.schema", help="Package containing the pydantic models.")
    parser.add_argument("--out", default="docs/report-schema.json", help="Output file.")
    parser.add_argument("--title", default="Interlace reports")
    args = parser.parse_args()

    schema = build_schema(args.package, args.title)
    out = os.path.abspath(args.out)
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        json.dump(schema, f, indent=2, sort_keys=True)
        f.write("\n")

    print("success!")
    print(f"{args.package} ({len(schema.get('$defs', {}))} models) -> {out}")


if __name__ == "__main__":
    main()
