"""Validates every generator's document against docs/document.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

names = ["eggbox", "miura", "tube", "hollowped", "fractal", "double_l", "miura_weave", "link",
         "link_field", "butterfly", "butterfly_field", "dos_equis_layer", "dos_equis_stack"]
bad = 0
with tempfile.TemporaryDirectory() as tmp:
    for name in names:
        for extra in ([], ["--periodic"]):
            out = Path(tmp) / f"{name}.json"
            args = [cli, "generate", name, "--word", "LR", "-o", str(out), *extra]
            subprocess.run(args, check=True, capture_output=True)
            errors = list(validator.iter_errors(json.loads(out.read_text())))
            for e in errors:
                print(f"{name} {extra}: {e.message} at {list(e.path)}")
            bad += len(errors)

    # the schema must also reject what the parser rejects
    doc = json.loads((Path(tmp) / "miura.json").read_text())
    doc["facets"][0]["type"] = [1, 2]
    if validator.is_valid(doc):
        print("forbidden facet accepted by the schema")
        bad += 1

print("ok" if bad == 0 else f"{bad} problems")
sys.exit(1 if bad else 0)
