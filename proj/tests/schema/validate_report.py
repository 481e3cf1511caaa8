"""Runs the CLI on the fixture archives and validates every report.json."""

import argparse
import json
import pathlib
import shutil
import subprocess
import sys

import jsonschema


def run(cli, args):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--fixtures", required=True)
    parser.add_argument("--workdir", required=True)
    args = parser.parse_args()

    schema = json.loads(pathlib.Path(args.schema).read_text())
    jsonschema.Draft7Validator.check_schema(schema)
    validator = jsonschema.Draft7Validator(schema)

    work = pathlib.Path(args.workdir)
    shutil.rmtree(work, ignore_errors=True)
    fixtures = pathlib.Path(args.fixtures)

    cases = [
        ("collection", ["collection.zip"], []),
        ("collection-fragments", ["collection.zip"], ["--include-fragments"]),
        ("collection-anon", ["collection.zip"], ["--include-fragments", "--anonymize-output"]),
        ("identical", ["identical.zip"], ["--similarity-threshold", "0.9"]),
    ]
    failures = 0
    for name, source, extra in cases:
        out = work / name
        code, _, err = run(args.cli, ["run", str(fixtures / source[0]), "--format", "json",
                                      "--output", str(out), *extra])
        if code != 0:
            print(f"FAIL {name}: exit {code}: {err.strip()}")
            failures += 1
            continue
        doc = json.loads((out / "report.json").read_text())
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {name}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += len(errors)
        if name == "collection" and len(doc["files"]) != 5:
            print(f"FAIL {name}: expected 5 files, got {len(doc['files'])}")
            failures += 1
        if not errors:
            print(f"ok   {name}")

    code, _, err = run(args.cli, ["run", str(fixtures / "single-file")])
    if code != 2 or "at least 2 files" not in err:
        print(f"FAIL single-file: exit {code}: {err.strip()}")
        failures += 1
    else:
        print("ok   single-file")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
