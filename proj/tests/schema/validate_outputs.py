"""Runs the lantern CLI over a fixed command list and validates every JSON
output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

COMMANDS = [
    ("report", ["verify", "lantern", "--n", "2"], 0),
    ("report", ["verify", "lantern", "--n", "3"], 0),
    ("report", ["verify", "lantern", "--n", "6"], 0),
    ("report", ["verify", "lantern", "--n", "9"], 0),
    ("report", ["verify", "lantern", "--n", "4", "--order", "revlex"], 1),
    ("report", ["verify", "eq1", "--samples", "20"], 0),
    ("report", ["verify", "eq1", "--a", "x[1]*x[2]", "--b", "x[2]^-1*x[1]", "--samples", "0"], 0),
    ("report", ["verify", "eq2", "--m", "2"], 0),
    ("report", ["verify", "eq2", "--m", "3"], 1),
    ("report", ["verify", "lemma-inverse", "--m", "4"], 0),
    ("report", ["verify", "completed", "--n", "3"], 0),
    ("report", ["verify", "completed", "--n", "4"], 0),
    ("report", ["congruence", "--lhs", "ov(x[1]*x[2])", "--rhs", "ov(x[1]) + ov(x[2])", "--m", "2"], 0),
    ("report", ["congruence", "--lhs", "ov(T[1,2,3])", "--rhs", "ov(T[1,2])", "--m", "2"], 1),
    ("expand", ["expand", "x[1]*x[2]", "--degree", "2"], 0),
    ("expand", ["expand", "x[1]^-1", "--degree", "3"], 0),
    ("expand", ["expand", "t[1]", "--degree", "1"], 0),
    ("expand", ["expand", "T[1,2,3]", "--degree", "1"], 0),
    ("expand", ["expand", "T[2,3]^-1*t[2]", "--degree", "3"], 0),
    ("invariants", ["invariants", "--genus", "2", "--power", "1", "--group", "torus"], 0),
    ("invariants", ["invariants", "--genus", "2", "--power", "0", "--group", "gl"], 0),
    ("invariants", ["invariants", "--genus", "3", "--power", "2", "--group", "gl"], 0),
    ("invariants", ["invariants", "--genus", "3", "--power", "3", "--table"], 0),
    ("invariants", ["invariants", "--genus", "4", "--power", "2", "--group", "gl", "--table"], 0),
]

# Failures must leave stdout empty and report on stderr only.
ERRORS = [
    (["verify", "lantern", "--n", "1"], 2),
    (["verify", "lantern", "--n", "8", "--order", "revlex"], 3),
    (["verify", "nonsense"], 2),
    (["expand", "T[1,2", "--degree", "1"], 2),
    (["invariants", "--genus", "30", "--power", "4", "--group", "gl"], 3),
]


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {
        name: json.loads((schema_dir / f"{name}.schema.json").read_text())
        for name in ("report", "expand", "invariants")
    }
    for schema in schemas.values():
        jsonschema.Draft202012Validator.check_schema(schema)

    failures = 0
    for kind, args, expected in COMMANDS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected:
            print(f"FAIL exit {proc.returncode} != {expected}: {label}\n{proc.stderr}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schemas[kind],
                                cls=jsonschema.Draft202012Validator)
        except (ValueError, jsonschema.ValidationError) as err:
            print(f"FAIL schema: {label}: {err}")
            failures += 1
            continue
        print(f"ok   {label}")

    for args, expected in ERRORS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
        label = " ".join(args)
        if proc.returncode != expected or proc.stdout or not proc.stderr:
            print(f"FAIL error path {label}: exit {proc.returncode}, stdout {proc.stdout!r}")
            failures += 1
            continue
        print(f"ok   {label} -> exit {expected}")

    print(f"{len(COMMANDS) + len(ERRORS) - failures}/{len(COMMANDS) + len(ERRORS)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
