#!/usr/bin/env python3
"""Validate every JSON-emitting CLI subcommand against the shipped schema."""

import argparse
import json
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    ["analyze", "Bw"],                                   # K_3
    ["analyze", "E]~o"],                                 # K_6 minus a perfect matching
    ["analyze", "IheA@GUAo"],                            # Petersen
    ["analyze", "A?"],                                   # 2K_1: vacuous SNS
    ["product", "--op", "cartesian", "C~", "E]~o"],
    ["product", "--op", "tensor", "Bw", "C~"],
    ["product", "--op", "cartesian", "Bw", "C~"],        # lambda mismatch: null expectation
    ["shadow", "-m", "3", "Bw"],
    ["scan-forbidden", "--family", "p3", "--max-n", "6"],
    ["scan-forbidden", "--family", "kmn:1,2", "--max-n", "6"],
    ["scan-forbidden", "--family", "star:3", "--max-n", "6"],
    ["verify", "--theorem", "tensor-usns", "Bw", "C~"],
    ["verify", "--theorem", "cartesian-usns", "Bw", "Bw"],
    ["verify", "--theorem", "shadow", "-q", "2", "-m", "3", "Bw"],
    ["verify", "--theorem", "p3h", "--max-n", "8"],
    ["verify", "--theorem", "p3h", "C~"],
    ["verify", "--theorem", "p5", "--lambda", "5", "--max-n", "7"],
    ["conway", "--product", "cartesian"],
    ["conway", "--product", "tensor"],
    ["iso", "Bw", "Bw"],
]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", required=True)
    args = parser.parse_args()

    with open(args.schema, encoding="utf-8") as handle:
        schema = json.load(handle)
    validator = jsonschema.Draft7Validator(schema)

    failures = 0
    for argv in INVOCATIONS:
        label = " ".join(argv)
        proc = subprocess.run(
            [args.cli, *argv], capture_output=True, text=True, timeout=300
        )
        if proc.returncode != 0:
            print(f"FAIL [{label}]: exit {proc.returncode}, stderr: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            document = json.loads(proc.stdout)
        except json.JSONDecodeError as err:
            print(f"FAIL [{label}]: stdout is not JSON ({err})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(document), key=str)
        if errors:
            print(f"FAIL [{label}]: {len(errors)} schema violation(s)")
            for error in errors[:3]:
                print(f"  at {'/'.join(str(p) for p in error.absolute_path)}: {error.message}")
            failures += 1
        else:
            print(f"ok   [{label}]")

    if failures:
        print(f"{failures} of {len(INVOCATIONS)} invocations failed schema validation")
        return 1
    print(f"all {len(INVOCATIONS)} reports conform to the schema")
    return 0


if __name__ == "__main__":
    sys.exit(main())
