#!/usr/bin/env python3
"""Behavioral CLI checks: exit codes, stream discipline, determinism."""

import argparse
import json
import subprocess
import sys

FAILURES = 0


def run(cli, argv, stdin=None):
    return subprocess.run(
        [cli, *argv], input=stdin, capture_output=True, text=True, timeout=300
    )


def check(ok, label, detail=""):
    global FAILURES
    if ok:
        print(f"ok   [{label}]")
    else:
        FAILURES += 1
        print(f"FAIL [{label}] {detail}")


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    args = parser.parse_args()
    cli = args.cli

    # Determinism: identical invocations, byte-identical stdout.
    first = run(cli, ["analyze", "E]~o"])
    second = run(cli, ["analyze", "E]~o"])
    check(first.returncode == 0 and second.returncode == 0, "analyze exits 0",
          f"exits {first.returncode}/{second.returncode}")
    check(first.stdout == second.stdout, "analyze stdout deterministic")
    conway_a = run(cli, ["conway", "--product", "cartesian"])
    conway_b = run(cli, ["conway", "--product", "cartesian"])
    check(conway_a.returncode == 0 and conway_a.stdout == conway_b.stdout,
          "conway stdout deterministic and exits 0")

    # Timings live on stderr only.
    check("elapsed_seconds" in first.stderr, "timing on stderr")
    check("elapsed_seconds" not in first.stdout, "no timing on stdout")
    document = json.loads(first.stdout)
    check(document["result"]["er"] == {"n": 6, "d": 4, "lambda": 2},
          "analyze classifies E]~o", first.stdout[:200])
    check(document["result"]["sns"]["usns"] == "A?", "analyze reports the usns")

    # Usage and input errors exit 2.
    check(run(cli, []).returncode == 2, "no subcommand exits 2")
    check(run(cli, ["analyze"]).returncode == 2, "missing argument exits 2")
    check(run(cli, ["nonsense"]).returncode == 2, "unknown subcommand exits 2")
    bad = run(cli, ["analyze", "!!!"])
    check(bad.returncode == 2, "malformed graph6 exits 2")
    check(bad.stderr.startswith("error:"), "parse failure message on stderr", bad.stderr[:80])
    check(run(cli, ["scan-forbidden", "--family", "bogus", "--max-n", "5"]).returncode == 2,
          "unknown family exits 2")
    check(run(cli, ["enumerate", "-n", "13", "-d", "2", "-l", "0"]).returncode == 2,
          "oversized enumeration without --allow-large exits 2")
    check(run(cli, ["verify", "--theorem", "p3h"]).returncode == 2,
          "p3h without graph or --max-n exits 2")
    check(run(cli, ["--help"]).returncode == 0, "--help exits 0")

    # Scientific negatives exit 1: K_3 vs P_3 are not isomorphic.
    negative = run(cli, ["iso", "Bw", "Bg"])
    check(negative.returncode == 1, "non-isomorphic pair exits 1",
          f"exit {negative.returncode}")
    payload = json.loads(negative.stdout)
    check(payload["result"]["isomorphic"] is False and payload["result"]["witness"] is None,
          "non-isomorphic report has a null witness")

    # Isomorphic pair: exit 0 and a usable witness. Dhc is C_5 in cyclic
    # order; DUW is the same cycle relabeled 0,2,4,1,3.
    positive = run(cli, ["iso", "Dhc", "DUW"])
    check(positive.returncode == 0, "isomorphic pair exits 0",
          f"exit {positive.returncode}: {positive.stderr[:120]}")
    if positive.returncode == 0:
        witness = json.loads(positive.stdout)["result"]["witness"]
        check(isinstance(witness, list) and sorted(witness) == [0, 1, 2, 3, 4],
              "witness is a permutation of the vertices")

    # Stdin dash input matches the argument form.
    piped = run(cli, ["analyze", "-"], stdin="E]~o\n")
    check(piped.returncode == 0 and piped.stdout == first.stdout,
          "stdin '-' input equals argument input")

    # convert emits raw formats, not JSON.
    dot = run(cli, ["convert", "--to", "dot", "A_"])
    check(dot.returncode == 0 and dot.stdout == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n",
          "convert --to dot pins the exact document", repr(dot.stdout))
    g6 = run(cli, ["convert", "--to", "g6", "A_"])
    check(g6.returncode == 0 and g6.stdout == "A_\n", "convert --to g6 round-trips")

    # enumerate streams graph6 lines on stdout, stats JSON on stderr.
    enum = run(cli, ["enumerate", "-n", "5", "-d", "2", "-l", "0"])
    check(enum.returncode == 0, "enumerate exits 0")
    lines = enum.stdout.splitlines()
    check(len(lines) == 1, "ER(5,2,0) enumerates one class", enum.stdout)
    stats = json.loads(enum.stderr)
    check(stats["emitted"] == 1 and "elapsed_seconds" in stats,
          "enumeration stats land on stderr")
    limited = run(cli, ["enumerate", "-n", "10", "-d", "3", "-l", "0", "--limit", "2"])
    check(limited.returncode == 0 and len(limited.stdout.splitlines()) == 2,
          "--limit truncates the stream")
    check(json.loads(limited.stderr)["complete"] is False,
          "truncated enumeration reports incompleteness")

    # Theorem scans over clean universes exit 0.
    scan = run(cli, ["scan-forbidden", "--family", "p3", "--max-n", "6"])
    check(scan.returncode == 0, "clean forbidden scan exits 0")
    check(json.loads(scan.stdout)["result"]["verdict"] == "confirmed",
          "scan verdict is confirmed")
    tensor = run(cli, ["conway", "--product", "tensor"])
    check(tensor.returncode == 0 and
          json.loads(tensor.stdout)["result"]["surviving_count"] == 0,
          "tensor elimination leaves no survivors")

    if FAILURES:
        print(f"{FAILURES} CLI check(s) failed")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
