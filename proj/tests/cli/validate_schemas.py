"""Runs every subcommand with --json, validates against docs/schemas, and checks byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    work = pathlib.Path(tempfile.mkdtemp(prefix="sunflower-schema-"))

    def run(*args, expect=0):
        proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=600)
        if proc.returncode != expect:
            raise SystemExit(f"{args}: exit {proc.returncode}, wanted {expect}\n{proc.stderr}")
        return proc.stdout

    hg = work / "sk.hg"
    run("construct", "small-kernel", "-n", "8", "-r", "4", "-t", "1", "-k", "2", "--out", str(hg))
    free3 = work / "free3.hg"
    run("construct", "small-kernel", "-n", "9", "-r", "3", "-t", "1", "-k", "3", "--out", str(free3))
    k5 = work / "k5.hg"
    run("construct", "clique", "-n", "5", "-r", "3", "-t", "1", "-k", "4", "--out", str(k5))
    collection = work / "collection.json"
    collection.write_text(json.dumps({"m": 3, "sets": [[1, 2], [2, 3], [1, 3], [1, 2, 3]]}))
    family = work / "family.json"
    family.write_text(json.dumps({"N": 3, "family": [[], [1], [2], [3], [1, 2]]}))

    cases = [
        ("find", ["find", "--input", str(hg), "-t", "1", "-k", "2", "--json"], 0),
        ("find", ["find", "--input", str(hg), "-t", "2", "-k", "2", "--json"], 0),
        ("construct", ["construct", "small-kernel", "-n", "10", "-r", "3", "-t", "1", "-k", "3", "--json"], 0),
        ("construct", ["construct", "large-kernel", "-n", "36", "-r", "3", "-t", "2", "-k", "2",
                       "--stages", "4", "--seed", "7", "--json"], 0),
        ("construct", ["construct", "clique", "-n", "9", "-r", "3", "-t", "1", "-k", "3", "--json"], 0),
        ("exact", ["exact", "-n", "6", "-r", "2", "-t", "1", "-k", "2", "--json"], 0),
        ("exact", ["exact", "-n", "12", "-r", "3", "-t", "1", "-k", "2", "--json"], 0),
        ("system-search", ["system-search", "-t", "2", "-N", "5", "--json"], 0),
        ("lucas", ["lucas", "-t", "3", "--max-a", "40", "--json"], 0),
        ("lucas", ["lucas", "-t", "1", "--input", str(family), "--json"], 0),
        ("frankl-katona", ["frankl-katona", "--input", str(collection), "--json"], 0),
        ("frankl-katona", ["frankl-katona", "-m", "6", "--samples", "200", "--seed", "3", "--json"], 0),
        ("frankl-katona", ["frankl-katona", "--input", str(family), "-t", "1", "--json"], 0),
        ("verify-reduction", ["verify-reduction", "-t", "1", "--json"], 0),
        ("verify-reduction", ["verify-reduction", "-t", "3", "--samples", "200", "--json"], 0),
        ("verify-reduction", ["verify-reduction", "--input", str(free3), "-k", "3", "--json"], 0),
        ("bound-check", ["bound-check", "-n", "10", "-r", "3", "-t", "1", "-k", "2", "--json"], 0),
        ("bound-check", ["bound-check", "--input", str(k5), "-l", "1", "-k", "4", "--json"], 0),
        ("bound-check", ["bound-check", "--input", str(free3), "-l", "1", "-k", "3", "--json"], 1),
        ("bench", ["bench", "--n-min", "4", "-n", "6", "-r", "3", "-k", "2", "--json"], 0),
    ]
    failures = 0
    for name, args, code in cases:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        first = run(*args, expect=code)
        second = run(*args, expect=code)
        try:
            jsonschema.validate(json.loads(first), schema, cls=jsonschema.Draft202012Validator)
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(args)}: {e.message}")
            failures += 1
            continue
        if first != second:
            print(f"FAIL {' '.join(args)}: output differs between runs")
            failures += 1
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
