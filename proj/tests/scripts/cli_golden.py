#!/usr/bin/env python3
"""Run every golden CLI case twice, compare bytes, compare with the stored
file and validate JSON payloads against the schema."""
import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema


def load_cases(path):
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, args = (s.strip() for s in line.split("|", 1))
        yield name, args


def run(binary, args):
    p = subprocess.run([binary] + args, capture_output=True)
    return p.returncode, p.stdout, p.stderr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--binary", required=True)
    ap.add_argument("--golden", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--update", action="store_true")
    opt = ap.parse_args()

    golden = pathlib.Path(opt.golden)
    schema = json.loads(pathlib.Path(opt.schema).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for name, argline in load_cases(golden / "cases.txt"):
        args = argline.replace("{golden}", str(golden)).split()
        rc1, out1, err1 = run(opt.binary, args)
        rc2, out2, err2 = run(opt.binary, args)
        payload = out1 if rc1 == 0 else err1
        csv = "--format csv" in argline
        suffix = ".csv" if csv else ".json"
        ref = golden / (name + suffix)
        problems = []
        if (rc1, out1, err1) != (rc2, out2, err2):
            problems.append("output differs between runs")
        if not csv:
            try:
                errs = list(validator.iter_errors(json.loads(payload)))
                if errs:
                    problems.append("schema: " + errs[0].message)
            except json.JSONDecodeError as e:
                problems.append("not JSON: %s" % e)
        if opt.update:
            ref.write_bytes(payload)
        elif not ref.exists():
            problems.append("missing golden file " + ref.name)
        elif ref.read_bytes() != payload:
            problems.append("differs from " + ref.name)
        status = "ok" if not problems else "FAIL"
        print("%-20s exit=%d %s %s" % (name, rc1, status, "; ".join(problems)))
        failures += bool(problems)
    for ref in sorted(golden.glob("*.json")):
        try:
            errs = list(validator.iter_errors(json.loads(ref.read_bytes())))
        except json.JSONDecodeError as e:
            errs = [e]
        if errs:
            print("%-20s schema FAIL %s" % (ref.name, errs[0]))
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
