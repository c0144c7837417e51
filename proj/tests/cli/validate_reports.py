"""Runs the CLI on every job of a batch file, one process per job, and
validates each report and the batch document against the report schema."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main(binary, schema_path, jobs_path):
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    jobs_path = Path(jobs_path)
    failures = 0

    batch = subprocess.run([binary, "batch", "--input", str(jobs_path)], capture_output=True, text=True)
    doc = json.loads(batch.stdout)
    for err in validator.iter_errors(doc):
        print(f"batch document: {err.message}")
        failures += 1
    if batch.returncode != doc["exit_code"]:
        print(f"batch exit {batch.returncode} differs from reported {doc['exit_code']}")
        failures += 1

    for i, job in enumerate(json.loads(jobs_path.read_text())):
        args = [binary, *job["command"].split()]
        inp = job.get("input", {})
        if isinstance(inp, str):
            args += ["--input", str(jobs_path.parent / inp)]
        else:
            args += ["--json", json.dumps(inp)]
        for key, value in job.get("config", {}).items():
            args += ["--" + key.replace("_", "-"), str(value)]
        proc = subprocess.run(args, capture_output=True, text=True)
        report = json.loads(proc.stdout)
        for err in validator.iter_errors(report):
            print(f"job {i} ({job['command']}): {err.message}")
            failures += 1
        if proc.returncode != report["exit_code"]:
            print(f"job {i}: exit {proc.returncode} differs from reported {report['exit_code']}")
            failures += 1
        # the batch report of the same job must be identical
        if report != doc["reports"][i]:
            print(f"job {i}: single-run report differs from the batch report")
            failures += 1

    print(f"{len(doc['reports'])} reports checked, {failures} problems")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:4]))
