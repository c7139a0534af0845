"""End-to-end checks of the tc_sphere binary: exit codes, JSON schemas, determinism."""

import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
failures = []


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=merged, check=False)


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + ("" if cond else f": {detail}"))
    if not cond:
        failures.append(name)


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


bound_schema = schema("bound_report.schema.json")
plan_schema = schema("plan_result.schema.json")
jsonschema.Draft202012Validator.check_schema(bound_schema)
jsonschema.Draft202012Validator.check_schema(plan_schema)

for spec, r, lower, upper, exact in [
    ("CP(2); 1*eta+1*eps", 3, 5, 5, 5),
    ("RP(3); 2*eta+1*eps", 2, 2, 3, None),
    ("CP(1); 1*eta", 4, 3, 3, 3),
    ("S(2); 3*eps", 3, 3, 3, 3),
]:
    p = run("bounds", spec, "--r", str(r), "--format", "json")
    check(f"bounds exit 0 [{spec} r={r}]", p.returncode == 0, p.stderr)
    doc = json.loads(p.stdout)
    try:
        jsonschema.validate(doc, bound_schema)
        check(f"bounds schema [{spec} r={r}]", True)
    except jsonschema.ValidationError as e:
        check(f"bounds schema [{spec} r={r}]", False, e.message)
    got = (doc["lower"], doc["upper"], doc["exact"])
    check(f"bounds values [{spec} r={r}]", got == (lower, upper, exact), str(got))

p = run("bounds", "CP(2) 1*eta", "--r", "2")
check("parse error exits 2", p.returncode == 2, str(p.returncode))
check("parse error names the grammar", "CP(n)|RP(n)|S(m)|pt" in p.stderr, p.stderr)
check("r < 2 exits 2", run("bounds", "CP(1); 1*eta", "--r", "1").returncode == 2)
check("unknown subcommand exits 2", run("frobnicate").returncode == 2)
check("help exits 0", run("--help").returncode == 0)

for spec, r, coeffs in [("CP(1); 1*eta+1*eps", 2, "Z"), ("pt; 2*eps", 3, "Z"), ("RP(3); 2*eta+1*eps", 2, "Z2")]:
    p = run("oracle", spec, "--r", str(r), "--format", "json")
    doc = json.loads(p.stdout) if p.returncode == 0 else {}
    check(f"oracle match [{spec} r={r}]",
          p.returncode == 0 and doc["match"] and doc["oracle"] == 2 and doc["coefficients"] == coeffs,
          p.stdout + p.stderr)
check("oracle without a model exits 2", run("oracle", "CP(1); 1*eta", "--r", "2").returncode == 2)

p = run("sweep", "--family", "cp_eta_eps", "--n", "1..4", "--r", "2", "--format", "json")
rows = json.loads(p.stdout)
check("sweep cp exact column", [row["exact"] for row in rows] == [2, 4, 4, 6], p.stdout)
p = run("sweep", "--family", "rp_l_eta_eps", "--n", "3", "--l", "2", "--r", "2..4", "--format", "json")
rows = json.loads(p.stdout)
check("sweep rp intervals", [[row["lower"], row["upper"]] for row in rows] == [[2, 3], [3, 4], [4, 5]], p.stdout)
p = run("sweep", "--family", "cp_eta_eps", "--n", "3..1", "--format", "csv")
check("empty sweep csv is header only", p.returncode == 0 and p.stdout.strip() == "family,n,l,r,lower,upper,exact")
p = run("sweep", "--family", "cp_eta_eps", "--n", "3..1", "--format", "json")
check("empty sweep json is []", p.returncode == 0 and json.loads(p.stdout) == [])
check("bad family exits 2", run("sweep", "--family", "hopf", "--n", "1").returncode == 2)

p = run("plan", "--q", "2", "--points", "1,0;-1,0", "--samples", "5", "--format", "json")
doc = json.loads(p.stdout)
try:
    jsonschema.validate(doc, plan_schema)
    check("plan schema (antipodal)", True)
except jsonschema.ValidationError as e:
    check("plan schema (antipodal)", False, e.message)
mid = doc["samples"][0][2]
check("plan antipodal is a great circle, piece 1",
      doc["piece_index"] == 1 and doc["J"] == [2] and abs(mid[0] - 0.5) < 1e-15 and abs(mid[2] - 1.0) < 1e-12,
      json.dumps(doc["samples"][0]))
p = run("plan", "--q", "4", "--r", "4", "--seed", "3", "--format", "json")
doc = json.loads(p.stdout)
try:
    jsonschema.validate(doc, plan_schema)
    check("plan schema (random)", True)
except jsonschema.ValidationError as e:
    check("plan schema (random)", False, e.message)
check("malformed points exit 2", run("plan", "--q", "2", "--points", "1,0;x,1").returncode == 2)
check("wrong dimension exits 2", run("plan", "--q", "3", "--points", "1,0;0,1").returncode == 2)
check("non-unit points exit 2", run("plan", "--q", "2", "--points", "2,0;0,1").returncode == 2)

args = ["stats", "--q", "4", "--r", "3", "--samples", "100000", "--seed", "7", "--format", "json"]
a = run(*args)
b = run(*args, env={"TC_SPHERE_THREADS": "1"})
c = run(*args, env={"TC_SPHERE_THREADS": "3"})
check("stats deterministic across thread caps", a.stdout == b.stdout == c.stdout and a.returncode == 0)
doc = json.loads(a.stdout)
check("stats max index <= 2", doc["max_index"] <= 2 and sum(doc["histogram"]) == 100000, a.stdout)
p = run("stats", "--q", "3", "--r", "3", "--samples", "5000", "--seed", "1", "--antipodal-prob", "0.5",
        "--format", "json")
doc = json.loads(p.stdout)
check("stats odd q uses k = 1 and stays within k + r - 1",
      p.returncode == 0 and doc["k"] == 1 and doc["max_index"] <= 3, p.stdout)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
