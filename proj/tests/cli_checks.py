# Copyright 2026 the abelos authors
# SPDX-License-Identifier: Apache-2.0
#
# End-to-end checks of the CLI binary: output shapes, exit codes, the config
# file path, and the ABELOS_MAX_ENUM override.

import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = 0


def run(args, env=None, expect_rc=0):
    global failures
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    p = subprocess.run([CLI] + args, capture_output=True, text=True,
                       env=full_env)
    if p.returncode != expect_rc:
        print(f"FAIL rc={p.returncode} (want {expect_rc}): {args}\n"
              f"  stderr: {p.stderr.strip()[:300]}")
        failures += 1
    return p


# classify: the three documented examples
p = run(["classify", "--q", "7", "--t1", "0", "--t2", "-7"])
j = json.loads(p.stdout)
assert_ok = j.get("npp") is True and j.get("ell_max") == 2
if not assert_ok:
    print("FAIL classify npp example:", j)
    failures += 1

p = run(["classify", "--weil-restriction", "--q", "16", "--tr-e", "31"])
j = json.loads(p.stdout)
if j.get("rule") != "prop45-case-1":
    print("FAIL classify weil-restriction example:", j)
    failures += 1

p = run(["classify", "--q", "9", "--t1", "0", "--t2", "9"])
j = json.loads(p.stdout)
if j.get("simple") != "NotSimple" or j.get("ell_max") != 0:
    print("FAIL classify product example:", j)
    failures += 1

# validation failure -> exit 2
run(["classify", "--q", "4", "--t1", "9", "--t2", "0"], expect_rc=2)

# bound with the worked instance
p = run(["bound", "--weil-restriction", "--q", "16", "--tr-e", "31",
         "--r", "3", "--ell", "2"])
j = json.loads(p.stdout)
if j["simple"]["d_lower"] != 144 or j["general"]["d_lower"] != 4:
    print("FAIL bound worked instance:", j)
    failures += 1

# no binary-float formatting artifacts in emitted numbers
if "0000001" in p.stdout or "9999999" in p.stdout:
    print("FAIL float artifact in bound output")
    failures += 1

# search determinism and content
a = run(["search", "--q", "16", "--source", "weil-restriction",
         "--r-min", "3", "--r-max", "3", "--ells", "1"]).stdout
b = run(["search", "--q", "16", "--source", "weil-restriction",
         "--r-min", "3", "--r-max", "3", "--ells", "1"]).stdout
if a != b:
    print("FAIL search rerun not byte-identical")
    failures += 1
if "16,0,-31,2,3,1,226,9,4,145" not in a:
    print("FAIL search misses the worked row")
    failures += 1

# config-file path: same request through a JSON file
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"q": 7, "t1": 0, "t2": -7}, f)
    cfg = f.name
p = run(["classify", "--config", cfg])
if json.loads(p.stdout).get("npp") is not True:
    print("FAIL classify via config file")
    failures += 1
os.unlink(cfg)

# count
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"p": 7, "model": "genus2", "f": [1, 0, 0, 0, 0, 1]}, f)
    curve = f.name
p = run(["count", "--curve", curve, "--degrees", "1,2"])
if json.loads(p.stdout).get("jacobian_points") != 50:
    print("FAIL count genus-2 sample")
    failures += 1
os.unlink(curve)

# phi-max
p = run(["phi-max", "--q", "16", "--t1", "0", "--r", "3", "--ell", "2"])
if json.loads(p.stdout).get("max") != "84 - 1*sqrt(2)":
    print("FAIL phi-max")
    failures += 1

# lab + ABELOS_MAX_ENUM: a tiny cap suppresses the exact distance
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"p": 3, "a": [0, 0, 0, 1, 1]}, f)
    c1 = f.name
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"p": 3, "a": [0, 0, 0, 2, 1]}, f)
    c2 = f.name
p = run(["lab", "--curve1", c1, "--curve2", c2, "--r", "3"])
if json.loads(p.stdout).get("d_exact") is None:
    print("FAIL lab default cap should allow exact enumeration")
    failures += 1
p = run(["lab", "--curve1", c1, "--curve2", c2, "--r", "3"],
        env={"ABELOS_MAX_ENUM": "10"})
if json.loads(p.stdout).get("d_exact") is not None:
    print("FAIL ABELOS_MAX_ENUM=10 should force a rank-only run")
    failures += 1
os.unlink(c1)
os.unlink(c2)

# verify bounds-only suite through the CLI
run(["verify", "--suite", "bounds-only"])

if failures:
    print(f"{failures} CLI check(s) failed")
    sys.exit(1)
print("cli: all checks passed")
