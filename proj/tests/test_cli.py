#!/usr/bin/env python3
"""End-to-end checks of rootfan-cli: example invocations, exit codes, determinism."""
import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([CLI, *args, "-q"], capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f": {detail}" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def doc(*args):
    r = run(*args)
    if r.returncode != 0:
        raise SystemExit(f"{args}: exit {r.returncode}: {r.stderr}")
    return json.loads(r.stdout)


d = doc("classify", "--type", "G", "--rank", "2", "--support", "2")
check("G2 {2} flags", d["flags"] == {"q_gorenstein_fano": True, "gorenstein_fano": True, "smooth": True, "fano": True})
check("G2 {2} minimal pair", (d["minimal_pair"]["type"], d["minimal_pair"]["support"],
                              d["minimal_pair"]["lattice_relation"]) == ("A2", [1, 2], "Lambda_P'"))

d = doc("classify", "--type", "F", "--rank", "4", "--support", "1")
check("F4 {1} q-Gorenstein", d["flags"]["q_gorenstein_fano"])
# its Gorenstein status is covered by the acceptance suite

d = doc("classify", "--type", "A", "--rank", "2", "--support", "1,2", "--regularity")
check("A2 {1,2} regular", d["regularity"] == {"aut_order": 12, "flag_count": 12, "lattice_regular": True})

d = doc("classify", "--type", "A", "--rank", "2", "--support", "1")
check("A2 {1} smooth fano", d["flags"]["fano"] and d["normal"]["phi"] == ["2", "1"])


def hits(type_, rank):
    docs = doc("scan", "--type", type_, "--rank", str(rank))
    return [x["input"]["support"] for x in docs if x["flags"]["q_gorenstein_fano"]]


check("scan A3", sorted(hits("A", 3)) == [[1], [1, 3], [2], [3]], hits("A", 3))
check("scan D4", sorted(hits("D", 4)) == [[1], [2], [3], [4]])
check("scan E6", hits("E", 6) == [[2]])

r = run("scan", "--type", "A", "--rank", "3", "--format", "text")
check("scan summary line", r.stdout.rstrip().endswith("summary: 7 supports, 4 Q-Gorenstein Fano"))

r = run("table", "--types", "A,B,C", "--max-rank", "3", "--format", "csv")
rows = r.stdout.strip().splitlines()
check("table B3 {2}", any(l.startswith('"(B3, -w2)","{-w1,-w3}","Gorenstein Fano"') for l in rows), rows[:3])
r = run("table", "--types", "G", "--format", "json")
g = json.loads(r.stdout)
check("table G2 rows", len(g) == 2 and all(x["lattice_regular"] == "yes" for x in g))

# oracle never changes flags
for t, n in [("B", 3), ("C", 3), ("A", 4), ("G", 2)]:
    plain = doc("scan", "--type", t, "--rank", str(n))
    orc = doc("scan", "--type", t, "--rank", str(n), "--oracle")
    check(f"oracle keeps flags {t}{n}", [x["flags"] for x in plain] == [x["flags"] for x in orc])

# exit codes
check("exit 1 on unknown type", run("classify", "--type", "Q", "--rank", "2", "--support", "1").returncode == 1)
check("exit 1 on bad support", run("classify", "--type", "A", "--rank", "2", "--support", "3").returncode == 1)
check("exit 1 on missing support", run("classify", "--type", "A", "--rank", "2").returncode == 1)
check("exit 1 on bad option", run("scan", "--type", "A", "--rank", "2", "--bogus").returncode == 1)
check("exit 1 on gated E7 scan", run("scan", "--type", "E", "--rank", "7").returncode == 1)
check("exit 1 on regularity above cap",
      run("classify", "--type", "A", "--rank", "7", "--support", "1", "--regularity").returncode == 1)
check("exit 1 on positive weight", run("classify", "--type", "A", "--rank", "2", "--weight", "1,0").returncode == 1)

# weight escape hatch
w = subprocess.run([CLI, "classify", "--type", "A", "--rank", "3", "--weight", "0,-3,0"], capture_output=True, text=True)
s = doc("classify", "--type", "A", "--rank", "3", "--support", "2")
check("weight reduces to support", w.returncode == 0 and json.loads(w.stdout) == s and "support {2}" in w.stderr)

# determinism and --out
for fmt in ["json", "csv", "text"]:
    a = run("scan", "--type", "B", "--rank", "4", "--format", fmt).stdout
    b = run("scan", "--type", "B", "--rank", "4", "--format", fmt).stdout
    check(f"deterministic {fmt}", a == b and len(a) > 0)
with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "out.json")
    r = run("classify", "--type", "B", "--rank", "3", "--support", "3", "--out", path)
    with open(path) as f:
        written = f.read()
    check("--out writes the document", r.returncode == 0 and r.stdout == "" and json.loads(written)["input"]["type"] == "B3")

# progress stays off stdout
p = subprocess.run([CLI, "scan", "--type", "A", "--rank", "2", "--format", "csv"], capture_output=True, text=True)
check("progress on stderr", "[1/3]" in p.stderr and "[" not in p.stdout.splitlines()[0])

sys.exit(1 if failures else 0)
