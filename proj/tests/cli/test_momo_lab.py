#!/usr/bin/env python3
"""End-to-end checks of the momo-lab executable.

Usage: test_momo_lab.py <path-to-momo-lab> <configs-dir>
"""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile

LAB, CONFIGS = sys.argv[1], sys.argv[2]
failures = []


def run(args, threads=None, check=True):
    env = dict(os.environ)
    env.pop("MOMO_THREADS", None)
    if threads is not None:
        env["MOMO_THREADS"] = str(threads)
    p = subprocess.run([LAB] + args, env=env, capture_output=True, text=False)
    if check and p.returncode != 0:
        raise RuntimeError(f"{args}: exit {p.returncode}: {p.stderr.decode()}")
    return p


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def body_without_wall(data):
    rows = list(csv.reader(io.StringIO(data.decode(), newline="")))
    col = rows[0].index("wall_ms")
    return [r[:col] + r[col + 1:] for r in rows]


with tempfile.TemporaryDirectory() as tmp:
    propd = os.path.join(CONFIGS, "propD.json")
    outs = []
    for i, threads in enumerate([1, 8, 8]):
        path = os.path.join(tmp, f"propD_{i}.csv")
        run(["run", propd, "--out", path], threads=threads)
        outs.append(open(path, "rb").read())
    expect(body_without_wall(outs[0]) == body_without_wall(outs[1]), "propD bodies equal at MOMO_THREADS=1 and 8")
    expect(body_without_wall(outs[1]) == body_without_wall(outs[2]), "propD bodies equal across repeated runs")
    header = outs[0].split(b"\r\n")[0].decode()
    expect(header == "experiment_id,suite,statistic,params_json,value_re,value_im,n_terms,wall_ms,version",
           "fixed CSV header")
    stats = {r[2] for r in body_without_wall(outs[0])[1:]}
    expect({"short_interval_avg", "quadrant_deviation", "quadrant_max_deviation"} <= stats,
           "propD emits short-interval and quadrant rows")

    empty = os.path.join(tmp, "empty.json")
    json.dump({"version": 1, "experiment_id": "e", "suite": "propD", "params": {"grid": []}}, open(empty, "w"))
    p = run(["run", empty, "--out", os.path.join(tmp, "empty.csv")])
    expect(p.returncode == 0 and open(os.path.join(tmp, "empty.csv"), "rb").read() == (header + "\r\n").encode(),
           "empty grid gives a header-only CSV and exit 0")

    bad = os.path.join(tmp, "bad.json")
    json.dump({"version": 1, "experiment_id": "b", "suite": "propD",
               "params": {"grid": [{"M": 10, "H": 2, "Q": 1}]}}, open(bad, "w"))
    p = run(["run", bad], check=False)
    expect(p.returncode != 0 and b"/params/grid/0/Q" in p.stderr, "unknown key reported with its JSON pointer")

    short = os.path.join(tmp, "short.json")
    json.dump({"version": 1, "experiment_id": "s", "suite": "mobius-like",
               "params": {"limits": [10000], "sieve_n": 500}}, open(short, "w"))
    p = run(["run", short], check=False)
    expect(p.returncode != 0 and b"required N = 9993" in p.stderr, "insufficient range reports the required N")

    listing = run(["list"]).stdout.decode().strip().splitlines()
    expect(len(listing) >= 9, f"list shows {len(listing)} suites")
    catalogue = json.loads(run(["list", "--json"]).stdout)
    for entry in catalogue:
        path = os.path.join(tmp, entry["suite"] + ".json")
        json.dump(entry["config"], open(path, "w"))
        p = run(["run", path, "--out", os.path.join(tmp, entry["suite"] + ".csv")], check=False)
        expect(p.returncode == 0, f"default config of {entry['suite']} runs")

    for name in sorted(os.listdir(CONFIGS)):
        cfg = json.load(open(os.path.join(CONFIGS, name)))
        expect(cfg["suite"] in {e["suite"] for e in catalogue}, f"configs/{name} names a known suite")

    for fn, expected in (("mobius", [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]),
                         ("liouville", [1, -1, -1, 1, -1, 1, -1, -1, 1, 1])):
        path = os.path.join(tmp, fn + ".bin")
        run(["sieve", "--fn", fn, "--n", "10", "--out", path])
        data = open(path, "rb").read()
        values = [b - 256 if b > 127 else b for b in data[16:]]
        expect(data[:8] == b"MOMOSEQ1" and int.from_bytes(data[8:16], "little") == 10 and values == expected,
               f"sieve dump of {fn}")
    p = run(["sieve", "--fn", "zeta", "--n", "10", "--out", os.path.join(tmp, "z.bin")], check=False)
    expect(p.returncode != 0, "sieve rejects unknown functions")

sys.exit(1 if failures else 0)
