"""Builds the extension module with cargo and exercises it from Python.

    python3 python/smoke_test.py
"""

import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(["cargo", "build", "--release", "-p", "norlund-py"], cwd=ROOT, check=True)
    target = os.environ.get("CARGO_TARGET_DIR", os.path.join(ROOT, "target"))
    lib = os.path.join(target, "release", "libpynorlund.so")
    out = tempfile.mkdtemp(prefix="pynorlund-")
    shutil.copy(lib, os.path.join(out, "pynorlund.so"))
    sys.path.insert(0, out)


def main():
    build()
    import pynorlund as nl

    tables = nl.Tables()
    assert tables.order == 12

    assert nl.classical("bernoulli", 4) == ["1", "-1/2", "1/6", "0", "-1/30"]
    assert nl.classical("euler", 4) == ["1", "0", "-1", "0", "5"]

    assert tables.number("bernoulli", [1, 1], "1") == "1/6"
    assert tables.number("bernoulli", [2]) == ["0", "-1/12", "1/4"]
    assert tables.number("euler", [1], "symbolic") == ["0"]
    assert tables.number("euler", [4], 2) == "16"

    rows = tables.numbers("bernoulli", 2, 2, 1)
    assert [v for v, _ in rows] == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]]

    b1 = tables.polynomial("bernoulli", [1], 1)
    assert str(b1) == "x1 - 1/2"
    assert b1.evaluate(["1/2"]) == "0"
    e1 = tables.polynomial("euler", [1])
    assert str(e1) == "x1 + (-1/2 t)"
    assert e1.evaluate([1], 2) == "0"
    assert tables.polynomial("euler", [0, 0, 0], "3/5").evaluate([1, 2, 3]) == "1"

    assert len(nl.partitions([2, 1])) == 4
    assert sorted(map(sorted, nl.partitions([1, 1]))) == [[[0, 1], [1, 0]], [[1, 1]]]

    reports = tables.verify("exact", max_deg=3, dim=2)
    assert reports and all(r["passed"] == r["attempted"] for r in reports)
    mc = tables.verify("montecarlo", max_deg=2, dim=1, samples=20000, seed=7)
    assert [r["suite"] for r in mc] == ["montecarlo_uniform", "montecarlo_rademacher"]

    try:
        tables.number("gauss", [1])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown family accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
