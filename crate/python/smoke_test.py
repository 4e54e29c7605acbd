#!/usr/bin/env python3
"""Smoke test for the symchar_py extension module.

Builds are done with cargo (`cargo build -p symchar-py --release`); this
script copies the resulting cdylib next to a temp dir under the importable
name and drives the main entry points against known values.
"""

import pathlib
import shutil
import sys
import tempfile

REPO = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libsymchar_py.so",
        REPO / "target" / "debug" / "libsymchar_py.so",
        REPO / "target" / "release" / "libsymchar_py.dylib",
        REPO / "target" / "debug" / "libsymchar_py.dylib",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit(
            "libsymchar_py not found; run `cargo build -p symchar-py --release` first"
        )
    stage = pathlib.Path(tempfile.mkdtemp(prefix="symchar-py-"))
    shutil.copy2(built, stage / "symchar_py.so")
    sys.path.insert(0, str(stage))
    import symchar_py

    return symchar_py


failures = []
checked = 0


def check(name, condition):
    global checked
    checked += 1
    status = "PASS" if condition else "FAIL"
    print(f"[{status}] {name}")
    if not condition:
        failures.append(name)


def main():
    sc = load_module()

    # partitions and statistics
    p = sc.Partition("1^2,3")
    check("partition parse/canonicalize", p.parts() == [3, 1, 1] and p.n == 5)
    check("partition stats", (p.a(), p.b(), p.z()) == (3, 2, 6))
    labels = [str(q) for q in sc.enumerate_partitions(4)]
    check("enumeration order", labels == ["1^4", "1^2,2", "2^2", "1,3", "4"])
    check("partition count p(9)", sc.partition_count(9) == 30)

    # character table values against the printed S5 table
    check("character value", sc.character_value("1^3,2", "1^3,2") == -2)
    tbl_labels, rows = sc.char_table(5)
    check("table size", len(tbl_labels) == 7 and rows[3][0] == 6)
    check("centralizers", sc.centralizer_orders(5) == [120, 12, 8, 6, 6, 4, 5])

    # cut verdicts: the S5 example, det C = 180
    reports = sc.verify_cuts(5, "1^2,3")
    check("verify alpha=(1^2,3)", reports[0]["passed"])
    check("cartan det witness", reports[0]["notes"]["cartan_det"] == "180")
    c = sc.cartan(5, "1^2,3")
    check("cartan dets", c["det_small"] == 180 and c["det_large"] == 180)

    # jacobi identity on a principal selection
    check("jacobi principal", sc.jacobi_check(5, [0, 1, 2], [0, 1, 2]))

    # regular/singular: n=5, ell=2 has det C = 16
    rs = sc.verify_regular_singular(5, 2)
    check("regsing n=5 ell=2", rs["passed"] and rs["notes"]["cartan_det"] == "16")

    # generating functions
    check(
        "partition series",
        sc.partition_series("all", 9) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30],
    )
    a, b = sc.valuation_series("all", 2, 20)
    check("A = B for all partitions", a == b)
    check("series report", sc.verify_series("bounded:4", 3, 30, 16)["passed"])

    # k-Schur harness on the trivial fixture
    doc = sc.kschur_fixture(5, 5)
    result = sc.kschur_verify_json(doc)
    check("kschur trivial fixture", result["passed"])
    check(
        "kschur det dual",
        result["observations"]["notes"]["det_dual"] == "2880",
    )

    if failures:
        sys.exit(f"{len(failures)} smoke checks failed: {', '.join(failures)}")
    print(f"all {checked} smoke checks passed")


if __name__ == "__main__":
    main()
