#!/usr/bin/env python3
"""Smoke test for the factorinv_py extension module.

Builds nothing itself: it looks for the compiled cdylib under target/
(release preferred), copies it next to a temp directory under the
importable name, and exercises the main entry points.

    cargo build -p factorinv-py --release
    python3 python/smoke_test.py
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    names = ["libfactorinv_py.so", "factorinv_py.dll", "libfactorinv_py.dylib"]
    for profile in ("release", "debug"):
        for name in names:
            candidate = REPO / "target" / profile / name
            if candidate.exists():
                return candidate
    sys.exit("extension not built; run: cargo build -p factorinv-py")


def main() -> None:
    source = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="factorinv-py-"))
    suffix = ".pyd" if source.suffix == ".dll" else ".so"
    shutil.copy2(source, staging / f"factorinv_py{suffix}")
    sys.path.insert(0, str(staging))

    import factorinv_py as fi

    checks = 0

    def check(label, got, expected):
        nonlocal checks
        assert got == expected, f"{label}: got {got!r}, expected {expected!r}"
        checks += 1
        print(f"ok {label} = {got!r}")

    s = fi.NumericalSemigroup([6, 9, 11])
    check("Z(66) size", len(s.factorizations(66)), 7)
    check("(11,0,0) in Z(66)", [11, 0, 0] in s.factorizations(66), True)
    check("L(66)", s.length_set(66), [6, 7, 8, 9, 10, 11])
    check("c(66)", s.catenary_of_element(66), 4)

    t = fi.NumericalSemigroup([10, 17, 24, 31, 43])
    check("catenary", t.catenary(), 6)
    check("equal catenary", t.catenary("equal"), 11)
    check("omega", t.omega(), 11)
    check("tame", t.tame(), 11)
    check("Apery size", len(t.apery()), 10)

    u = fi.NumericalSemigroup([3, 5, 7])
    check("frobenius", u.frobenius(), 4)
    check("max denumerant", u.max_denumerant()[0], 2)
    check("betti", u.betti(), [10, 12, 14])
    check("elasticity", Fraction(*u.elasticity()), Fraction(7, 3))
    deltas, complete = fi.NumericalSemigroup([701, 902, 1041]).delta_set(313436, 313436)
    check("delta set", deltas, [1, 2, 3, 4, 5, 6, 11, 17])
    check("delta scan complete", complete, True)

    a = fi.AffineSemigroup([[2, 0], [0, 2], [1, 1], [1, 2]])
    check("affine betti", a.betti(), [[2, 2], [2, 4]])
    check("affine omega", a.omega(), 4)
    check("affine omega of (2,0)", a.omega([2, 0]), 2)
    check("affine catenary", a.catenary(), 3)
    check("graver size", len(a.graver()), 4)

    b = fi.block_monoid([2, 2], [[0, 1], [1, 0], [1, 1]])
    check(
        "block generators",
        b.minimal_generators(),
        [[0, 0, 2], [0, 2, 0], [1, 1, 1], [2, 0, 0]],
    )
    check("davenport", fi.davenport_constant([2, 2], [[0, 1], [1, 0], [1, 1]]), 3)

    check("graver of [2,3]", fi.graver_basis([[2, 3]]), [[3, -2]])
    check("circuits of [2,3]", fi.circuits([[2, 3]]), [[3, -2]])
    check(
        "hilbert with moduli",
        fi.hilbert_basis([[0, 1, 1], [1, 0, 1]], [2, 2]),
        [[0, 0, 2], [0, 2, 0], [1, 1, 1], [2, 0, 0]],
    )
    check("fiber of 77", len(fi.solve_fiber([[10, 11, 23, 35]], [77])), 4)

    print(f"\nall {checks} checks passed")


if __name__ == "__main__":
    main()
