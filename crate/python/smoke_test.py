#!/usr/bin/env python3
"""Smoke test for the carter_kit_py extension module.

Builds nothing itself: expects the cdylib to already exist under
target/{debug,release}/libcarter_kit_py.so (run `cargo build -p carter-kit-py`
first). Copies it into a temp directory under the importable name and
exercises the main entry points.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    for profile in ("release", "debug"):
        for name in ("libcarter_kit_py.so", "carter_kit_py.dll", "libcarter_kit_py.dylib"):
            p = REPO / "target" / profile / name
            if p.exists():
                return p
    sys.exit("cdylib not found; run `cargo build -p carter-kit-py` first")


def main() -> None:
    src = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="carter_kit_py_"))
    shutil.copy(src, tmp / "carter_kit_py.so")
    sys.path.insert(0, str(tmp))

    import carter_kit_py as ck

    # Permutation arithmetic (left-to-right composition).
    a = ck.Perm([1, 2, 0, 3])
    b = ck.Perm([1, 0, 2, 3])
    assert a.compose(b).apply(0) == 0
    assert a.compose(a).compose(a) == ck.Perm.identity(4)
    assert a.order() == 3
    assert a.inverse().compose(a) == ck.Perm.identity(4)

    # Group construction and structure.
    s4 = ck.construct("symmetric", [4])
    assert s4.order() == 24
    assert s4.is_solvable() and not s4.is_nilpotent()
    assert s4.series_factor_orders("rc") == [2, 3, 2, 2]
    assert s4.contains(a)

    carters = s4.carter_subgroups()
    assert len(carters) == 1 and carters[0]["order"] == "8"
    d8 = ck.Group(4, carters[0]["generators"])
    assert s4.is_carter(d8)

    psl = ck.construct("psl2", [5])
    assert psl.order() == 60 and psl.degree() == 6
    assert not psl.is_solvable()
    assert psl.carter_subgroups() == []

    # Sylow, normalizer, induced action on a section.
    syl3 = s4.sylow_subgroup(3)
    assert syl3.order() == 3
    assert s4.normalizer(syl3).order() == 6

    v4 = ck.Group(4, [[1, 0, 3, 2], [2, 3, 0, 1]])
    triv = ck.Group(4, [])
    ind = s4.induced_aut(s4, v4, triv)
    assert ind["image_order"] == "6" and ind["kernel_order"] == "4"

    # Verification checks produce reports as dicts.
    f21 = ck.construct("frobenius", [7, 3])
    rep = f21.check_main_theorem("F21")
    assert rep["verdict"] == "pass", rep
    assert rep["evidence"]["k_order"] == "3"

    rep = f21.check_sylow_theorems("F21", 3)
    assert rep["verdict"] == "pass", rep
    assert rep["evidence"]["self_normalizing"] is True

    rep = s4.check_gjh("S4")
    assert rep["verdict"] == "pass", rep

    # Order recognition for L2(3^(2n+1)): 9828 = |L2(3^3)|, so n = 1.
    assert ck.is_l2_3odd_order(9828) == 1
    assert ck.is_l2_3odd_order(60) is None

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
