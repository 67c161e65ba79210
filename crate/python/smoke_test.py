#!/usr/bin/env python3
"""Smoke test for the yukawa_py extension module.

Builds are produced by cargo; this script locates the compiled cdylib in
target/{release,debug}, exposes it under the importable module name, and
exercises the bound API end to end on small parameters.

Usage:
    cargo build --release -p yukawa-py
    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libyukawa_py.so", "libyukawa_py.dylib", "yukawa_py.dll")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "yukawa_py cdylib not found; run `cargo build --release -p yukawa-py` first"
    )


def import_module():
    lib = locate_cdylib()
    stage = Path(tempfile.mkdtemp(prefix="yukawa_py_"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, stage / f"yukawa_py{suffix}")
    sys.path.insert(0, str(stage))
    import yukawa_py  # noqa: E402

    return yukawa_py


def main() -> None:
    yk = import_module()

    # parameter validation
    assert yk.validate(6, 2) == (6, 2, 2)
    assert yk.validate(8, 4) == (8, 4, 5)
    for bad in [(5, 2), (3, 3), (6, 1)]:
        try:
            yk.validate(*bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"validate{bad} should have raised")

    assert yk.default_point(6, 2) == ["2", "3", "4"]

    # Hodge numbers
    assert yk.hodge_numbers_w1(6, 2) == (2, 2)
    assert yk.hodge_numbers_w1(6, 3) == (3, 1)
    assert yk.hodge_numbers_v1(6, 2) == [1, 4, 1]
    assert yk.hodge_numbers_v1(6, 3) == [1, 3, 0, 0]
    assert yk.structural_upper_bound(8, 2) == 3

    # graded pieces
    dims = yk.jacobian_dims(6, 2)
    assert dims.source_bidegree == (0, 2)
    assert dims.source_dim == dims.source_expected == 2
    assert dims.target_bidegree == (1, 4)
    assert dims.target_dim == dims.target_expected == 2
    assert dims.relation_rank == 1
    assert dims.vandermonde_basis == ["y_0^2", "y_1^2"]

    # moduli points with exact rational coordinates
    dims_rat = yk.jacobian_dims(6, 2, point=["1/2", "-3", "7/5"])
    assert dims_rat.target_dim == 2

    # relation matrix at the default point of (6,3)
    assert yk.relation_matrix(6, 3) == [["2", "6", "12"], ["6", "24", "60"]]

    # Higgs matrices
    higgs = yk.higgs_matrix(6, 2, ["1", "1", "1"])
    assert higgs.rank == 2 and higgs.surjective and higgs.cross_check
    zero = yk.higgs_matrix(6, 2, ["0", "0", "0"])
    assert zero.rank == 0 and not zero.surjective and zero.cross_check
    try:
        yk.higgs_matrix(6, 2, ["1"])
    except ValueError:
        pass
    else:
        raise AssertionError("wrong lambda length should raise")

    # coupling-length certificates
    for (m, r), expected in [((4, 2), 1), ((6, 2), 2), ((6, 3), 1)]:
        cert = yk.coupling_length(m, r)
        assert cert.length == expected == cert.expected_length, (m, r)
        assert cert.complete

    # determinism of the certificate search
    a = yk.coupling_length(6, 2, seed=11)
    b = yk.coupling_length(6, 2, seed=11)
    assert a.witness_direction == b.witness_direction

    # the full verification report round-trips through JSON
    report = json.loads(yk.verify_json(6, 2))
    assert report["spec_version"] == "1"
    assert report["overall_pass"] is True
    assert report["certificate"]["length"] == 2
    assert report["oracle"]["target_agree"] is True

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
