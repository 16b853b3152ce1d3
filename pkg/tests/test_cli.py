import io
import json

import pytest

from vsgroups.cli import run
from vsgroups.iso import IsoCertificate, format_certificate, free_product_presentation
from vsgroups.presentations import custom


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def test_classify():
    assert call("classify-triples", "--family", "VSG", "--n", "3") == (0, "000,001,101,111\n")
    assert call("classify-triples", "--family", "WSG", "--n", "4") == (0, "000,111\n")


def test_exp():
    assert call("exp", "s1 t2^-1 v1", "--n", "3") == (0, "expC=1 expS=-1 expCS=0 parity=1\n")


def test_forbidden_lines():
    code, out = call("forbidden", "--n", "3")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert all(line.endswith("separated=true") for line in lines)


def test_json_lines_mirror_text():
    code, out = call("exp", "s1 s1 v2", "--n", "3", "--format", "json-lines")
    assert json.loads(out) == {"expC": 2, "expS": 0, "expCS": 2, "parity": 1}
    code, out = call("forbidden", "--n", "4", "--format", "json-lines")
    recs = [json.loads(x) for x in out.splitlines()]
    assert len(recs) == 8 and all(r["separated"] for r in recs)


def test_perm_decompose_nf2():
    assert call("perm", "v1 v2", "--n", "3") == (0, "(1 3 2)\n")   # (1 2) then (2 3)
    code, out = call("decompose", "s1 v1 t2", "--n", "3")
    assert code == 0 and out.startswith("pure=") and "perm=(2 3)" in out
    assert call("nf2", "t1 v1 v1 s1 t1^-1") == (0, "s1\n")


def test_invariants():
    assert call("abelianize", "--n", "5") == (0, "Z^2 + Z_2\n")
    assert call("lcs2", "--n", "2") == (0, "Z_2 + Z_2\n")
    assert call("homcount", "--n", "2", "--triple", "111") == (0, "S3=108 S4=2880\n")


def test_kernel_presentation():
    code, out = call("kernel-presentation", "--n", "2", "--triple", "101")
    assert code == 0 and "group CUSTOM n=2" in out and out.count("\nrel ") == 1


def test_verify_hom_exit_codes():
    assert call("verify-hom", "--n", "3", "--triple", "101")[0] == 0
    assert call("verify-hom", "--n", "3", "--triple", "010")[0] == 1
    assert call("verify-hom", "--n", "4", "--map", "extended")[0] == 0


def test_verify_iso(tmp_path):
    P = custom(["s1", "t1", "v1"], ["v1^2", ("s1 t1", "t1 s1")])
    Z = free_product_presentation("Z^2 * Z_2")
    good = IsoCertificate(P, Z, {"s1": "z1_1", "t1": "z1_2", "v1": "z2_1"},
                          {"z1_1": "s1", "z1_2": "t1", "z2_1": "v1"})
    bad = IsoCertificate(P, Z, {"s1": "z1_1", "t1": "z1_1", "v1": "z2_1"},
                         {"z1_1": "s1", "z1_2": "t1", "z2_1": "v1"})
    (tmp_path / "good.cert").write_text(format_certificate(good))
    (tmp_path / "bad.cert").write_text(format_certificate(bad))
    assert call("verify-iso", str(tmp_path / "good.cert"))[0] == 0
    assert call("verify-iso", str(tmp_path / "bad.cert"))[0] == 1


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["exp"],
    ["exp", "s5", "--n", "3"],
    ["exp", "s1 q2"],
    ["classify-triples"],
    ["classify-triples", "--n", "3", "--family", "NOPE"],
    ["kernel-presentation", "--n", "2"],
    ["perm", "s1", "--triple", "12"],
    ["forbidden", "--n", "2"],
    ["verify-iso", "/nonexistent/file"],
    ["suite", "--only", "13"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_suite_subset_and_reproducibility():
    a = call("suite", "--only", "1,3,12", "--seed", "5")
    b = call("suite", "--only", "1,3,12", "--seed", "5")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[-1] == "3/3 criteria passed"


def test_suite_parallel_order():
    code, out = call("suite", "--only", "12,1,3", "--jobs", "3")
    idx = [int(line.split()[1]) for line in out.splitlines()[:-1]]
    assert idx == [1, 3, 12]
