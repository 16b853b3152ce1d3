"""Print the eight kernel presentations at n = 2 with their certification status."""

from vsgroups.homs import TRIPLES, format_triple
from vsgroups.kernels import check_kernel, kernel_pipeline

for x in TRIPLES:
    key = format_triple(x)
    res = kernel_pipeline("VSG", 2, key)
    chk = check_kernel(key)
    print(f"== {key}  certified against {chk.compared_with}: {chk.ok}  fingerprint {chk.fingerprint}")
    print(res.text())
    if chk.discrepancy:
        print("note:", chk.discrepancy, "\n")
