"""Separation of the four forbidden relations for n = 3..6."""

from vsgroups.structure import forbidden_check

for n in range(3, 7):
    for i in range(1, n - 1):
        for rel in (1, 2, 3, 4):
            r = forbidden_check(n, rel, i)
            print(f"n={n} relation={rel} i={i} separator={r.separator} separated={r.separated}")
