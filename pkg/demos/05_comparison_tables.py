"""Reproduce the closed-form comparison tables (also available via the CLI:
``pdacache compare main|omega|thm6-vs-thm7 [--format csv|json]``)."""

from pdacache.tables import omega_table, thm6_vs_thm7_table


def print_table(rows):
    keys = list(rows[0])
    widths = [max(len(str(k)), *(len(str(r[k])) for r in rows)) for k in keys]
    print("  ".join(str(k).ljust(w) for k, w in zip(keys, widths)))
    for r in rows:
        print("  ".join(str(r[k]).ljust(w) for k, w in zip(keys, widths)))


print("weight-restricted column schemes at several omega values:")
print_table(omega_table())

print("\nsum-coordinate OA scheme (1) vs MDS scheme (2), t = 2:")
print_table(thm6_vs_thm7_table())
print("""
Equal users and memory ratio throughout; the MDS scheme divides the
subpacketization by q while only slightly beating the load ratio.""")
