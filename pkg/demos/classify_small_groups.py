"""Walk through the genus classification of non-cyclic graphs for groups of order at most 16.

Run with ``python demos/classify_small_groups.py``.  Prints one row per
non-cyclic group and then the claim-by-claim verification report.
"""
from noncyclic.classify import sweep, verify_paper


def main():
    records = sweep(16)
    print(f"{'group':<14}{'|G|':>4}{'|Cyc|':>6}{'V':>4}{'E':>5}  {'genus':<14}{'crosscaps':<14}")
    for r in records:
        print(f"{r.group_name:<14}{r.group_order:>4}{r.cyc_size:>6}{r.vertex_count:>4}{r.edge_count:>5}  "
              f"{r.orientable_genus.verdict():<14}{r.nonorientable_genus.verdict():<14}")
    print()
    print(verify_paper(records).render())


if __name__ == "__main__":
    main()
