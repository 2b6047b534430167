"""Isomorph-free enumeration and the class predicates over it.

The stream is generated by canonical augmentation (no global seen-set);
an independent extend-everything-and-dedup route must produce identical
counts, which is checked live here for n <= 6.
"""

from totecc import ClassConstraint, canonical_form, count_class
from totecc.enumeration import connected_graph_list, connected_graphs_dedup

print("connected graphs per order (one representative per isomorphism class)")
for n in range(1, 8):
    stream = connected_graph_list(n)
    dedup = connected_graphs_dedup(n) if n <= 6 else None
    extra = ""
    if dedup is not None:
        same = sorted(canonical_form(g) for g in stream) == sorted(
            canonical_form(g) for g in dedup
        )
        extra = f"   dedup route agrees: {same}"
    print(f"  n={n}: {len(stream)}{extra}")

print("\nclass breakdown at n = 7")
for constraint in [
    ClassConstraint("tree"),
    ClassConstraint("unicyclic"),
    ClassConstraint("pendant_count", 0),
    ClassConstraint("pendant_count", 1),
    ClassConstraint("cut_count", 0),
    ClassConstraint("cut_count", 5),
    ClassConstraint("unicyclic_girth", 3),
]:
    print(f"  {str(constraint):<22} {count_class(7, constraint)}")

print("\npendant-count partition of the 853 order-7 classes")
row = [count_class(7, ClassConstraint("pendant_count", k)) for k in range(8)]
print(" ", row, "sum =", sum(row))
