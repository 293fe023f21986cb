"""
Auditing a foreign hypernym hierarchy
=====================================

Imported hierarchies often carry edges that add no information (already
implied by transitivity) or outright cycles.  The audits report both
without repairing anything.
"""

from ontolex import ForeignHierarchy, audit_cycles, audit_redundant_edges

# A hyponymy chain plus its shortcut: the direct edge is implied by the
# other two and flagged as transitive-reduction surplus.
edges = [
    ("Reflate", "Inflate"),
    ("Inflate", "Change"),
    ("Reflate", "Change"),
    ("Deflate", "Change"),
]
hierarchy = ForeignHierarchy.from_edges(edges)
print("redundant edges:", audit_redundant_edges(hierarchy))

# Cycles make subsumption meaningless; they are reported as closed paths.
tangled = ForeignHierarchy.from_edges([
    ("gain", "increase"),
    ("increase", "growth"),
    ("growth", "gain"),
    ("shrink", "decrease"),
])
for cycle in audit_cycles(tangled):
    print("cycle:", " -> ".join(cycle + cycle[:1]))

# The TSV loader takes child<TAB>parent lines, with '#' comments.
text = """\
# sample dump
month\ttime unit
islamic month\tmonth
islamic month\ttime unit
"""
loaded = ForeignHierarchy.from_tsv(text)
print("from tsv, surplus:", audit_redundant_edges(loaded))
