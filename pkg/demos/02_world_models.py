"""
Checking meaning against finite world models
============================================

A world model fixes a finite domain, a set of worlds, and one extension per
concept and world.  Subsumption, concept identity, and sibling disjointness
are then decidable by enumeration.
"""

from ontolex import (
    WorldModel,
    admissible_extensions,
    check_taxonomy,
    concepts_identical,
    subsumes,
    union_model,
)
from ontolex.taxonomy import Taxonomy

# Two concepts that pick out the same individual in every world are the
# same concept, whatever they are called: here both "evening star" (1) and
# "morning star" (2) always denote venus.
stars = WorldModel.build(
    domain=["venus", "mars"],
    worlds=["w1", "w2"],
    ext={
        1: {"w1": ["venus"], "w2": ["venus"]},
        2: {"w1": ["venus"], "w2": ["venus"]},
    },
)
print("evening star = morning star:", concepts_identical(1, 2, stars))
print("admissible extensions:", sorted(map(sorted, admissible_extensions(1, stars))))

# Subsumption demands inclusion in every world, not just the current one.
organisms = WorldModel.build(
    domain=["cat", "oak", "euglena"],
    worlds=["now", "later"],
    ext={
        10: {"now": ["cat", "oak", "euglena"], "later": ["cat", "oak"]},  # organism
        11: {"now": ["cat", "euglena"], "later": ["cat"]},                # animal
        12: {"now": ["oak", "euglena"], "later": ["oak"]},                # plant
    },
)
print("\norganism subsumes animal:", subsumes(10, 11, organisms))
print("animal subsumes organism:", subsumes(11, 10, organisms))

# Sibling concepts must stay disjoint in every world; euglena sits in both
# extensions in the world "now", so the model refutes this taxonomy.
tree = Taxonomy.from_edges(nodes=[10, 11, 12], edges=[(11, 10), (12, 10)])
for finding in check_taxonomy(organisms, tree):
    print(finding)

# A union model (leaves get private individuals, inner nodes their union)
# satisfies any forest, which is handy as a sanity baseline.
print("\nunion model findings:", check_taxonomy(union_model(tree), tree))
