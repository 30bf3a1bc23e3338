"""twistlab: exact engine for braid-group and mapping-class-group relations.

Subpackages on offer:

* :mod:`twistlab.braids` — words in B_n, group operations, invariants, and
  the lamination-backed equality oracle;
* :mod:`twistlab.lamination` — integral laminations in Dynnikov coordinates
  with the constant-size braid action;
* :mod:`twistlab.tracer` — slow first-principles curve tracer used to
  cross-validate the fast action;
* :mod:`twistlab.free_group` — free-group words and commutator calculus;
* :mod:`twistlab.burau` — Burau representations over exact Laurent
  polynomials and homology shadows;
* :mod:`twistlab.twist_compiler` — compilation of Dehn twists, half twists,
  and point pushes into braid words;
* :mod:`twistlab.catalog` — named curve/relation data and the verification
  harness;
* :mod:`twistlab.cli` — the ``twistlab`` command line tool.
"""

__version__ = "0.1.0"
