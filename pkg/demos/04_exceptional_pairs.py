"""
Exceptional types
=================

The bundled catalog records the rigid/non-rigid orbit pairs in E6, E7, E8
and F4 that show the same behaviour as the so_8 example.  Orbits are named
by Bala-Carter labels; more orbits and closure edges can be added in the
same text format.
"""

import io

from liesheets import closure_contains, load_bundled_catalog, load_catalog, verify_paper_examples
from liesheets.exceptional import dump_catalog

catalog = load_bundled_catalog()
print(dump_catalog(catalog))
print(verify_paper_examples(catalog).render())

print("A2+A1 below A2+2A1 in E7:", closure_contains(catalog, "E7", "A2+2A1", "A2+A1"))

###############################################################################
# Extending the data: a user catalog with one more closure step.

extra = dump_catalog(catalog) + "orbit E6 A1 rigid=true\nclosure E6 2A1 > A1\n"
bigger = load_catalog(io.StringIO(extra))
print("A1 below 3A1 in E6 (through 2A1):", closure_contains(bigger, "E6", "3A1", "A1"))
