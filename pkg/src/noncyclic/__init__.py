"""Non-cyclic graphs of finite groups, their orientable and nonorientable
genus, and the classification of the small groups whose graph is planar,
toroidal or projective-planar."""
from .groups import Group, GroupAxiomError, cyclicizer, is_cyclic_group, is_cyclic_subset, subgroup_generated
from .catalog import CatalogError, catalog_up_to, get_group, group_names, ingest_cayley_table, export_cayley_table
from .graphs import SimpleGraph, SubgraphWitness, build_noncyclic_graph, complete_graph, complete_multipartite
from .genus import (EmbeddingScheme, GenusCertificate, GenusResult, SearchTimeout, is_planar,
                    nonorientable_genus, orientable_genus, verify_certificate)
from .bounds import BoundReport, best_lower_bound, euler_lower_bound, formula_genus, formula_nonorientable_genus
from .classify import ClassificationRecord, ClassifyLimits, classify_group, sweep, verify_paper

__version__ = "0.1.0"
