# /project/cubing/__init__.py
"""Combinatorial geometry of finite and implicit CAT(0) cube complexes."""
from cubing.automorphism import Automorphism, enumerate_automorphisms
from cubing.classify import classify, classify_all
from cubing.complex import Cube, CubeComplex, ImplicitComplex, ball, link, validate
from cubing.errors import CubingError
from cubing.hyperplanes import walls, halfspaces
from cubing.metric import distance, geodesic_path, is_geodesic
from cubing.process import Processor
from cubing.subdivision import subdivide
from cubing.wallspace import Wallspace, cubulate
