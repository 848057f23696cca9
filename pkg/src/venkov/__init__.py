"""Exact Voronoi-cell, dual-complex and Venkov-complex computations for lattice forms."""

from .errors import VenkovError
from .forms import FormFile, named_form_file, parse_form_text, read_form_file
from .lattice import QuadraticForm, closest_lattice_points, relevant_vectors, shortest_vectors_in_coset
from .pipeline import PipelineOptions, analyze, run_pipeline

__all__ = [
    "FormFile",
    "PipelineOptions",
    "QuadraticForm",
    "VenkovError",
    "analyze",
    "closest_lattice_points",
    "named_form_file",
    "parse_form_text",
    "read_form_file",
    "relevant_vectors",
    "run_pipeline",
    "shortest_vectors_in_coset",
]
