"""Mixed lattice vector spaces over concrete finite-dimensional instances."""
__version__ = "0.1.0"
