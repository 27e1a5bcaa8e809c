"""Bundled example matrices."""

from importlib import resources

from .ff import FieldMatrix
from .io import parse_matrix_file
from .matroid import VectorMatroid, matroid_from_matrix


def path(name: str):
    """Filesystem path of a bundled ``.gfp`` file (``"r8"`` or ``"split_disconnects"``)."""
    return resources.files(__package__) / "data" / f"{name}.gfp"


def load_matrix(name: str) -> FieldMatrix:
    return parse_matrix_file(path(name).read_bytes()).to_matrix()


def load(name: str) -> VectorMatroid:
    return matroid_from_matrix(load_matrix(name))


def r8() -> VectorMatroid:
    return load("r8")
