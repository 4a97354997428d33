"""Bundled example presentations and input loading."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .presentation import Presentation, parse_presentation

CORPUS = {
    "gp23": "gp23.json",
    "kronecker2": "kronecker2.json",
    "sb1": "sb1.json",
}


def corpus_text(name: str) -> str:
    return resources.files("stringzeta").joinpath("data", CORPUS[name]).read_text("utf-8")


def load_corpus(name: str) -> Presentation:
    """One of the bundled presentations: ``gp23``, ``kronecker2`` or ``sb1``."""
    return parse_presentation(corpus_text(name))


def load_presentation(source) -> Presentation:
    """Read a presentation from a file path, falling back to a bundled name."""
    path = Path(source)
    if path.is_file():
        return parse_presentation(path.read_text("utf-8"))
    if str(source) in CORPUS:
        return load_corpus(str(source))
    raise FileNotFoundError(f"no such file or bundled presentation: {source}")
