"""Hasse diagrams of the worked examples, stored in the text format."""

from importlib import resources

from ..formats import parse_poset_text
from ..poset import Poset

FIGURES = {
    "x": "figure1_x.poset",
    "x_avoiding": "figure2_x_avoiding.poset",
    "with_x": "figure3_with_x.poset",
    "deletion": "figure4_deletion.poset",
    "orchid": "figure5_orchid.poset",
}


def figure_text(key: str) -> str:
    return resources.files(__name__).joinpath(FIGURES[key]).read_text(encoding="utf-8")


def load_figure(key: str) -> Poset:
    return parse_poset_text(figure_text(key))
