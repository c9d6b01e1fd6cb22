"""Small named examples shipped with the package (see ``data/``)."""

from importlib import resources

from .formats import detect_kind, parse_diagram, parse_ribbon, parse_word


def names() -> list[str]:
    return sorted(p.name for p in resources.files(__package__).joinpath("data").iterdir()
                  if not p.name.startswith("_"))


def text(name: str) -> str:
    return resources.files(__package__).joinpath("data", name).read_text()


def path(name: str):
    return resources.files(__package__).joinpath("data", name)


def load(name: str):
    """Parse a shipped fixture, e.g. ``load("k7_torus.ribbon")``."""
    t = text(name)
    kind = detect_kind(t)
    if kind == "ribbon":
        return parse_ribbon(t)
    if kind == "diagram":
        return parse_diagram(t)
    return parse_word(t)
