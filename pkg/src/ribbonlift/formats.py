"""Plain-text file formats ``ribbon v1``, ``diagram v1`` and ``word v1``.

::

    ribbon v1
    darts 6
    sigma 1 2 0 5 3 4        # sigma[i] for i = 0..n-1
    alpha 3 4 5 0 1 2
    colour 0 black           # optional, names the vertex through any dart

A diagram file has the header ``diagram v1``, the same body, and one line
``crossing <dart>`` per flagged vertex. A word file has the header
``word v1`` and one line of whitespace-separated labels. ``#`` starts a
comment. The emitters write the canonical form: colours and crossings are
listed by the least dart of their vertex.
"""

from __future__ import annotations

from .diagram import SphericalDiagram, validate_diagram
from .errors import ParseError
from .ribbon import RibbonGraph, validate_ribbon_graph
from .seifert import ImmersedCircleWord


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError("expected integers, got %r" % " ".join(tokens), no) from None


def _parse_body(text: str, header: str, extra=()):
    lines = list(_lines(text))
    if not lines or lines[0][1] != header.split():
        raise ParseError("expected header %r" % header, lines[0][0] if lines else 1)
    fields = {}
    colours = []
    extras = {k: [] for k in extra}
    for no, toks in lines[1:]:
        key, args = toks[0], toks[1:]
        if key in ("darts", "sigma", "alpha"):
            if key in fields:
                raise ParseError("duplicate %r line" % key, no)
            fields[key] = (no, _ints(args, no))
        elif key == "colour":
            if len(args) != 2:
                raise ParseError("colour needs a dart and a colour", no)
            colours.append((no, _ints(args[:1], no)[0], args[1]))
        elif key in extras:
            if len(args) != 1:
                raise ParseError("%s needs one dart" % key, no)
            extras[key].append((no, _ints(args, no)[0]))
        else:
            raise ParseError("unknown keyword %r" % key, no)
    for key in ("darts", "sigma", "alpha"):
        if key not in fields:
            raise ParseError("missing %r line" % key, lines[-1][0])
    no, darts = fields["darts"]
    if len(darts) != 1 or darts[0] < 0:
        raise ParseError("darts needs one non-negative integer", no)
    n = darts[0]
    for key in ("sigma", "alpha"):
        no, vals = fields[key]
        if len(vals) != n:
            raise ParseError("%s has %d entries, expected %d" % (key, len(vals), n), no)
        if any(not 0 <= v < n for v in vals):
            raise ParseError("%s entries must lie in 0..%d" % (key, n - 1), no)
    g = RibbonGraph(tuple(fields["sigma"][1]), tuple(fields["alpha"][1]))
    seen = {}
    for no, d, c in colours:
        if not 0 <= d < n:
            raise ParseError("colour dart %d out of range" % d, no)
        if c not in ("black", "white"):
            raise ParseError("colour must be black or white, not %r" % c, no)
        rep = g.vertex_rep(d)
        if rep in seen:
            raise ParseError("vertex of dart %d already coloured on line %d" % (d, seen[rep]), no)
        seen[rep] = no
    g = RibbonGraph(g.sigma, g.alpha, [(d, c) for _, d, c in colours])
    for key, items in extras.items():
        for no, d in items:
            if not 0 <= d < n:
                raise ParseError("%s dart %d out of range" % (key, d), no)
    return g, extras


def parse_ribbon(text: str, allow_low_valence: bool = False) -> RibbonGraph:
    g, _ = _parse_body(text, "ribbon v1")
    validate_ribbon_graph(g, allow_low_valence)
    return g


def parse_diagram(text: str) -> SphericalDiagram:
    g, extras = _parse_body(text, "diagram v1", extra=("crossing",))
    seen = {}
    for no, x in extras["crossing"]:
        rep = g.vertex_rep(x)
        if rep in seen:
            raise ParseError("vertex of dart %d already flagged on line %d" % (x, seen[rep]), no)
        seen[rep] = no
    d = SphericalDiagram(g, frozenset(seen))
    validate_diagram(d)
    return d


def parse_word(text: str) -> ImmersedCircleWord:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["word", "v1"]:
        raise ParseError("expected header 'word v1'", lines[0][0] if lines else 1)
    if len(lines) > 2:
        raise ParseError("a word file holds a single line of labels", lines[2][0])
    return ImmersedCircleWord(tuple(lines[1][1]) if len(lines) == 2 else ())


def _body(g: RibbonGraph) -> list[str]:
    out = [
        "darts %d" % g.num_darts,
        "sigma " + " ".join(map(str, g.sigma)),
        "alpha " + " ".join(map(str, g.alpha)),
    ]
    out += ["colour %d %s" % (d, c) for d, c in g.colours]
    return out


def emit_ribbon(g: RibbonGraph) -> str:
    return "\n".join(["ribbon v1"] + _body(g)) + "\n"


def emit_diagram(d: SphericalDiagram) -> str:
    lines = ["diagram v1"] + _body(d.map) + ["crossing %d" % c for c in sorted(d.crossings)]
    return "\n".join(lines) + "\n"


def emit_word(w: ImmersedCircleWord) -> str:
    return "word v1\n" + " ".join(map(str, w.word)) + "\n"


def detect_kind(text: str) -> str:
    for _, toks in _lines(text):
        if len(toks) == 2 and toks[1] == "v1" and toks[0] in ("ribbon", "diagram", "word"):
            return toks[0]
        break
    raise ParseError("unrecognised header", 1)
