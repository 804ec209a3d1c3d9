#/project/parse/parse_ccx.py

"""
Readers and writers for the line-oriented text formats:

  ccx 1    cube complexes, one `cube t0 t1 ...` line per cube
  aut 1    vertex maps, one `u -> v` line per vertex
  map 1    point embeddings, same line shape as aut
  wsp 1    wallspaces, a `points ...` line then `wall a b | c d` lines

`#` starts a comment everywhere. Emitted documents are canonical: reading
and re-emitting yields the same text.
"""
import logging
from typing import Dict, Iterator, List, Mapping, Tuple

from cubing.automorphism import Automorphism
from cubing.complex import Cube, CubeComplex
from cubing.errors import DuplicateCorner, ParseError
from cubing.wallspace import Partition, Wallspace

FORMAT_VERSION = "1"


class DocumentParser:
    def __init__(self, text: str, source: str = "<text>"):
        self.text = text
        self.source = source
        self.logger = logging.getLogger(__name__)

    def lines(self) -> Iterator[Tuple[int, List[str]]]:
        """(line number, tokens) of every non-blank line, comments stripped."""
        for line_no, line in enumerate(self.text.splitlines(), start=1):
            tokens = line.split("#", 1)[0].split()
            if tokens:
                yield line_no, tokens

    def body(self, kind: str) -> Iterator[Tuple[int, List[str]]]:
        lines = self.lines()
        first = next(lines, None)
        if first is None:
            raise ParseError(f"empty document, expected header '{kind} {FORMAT_VERSION}'", 1)
        line_no, tokens = first
        if tokens != [kind, FORMAT_VERSION]:
            raise ParseError(f"expected header '{kind} {FORMAT_VERSION}', got '{' '.join(tokens)}'", line_no)
        return lines

    def parse_complex(self) -> CubeComplex:
        cubes = []
        for line_no, tokens in self.body("ccx"):
            if tokens[0] != "cube":
                raise ParseError(f"expected 'cube', got '{tokens[0]}'", line_no)
            corners = tokens[1:]
            count = len(corners)
            if count == 0 or count & (count - 1):
                raise ParseError(f"corner count {count} is not a power of two", line_no)
            if len(set(corners)) != count:
                repeated = sorted({c for c in corners if corners.count(c) > 1})
                raise DuplicateCorner(f"repeated corner {', '.join(repeated)}", line_no)
            cubes.append(Cube(tuple(corners)))
        X = CubeComplex(cubes)
        self.logger.info(f"Loaded {len(cubes)} cube records with {len(X.vertices)} vertices from {self.source}")
        return X

    def parse_map(self, kind: str = "aut") -> Dict[str, str]:
        mapping: Dict[str, str] = {}
        for line_no, tokens in self.body(kind):
            if len(tokens) != 3 or tokens[1] != "->":
                raise ParseError("expected 'u -> v'", line_no)
            source, _, target = tokens
            if source in mapping:
                raise ParseError(f"vertex {source} mapped twice", line_no)
            mapping[source] = target
        return mapping

    def parse_wallspace(self) -> Wallspace:
        points = None
        walls = []
        for line_no, tokens in self.body("wsp"):
            if tokens[0] == "points":
                if points is not None:
                    raise ParseError("second 'points' line", line_no)
                points = tuple(tokens[1:])
            elif tokens[0] == "wall":
                if points is None:
                    raise ParseError("'wall' before 'points'", line_no)
                if tokens.count("|") != 1:
                    raise ParseError("wall needs exactly one '|'", line_no)
                split = tokens.index("|")
                walls.append(Partition((frozenset(tokens[1:split]), frozenset(tokens[split + 1:]))))
            else:
                raise ParseError(f"expected 'points' or 'wall', got '{tokens[0]}'", line_no)
        if points is None:
            raise ParseError("missing 'points' line", 1)
        return Wallspace(points, tuple(walls))


def load_complex(text: str, source: str = "<text>") -> CubeComplex:
    return DocumentParser(text, source).parse_complex()


def load_automorphism(X: CubeComplex, text: str, source: str = "<text>", name: str = "f") -> Automorphism:
    return Automorphism.from_mapping(X, DocumentParser(text, source).parse_map("aut"), name=name)


def load_wallspace(text: str, source: str = "<text>") -> Wallspace:
    return DocumentParser(text, source).parse_wallspace()


def read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def write_file(path: str, text: str):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def emit_complex(X: CubeComplex) -> str:
    lines = [f"ccx {FORMAT_VERSION}"]
    lines += [" ".join(("cube",) + cube.corners) for cube in X.maximal_cubes()]
    return "\n".join(lines) + "\n"


def emit_map(mapping: Mapping[str, str], kind: str = "aut") -> str:
    lines = [f"{kind} {FORMAT_VERSION}"]
    lines += [f"{source} -> {mapping[source]}" for source in sorted(mapping)]
    return "\n".join(lines) + "\n"


def emit_wallspace(W: Wallspace) -> str:
    lines = [f"wsp {FORMAT_VERSION}", "points " + " ".join(W.points)]
    for wall in W.walls:
        lines.append(str(wall))
    return "\n".join(lines) + "\n"
