"""The presentation text format consumed by the CLI.

    generators: [a, b]
    relators: ["[a,b]", "a^3"]
    aspherical: true

Word syntax: juxtaposition (whitespace or * separated), ^k powers with
k a possibly negative integer, [x,y] commutator sugar expanding to
x y x^-1 y^-1, and (...) grouping.  Parse errors carry line/column info.
"""

from __future__ import annotations

from . import words
from .presentation import FinitePresentation


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.column = column


def parse_word(text, name_index, line=None):
    """Parse a word string into reduced letters."""
    tokens = _tokenize(text, line)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        t = tokens[pos[0]]
        pos[0] += 1
        return t

    def parse_sequence(stop):
        out = ()
        while True:
            t = peek()
            if t is None or t[0] in stop:
                return out
            out = words.concat(out, parse_factor())

    def parse_factor():
        t = take()
        kind, value, col = t
        if kind == "name":
            if value not in name_index:
                raise ParseError(f"unknown generator {value!r}", line, col)
            base = words.generator(name_index[value])
        elif kind == "(":
            base = parse_sequence({")"})
            closing = take() if peek() else None
            if not closing or closing[0] != ")":
                raise ParseError("unbalanced parenthesis", line, col)
        elif kind == "[":
            left = parse_sequence({","})
            comma = take() if peek() else None
            if not comma or comma[0] != ",":
                raise ParseError("commutator needs two entries", line, col)
            right = parse_sequence({"]"})
            closing = take() if peek() else None
            if not closing or closing[0] != "]":
                raise ParseError("unbalanced commutator bracket", line, col)
            base = words.commutator(left, right)
        else:
            raise ParseError(f"unexpected token {value!r}", line, col)
        t = peek()
        if t is not None and t[0] == "^":
            take()
            e = peek()
            if e is None or e[0] != "int":
                raise ParseError("exponent must be an integer", line, col)
            take()
            k = e[1]
            if k == 0:
                return ()
            if k < 0:
                base = words.inverse(base)
                k = -k
            out = ()
            for _ in range(k):
                out = words.concat(out, base)
            return out
        return base

    if text.strip() in ("", "1"):
        return ()
    result = parse_sequence(set())
    if pos[0] != len(tokens):
        raise ParseError("trailing tokens in word", line)
    return result


def _tokenize(text, line=None):
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace() or c == "*":
            i += 1
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        if c in "([,])^":
            out.append((c, c, i))
            i += 1
            continue
        if c == "-" or c.isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            try:
                out.append(("int", int(text[i:j]), i))
            except ValueError:
                raise ParseError(f"bad integer near {text[i:j]!r}", line, i)
            i = j
            continue
        raise ParseError(f"unexpected character {c!r}", line, i)
    return out


def _parse_list(value, line):
    value = value.strip()
    if not (value.startswith("[") and value.endswith("]")):
        raise ParseError("expected a [...] list", line)
    inner = value[1:-1]
    items = []
    depth = 0
    quote = None
    cur = ""
    for ch in inner:
        if quote:
            if ch == quote:
                quote = None
            else:
                cur += ch
            continue
        if ch in "\"'":
            quote = ch
            continue
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if quote:
        raise ParseError("unterminated quote", line)
    if cur.strip() or items:
        items.append(cur.strip())
    return [x for x in items if x != ""]


def parse_presentation(text):
    """Parse the structured text format into a FinitePresentation."""
    fields = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":" not in stripped:
            raise ParseError("expected 'key: value'", ln)
        key, _, value = stripped.partition(":")
        fields[key.strip()] = (value.strip(), ln)
    if "generators" not in fields:
        raise ParseError("missing 'generators' field")
    gen_value, gen_line = fields["generators"]
    names = _parse_list(gen_value, gen_line)
    if len(set(names)) != len(names):
        raise ParseError("duplicate generator names", gen_line)
    name_index = {n: i for i, n in enumerate(names)}
    relators = []
    if "relators" in fields:
        rel_value, rel_line = fields["relators"]
        for item in _parse_list(rel_value, rel_line):
            relators.append(parse_word(item, name_index, rel_line))
    aspherical = False
    if "aspherical" in fields:
        a_value, a_line = fields["aspherical"]
        if a_value not in ("true", "false"):
            raise ParseError("aspherical must be true or false", a_line)
        aspherical = a_value == "true"
    return FinitePresentation(len(names), tuple(relators), aspherical,
                              tuple(names))


def load_presentation(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def format_presentation(p: FinitePresentation):
    gens = ", ".join(p.names)
    rels = ", ".join(f'"{words.word_to_string(r, p.names)}"' for r in p.relators)
    return (f"generators: [{gens}]\n"
            f"relators: [{rels}]\n"
            f"aspherical: {'true' if p.aspherical else 'false'}\n")
