import re
from dataclasses import dataclass, field

import pytest


def check_log_message(
    expected_log_message: str, log_level: str | None, caplog: pytest.LogCaptureFixture
):
    """Check if the expected log message is in the log messages.

    Args:
        expected_log_message: expected log message pattern string
        log_level: log level of the expected log message.
        caplog: caplog fixture.

    Raises:
        AssertionError: if the expected log message is not in the log messages of specified log level.
    """

    try:
        re.compile(expected_log_message)
    except re.error:
        expected_log_message = re.escape(expected_log_message)

    if log_level:
        level_log_messages = [
            record.message for record in caplog.records if record.levelname == log_level
        ]
    else:
        # if no log_level is specified, then check all log messages
        level_log_messages = [record.message for record in caplog.records]

    assert any(re.match(expected_log_message, message) for message in level_log_messages)


_DOT_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<comment>//[^\n]*|/\*.*?\*/)
    |(?P<arrow>->|--)
    |(?P<punct>[{}\[\];,=])
    |(?P<quoted>"(?:[^"\\]|\\.)*")
    |(?P<ident>[A-Za-z_][A-Za-z0-9_]*|-?(?:\.[0-9]+|[0-9]+(?:\.[0-9]*)?))
    """,
    re.VERBOSE | re.DOTALL,
)


@dataclass
class DotGraph:
    """What the validator read from a DOT text."""

    name: str
    nodes: dict[str, dict[str, str]] = field(default_factory=dict)
    edges: list[tuple[str, str]] = field(default_factory=list)
    subgraphs: list[str] = field(default_factory=list)
    attributes: dict[str, str] = field(default_factory=dict)


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    position = 0
    while position < len(text):
        match = _DOT_TOKEN.match(text, position)
        if match is None:
            raise AssertionError(f"Unexpected character {text[position]!r} at {position}")
        if match.lastgroup not in ("space", "comment"):
            tokens.append(match.group())
        position = match.end()
    return tokens


def _unquote(token: str) -> str:
    if token.startswith('"'):
        return re.sub(r"\\(.)", r"\1", token[1:-1])
    return token


class _DotParser:
    """Recursive descent over the subset of DOT used by digraph emitters:
    graph/node/edge attribute statements, `a = b` statements, node and
    single-hop edge statements, and named subgraphs."""

    def __init__(self, tokens: list[str]) -> None:
        self.tokens = tokens
        self.position = 0

    def peek(self) -> str | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        token = self.peek()
        if token is None:
            raise AssertionError("Unexpected end of DOT text")
        if expected is not None and token != expected:
            raise AssertionError(f"Expected {expected!r}, got {token!r}")
        self.position += 1
        return token

    def identifier(self) -> str:
        token = self.take()
        if token in "{}[];,=" or token in ("->", "--"):
            raise AssertionError(f"Expected an identifier, got {token!r}")
        return _unquote(token)

    def attributes(self) -> dict[str, str]:
        attributes: dict[str, str] = {}
        self.take("[")
        while self.peek() != "]":
            key = self.identifier()
            self.take("=")
            attributes[key] = self.identifier()
            if self.peek() in (",", ";"):
                self.take()
        self.take("]")
        return attributes

    def statements(self, graph: DotGraph) -> None:
        self.take("{")
        while self.peek() != "}":
            self.statement(graph)
            if self.peek() == ";":
                self.take()
        self.take("}")

    def statement(self, graph: DotGraph) -> None:
        token = self.peek()
        if token == "subgraph":
            self.take()
            graph.subgraphs.append(self.identifier())
            self.statements(graph)
            return
        if token == "graph":
            self.take()
            graph.attributes.update(self.attributes())
            return
        if token in ("node", "edge"):
            self.take()
            self.attributes()
            return
        first = self.identifier()
        if self.peek() == "=":
            self.take()
            graph.attributes[first] = self.identifier()
        elif self.peek() == "->":
            self.take()
            second = self.identifier()
            graph.edges.append((first, second))
            if self.peek() == "[":
                self.attributes()
        elif self.peek() == "--":
            raise AssertionError("Undirected edge in a digraph")
        else:
            attributes = self.attributes() if self.peek() == "[" else {}
            if first in graph.nodes:
                raise AssertionError(f"Node {first!r} declared twice")
            graph.nodes[first] = attributes


def validate_dot(text: str) -> DotGraph:
    """Parse a DOT digraph and check that every edge joins declared nodes.

    Raises:
        AssertionError: If the text is not valid.
    """
    parser = _DotParser(_tokenize(text))
    parser.take("digraph")
    graph = DotGraph(name=parser.identifier())
    parser.statements(graph)
    if parser.peek() is not None:
        raise AssertionError(f"Trailing tokens after the graph: {parser.peek()!r}")
    for source, target in graph.edges:
        for node in (source, target):
            if node not in graph.nodes:
                raise AssertionError(f"Edge uses undeclared node {node!r}")
    return graph
