"""Field expressions: parsing, printing and evaluation.

Grammar:
  expr := ['-'] term (('+' | '-') term)*
  term := rational atom | rational | atom
  atom := NAME | 'd' [INT] '(' expr ')' | 'W(' expr (',' expr)+ ')'
        | 'C(' expr ',' expr ',' ['-'] INT ')' | '(' expr ')'

`W(a, b, c)` is the right-nested Wick product :a(:bc:):, `C(a, b, n)` the
circle product a o_n b and `d3(a)` the third derivative. A bare rational is a
multiple of the vacuum.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Mapping, Optional, Tuple, Union

import dataclasses
import re

from .fock import *
from .wick import circle, derivative, wick_many


@dataclasses.dataclass(frozen=True)
class Name:
  name: str


@dataclasses.dataclass(frozen=True)
class Literal:
  value: Fraction


@dataclasses.dataclass(frozen=True)
class Scaled:
  coefficient: Fraction
  node: "Node"


@dataclasses.dataclass(frozen=True)
class Sum:
  # (sign, node) pairs with sign in {+1, -1}.
  terms: Tuple[Tuple[int, "Node"], ...]


@dataclasses.dataclass(frozen=True)
class Deriv:
  order: int
  node: "Node"


@dataclasses.dataclass(frozen=True)
class Wick:
  args: Tuple["Node", ...]


@dataclasses.dataclass(frozen=True)
class Circle:
  left: "Node"
  right: "Node"
  n: int


Node = Union[Name, Literal, Scaled, Sum, Deriv, Wick, Circle]

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|"
                    r"(?P<punct>[-+/(),]))")
_DERIV = re.compile(r"d(\d*)$")


class _Parser:

  def __init__(self, text: str):
    self.text = text
    self.tokens: List[Tuple[str, str, int]] = []
    position = 0
    while True:
      match = _TOKEN.match(text, position)
      if match is None or match.end() == position:
        rest = text[position:]
        if rest.strip():
          offset = position + len(rest) - len(rest.lstrip())
          self._error(f"unexpected character {text[offset]!r}", offset)
        break
      kind = match.lastgroup
      self.tokens.append((kind, match.group(kind), match.start(kind)))
      position = match.end()
    self.index = 0

  def _error(self, message: str, offset: Optional[int] = None):
    if offset is None:
      offset = self.tokens[self.index][2] if self.index < len(
          self.tokens) else len(self.text)
    line = self.text.count("\n", 0, offset) + 1
    column = offset - (self.text.rfind("\n", 0, offset) + 1) + 1
    raise ExprSyntaxError(message, line, column)

  def _peek(self, k: int = 0) -> Optional[Tuple[str, str, int]]:
    if self.index + k < len(self.tokens):
      return self.tokens[self.index + k]
    return None

  def _accept(self, value: str) -> bool:
    token = self._peek()
    if token is not None and token[0] == "punct" and token[1] == value:
      self.index += 1
      return True
    return False

  def _expect(self, value: str):
    if not self._accept(value):
      token = self._peek()
      found = repr(token[1]) if token else "end of input"
      self._error(f"expected {value!r}, found {found}")

  def parse(self) -> Node:
    if not self.tokens:
      self._error("empty expression", 0)
    node = self.expr()
    if self._peek() is not None:
      self._error(f"unexpected token {self._peek()[1]!r}")
    return node

  def expr(self) -> Node:
    terms = []
    leading_minus = self._accept("-")
    terms.append((-1 if leading_minus else 1, self.term()))
    while True:
      if self._accept("+"):
        terms.append((1, self.term()))
      elif self._accept("-"):
        terms.append((-1, self.term()))
      else:
        break
    if len(terms) == 1 and not leading_minus:
      return terms[0][1]
    return Sum(tuple(terms))

  def _rational(self) -> Fraction:
    kind, value, offset = self.tokens[self.index]
    self.index += 1
    numerator = int(value)
    if self._accept("/"):
      token = self._peek()
      if token is None or token[0] != "number":
        self._error("expected a denominator")
      self.index += 1
      if int(token[1]) == 0:
        self._error("zero denominator", token[2])
      return Fraction(numerator, int(token[1]))
    return Fraction(numerator)

  def _starts_atom(self) -> bool:
    token = self._peek()
    return token is not None and (token[0] == "name" or
                                  (token[0] == "punct" and token[1] == "("))

  def term(self) -> Node:
    token = self._peek()
    if token is None:
      self._error("unexpected end of input")
    if token[0] == "number":
      value = self._rational()
      if self._starts_atom():
        return Scaled(value, self.atom())
      return Literal(value)
    return self.atom()

  def _integer(self) -> int:
    negative = self._accept("-")
    token = self._peek()
    if token is None or token[0] != "number":
      self._error("expected an integer")
    self.index += 1
    return -int(token[1]) if negative else int(token[1])

  def atom(self) -> Node:
    token = self._peek()
    if token is None:
      self._error("unexpected end of input")
    kind, value, _ = token
    if kind == "punct" and value == "(":
      self.index += 1
      node = self.expr()
      self._expect(")")
      return node
    if kind != "name":
      self._error(f"unexpected token {value!r}")
    self.index += 1
    follows_paren = self._peek() is not None and self._peek()[1] == "("
    if follows_paren and value == "W":
      self.index += 1
      args = [self.expr()]
      while self._accept(","):
        args.append(self.expr())
      if len(args) < 2:
        self._error("W(...) needs at least two arguments")
      self._expect(")")
      return Wick(tuple(args))
    if follows_paren and value == "C":
      self.index += 1
      left = self.expr()
      self._expect(",")
      right = self.expr()
      self._expect(",")
      n = self._integer()
      self._expect(")")
      return Circle(left, right, n)
    deriv = _DERIV.match(value)
    if follows_paren and deriv:
      order = int(deriv.group(1)) if deriv.group(1) else 1
      self.index += 1
      node = self.expr()
      self._expect(")")
      return Deriv(order, node)
    if follows_paren:
      self._error(f"{value!r} is not a function")
    return Name(value)


def parse_field_expr(text: str) -> Node:
  """Parses `text`; raises ExprSyntaxError with line and column."""
  return _Parser(text).parse()


def _format_operand(node: Node) -> str:
  text = format_expr(node)
  if isinstance(node, (Sum, Scaled, Literal)):
    return f"({text})"
  return text


def format_expr(node: Node) -> str:
  if isinstance(node, Name):
    return node.name
  if isinstance(node, Literal):
    return str(node.value)
  if isinstance(node, Scaled):
    return f"{node.coefficient} {_format_operand(node.node)}"
  if isinstance(node, Sum):
    pieces = []
    for k, (sign, term) in enumerate(node.terms):
      text = f"({format_expr(term)})" if isinstance(term,
                                                      Sum) else format_expr(term)
      if k == 0:
        pieces.append(f"-{text}" if sign < 0 else text)
      else:
        pieces.append(f"{'-' if sign < 0 else '+'} {text}")
    return " ".join(pieces)
  if isinstance(node, Deriv):
    head = "d" if node.order == 1 else f"d{node.order}"
    return f"{head}({format_expr(node.node)})"
  if isinstance(node, Wick):
    return "W(" + ", ".join(format_expr(a) for a in node.args) + ")"
  if isinstance(node, Circle):
    return (f"C({format_expr(node.left)}, {format_expr(node.right)}, " +
            f"{node.n})")
  raise TypeError(f"not an expression node: {node!r}")


def referenced_names(node: Node) -> List[str]:
  if isinstance(node, Name):
    return [node.name]
  if isinstance(node, Literal):
    return []
  if isinstance(node, (Scaled, Deriv)):
    return referenced_names(node.node)
  if isinstance(node, Sum):
    return [n for _, t in node.terms for n in referenced_names(t)]
  if isinstance(node, Wick):
    return [n for a in node.args for n in referenced_names(a)]
  return referenced_names(node.left) + referenced_names(node.right)


Resolver = Callable[[str], State]


def evaluate(node: Node, system: FreeFieldSystem, resolve: Resolver) -> State:
  """Evaluates an expression; `resolve` maps names to States."""
  if isinstance(node, Name):
    return resolve(node.name)
  if isinstance(node, Literal):
    return system.vacuum() * node.value
  if isinstance(node, Scaled):
    return evaluate(node.node, system, resolve) * node.coefficient
  if isinstance(node, Sum):
    result = system.zero()
    for sign, term in node.terms:
      value = evaluate(term, system, resolve)
      result = result + value if sign > 0 else result - value
    return result
  if isinstance(node, Deriv):
    return derivative(evaluate(node.node, system, resolve), node.order)
  if isinstance(node, Wick):
    return wick_many([evaluate(a, system, resolve) for a in node.args])
  if isinstance(node, Circle):
    return circle(evaluate(node.left, system, resolve),
                  evaluate(node.right, system, resolve), node.n)
  raise TypeError(f"not an expression node: {node!r}")
