"""A small arithmetic grammar for curvature and torsion maps in config files.

Accepted: numeric literals, the variable ``s``, the constants ``pi`` and
``e``, ``+ - * /``, ``**`` or ``^`` for powers, and the functions ``exp``,
``ln`` (alias ``log``), ``sinh``, ``cosh``, ``sqrt`` and ``pow(a, b)``.

Strings are parsed with :mod:`ast` and compiled into nested closures over
numpy ufuncs; nothing is passed to ``eval``.

>>> f = compile_expression("-2/s")
>>> float(f(4.0))
-0.5
"""

from __future__ import annotations

import ast
import math
import operator
from typing import Callable

import numpy as np

VARIABLE = "s"

_CONSTANTS = {"pi": math.pi, "e": math.e}

_FUNCTIONS = {
    "exp": (1, np.exp),
    "ln": (1, np.log),
    "log": (1, np.log),
    "sinh": (1, np.sinh),
    "cosh": (1, np.cosh),
    "sqrt": (1, np.sqrt),
    "pow": (2, np.power),
}

_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: np.power,
}

_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos}


class ExpressionError(ValueError):
    """The expression uses syntax outside the grammar."""


def _build(node) -> Callable:
    if isinstance(node, ast.Expression):
        return _build(node.body)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float)):
            raise ExpressionError(f"unsupported literal {node.value!r}")
        c = float(node.value)
        return lambda s: c
    if isinstance(node, ast.Name):
        if node.id == VARIABLE:
            return lambda s: s
        if node.id in _CONSTANTS:
            c = _CONSTANTS[node.id]
            return lambda s: c
        raise ExpressionError(f"unknown name {node.id!r}")
    if isinstance(node, ast.BinOp):
        op = _BINARY.get(type(node.op))
        if op is None:
            raise ExpressionError(f"unsupported operator {type(node.op).__name__}")
        left, right = _build(node.left), _build(node.right)
        return lambda s: op(left(s), right(s))
    if isinstance(node, ast.UnaryOp):
        op = _UNARY.get(type(node.op))
        if op is None:
            raise ExpressionError(f"unsupported operator {type(node.op).__name__}")
        arg = _build(node.operand)
        return lambda s: op(arg(s))
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in _FUNCTIONS:
            raise ExpressionError(f"unknown function in {ast.unparse(node)!r}")
        if node.keywords:
            raise ExpressionError("keyword arguments are not supported")
        arity, fn = _FUNCTIONS[node.func.id]
        if len(node.args) != arity:
            raise ExpressionError(f"{node.func.id} takes {arity} argument(s)")
        args = [_build(a) for a in node.args]
        if arity == 1:
            (a,) = args
            return lambda s: fn(a(s))
        a, b = args
        return lambda s: fn(a(s), b(s))
    raise ExpressionError(f"unsupported syntax: {type(node).__name__}")


def compile_expression(text: str) -> Callable[[np.ndarray], np.ndarray]:
    """Compile ``text`` into a vectorised function of ``s``."""
    if not isinstance(text, str) or not text.strip():
        raise ExpressionError("expression must be a non-empty string")
    try:
        # '^' is XOR to Python and binds looser than '+', so rewrite it
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc.msg}") from None
    body = _build(tree)

    def f(s):
        s = np.asarray(s, dtype=float)
        with np.errstate(all="ignore"):
            out = np.asarray(body(s), dtype=float)
        return np.broadcast_to(out, s.shape).copy() if out.shape != s.shape else out

    f.source = text
    return f
