"""
Iteration budget expressions.

A budget is an arithmetic expression in ``m`` (term count) and ``K``
(sparsity) built from integer and float literals, ``+ - * / //``, unary minus
and the functions ``ceil``, ``floor``, ``log`` (natural), ``min`` and ``max``,
for example ``"m"``, ``"4*K"`` or ``"m*ceil(log(m+1))"``. Values are rounded
up to a non-negative integer.
"""
from __future__ import annotations

import ast
import math
import operator
from typing import Callable

from chebygreedy.errors import ConfigurationError


_BINARY = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.FloorDiv: operator.floordiv,
}

_FUNCTIONS = {
    'ceil': (math.ceil, 1),
    'floor': (math.floor, 1),
    'log': (math.log, 1),
    'min': (min, None),
    'max': (max, None),
}

NAMES = ('m', 'K')


def _compile(node: ast.AST, text: str) -> Callable[[dict], float]:
    if isinstance(node, ast.Expression):
        return _compile(node.body, text)

    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        value = node.value
        return lambda env: value

    if isinstance(node, ast.Name):
        if node.id not in NAMES:
            raise ConfigurationError(f"Unknown name '{node.id}' in budget '{text}'; use {NAMES}.")
        name = node.id
        return lambda env: env[name]

    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        op = _BINARY[type(node.op)]
        left, right = _compile(node.left, text), _compile(node.right, text)
        return lambda env: op(left(env), right(env))

    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        operand = _compile(node.operand, text)
        sign = -1 if isinstance(node.op, ast.USub) else 1
        return lambda env: sign * operand(env)

    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCTIONS and not node.keywords:
        function, arity = _FUNCTIONS[node.func.id]

        if (arity is not None and len(node.args) != arity) or not node.args:
            raise ConfigurationError(f"Wrong number of arguments to '{node.func.id}' in budget '{text}'.")

        arguments = [_compile(arg, text) for arg in node.args]
        return lambda env: function(*(arg(env) for arg in arguments))

    raise ConfigurationError(f"Unsupported syntax '{ast.dump(node)}' in budget '{text}'.")


class Budget:
    """
    A parsed budget expression.

    Properties:
        text (str):
            The expression as written.
    """
    def __init__(self, text: str):
        if not isinstance(text, str) or not text.strip():
            raise ConfigurationError('A budget must be a non-empty expression string.')

        try:
            tree = ast.parse(text.strip(), mode='eval')
        except SyntaxError as e:
            raise ConfigurationError(f"Cannot parse budget '{text}': {e.msg}") from e

        self.__text = text.strip()
        self.__evaluate = _compile(tree, self.__text)

    @property
    def text(self) -> str:
        return self.__text

    def __call__(self, m: int, K: int = 0) -> int:
        try:
            value = self.__evaluate({'m': m, 'K': K})
        except (ValueError, ZeroDivisionError, OverflowError) as e:
            raise ConfigurationError(f"Budget '{self.text}' cannot be evaluated at m={m}, K={K}: {e}") from e

        if not math.isfinite(value):
            raise ConfigurationError(f"Budget '{self.text}' is not finite at m={m}, K={K}.")

        return max(0, math.ceil(value - 1e-9))

    def __repr__(self) -> str:
        return f'Budget({self.text!r})'
