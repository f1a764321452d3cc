"""Small named magmas used in docs, tests and the CLI."""

from .table import AGTable


def trivial():
    return AGTable(((0,),), "trivial")


def cyclic_subtraction(n):
    """Z_n with a*b = b - a; left-invertive with left identity 0."""
    return AGTable.from_function(n, lambda a, b: b - a, f"Z{n}(b-a)")


def cyclic_addition(n):
    return AGTable.from_function(n, lambda a, b: a + b, f"Z{n}(+)")


def cyclic_multiplication(n):
    return AGTable.from_function(n, lambda a, b: a * b, f"Z{n}(*)")


def left_zero(n):
    return AGTable.from_function(n, lambda a, b: a, f"left-zero{n}")


def right_zero(n):
    return AGTable.from_function(n, lambda a, b: b, f"right-zero{n}")


NAMED = {
    "trivial": trivial,
    "z3-sub": lambda: cyclic_subtraction(3),
    "z2-add": lambda: cyclic_addition(2),
    "z6-mul": lambda: cyclic_multiplication(6),
    "left-zero2": lambda: left_zero(2),
    "right-zero2": lambda: right_zero(2),
}
