"""Small named spaces used by the CLI, the tests and the acceptance suite."""

from .connectives import unit_top, unit_zero
from .core import new_space
from .interp import ClassicalTopology, from_classical
from .properties import TWO


def classical(points, *opens):
    return from_classical(ClassicalTopology(tuple(points), tuple(frozenset(o) for o in opens)))


def sierpinski():
    return classical("ab", "", "b", "ab")


def discrete2():
    return classical("ab", "", "a", "b", "ab")


def indiscrete2():
    return classical("ab", "", "ab")


def chain3():
    return classical("abc", "", "c", "bc", "abc")


def discrete3():
    return classical("abc", "", "a", "b", "c", "ab", "ac", "bc", "abc")


def point():
    return classical("p", "", "p")


def fuzzy2():
    # a fuzzy topology: closed under min and max, contains the constants
    return new_space(
        ["a", "b"],
        ["0", "A", "B", "1"],
        [[0, "1/2", "1/2", 1], [0, "1/3", 1, 1]],
    )


def two():
    return TWO


FIXTURES = {
    "sierpinski": sierpinski,
    "discrete2": discrete2,
    "indiscrete2": indiscrete2,
    "two": two,
    "fuzzy2": fuzzy2,
    "chain3": chain3,
    "discrete3": discrete3,
    "point": point,
    "zero": unit_zero,
    "top": unit_top,
}


def all_fixtures():
    return {name: build() for name, build in FIXTURES.items()}
