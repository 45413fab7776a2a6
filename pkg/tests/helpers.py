"""Shared builders for quaternionic test parameters."""

from fractions import Fraction as F

from arthurspec.arthur import ArchParameter, ArthurBlock, Character
from arthurspec.groups import Family, make_group


def block(p, q, dim, mult=1):
    return ArthurBlock(Character(F(p), F(q)), dim, mult)


def qparam(n, blocks, ramanujan=False):
    return ArchParameter(make_group(Family.QUATERNIONIC, n), blocks, ramanujan)


def case_d_n1():
    return qparam(1, [block(F(1, 2), F(-1, 2), 2), block(F(-1, 2), F(1, 2), 2), block(0, 0, 1)], ramanujan=True)


def case_a_n2():
    return qparam(2, [block(0, 0, 2, 2), block(0, 0, 3)])


def symplectic_violation_n1():
    return qparam(1, [block(0, 0, 2), block(0, 0, 3)])


def lx2_violation_n1():
    return qparam(1, [block(1, -1, 2), block(-1, 1, 2), block(0, 0, 1)])
