"""Exception hierarchy shared by all vncore modules."""


class VNCoreError(Exception):
    pass


class DivisionByZero(VNCoreError, ZeroDivisionError):
    pass


class FieldMismatch(VNCoreError):
    pass


class RankMismatch(VNCoreError):
    pass


class DimMismatch(VNCoreError):
    pass


class BadLegs(VNCoreError):
    pass


class ShapeError(VNCoreError):
    pass


class MissingMap(VNCoreError):
    pass


class NotVNRegular(VNCoreError):
    pass


class NotAGroup(VNCoreError):
    pass


class NotHopf(VNCoreError):
    pass


class BadTwist(VNCoreError):
    pass


class NotAGeneralizedInverse(VNCoreError):
    pass


class ParseError(VNCoreError):
    pass
