

class RationalExpandersException(Exception):
    pass


class CapExceededException(RationalExpandersException):
    pass


class InputException(RationalExpandersException):
    pass


class ExpressionSyntaxException(InputException):

    def __init__(self, message, position):
        InputException.__init__(self, "%s at position %d" % (
            message, position))
        self.position = position


class ZeroDenominatorException(InputException):
    pass


class PoleLineException(InputException):
    pass


class GcdUndefinedException(InputException):
    pass


class DegreeException(InputException):
    pass


class NotZeroDimensionalException(InputException):
    pass


class DomainException(InputException):
    pass


class FieldMismatchException(InputException):
    pass


class SetGenerationException(InputException):
    pass


class ConfigurationException(InputException):
    pass
