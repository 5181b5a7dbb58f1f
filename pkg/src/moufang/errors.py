"""Exception hierarchy shared by all modules."""


class AlgebraError(ValueError):
    """Base class for every error raised by this package."""


class InvalidDegreeError(AlgebraError):
    pass


class IncompatibleDegreeError(AlgebraError):
    pass


class InvalidTableError(AlgebraError):
    pass


class NotATranslationError(AlgebraError):
    def __init__(self, kind, index, repeated):
        self.kind = kind
        self.index = index
        self.repeated = repeated
        super().__init__(f"{kind} {index} is not a bijection: value {repeated} repeats")


class NotALoopError(AlgebraError):
    pass


class NotAGroupError(AlgebraError):
    pass


class MissingInverseError(AlgebraError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class ExtractionRefusedError(AlgebraError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"refusing to extract a triple: {report}")


class HypothesisViolation(AlgebraError):
    """A hypothesis of the reconstruction theorem does not hold."""


class BarMissingError(HypothesisViolation):
    def __init__(self, element):
        self.element = element
        super().__init__(f"no element h has S_h = S_{element}^-1 and T_h = T_{element}^-1")


class SeparationError(HypothesisViolation):
    def __init__(self, first, second):
        self.pair = (first, second)
        super().__init__(f"elements {first} and {second} share the same (S, T) images")


class ReconstructionError(AlgebraError):
    def __init__(self, g, h, s_target, t_target):
        self.pair = (g, h)
        self.s_target = s_target
        self.t_target = t_target
        super().__init__(
            f"no element realizes the product {g}*{h}: "
            f"S-target {list(s_target)}, T-target {list(t_target)}"
        )


class CertificateError(AlgebraError):
    def __init__(self, message, witness=()):
        self.witness = tuple(witness)
        super().__init__(message)


class CertificateInconsistentError(AlgebraError):
    """An internal consistency assertion failed; indicates an upstream bug."""


class ParseError(AlgebraError):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class FlexibilityError(AlgebraError):
    pass
