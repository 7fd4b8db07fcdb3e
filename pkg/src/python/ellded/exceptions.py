# -*- coding: utf-8 -*-


class DomainError(ValueError):
    """ An input lies outside the domain of the requested quantity. """


class CoprimalityError(DomainError):
    """ A pair (p, q) is not coprime or p is not positive. """


class HalfPlaneError(DomainError):
    """ A modulus tau is not in the admissible part of the upper half-plane. """


class SingularityError(DomainError):
    """ An argument hits a pole or a lattice point. """


class ConvergenceError(DomainError):
    """
    A series reached its term cap before the tail bound fell below the
    tolerance.

    :param message:
    Human readable description.

    :param partial:
    The :class:`ComplexVal` accumulated so far.

    :param terms:
    Number of terms that were summed.

    """

    def __init__(self, message, partial=None, terms=0):
        super(ConvergenceError, self).__init__(message)
        self.partial = partial
        self.terms = terms


class SlowConvergenceWarning(RuntimeWarning):
    pass

# Local Variables:
# indent-tabs-mode: nil
# End:
# vim: ai et sw=4 ts=4
