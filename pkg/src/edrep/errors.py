"""Exception hierarchy.

Every error carries a machine readable ``code``; the CLI maps
``CertificationError`` subclasses to exit status 2 and everything else to 1.
"""


class EdrepError(Exception):
    code = "error"


class InputError(EdrepError, ValueError):
    code = "input_error"


class CertificationError(EdrepError):
    """The method cannot certify an answer (not a malformed input)."""

    code = "cannot_certify"


# groups
class CapExceeded(InputError):
    code = "cap_exceeded"


class NotPermutation(InputError):
    code = "not_permutation"


class BadPrime(InputError):
    code = "bad_prime"


class BadOrder(InputError):
    code = "bad_order"


# cyclotomic fields
class NotAUnit(InputError):
    code = "not_a_unit"


class NotASubfield(InputError):
    code = "not_a_subfield"


class BadSubgroup(InputError):
    code = "bad_subgroup"


# characters
class GroupMismatch(InputError):
    code = "group_mismatch"


class NotIrreducible(InputError):
    code = "not_irreducible"


class NotACharacter(InputError):
    code = "not_a_character"


class ValuesNotInField(InputError):
    code = "values_not_in_field"


class NotAHomomorphism(InputError):
    code = "not_a_homomorphism"


# number theory / Schur indices
class BadPlace(InputError):
    code = "bad_place"


class FactorizationTimeout(CertificationError):
    code = "factorization_timeout"


class SchurUnsupported(CertificationError):
    code = "schur_unsupported"


class InconsistentHint(InputError):
    code = "inconsistent_hint"


# essential dimension
class NonConstantMultiplicity(InputError):
    code = "non_constant_multiplicity"


class BadDivisibility(InputError):
    code = "bad_divisibility"


class NotBalanced(CertificationError):
    code = "not_balanced"


class NotPPowers(InputError):
    code = "not_p_powers"


class IndependenceFails(CertificationError):
    code = "independence_fails"


# modular representations
class InvalidRep(InputError):
    code = "invalid_rep"


class IrrationalRoots(CertificationError):
    code = "irrational_roots"

    def __init__(self, message, factors=()):
        super().__init__(message)
        self.factors = list(factors)


class UnsupportedPrime(InputError):
    code = "unsupported_prime"


class DuplicatePoint(InputError):
    code = "duplicate_point"


class DegenerateEvaluation(CertificationError):
    code = "degenerate_evaluation"
