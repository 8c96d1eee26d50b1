# features/__init__.py
"""
Features package for the Pascal geometry toolkit
Contains all verification suite implementations
"""

from .base_suite import BaseVerificationSuite, CheckResult, SuiteReport
from .classification_suites import ClassificationSuite, CodimTwoSuite, PolarTriangleSuite
from .degeneration_suites import DegenerationSuite, DoublePairSuite, TriplePointSuite, WorkedExampleSuite
from .hexagram_suites import KirkmanSuite, SteinerSuite
from .identity_suites import IdentitySuite, IndeterminacySuite
from .pascal_suites import PascalAgreementSuite, PedoeSuite

__all__ = ['BaseVerificationSuite', 'CheckResult', 'SuiteReport',
           'IdentitySuite', 'IndeterminacySuite', 'PascalAgreementSuite', 'PedoeSuite',
           'WorkedExampleSuite', 'TriplePointSuite', 'DoublePairSuite', 'DegenerationSuite',
           'ClassificationSuite', 'CodimTwoSuite', 'PolarTriangleSuite', 'KirkmanSuite', 'SteinerSuite']
