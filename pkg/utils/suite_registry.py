#!/usr/bin/env python3
"""
Suite Registry for the Pascal geometry toolkit
Manages registration and lookup of verification suites
"""

from typing import Any, Dict, List, Type

from utils.helpers import safe_log


class SuiteRegistry:
    """Central registry for verification suites, in registration order"""

    _suites: Dict[str, Dict[str, Any]] = {}
    _handlers: Dict[str, Type] = {}

    @classmethod
    def register_suite(cls, suite_id: str, suite_config: Dict[str, Any], handler_class: Type):
        """
        Register a new suite

        Args:
            suite_id: Unique suite identifier, as given to --suite
            suite_config: Suite metadata
            handler_class: BaseVerificationSuite subclass
        """
        cls._suites[suite_id] = suite_config
        cls._handlers[suite_id] = handler_class
        safe_log(f"Registered suite: {suite_id}", "DEBUG")

    @classmethod
    def get_available_suites(cls) -> Dict[str, Dict[str, Any]]:
        """Get all available suites with their metadata"""
        return cls._suites.copy()

    @classmethod
    def suite_ids(cls) -> List[str]:
        return list(cls._handlers)

    @classmethod
    def get_handler(cls, suite_id: str):
        """
        Get handler instance for a suite

        Args:
            suite_id: Suite identifier

        Returns:
            Handler instance

        Raises:
            ValueError: for an unknown suite
        """
        if suite_id not in cls._handlers:
            raise ValueError(f"Unknown suite: {suite_id}")
        return cls._handlers[suite_id]()

    @classmethod
    def is_suite_available(cls, suite_id: str) -> bool:
        return suite_id in cls._handlers


# Suites in the order `verify --suite all` runs them
_DEFAULT_SUITES = (
    ('features.identity_suites', 'IdentitySuite', 'prop-2-2', "Decomposition identities of the Pascal coordinates"),
    ('features.identity_suites', 'IndeterminacySuite', 'indeterminacy', "Indeterminacy locus of a Pascal"),
    ('features.pascal_suites', 'PascalAgreementSuite', 'pascal-agreement', "Formula against cross-hair lines"),
    ('features.pascal_suites', 'PedoeSuite', 'pedoe', "Sixty distinct Pascals"),
    ('features.degeneration_suites', 'WorkedExampleSuite', 'example-3-3', "Worked triple-point degeneration"),
    ('features.degeneration_suites', 'TriplePointSuite', 'prop-4-1', "Triple-point fibers"),
    ('features.degeneration_suites', 'DoublePairSuite', 'prop-4-2', "Double-pair fibers"),
    ('features.classification_suites', 'ClassificationSuite', 'thm-4-2', "(2,2,2) classification"),
    ('features.classification_suites', 'CodimTwoSuite', 'codim2', "Codimension-two pencils"),
    ('features.classification_suites', 'PolarTriangleSuite', 'chasles', "Chasles perspectivity"),
    ('features.hexagram_suites', 'KirkmanSuite', 'kirkman', "Kirkman points"),
    ('features.hexagram_suites', 'SteinerSuite', 'steiner', "Steiner points"),
    ('features.degeneration_suites', 'DegenerationSuite', 'degeneration', "Well-definedness of limits"),
)


def _register_default_suites():
    """Register default suites; a suite that fails to import is skipped"""
    from importlib import import_module

    for module_name, class_name, suite_id, description in _DEFAULT_SUITES:
        try:
            handler = getattr(import_module(module_name), class_name)
            SuiteRegistry.register_suite(suite_id, {'description': description, 'module': module_name}, handler)
        except ImportError as e:
            safe_log(f"Suite {suite_id} not available: {e}", "WARNING")
        except Exception as e:
            safe_log(f"Error registering suite {suite_id}: {e}", "ERROR")


# Initialize suites on module load with error handling
try:
    _register_default_suites()
    safe_log(f"Suite registration complete. Available suites: {len(SuiteRegistry.get_available_suites())}", "DEBUG")
except Exception as e:
    safe_log(f"Critical error during suite registration: {e}", "ERROR")
