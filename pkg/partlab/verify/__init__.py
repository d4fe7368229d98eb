# Verify context: the named inequality and oracle suites
from partlab.verify._corpus import CorpusEntry, containment_pairs, coprime_corpus, corpus
from partlab.verify._suite_result import (
    OnsetTracker,
    SuiteFailure,
    SuiteRecorder,
    SuiteResult,
)
from partlab.verify._suites import SUITES, SuiteDefinition, iterated_log_epsilon, run_suite

__all__ = [
    "SUITES",
    "CorpusEntry",
    "OnsetTracker",
    "SuiteDefinition",
    "SuiteFailure",
    "SuiteRecorder",
    "SuiteResult",
    "containment_pairs",
    "coprime_corpus",
    "corpus",
    "iterated_log_epsilon",
    "run_suite",
]
