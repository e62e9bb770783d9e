"""Python bindings for the sirenless news-article analyzer.

The heavy lifting happens in the native ``_core`` module; this package adds a
few conveniences that return parsed JSON instead of text.
"""

import json

from ._core import (
    SCHEMA_VERSION,
    AnalyzeError,
    Analyzer,
    ConfigError,
    IngestError,
    IoError,
    MetricError,
    ModelError,
    ParseError,
    SirenlessError,
    count_syllables,
    discourse_modes,
    flesch_reading_ease,
    label_corpus,
    sentences,
    sentiment,
    train_discourse,
    validate_json,
)

__version__ = "0.3.0"


def analyze(text, title=None, **options):
    """Analyze one article and return the result as a dict.

    Keyword options: seed, topics, iterations, keywords_per_topic, and the
    resource paths lexicon, model and thresholds.
    """
    resources = {k: options.pop(k) for k in ("lexicon", "model", "thresholds") if k in options}
    return json.loads(Analyzer(**resources).analyze_json(text, title, **options))


def validate(analysis):
    """Cross-field problems of an analysis dict (empty list when valid)."""
    return validate_json(json.dumps(analysis))
