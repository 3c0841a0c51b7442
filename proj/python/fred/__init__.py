# Copyright 2026 The FRED Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Anonymization toolkit: microaggregation, fuzzy fusion-attack simulation,
and protection/utility level selection."""

from fred._core import (  # noqa: F401
    AnonymizedRelease,
    AttributeSchema,
    Dataset,
    FuzzyInferenceSystem,
    Partition,
    ValidationError,
    __version__,
    basic_anonymization,
    demo_fixture,
    discernibility_cost,
    dissimilarity,
    evaluate_levels,
    fred_anonymize,
    fuse,
    level_to_k,
    load_dataset,
    load_release,
    load_schema,
    mdav_partition,
    parse_dataset_csv,
    parse_fis,
    parse_fis_text,
    synthetic_benchmark,
    utility,
)

__all__ = [
    "AnonymizedRelease",
    "AttributeSchema",
    "Dataset",
    "FuzzyInferenceSystem",
    "Partition",
    "ValidationError",
    "__version__",
    "basic_anonymization",
    "demo_fixture",
    "discernibility_cost",
    "dissimilarity",
    "evaluate_levels",
    "fred_anonymize",
    "fuse",
    "level_to_k",
    "load_dataset",
    "load_release",
    "load_schema",
    "mdav_partition",
    "parse_dataset_csv",
    "parse_fis",
    "parse_fis_text",
    "synthetic_benchmark",
    "utility",
]
