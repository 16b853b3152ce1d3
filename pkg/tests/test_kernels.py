import pytest

from vsgroups.homs import TRIPLES, format_triple
from vsgroups.kernels import (
    DERIVED_110, REFERENCE, check_kernel, definitions_consistent, kernel_membership, kernel_pipeline,
    reference_presentation,
)
from vsgroups.lcs import abelianization

KEYS = [format_triple(x) for x in TRIPLES]


@pytest.mark.parametrize("key", KEYS)
def test_pipeline_certified_against_reference(key):
    c = check_kernel(key)
    assert c.ok, c.certified.failures


@pytest.mark.parametrize("key", KEYS)
def test_reference_definitions(key):
    assert kernel_membership(key)
    assert definitions_consistent(key)


def test_generator_counts():
    for key in KEYS:
        P = kernel_pipeline("VSG", 2, key).presentation
        assert len(P.generators) == len(REFERENCE[key].generators)


def test_110_discrepancy_is_reported():
    c = check_kernel("110")
    assert c.compared_with == "derived"
    assert c.fingerprint == {"S3": 288, "S4": 12000}
    assert c.reference_fingerprint == {"S3": 576, "S4": 57600}
    # same abelianization, different groups
    assert abelianization(reference_presentation("110")) == c.abelianization
    assert len(DERIVED_110.relations) == len(REFERENCE["110"].relations) + 1


def test_kernel_text_header():
    text = kernel_pipeline("VSG", 2, "111").text()
    assert text.startswith("# transversal: {1, v1}")
    assert "gen s1_1" in text


def test_kernel_at_three_strands():
    res = kernel_pipeline("VSG", 3, "111")
    assert len(res.table) == 6
    assert len(res.presentation.generators) <= 6 * 5 + 1
