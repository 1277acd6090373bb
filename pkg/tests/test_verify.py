import pytest

from twelvefold import verify


@pytest.mark.parametrize("name", ["summations", "equalities", "recurrences", "oeis"])
def test_fast_suites(name):
    records = verify.SUITES[name]()
    assert records and not [r for r in records if not r["pass"]]


def test_quotient_suite_with_listings():
    records = verify.quotients(5)
    listing = {r["check"] for r in records if r["check"].startswith("listing")}
    assert len(listing) == 48
    assert not [r for r in records if not r["pass"]]


def test_every_sequence_term_reproduced_by_listing():
    # six terms each, including the multi-million assemblage Row A terms
    records = verify.sequences(terms=9, oracle_terms=6)
    listings = [r for r in records if r["check"].endswith("listing")]
    assert len(listings) == 42 and all(len(r["details"]["listed"]) == 6 for r in listings)
    assert not [r for r in records if not r["pass"]]


def test_record_shape():
    for r in verify.edge_conventions():
        assert set(r) == {"check", "pass", "details"} and isinstance(r["pass"], bool)
