import pytest

from ncause.errors import DomainError, DuplicateCase, EmptyDomain, UnknownCase
from ncause.values import (
    BOOL,
    FALSE,
    ORDER,
    TRUE,
    declare_domain,
    enumerate_domain,
    parse_value,
    print_value,
    tuples,
)


def test_bool_domain_order_and_fills():
    assert [str(v) for v in enumerate_domain(BOOL)] == ["False", "True"]
    assert TRUE.fill == (("fillcolor", "gray"),)
    assert FALSE.fill == ()


def test_order_domain_matches_declaration():
    assert [str(v) for v in enumerate_domain(ORDER)] == ["None", "Charge", "Retreat"]
    fills = [v.fill for v in enumerate_domain(ORDER)]
    assert fills == [(), (("fillcolor", "palegreen"),), (("fillcolor", "orangered"),)]


def test_two_case_domain_enumerates_like_bool():
    lamp = declare_domain("Lamp", ["Off", "On"])
    assert [v.index for v in enumerate_domain(lamp)] == [0, 1]
    assert lamp != BOOL
    assert not lamp.is_boolean


@pytest.mark.parametrize("cases, exc", [([], EmptyDomain), (["A"], EmptyDomain),
                                        (["A", "A"], DuplicateCase)])
def test_declare_domain_errors(cases, exc):
    with pytest.raises(exc):
        declare_domain("X", cases)


def test_parse_value():
    assert parse_value(BOOL, "true") == TRUE
    assert parse_value(BOOL, "FALSE") == FALSE
    assert parse_value(ORDER, "Charge").index == 1
    with pytest.raises(UnknownCase):
        parse_value(ORDER, "Flee")
    with pytest.raises(UnknownCase):
        parse_value(ORDER, "charge")


@pytest.mark.parametrize("domain", [BOOL, ORDER])
def test_round_trip_and_no_duplicates(domain):
    vals = enumerate_domain(domain)
    assert len(set(vals)) == len(vals) == len(domain.cases)
    for v in vals:
        assert parse_value(domain, print_value(v)) == v


def test_tuples_last_position_fastest():
    rows = [tuple(str(v) for v in t) for t in tuples(BOOL, 2)]
    assert rows == [("False", "False"), ("False", "True"), ("True", "False"), ("True", "True")]


def test_coerce_rejects_foreign_values():
    with pytest.raises(DomainError):
        BOOL.coerce(ORDER.value(1))
    assert BOOL.coerce(True) == TRUE
