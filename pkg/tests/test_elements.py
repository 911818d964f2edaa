"""Element registry and field-strength tier classification."""

import pytest

from sommerfeld import (
    HYPOTHETICAL_FROM,
    Z_FIRST,
    Z_LAST,
    FieldStrength,
    classify,
    element_info,
    ion_label,
)
from sommerfeld.errors import NotFoundError


def test_registry_covers_92_to_137():
    entries = [element_info(z) for z in range(Z_FIRST, Z_LAST + 1)]
    assert len(entries) == 46
    assert [e.z for e in entries] == list(range(92, 138))
    assert len({e.symbol for e in entries}) == 46
    assert len({e.name for e in entries}) == 46


@pytest.mark.parametrize(
    "z,symbol,name",
    [
        (92, "U", "Uranium"),
        (96, "Cm", "Curium"),
        (103, "Lr", "Lawrencium"),
        (118, "Og", "Oganesson"),
        (119, "Uue", "Ununennium"),
        (120, "Ubn", "Unbinilium"),
        (126, "Ubh", "Unbihexium"),
        (127, "Ubs", "Unbiseptium"),
        (129, "Ube", "Unbiennium"),
        (130, "Utn", "Untrinilium"),
        (132, "Utb", "Untribium"),
        (137, "Uts", "Untriseptium"),
    ],
)
def test_known_entries(z, symbol, name):
    e = element_info(z)
    assert (e.symbol, e.name) == (symbol, name)


def test_hypothetical_flag_starts_at_119():
    assert HYPOTHETICAL_FROM == 119
    assert not element_info(118).hypothetical
    assert element_info(119).hypothetical
    assert all(element_info(z).hypothetical == (z >= 119) for z in range(92, 138))


def test_aliases_capture_published_variants():
    assert "Feynmanium" in element_info(137).aliases
    assert "Ube" in element_info(120).aliases
    assert "Ubh" in element_info(127).aliases
    assert element_info(128).name == "Unbiocitium"
    assert "Unbioctium" in element_info(128).aliases


@pytest.mark.parametrize("z,label", [(92, "U^{91+}"), (96, "Cm^{95+}"), (137, "Uts^{136+}")])
def test_ion_labels(z, label):
    assert ion_label(z) == label


@pytest.mark.parametrize("z", [0, 91, 138, 1000, "92", None])
def test_lookup_outside_registry(z):
    with pytest.raises(NotFoundError):
        element_info(z)
    with pytest.raises(NotFoundError):
        classify(z)


def test_tiers_tile_the_range_without_overlap():
    covered = []
    for tier in FieldStrength:
        covered.extend(range(tier.z_min, tier.z_max + 1))
    assert sorted(covered) == list(range(92, 138))
    assert len(covered) == len(set(covered))


@pytest.mark.parametrize(
    "z,tier",
    [
        (92, FieldStrength.STRONG),
        (116, FieldStrength.STRONG),
        (117, FieldStrength.SUPER_STRONG),
        (125, FieldStrength.SUPER_STRONG),
        (126, FieldStrength.ULTRA_STRONG),
        (128, FieldStrength.ULTRA_STRONG),
        (129, FieldStrength.SUPER_ULTRA_STRONG),
        (130, FieldStrength.SUPER_ULTRA_STRONG),
        (131, FieldStrength.ULTRA_ULTRA_STRONG),
        (137, FieldStrength.ULTRA_ULTRA_STRONG),
    ],
)
def test_boundary_classification(z, tier):
    assert classify(z) is tier


def test_describe_strings():
    assert classify(118).describe() == "Super-Strong (one loop, double necklace)"
    assert classify(92).describe() == "Strong (no loops)"
    assert classify(126).describe() == "Ultra-Strong (two loops, triple necklace)"
    assert classify(129).describe() == "Super-Ultra Strong (three loops)"
    assert classify(137).describe() == "Ultra-Ultra Strong (many loops)"
