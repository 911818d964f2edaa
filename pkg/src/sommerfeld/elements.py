"""Element registry for z = 92..137 and Coulomb field-strength tiers.

Entries beyond z = 118 are hypothetical elements carrying IUPAC systematic
temporary names.  Spellings follow the published orbit tables this package
reproduces, including their quirks; conventional variants and nicknames are
kept as aliases (z = 128 is spelled "Unbiocitium" there, z = 137 is folklore
"Feynmanium", the z = 120 and z = 127 prose uses stray symbols).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotFoundError

Z_FIRST: int = 92
Z_LAST: int = 137

HYPOTHETICAL_FROM: int = 119


@dataclass(frozen=True)
class ElementInfo:
    z: int
    symbol: str
    name: str
    hypothetical: bool
    aliases: tuple[str, ...] = ()


_ROWS = (
    (92, "U", "Uranium", ()),
    (93, "Np", "Neptunium", ()),
    (94, "Pu", "Plutonium", ()),
    (95, "Am", "Americium", ()),
    (96, "Cm", "Curium", ()),
    (97, "Bk", "Berkelium", ()),
    (98, "Cf", "Californium", ()),
    (99, "Es", "Einsteinium", ()),
    (100, "Fm", "Fermium", ()),
    (101, "Md", "Mendelevium", ()),
    (102, "No", "Nobelium", ()),
    (103, "Lr", "Lawrencium", ()),
    (104, "Rf", "Rutherfordium", ()),
    (105, "Db", "Dubnium", ()),
    (106, "Sg", "Seaborgium", ()),
    (107, "Bh", "Bohrium", ()),
    (108, "Hs", "Hassium", ()),
    (109, "Mt", "Meitnerium", ()),
    (110, "Ds", "Darmstadtium", ()),
    (111, "Rg", "Roentgenium", ()),
    (112, "Cn", "Copernicium", ()),
    (113, "Nh", "Nihonium", ()),
    (114, "Fl", "Flerovium", ()),
    (115, "Mc", "Moscovium", ()),
    (116, "Lv", "Livermorium", ()),
    (117, "Ts", "Tennessine", ()),
    (118, "Og", "Oganesson", ()),
    (119, "Uue", "Ununennium", ()),
    (120, "Ubn", "Unbinilium", ("Ube",)),
    (121, "Ubu", "Unbiunium", ()),
    (122, "Ubb", "Unbibium", ()),
    (123, "Ubt", "Unbitrium", ()),
    (124, "Ubq", "Unbiquadium", ()),
    (125, "Ubp", "Unbipentium", ()),
    (126, "Ubh", "Unbihexium", ()),
    (127, "Ubs", "Unbiseptium", ("Ubh",)),
    (128, "Ubo", "Unbiocitium", ("Unbioctium",)),
    (129, "Ube", "Unbiennium", ()),
    (130, "Utn", "Untrinilium", ()),
    (131, "Utu", "Untriunium", ()),
    (132, "Utb", "Untribium", ()),
    (133, "Utt", "Untritrium", ()),
    (134, "Utq", "Untriquadium", ()),
    (135, "Utp", "Untripentium", ()),
    (136, "Uth", "Untrihexium", ()),
    (137, "Uts", "Untriseptium", ("Feynmanium",)),
)

ELEMENTS: dict[int, ElementInfo] = {
    z: ElementInfo(z, sym, name, hypothetical=z >= HYPOTHETICAL_FROM, aliases=aliases)
    for z, sym, name, aliases in _ROWS
}


def element_info(z: int) -> ElementInfo:
    """Registry entry for charge number z; raises NotFoundError outside 92..137."""
    try:
        return ELEMENTS[z]
    except (KeyError, TypeError):
        raise NotFoundError(f"no element entry for z = {z!r}; registry covers {Z_FIRST}..{Z_LAST}") from None


def ion_label(z: int) -> str:
    """One-electron ion label, e.g. "U^{91+}" for z = 92."""
    return f"{element_info(z).symbol}^{{{z - 1}+}}"


class FieldStrength(enum.Enum):
    """Coulomb field-strength tiers, keyed by the rosette's loop appearance.

    The five tiers tile 92..137 without gaps or overlap.
    """

    STRONG = (92, 116, "Strong", "no loops")
    SUPER_STRONG = (117, 125, "Super-Strong", "one loop, double necklace")
    ULTRA_STRONG = (126, 128, "Ultra-Strong", "two loops, triple necklace")
    SUPER_ULTRA_STRONG = (129, 130, "Super-Ultra Strong", "three loops")
    ULTRA_ULTRA_STRONG = (131, 137, "Ultra-Ultra Strong", "many loops")

    def __init__(self, z_min: int, z_max: int, label: str, note: str):
        self.z_min = z_min
        self.z_max = z_max
        self.label = label
        self.note = note

    def describe(self) -> str:
        return f"{self.label} ({self.note})"


def classify(z: int) -> FieldStrength:
    """Field-strength tier of charge number z; NotFoundError outside 92..137."""
    element_info(z)
    for tier in FieldStrength:
        if tier.z_min <= z <= tier.z_max:
            return tier
    raise NotFoundError(f"no field-strength tier covers z = {z}")
