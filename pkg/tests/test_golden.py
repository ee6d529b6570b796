import pytest

from a3zeta.errors import DomainError
from a3zeta.golden import golden_entry, load_golden, read_display
from a3zeta.algebra import ConstantExpression, ShiftedCombination


def test_every_entry_reads():
    for label, entry in load_golden().items():
        e = golden_entry(label)
        assert isinstance(e, (ConstantExpression, ShiftedCombination))
        assert not e.is_zero(), label


def test_reference_values():
    e = golden_entry("val-PU4")
    assert e.as_rational_pi()[1] == 12
    assert str(e.as_rational_pi()[0]) == "1103/145332633600"
    assert golden_entry("L4-closed") == ConstantExpression.L4(1)


def test_powers_of_two_become_u():
    e = read_display("(2**(-s) - 1)*zeta(s+2) + 2**(-2*s-3)*L4(s+1)")
    assert isinstance(e, ShiftedCombination)
    assert e.coefficient("L4", 1).items() == [((0, 2), e.coefficient("L4", 1).items()[0][1])]


@pytest.mark.parametrize("text", [
    "__import__('os')",
    "zeta(s)*zeta(s+1)",
    "foo(3)",
    "pi**(-1)",
    "zeta(2*s)",
    "1/zeta(3)",
])
def test_rejected_displays(text):
    with pytest.raises(DomainError):
        read_display(text)


def test_unknown_label():
    with pytest.raises(DomainError):
        golden_entry("nope")
