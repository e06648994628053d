import pytest

from rejsamp import fom
from rejsamp.fom import (PlatformKind, PlatformMetrics, Quantity, adp,
                         fom_report, latency, metrics_from_dict, pdp,
                         round_sig, scale_area, scaled_fpga_adp)

ASIC = PlatformMetrics(kind=PlatformKind.ASIC, area_um2=464866.0, cpd_ns=1.77,
                       power_mw=0.129, tech_nm=65, name="ASIC (65 nm)")
FPGA = PlatformMetrics(kind=PlatformKind.FPGA, luts=5108, cpd_ns=4.50,
                       power_mw=1.2, tech_nm=28, name="FPGA (Artix-7)",
                       power_listed_w=1.2)


def test_adp_reference_values():
    a = adp(ASIC)
    assert (a.unit, round_sig(a.value)) == (fom.UM2_S, 8.23e-4)
    f = adp(FPGA)
    assert (f.unit, round_sig(f.value)) == (fom.LUT_S, 2.30e-5)


def test_pdp_reference_values():
    assert round_sig(pdp(ASIC).value) == 2.28e-10
    assert round_sig(pdp(FPGA).value) == 5.40e-9
    zero = PlatformMetrics(kind=PlatformKind.ASIC, area_um2=1.0, cpd_ns=2.0,
                           power_mw=0.0, tech_nm=65)
    assert pdp(zero).value == 0.0


@pytest.mark.parametrize("factor", [0.5, 2.0, 10.0])
def test_products_linear_in_cpd(factor):
    scaled = PlatformMetrics(kind=PlatformKind.ASIC, area_um2=ASIC.area_um2,
                             cpd_ns=ASIC.cpd_ns * factor,
                             power_mw=ASIC.power_mw, tech_nm=ASIC.tech_nm)
    assert adp(scaled).value == pytest.approx(adp(ASIC).value * factor)
    assert pdp(scaled).value == pytest.approx(pdp(ASIC).value * factor)


def test_scale_area():
    q = Quantity(1.0, fom.UM2_S)
    assert scale_area(q, 28, 65).value == pytest.approx((65 / 28) ** 2)
    assert scale_area(q, 28, 65).value == pytest.approx(5.389, abs=1e-3)
    assert scale_area(q, 45, 45).value == 1.0
    assert scale_area(q, 65, 28).unit == fom.UM2_S
    with pytest.raises(ValueError):
        scale_area(q, 0, 65)


def test_scaled_fpga_adp_reference_row():
    s = scaled_fpga_adp(FPGA, to_nm=65, lut_area_um2=1.0)
    assert s.unit == fom.UM2_S
    assert round_sig(s.value) == 1.24e-4
    with pytest.raises(ValueError):
        scaled_fpga_adp(ASIC, to_nm=65)


@pytest.mark.parametrize("cycles,freq,quoted", [
    (8525, 222e6, 38.4),
    (8525, 565e6, 15.0),
    (3893, 565e6, 6.8),
    (4632, 565e6, 8.1),
])
def test_latency_reference_values(cycles, freq, quoted):
    # quoted figures are truncations: agree within one unit in the last digit
    assert abs(latency(cycles, freq) * 1e6 - quoted) < 0.1


def test_latency_validation():
    with pytest.raises(ValueError):
        latency(100, 0)


def test_metrics_validation():
    with pytest.raises(ValueError, match="area_um2"):
        PlatformMetrics(kind=PlatformKind.ASIC, luts=100, cpd_ns=1.0,
                        power_mw=1.0, tech_nm=65)
    with pytest.raises(ValueError, match="luts"):
        PlatformMetrics(kind=PlatformKind.FPGA, area_um2=1.0, cpd_ns=1.0,
                        power_mw=1.0, tech_nm=28)
    with pytest.raises(ValueError, match="cpd"):
        PlatformMetrics(kind=PlatformKind.ASIC, area_um2=1.0, cpd_ns=0,
                        power_mw=1.0, tech_nm=65)


def test_quantity_unit_safety():
    with pytest.raises(TypeError):
        adp(ASIC) + adp(FPGA)  # um^2*s + LUT*s
    with pytest.raises(TypeError):
        adp(FPGA) + 1.0
    with pytest.raises(TypeError):
        adp(FPGA) * adp(FPGA)
    combined = adp(ASIC) + adp(ASIC)
    assert combined.value == pytest.approx(2 * adp(ASIC).value)
    assert (2 * adp(ASIC)).value == combined.value


def test_unit_warning_only_on_disagreement():
    assert FPGA.unit_warning() is not None
    consistent = PlatformMetrics(kind=PlatformKind.FPGA, luts=10, cpd_ns=1.0,
                                 power_mw=1200.0, tech_nm=28,
                                 power_listed_w=1.2)
    assert consistent.unit_warning() is None


def test_report_rows_and_warnings():
    rep = fom_report([ASIC, FPGA], scale_to_nm=65, lut_area_um2=1.0)
    assert [r["adp_3sf"] for r in rep["rows"]] == \
        ["8.23e-04", "2.30e-05", "1.24e-04"]
    assert [r["pdp_3sf"] for r in rep["rows"]] == \
        ["2.28e-10", "5.40e-09", "5.40e-09"]
    assert len(rep["warnings"]) == 1 and "1.2 W" in rep["warnings"][0]


def test_empty_report():
    rep = fom_report([])
    assert rep == {"rows": [], "warnings": []}
    assert fom.report_to_csv(rep).count("\n") == 1  # header only


def test_metrics_from_dict_schema():
    with pytest.raises(ValueError, match="kind"):
        metrics_from_dict({"cpd_ns": 1.0})
    with pytest.raises(ValueError, match="unknown"):
        metrics_from_dict({"kind": "ASIC", "area_um2": 1.0, "cpd_ns": 1.0,
                           "power_mw": 0.1, "tech_nm": 65, "bogus": 1})
    with pytest.raises(ValueError, match="missing"):
        metrics_from_dict({"kind": "ASIC", "area_um2": 1.0, "power_mw": 0.1,
                           "tech_nm": 65})


def test_reference_inputs_reproduce_table():
    ms = [metrics_from_dict(e) for e in fom.REFERENCE_INPUTS["platforms"]]
    rep = fom_report(ms, scale_to_nm=fom.REFERENCE_INPUTS["scale_to_nm"],
                     lut_area_um2=fom.REFERENCE_INPUTS["lut_area_um2"])
    assert len(rep["rows"]) == 3 and len(rep["warnings"]) == 1
