"""Figures of merit: area-delay and power-delay products, node scaling,
and cycle-count-to-latency conversion.

All hardware measurements (LUTs, silicon area, critical path delay, power,
operating frequency) are inputs supplied from synthesis reports; nothing
here claims to derive them. Results carry their unit as data and refuse
silent cross-unit arithmetic.
"""

import math
from dataclasses import dataclass
from enum import Enum

UM2_S = "um^2*s"
LUT_S = "LUT*s"
MW_S = "mW*s"


@dataclass(frozen=True)
class Quantity:
    """A value tagged with its unit; mixing units is a TypeError."""
    value: float
    unit: str

    def __add__(self, other):
        if not isinstance(other, Quantity) or other.unit != self.unit:
            raise TypeError(f"cannot add {getattr(other, 'unit', type(other))} "
                            f"to {self.unit}")
        return Quantity(self.value + other.value, self.unit)

    def __mul__(self, factor):
        if isinstance(factor, Quantity):
            raise TypeError("scale Quantities by plain numbers; unit algebra "
                            "is intentionally not provided")
        return Quantity(self.value * factor, self.unit)

    __rmul__ = __mul__

    def ratio(self, other: "Quantity") -> float:
        if other.unit != self.unit:
            raise TypeError(f"cannot compare {other.unit} with {self.unit}")
        return self.value / other.value


class PlatformKind(Enum):
    ASIC = "ASIC"
    FPGA = "FPGA"


@dataclass(frozen=True)
class PlatformMetrics:
    """One platform's measured figures.

    Exactly one of area_um2 (ASIC) / luts (FPGA) must be present, matching
    kind. power_listed_w records a power figure whose source quoted watts;
    when it disagrees with power_mw by a factor of 1000 the report carries
    a unit-discrepancy warning instead of guessing the intent.
    """
    kind: PlatformKind
    cpd_ns: float
    power_mw: float
    tech_nm: float
    area_um2: float | None = None
    luts: int | None = None
    name: str = ""
    power_listed_w: float | None = None

    def __post_init__(self):
        if self.kind is PlatformKind.ASIC:
            if self.area_um2 is None or self.luts is not None:
                raise ValueError("ASIC metrics need area_um2 and no luts")
        else:
            if self.luts is None or self.area_um2 is not None:
                raise ValueError("FPGA metrics need luts and no area_um2")
        if self.cpd_ns <= 0:
            raise ValueError("cpd_ns must be positive")
        if self.power_mw < 0:
            raise ValueError("power_mw must be non-negative")
        if self.tech_nm <= 0:
            raise ValueError("tech_nm must be positive")

    @property
    def cpd_seconds(self) -> float:
        return self.cpd_ns * 1e-9

    def unit_warning(self) -> str | None:
        if self.power_listed_w is None:
            return None
        if math.isclose(self.power_listed_w * 1000.0, self.power_mw):
            return None
        return (f"{self.name or self.kind.value}: source lists power as "
                f"{self.power_listed_w} W but the figures are computed with "
                f"{self.power_mw} mW; the source units are inconsistent")


def adp(m: PlatformMetrics) -> Quantity:
    """Area-delay product: silicon area (ASIC) or LUT count (FPGA) x CPD."""
    if m.kind is PlatformKind.ASIC:
        return Quantity(m.area_um2 * m.cpd_seconds, UM2_S)
    return Quantity(m.luts * m.cpd_seconds, LUT_S)


def pdp(m: PlatformMetrics) -> Quantity:
    """Power-delay product: total power (mW) x CPD (s)."""
    return Quantity(m.power_mw * m.cpd_seconds, MW_S)


def scale_area(area: Quantity, from_nm: float, to_nm: float) -> Quantity:
    """Classical technology scaling: area x (to/from)^2, unit preserved."""
    if from_nm <= 0 or to_nm <= 0:
        raise ValueError("process nodes must be positive")
    return Quantity(area.value * (to_nm / from_nm) ** 2, area.unit)


def scaled_fpga_adp(m: PlatformMetrics, to_nm: float,
                    lut_area_um2: float = 1.0) -> Quantity:
    """FPGA ADP converted to um^2*s at another node.

    lut_area_um2 is the assumed silicon area of one LUT at the FPGA's own
    node; there is no physical default, so 1.0 is only a normalization
    that callers should treat as an explicit modeling assumption.
    """
    if m.kind is not PlatformKind.FPGA:
        raise ValueError("tech scaling of LUT area applies to FPGA metrics")
    at_native = Quantity(m.luts * lut_area_um2 * m.cpd_seconds, UM2_S)
    return scale_area(at_native, m.tech_nm, to_nm)


def latency(cycles: int, freq_hz: float) -> float:
    """Wall-clock seconds for a cycle count at a clock frequency."""
    if freq_hz <= 0:
        raise ValueError("frequency must be positive")
    return cycles / freq_hz


def round_sig(x: float, sig: int = 3) -> float:
    if x == 0:
        return 0.0
    return round(x, -int(math.floor(math.log10(abs(x)))) + sig - 1)


def format_sig(x: float, sig: int = 3) -> str:
    return f"{x:.{sig - 1}e}"


# Measured inputs for the modeled accelerator: post-place-and-route on an
# Artix-7 (28 nm fabric) and logic synthesis on 65 nm CMOS. The FPGA total
# power is quoted in watts by the source; see PlatformMetrics.unit_warning.
REFERENCE_INPUTS = {
    "lut_area_um2": 1.0,
    "scale_to_nm": 65,
    "platforms": [
        {
            "name": "ASIC (65 nm)",
            "kind": "ASIC",
            "area_um2": 464866.0,
            "cpd_ns": 1.77,
            "power_mw": 0.129,  # 0.005 static + 0.124 dynamic
            "tech_nm": 65,
        },
        {
            "name": "FPGA (Artix-7)",
            "kind": "FPGA",
            "luts": 5108,
            "cpd_ns": 4.50,
            "power_mw": 1.2,
            "power_listed_w": 1.2,
            "tech_nm": 28,
        },
    ],
}


def metrics_from_dict(entry: dict) -> PlatformMetrics:
    try:
        kind = PlatformKind(entry["kind"])
    except (KeyError, ValueError):
        raise ValueError(f"platform entry needs kind ASIC or FPGA: {entry!r}")
    known = {"name", "kind", "area_um2", "luts", "cpd_ns", "power_mw",
             "power_listed_w", "tech_nm"}
    extra = set(entry) - known
    if extra:
        raise ValueError(f"unknown metric field(s) {sorted(extra)}")
    try:
        return PlatformMetrics(
            kind=kind,
            cpd_ns=entry["cpd_ns"],
            power_mw=entry["power_mw"],
            tech_nm=entry["tech_nm"],
            area_um2=entry.get("area_um2"),
            luts=entry.get("luts"),
            name=entry.get("name", ""),
            power_listed_w=entry.get("power_listed_w"),
        )
    except KeyError as e:
        raise ValueError(f"platform entry missing field {e}") from None


def fom_report(metrics: list[PlatformMetrics], scale_to_nm: float | None = None,
               lut_area_um2: float = 1.0) -> dict:
    """A comparison-table-shaped report: one row per platform plus a
    tech-scaled row per FPGA entry when a target node is given."""
    rows = []
    warnings = []
    for m in metrics:
        a, p = adp(m), pdp(m)
        rows.append({
            "platform": m.name or m.kind.value,
            "kind": m.kind.value,
            "cpd_ns": m.cpd_ns,
            "adp": a.value, "adp_unit": a.unit, "adp_3sf": format_sig(a.value),
            "pdp": p.value, "pdp_unit": p.unit, "pdp_3sf": format_sig(p.value),
            "provenance": "inputs measured; products derived",
        })
        w = m.unit_warning()
        if w:
            warnings.append(w)
        if m.kind is PlatformKind.FPGA and scale_to_nm is not None:
            s = scaled_fpga_adp(m, scale_to_nm, lut_area_um2)
            rows.append({
                "platform": f"{m.name or 'FPGA'} (tech-scaled to "
                            f"{scale_to_nm:g} nm)",
                "kind": m.kind.value,
                "cpd_ns": m.cpd_ns,
                "adp": s.value, "adp_unit": s.unit, "adp_3sf": format_sig(s.value),
                "pdp": p.value, "pdp_unit": p.unit, "pdp_3sf": format_sig(p.value),
                "provenance": f"scaled with (to/from)^2 assuming "
                              f"{lut_area_um2:g} um^2 per LUT at "
                              f"{m.tech_nm:g} nm",
            })
    return {"rows": rows, "warnings": warnings}


def report_to_csv(report: dict) -> str:
    header = "platform,kind,cpd_ns,adp,adp_unit,pdp,pdp_unit"
    lines = [header]
    for r in report["rows"]:
        lines.append(f"{r['platform']},{r['kind']},{r['cpd_ns']},"
                     f"{r['adp_3sf']},{r['adp_unit']},"
                     f"{r['pdp_3sf']},{r['pdp_unit']}")
    return "\n".join(lines) + "\n"
