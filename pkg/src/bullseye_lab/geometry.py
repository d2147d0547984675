"""Layered semiconductor stack and bullseye geometry, rasterized onto an
axisymmetric (r, z) permittivity grid.

Conventions (fixed here, used everywhere else):

* The bullseye pattern, measured from the axis: semiconductor disk over
  r in [0, D/2]; ring k (k = 0..num_rings-1) is an air trench over
  [D/2 + k*P, D/2 + k*P + (P - W)] followed by a semiconductor ring over
  [D/2 + k*P + (P - W), D/2 + (k+1)*P], where P is the period and W the
  ring width.  Beyond the last ring the unpatterned membrane continues to
  the edge of the grid (it connects to the bulk in the real device).
* Layers are listed bottom to top; the membrane occupies z in
  [0, total thickness].
* Cells straddling a material boundary get the volume-weighted average
  permittivity (annular area weighting in r), which makes the rasterized
  semiconductor volume exact at any resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import FeatureUnderresolved, InvalidGeometry, OutOfDispersionRange


@dataclass(frozen=True)
class Layer:
    """One epitaxial layer: a name, a thickness and a dispersion table.

    The dispersion table is a sequence of (wavelength_nm, n) pairs,
    interpolated piecewise-linearly.  A flat table of two equal entries is
    the normal way to express "no dispersion".
    """

    name: str
    thickness_nm: float
    index_table: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.thickness_nm <= 0:
            raise InvalidGeometry(f"layer {self.name!r}: thickness must be > 0")
        if len(self.index_table) < 1:
            raise InvalidGeometry(f"layer {self.name!r}: empty index table")
        wl = [w for w, _ in self.index_table]
        if any(b <= a for a, b in zip(wl, wl[1:])):
            raise InvalidGeometry(
                f"layer {self.name!r}: index table wavelengths must increase"
            )
        if any(n < 1.0 for _, n in self.index_table):
            raise InvalidGeometry(f"layer {self.name!r}: refractive index < 1")


@dataclass(frozen=True)
class LayerStack:
    """Ordered membrane layers (bottom to top).

    ``substrate_below=False`` means the sacrificial layer has been removed
    and the membrane is suspended in air; ``True`` keeps a semi-infinite
    substrate of index ``substrate_index`` below z = 0.
    """

    layers: tuple[Layer, ...]
    substrate_below: bool = False
    substrate_index: float = 3.4

    def __post_init__(self):
        if len(self.layers) == 0:
            raise InvalidGeometry("stack must contain at least one layer")

    def layer_names(self) -> list[str]:
        return [l.name for l in self.layers]

    def interfaces(self) -> np.ndarray:
        """z positions of layer boundaries, bottom (0) to top (total)."""
        t = np.array([l.thickness_nm for l in self.layers])
        return np.concatenate([[0.0], np.cumsum(t)])

    def layer_z_range(self, name: str) -> tuple[float, float]:
        z = self.interfaces()
        for i, l in enumerate(self.layers):
            if l.name == name:
                return float(z[i]), float(z[i + 1])
        raise KeyError(f"no layer named {name!r}")


def membrane_thickness(stack: LayerStack) -> float:
    """Total membrane thickness in nm (sum of layer thicknesses)."""
    return float(sum(l.thickness_nm for l in stack.layers))


def index_at(stack: LayerStack, layer: str, wavelength_nm: float) -> float:
    """Refractive index of a named layer, piecewise-linear in wavelength.

    Raises OutOfDispersionRange for queries outside the configured table.
    """
    for l in stack.layers:
        if l.name == layer:
            wl = np.array([w for w, _ in l.index_table])
            nn = np.array([n for _, n in l.index_table])
            if wavelength_nm < wl[0] or wavelength_nm > wl[-1]:
                raise OutOfDispersionRange(
                    f"{wavelength_nm} nm outside table range "
                    f"[{wl[0]}, {wl[-1]}] of layer {layer!r}"
                )
            return float(np.interp(wavelength_nm, wl, nn))
    raise KeyError(f"no layer named {layer!r}")


@dataclass(frozen=True)
class BullseyeGeometry:
    """Circular Bragg ("bullseye") cavity parameters, lengths in nm.

    ``ring_width_nm`` is the width of the *semiconductor* ring; the etched
    trench width is period - ring_width.  ``bridge_angle_deg`` is recorded
    for provenance only; the axisymmetric solver ignores it.
    ``etch_depth_nm=None`` means the trenches cut through the full membrane.
    """

    disk_diameter_nm: float
    period_nm: float
    ring_width_nm: float
    num_rings: int = 8
    bridge_angle_deg: float = 3.0
    etch_depth_nm: float | None = None

    def __post_init__(self):
        if self.disk_diameter_nm <= 0:
            raise InvalidGeometry("disk diameter must be > 0")
        if not (0 < self.ring_width_nm < self.period_nm):
            raise InvalidGeometry("require 0 < ring width < period")
        if self.num_rings < 1:
            raise InvalidGeometry("num_rings must be >= 1")
        if self.etch_depth_nm is not None and self.etch_depth_nm <= 0:
            raise InvalidGeometry("etch depth must be > 0 when given")

    @property
    def trench_width_nm(self) -> float:
        return self.period_nm - self.ring_width_nm

    @property
    def pattern_radius_nm(self) -> float:
        """Outer radius of the last ring."""
        return self.disk_diameter_nm / 2.0 + self.num_rings * self.period_nm

    def semiconductor_intervals(self, r_max: float) -> list[tuple[float, float]]:
        """Radial intervals [lo, hi] occupied by semiconductor up to r_max."""
        half_d = self.disk_diameter_nm / 2.0
        out = [(0.0, min(half_d, r_max))]
        for k in range(self.num_rings):
            lo = half_d + k * self.period_nm + self.trench_width_nm
            hi = half_d + (k + 1) * self.period_nm
            if lo >= r_max:
                break
            out.append((lo, min(hi, r_max)))
        if self.pattern_radius_nm < r_max:
            out.append((self.pattern_radius_nm, r_max))
        return [(lo, hi) for lo, hi in out if hi > lo]


def semiconductor_area_fraction(geometry: BullseyeGeometry, r_max: float) -> float:
    """Analytic in-plane semiconductor area fraction inside radius r_max."""
    area = sum(hi**2 - lo**2 for lo, hi in geometry.semiconductor_intervals(r_max))
    return float(area / r_max**2)


@dataclass(frozen=True)
class PermittivityGrid:
    """Cell-centered relative permittivity on a uniform (r, z) grid.

    ``eps[i, k]`` is the volume-averaged permittivity of the cell
    [i*dr, (i+1)*dr] x [zmin + k*dz, zmin + (k+1)*dz], sampled at
    ``design_wavelength_nm``.  The grid is axisymmetric by construction.
    """

    dr: float
    dz: float
    zmin: float
    eps: np.ndarray
    design_wavelength_nm: float
    membrane_thickness_nm: float = 0.0

    @property
    def nr(self) -> int:
        return self.eps.shape[0]

    @property
    def nz(self) -> int:
        return self.eps.shape[1]

    @property
    def r_extent(self) -> float:
        return self.nr * self.dr

    @property
    def z_extent(self) -> float:
        return self.nz * self.dz

    def r_centers(self) -> np.ndarray:
        return (np.arange(self.nr) + 0.5) * self.dr

    def z_centers(self) -> np.ndarray:
        return self.zmin + (np.arange(self.nz) + 0.5) * self.dz

    def semiconductor_volume_fraction(self, eps_solid: float) -> float:
        """Fraction of the grid volume occupied by material of permittivity
        eps_solid, assuming a two-phase (air/solid) composition."""
        w = 2.0 * np.pi * self.r_centers() * self.dr * self.dz
        frac = (self.eps - 1.0) / (eps_solid - 1.0)
        return float(np.sum(frac * w[:, None]) / np.sum(w) / self.nz * 1.0) if False else float(
            np.sum(frac * w[:, None]) / (np.sum(w) * self.nz / self.nr) / (self.nr / self.nr)
        ) if False else float(np.sum(frac * w[:, None]) / (np.sum(w) * self.nz))


def _overlap(a0: float, a1: float, b0, b1):
    """Length of [a0,a1] ∩ [b0,b1] (vectorized over b)."""
    return np.clip(np.minimum(a1, b1) - np.maximum(a0, b0), 0.0, None)


def _piecewise_mean(z0: np.ndarray, z1: np.ndarray, edges: np.ndarray,
                    values: np.ndarray) -> np.ndarray:
    """Mean of a piecewise-constant profile over each interval [z0, z1].

    ``edges`` has len(values)+1 ascending breakpoints; intervals are assumed
    to lie inside [edges[0], edges[-1]].  Intervals of zero length return 0.
    """
    acc = np.zeros_like(z0)
    for j in range(len(values)):
        acc += values[j] * _overlap(edges[j], edges[j + 1], z0, z1)
    length = z1 - z0
    out = np.zeros_like(acc)
    np.divide(acc, length, out=out, where=length > 0)
    return out


def build_permittivity_grid(
    geometry: BullseyeGeometry,
    stack: LayerStack,
    dr: float,
    dz: float,
    padding: float,
    design_wavelength_nm: float = 440.0,
    r_extent: float | None = None,
) -> PermittivityGrid:
    """Rasterize the bullseye structure onto a cell-centered (r, z) grid.

    The radial extent defaults to the pattern radius plus ``padding``; the
    vertical extent is the membrane plus ``padding`` of air above and below
    (or substrate below, when the stack says so).  Straddling cells use
    exact volume-fraction permittivity averaging.
    """
    if dr <= 0 or dz <= 0:
        raise InvalidGeometry("grid spacings must be positive")
    quarter = geometry.ring_width_nm / 4.0
    if dr > quarter or dz > quarter:
        raise FeatureUnderresolved(
            f"dr/dz must be <= ring_width/4 = {quarter:.3f} nm to resolve the "
            f"narrowest feature with at least 4 cells (got dr={dr}, dz={dz})"
        )
    if padding < design_wavelength_nm / 2.0:
        raise InvalidGeometry(
            f"padding must be >= half the design wavelength "
            f"({design_wavelength_nm / 2:.0f} nm), got {padding}"
        )

    total = membrane_thickness(stack)
    etch = geometry.etch_depth_nm if geometry.etch_depth_nm is not None else total
    etch = min(etch, total)

    if r_extent is None:
        r_extent = geometry.pattern_radius_nm + padding
    nr = int(np.ceil(r_extent / dr))
    zmin = -padding
    zmax = total + padding
    nz = int(np.ceil((zmax - zmin) / dz))

    # permittivity of each layer at the design wavelength (sampled once)
    eps_layers = np.array(
        [index_at(stack, l.name, design_wavelength_nm) ** 2 for l in stack.layers]
    )
    interfaces = stack.interfaces()

    # per-cell radial semiconductor fraction, by exact annular area overlap
    r_edges = np.arange(nr + 1) * dr
    ra, rb = r_edges[:-1], r_edges[1:]
    frac_r = np.zeros(nr)
    for lo, hi in geometry.semiconductor_intervals(nr * dr):
        inner = np.maximum(ra, lo)
        outer = np.minimum(rb, hi)
        ok = outer > inner
        frac_r[ok] += (outer[ok] ** 2 - inner[ok] ** 2) / (rb[ok] ** 2 - ra[ok] ** 2)

    z_edges = zmin + np.arange(nz + 1) * dz
    za, zb = z_edges[:-1], z_edges[1:]
    cell_dz = zb - za

    # weights of the four vertical zones inside each z cell
    w_below = _overlap(za, zb, zmin - 1.0, 0.0) / cell_dz
    w_above = _overlap(za, zb, total, zmax + 1.0) / cell_dz
    unetched_top = total - etch
    w_unetched = _overlap(za, zb, 0.0, unetched_top) / cell_dz
    w_etched = _overlap(za, zb, unetched_top, total) / cell_dz

    # layer-profile means restricted to each zone
    lo_un = np.maximum(za, 0.0)
    hi_un = np.minimum(zb, unetched_top)
    eps_un = _piecewise_mean(lo_un, np.maximum(hi_un, lo_un), interfaces, eps_layers)
    lo_et = np.maximum(za, unetched_top)
    hi_et = np.minimum(zb, total)
    eps_et = _piecewise_mean(lo_et, np.maximum(hi_et, lo_et), interfaces, eps_layers)

    eps_sub = stack.substrate_index**2 if stack.substrate_below else 1.0

    eps = (
        w_below[None, :] * eps_sub
        + w_above[None, :] * 1.0
        + w_unetched[None, :] * eps_un[None, :]
        + w_etched[None, :] * (frac_r[:, None] * eps_et[None, :]
                               + (1.0 - frac_r[:, None]) * 1.0)
    )

    return PermittivityGrid(
        dr=float(dr),
        dz=float(dz),
        zmin=float(zmin),
        eps=eps,
        design_wavelength_nm=float(design_wavelength_nm),
        membrane_thickness_nm=float(total),
    )


def uniform_slab_grid(
    index: float,
    thickness_nm: float,
    dr: float,
    dz: float,
    padding: float,
    r_extent: float,
    design_wavelength_nm: float = 440.0,
) -> PermittivityGrid:
    """Grid for an unpatterned suspended slab (the 1D limit of the cavity)."""
    stack = LayerStack(
        layers=(Layer("slab", thickness_nm, ((200.0, index), (2000.0, index))),),
    )
    geo = BullseyeGeometry(
        disk_diameter_nm=4.0 * r_extent,  # pattern entirely outside the grid
        period_nm=dr * 100.0,
        ring_width_nm=dr * 50.0,
        num_rings=1,
    )
    return build_permittivity_grid(
        geo, stack, dr, dz, padding,
        design_wavelength_nm=design_wavelength_nm, r_extent=r_extent,
    )
