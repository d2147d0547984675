"""Physical constants and unit conversions, pinned in one place.

Internal solver units: lengths in nm, c = 1 (time measured in nm of light
travel).  Everything user-facing converts through the constants below.
"""

# speed of light, nm per picosecond
C_NM_PER_PS = 299_792.458

# hc, for wavelength <-> photon energy conversion
EV_NM = 1239.842

# repetition period of a 76 MHz pulsed laser, in ps
REP_PERIOD_76MHZ_PS = 1e6 / 76.0


def wavelength_to_ev(wavelength_nm: float) -> float:
    """Photon energy in eV for a vacuum wavelength in nm."""
    return EV_NM / wavelength_nm


def ev_to_wavelength(energy_ev: float) -> float:
    """Vacuum wavelength in nm for a photon energy in eV."""
    return EV_NM / energy_ev


def fwhm_nm_to_ev(center_nm: float, fwhm_nm: float) -> float:
    """Exact conversion of a wavelength FWHM to an energy FWHM (eV)."""
    lo = EV_NM / (center_nm + fwhm_nm / 2.0)
    hi = EV_NM / (center_nm - fwhm_nm / 2.0)
    return hi - lo
