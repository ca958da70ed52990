"""Unit conversion anchors and round trips."""

import numpy as np

from cdice.units import (
    C_TO_CO2,
    KGTC_PER_PPM,
    concentration_to_mass,
    mass_to_concentration,
)


def test_anchor_851_gtc_is_400_ppm():
    assert mass_to_concentration(0.851) == 400.0
    assert concentration_to_mass(400.0) == 0.851


def test_round_trip():
    ppm = np.array([285.0, 400.0, 935.0])
    assert np.allclose(mass_to_concentration(concentration_to_mass(ppm)), ppm,
                       rtol=1e-15)


def test_preindustrial_285_ppm_near_cdice_equilibrium():
    # the CDICE atmospheric equilibrium mass should map close to 285 ppm
    assert abs(mass_to_concentration(0.607) - 285.0) < 0.5


def test_constants():
    assert KGTC_PER_PPM == 0.851 / 400.0
    assert C_TO_CO2 == 3.666
