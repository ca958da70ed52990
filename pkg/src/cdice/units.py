"""Unit conventions and conversion constants.

Carbon masses are carried in units of 1000 GtC throughout the package,
capital/output/consumption in trillions of 2010 USD, labor in millions
of people, temperatures in K above the pre-industrial equilibrium.
"""

# 851 GtC of atmospheric carbon corresponds to 400 ppm CO2 (observed 2015),
# i.e. 2.1275 GtC per ppm.  Single source of truth for ppm <-> mass.
KGTC_PER_PPM = 0.851 / 400.0

# Mass ratio CO2/C; converts prices per tC into prices per tCO2.
C_TO_CO2 = 3.666


def concentration_to_mass(ppm):
    """Atmospheric CO2 concentration in ppm -> carbon mass in 1000 GtC."""
    return ppm * KGTC_PER_PPM


def mass_to_concentration(m):
    """Atmospheric carbon mass in 1000 GtC -> CO2 concentration in ppm."""
    return m / KGTC_PER_PPM
