#pragma once

// Exact (Jordan-Wigner) and Bose-approximation solutions of the open
// transverse-field Ising chain. Energies are closed forms in a continuous k;
// ground energies and populations sum over the Pekar grid.

#include "dising/chain.hpp"

namespace dising {

/// E_F(k) = sqrt(w0^2 + 4J^2 + 4 J w0 cos k).
double fermion_energy(double k, const ChainParams& params);

/// (N w0 - sum_k E_F(k)) / 2.
double fermion_ground_energy(const ChainParams& params);

/// Fermionic pair with alpha^2 + beta^2 = 1.
BogoliubovPair fermion_bogoliubov(double k, const ChainParams& params);

/// E_B(k) = sqrt(w0^2 + 4 J w0 cos k). Throws complex_energy if the radicand
/// is negative.
double bose_energy(double k, const ChainParams& params);

/// (sum_k E_B(k) - N w0) / 2.
double bose_ground_energy(const ChainParams& params);

/// Bosonic pair with alpha^2 - beta^2 = 1 and alpha - beta = sqrt(E_B / w0).
BogoliubovPair bose_bogoliubov(double k, const ChainParams& params);

/// Ground-state occupation of a site in the Bose approximation,
/// (1/N) sum_k beta_B(k)^2 = eta^2/2 + O(eta^3).
double virtual_population(const ChainParams& params);

ModeSpectrum fermion_spectrum(const ChainParams& params);
ModeSpectrum bose_spectrum(const ChainParams& params);

}  // namespace dising
