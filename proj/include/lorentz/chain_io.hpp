#pragma once

#include <string>

#include "lorentz/gelfand_yaglom.hpp"

namespace lorentz {

// Chain plus coefficient tables as read from a config file. Missing
// "coeffs_dot" and "kappa_dot" default to "coeffs" and "kappa"; a missing
// "kappa" defaults to [0, 1].
struct ChainConfig {
  RepChain chain;
  CoeffTable coeffs, coeffs_dot;
  cplx kappa{0, 1}, kappa_dot{0, 1};
};

// {(1/2,0), (0,1/2)} with c^{12}_{1/2 1/2} = c^{21}_{1/2 1/2} = 1 in both sectors.
ChainConfig dirac_preset();

// Parses the JSON text; throws std::invalid_argument with a description of
// the offending field, including an empty chain and invalid coefficients.
ChainConfig parse_chain_config(const std::string& json_text);

// "dirac" selects the preset, anything else is read as a file path.
ChainConfig load_chain_config(const std::string& source);

}  // namespace lorentz
