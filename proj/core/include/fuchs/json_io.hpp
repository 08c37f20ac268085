#pragma once

#include "fuchs/frobenius.hpp"
#include "fuchs/transport.hpp"

#include <string>

namespace fuchs {
namespace io {

/// ODE JSON: {"order": n, "coeffs": [[ "p/q", ... ] per a_i ascending]}.
std::string ode_to_json(const FuchsianODE& ode);
FuchsianODE ode_from_json(const std::string& text);
FuchsianODE ode_from_json_file(const std::string& path);
void ode_to_json_file(const FuchsianODE& ode, const std::string& path);

/// Matrix JSON: {"from":.., "to":.., "digits":P,
///               "entries":[[[re,im],...] per row], "path":[[re,im],...]}
/// with all numerics as decimal strings.
std::string connection_to_json(const ConnectionMatrix& C, long digits);
CMatrix matrix_from_json(const std::string& text, long* digits_out = nullptr);
CMatrix matrix_from_json_file(const std::string& path, long* digits_out = nullptr);

/// Local basis dump: exponents as "p/q", coefficient tables as "p/q" strings.
std::string basis_to_json(const LocalBasis& basis);

}  // namespace io
}  // namespace fuchs
