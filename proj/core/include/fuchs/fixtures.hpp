#pragma once

#include "fuchs/cmatrix.hpp"
#include "fuchs/symbolic.hpp"

#include <string>
#include <vector>

namespace fuchs {
namespace fixtures {

/// The explicit 6x6 monodromy matrix M_{w=0}(1/4)(alpha, Omega) of the
/// chi3 analysis: block structure [[A, 0], [B, C]] divided by 24 alpha^4.
SymbolicMatrix chi3_monodromy(int omega_scale = 1);
/// Same matrix with Omega replaced by an arbitrary rational multiple
/// (used by the power identities).
SymbolicMatrix chi3_monodromy_scaled(const Rat& omega_scale);
/// M(alpha, -Omega).
SymbolicMatrix chi3_monodromy_negated();

struct IdentityCheck {
    std::string name;
    bool holds = false;
    std::string witness;  // first failing entry, empty when holds
};

struct Chi3Report {
    std::vector<IdentityCheck> identities;
    std::vector<int> power_identity_holds_for;  // N in 1..6 with M^N = M(alpha, N Omega)
    bool all_hold() const {
        for (const auto& c : identities)
            if (!c.holds) return false;
        return true;
    }
};

/// Exact identity battery over Q(alpha, Omega):
///   (a) M(a,O) M(a,-O) = Id          (b) M(a,O)^3 = M(a,3O)
///   (c) M(a,O)^2 = M(a,0) M(a,2O)    (d) det M = -1
///   (e) M(a,0)^2 = Id
/// plus the verified range of the literal power statement.
Chi3Report chi3_fixture_checks();

/// Names of the constants spanning the reference connection matrix entries.
std::vector<std::string> c014_basis_names();

/// The reference connection matrix C(0, 1/4) of the order-six operator: each entry an
/// exact rational combination over {1, pi, pi^2, 1/pi, 1/pi^2, sqrt3/pi,
/// pi*sqrt3, I3plus}. Row-major 6x6 of coefficient vectors.
std::vector<std::vector<std::vector<Rat>>> c014_exact();

/// Numeric rendering of the fixture at the requested precision.
CMatrix c014_numeric(long digits);

}  // namespace fixtures
}  // namespace fuchs
