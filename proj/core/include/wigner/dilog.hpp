#pragma once

namespace wigner {

/// Real dilogarithm Li2(z) = sum z^k / k^2 for the real branch z <= 1,
/// via the power series plus the standard reflection and inversion
/// identities. Absolute error below 1e-14. Throws DomainError for z > 1.
double dilog(double z);

}  // namespace wigner
