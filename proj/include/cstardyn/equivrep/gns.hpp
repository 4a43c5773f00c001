#pragma once

#include "cstardyn/core/errors.hpp"
#include "cstardyn/equivrep/constructions.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

/// Thrown by gns_from_pd when the multiplier is not positive definite.
class NotPositiveDefinite : public InvalidArgument {
 public:
  NotPositiveDefinite(PdCertificate certificate, const std::string& what)
      : InvalidArgument(what), certificate_(std::move(certificate)) {}
  const PdCertificate& certificate() const { return certificate_; }

 private:
  PdCertificate certificate_;
};

/// An equivariant representation with cyclic vector xi and
/// coefficient(rep, xi, xi) = t. The fibre at y is the quotient of the span
/// of the functions delta_g (x) e_k by the null space of the y-th component
/// of <f1, f2> = sum_{g,h} alpha_g(T_{g^{-1}h}(alpha_g^{-1}(f1(g)^* f2(h)))).
CyclicVector gns_from_pd(const Multiplier& t, double tol = kDefaultTol);

}  // namespace cstardyn
