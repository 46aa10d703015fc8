#include "ssp/quat.hpp"

#include <stdexcept>

#include "ssp/errors.hpp"

namespace ssp {

QuatElem QuatElem::inverse() const {
  if (!is_unit()) throw std::domain_error("QuatElem::inverse: element lies in the maximal ideal");
  // (a + b Pi)^{-1} = a^{-1} - a^{-1} b sigma(a)^{-1} Pi
  const FqElem ai = a_.inverse();
  return {ai, -(ai * b_ * a_.frobenius().inverse())};
}

std::string QuatElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string pi_part = b_.is_one() ? "Pi" : "(" + b_.to_string() + ")Pi";
  if (a_.is_zero()) return pi_part;
  return a_.to_string() + " + " + pi_part;
}

QuatModP::QuatModP(std::uint32_t p, long long alpha) : p_(p), alpha_(alpha) {
  if (p == 2 || !is_prime(p)) throw ValidationError("p must be an odd prime");
  field_ = &FieldCtx::get(p, 2);
  u_ = sqrt_nonresidue(*field_, alpha);
}

QuatElem QuatModP::pi() const { return {FqElem(*field_, 0), FqElem(*field_, 1)}; }
QuatElem QuatModP::zero() const { return {FqElem(*field_, 0), FqElem(*field_, 0)}; }
QuatElem QuatModP::one() const { return {FqElem(*field_, 1), FqElem(*field_, 0)}; }

std::vector<QuatElem> QuatModP::basis() const {
  const QuatElem uq = u();
  return {one(), uq, pi(), uq * pi()};
}

std::vector<QuatElem> QuatModP::elements() const {
  const auto f = ssp::elements(*field_);
  std::vector<QuatElem> out;
  out.reserve(f.size() * f.size());
  for (const auto& b : f)
    for (const auto& a : f) out.emplace_back(a, b);
  return out;
}

QMatrix conj_transpose(const QMatrix& x) {
  return x.transpose().map([](const QuatElem& e) { return e.conj(); });
}

FMatrix reduce(const QMatrix& x) {
  return x.map([](const QuatElem& e) { return e.reduce(); });
}

}  // namespace ssp
