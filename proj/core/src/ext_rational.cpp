#include "feaslab/ext_rational.hpp"

#include "feaslab/signature.hpp"

namespace feaslab {

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.infinite_ = true;
  return r;
}

const BigRational& ExtRational::value() const {
  if (infinite_) throw UndefinedOperation("value of inf");
  return value_;
}

std::string ExtRational::to_string() const {
  if (infinite_) return "inf";
  return value_.str();
}

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto canon = canonical_rational_literal(text);
  if (!canon) throw std::invalid_argument("not a rational: " + std::string(text));
  return ExtRational(BigRational(*canon));
}

ExtRational add(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) throw UndefinedOperation(a.to_string() + " + " + b.to_string());
  return ExtRational(BigRational(a.value() + b.value()));
}

ExtRational sub(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) throw UndefinedOperation(a.to_string() + " - " + b.to_string());
  return ExtRational(BigRational(a.value() - b.value()));
}

ExtRational mul(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() && b.is_infinite()) return ExtRational::infinity();
  if (a.is_infinite() || b.is_infinite()) {
    const ExtRational& finite = a.is_infinite() ? b : a;
    return finite.is_zero() ? ExtRational(0L) : ExtRational::infinity();
  }
  return ExtRational(BigRational(a.value() * b.value()));
}

ExtRational div(const ExtRational& a, const ExtRational& b) {
  if (b.is_infinite() && !a.is_infinite()) return ExtRational(0L);
  if (a.is_infinite() || b.is_infinite() || b.is_zero()) {
    throw UndefinedOperation(a.to_string() + " / " + b.to_string());
  }
  return ExtRational(BigRational(a.value() / b.value()));
}

ExtRational neg(const ExtRational& a) {
  if (a.is_infinite()) throw UndefinedOperation("-inf");
  return ExtRational(BigRational(-a.value()));
}

ExtRational recip(const ExtRational& a) { return div(ExtRational(1L), a); }

}  // namespace feaslab
