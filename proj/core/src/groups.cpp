#include "feaslab/groups.hpp"

#include <stdexcept>

namespace feaslab {

namespace {

void push_letter(Word& out, const Letter& l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) push_letter(out, l);
  return out;
}

Word free_multiply(const Word& a, const Word& b) {
  Word out = a;
  for (const auto& l : b) push_letter(out, l);
  return out;
}

Word free_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, BigInt(-it->exp)});
  return out;
}

Word free_power(const Word& w, const BigInt& k) {
  if (k == 0 || w.empty()) return {};
  if (k < 0) return free_power(free_inverse(w), BigInt(-k));
  if (w.size() == 1) return Word{Letter{w[0].gen, BigInt(w[0].exp * k)}};
  if (k > BigInt(1) << 16) throw std::domain_error("free_power: exponent too large for a multi-syllable word");
  Word result;
  Word base = w;
  BigInt n = k;
  while (n > 0) {
    if (bit_test(n, 0)) result = free_multiply(result, base);
    n >>= 1;
    if (n > 0) base = free_multiply(base, base);
  }
  return result;
}

BigInt free_length(const Word& w) {
  BigInt n = 0;
  for (const auto& l : w) n += abs(l.exp);
  return n;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.exp != 1) out += "^" + l.exp.str();
  }
  return out;
}

BigRational pow2(std::int64_t t) {
  BigInt p = 1;
  const auto m = static_cast<unsigned long>(t < 0 ? -t : t);
  p <<= m;
  return t < 0 ? BigRational(BigInt(1), p) : BigRational(p);
}

BSElement::BSElement(BigRational a, std::int64_t t) : a_(std::move(a)), t_(t) {
  const BigInt& den = denominator(a_);
  if ((den & (den - 1)) != 0) throw std::invalid_argument("BS coordinate must be dyadic");
}

std::string BSElement::to_string() const {
  std::string a;
  const BigInt& den = denominator(a_);
  if (den == 1) {
    a = numerator(a_).str();
  } else {
    a = numerator(a_).str() + "/2^" + std::to_string(boost::multiprecision::msb(den));
  }
  return "(" + a + ", " + std::to_string(t_) + ")";
}

BSElement bs_multiply(const BSElement& p, const BSElement& q) {
  return BSElement(BigRational(p.a() + pow2(p.t()) * q.a()), p.t() + q.t());
}

BSElement bs_inverse(const BSElement& p) { return BSElement(BigRational(-pow2(-p.t()) * p.a()), -p.t()); }

BSElement bs_power(const BSElement& p, const BigInt& k) {
  if (k < 0) return bs_power(bs_inverse(p), BigInt(-k));
  if (k == 0) return BSElement();
  if (p.t() == 0) return BSElement(BigRational(p.a() * k), 0);
  const BigInt shift = BigInt(p.t()) * k;
  if (abs(shift) > BigInt(1) << 40) throw std::domain_error("bs_power: shift exponent too large");
  // a (1 + 2^t + ... + 2^{t(k-1)}) = a (2^{tk} - 1) / (2^t - 1).
  const auto tk = static_cast<std::int64_t>(shift);
  BigRational geometric = (pow2(tk) - 1) / (pow2(p.t()) - 1);
  return BSElement(BigRational(p.a() * geometric), tk);
}

BSElement bs_normalize(const Word& w) {
  BSElement acc;
  for (const auto& l : w) {
    BSElement g;
    if (l.gen == "x") {
      g = BSElement::x();
    } else if (l.gen == "y") {
      g = BSElement::y();
    } else {
      throw std::invalid_argument("bs12 word uses unknown generator '" + l.gen + "'");
    }
    acc = bs_multiply(acc, bs_power(g, l.exp));
  }
  return acc;
}

bool bs_eq(const Word& a, const Word& b) { return bs_normalize(a) == bs_normalize(b); }

}  // namespace feaslab
