#pragma once

#include <utility>
#include <vector>

#include "chow/errors.hpp"
#include "chow/schubert.hpp"

namespace chow {

// Element of the Chow ring of the projectivized subbundle over a base
// Grassmannian: a polynomial in the relative hyperplane class xi with
// Schubert coefficients, coeffs()[m] multiplying xi^m. Not reduced
// automatically; reduce_xi produces the normal form of xi-degree <= k.
class XiPolynomial {
 public:
  explicit XiPolynomial(GrassmannRing ring) : ring_(std::move(ring)) {}

  XiPolynomial(GrassmannRing ring, std::vector<SchubertElement> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
      if (!(c.ring() == ring_))
        throw ProfileError("xi polynomial: coefficient from another ring");
    trim();
  }

  static XiPolynomial xi_power(const GrassmannRing& ring, int l) {
    if (l < 0) throw ArgumentError("xi polynomial: negative power");
    std::vector<SchubertElement> cs(static_cast<std::size_t>(l), SchubertElement(ring));
    cs.push_back(SchubertElement::unit(ring));
    return XiPolynomial(ring, std::move(cs));
  }

  const GrassmannRing& ring() const { return ring_; }

  // Highest power with nonzero coefficient; -1 for the zero polynomial.
  int xi_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const SchubertElement& coeff(int m) const {
    if (m < 0 || m >= static_cast<int>(coeffs_.size())) {
      if (!zero_) zero_.emplace(ring_);
      return *zero_;
    }
    return coeffs_[static_cast<std::size_t>(m)];
  }

  bool is_zero() const { return coeffs_.empty(); }

  XiPolynomial& operator+=(const XiPolynomial& rhs) {
    if (!(ring_ == rhs.ring_))
      throw ProfileError("xi polynomial: rings do not match");
    if (rhs.coeffs_.size() > coeffs_.size())
      coeffs_.resize(rhs.coeffs_.size(), SchubertElement(ring_));
    for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
    trim();
    return *this;
  }

  friend XiPolynomial operator+(XiPolynomial a, const XiPolynomial& b) {
    a += b;
    return a;
  }

  friend XiPolynomial operator-(XiPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend XiPolynomial operator-(XiPolynomial a, const XiPolynomial& b) {
    a += -b;
    return a;
  }

  friend XiPolynomial operator*(XiPolynomial a, const Rational& c) {
    for (auto& x : a.coeffs_) x *= c;
    a.trim();
    return a;
  }

  friend XiPolynomial operator*(const Rational& c, XiPolynomial a) { return std::move(a) * c; }

  // Multiplication by a base class.
  friend XiPolynomial operator*(XiPolynomial a, const SchubertElement& c) {
    if (!(a.ring_ == c.ring()))
      throw ProfileError("xi polynomial: rings do not match");
    for (auto& x : a.coeffs_) x = x * c;
    a.trim();
    return a;
  }

  // Multiplication by xi^s.
  XiPolynomial shifted(int s) const {
    if (s < 0) throw ArgumentError("xi polynomial: negative shift");
    if (is_zero()) return *this;
    XiPolynomial out(ring_);
    out.coeffs_.assign(static_cast<std::size_t>(s), SchubertElement(ring_));
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
  }

  bool operator==(const XiPolynomial& rhs) const {
    return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  GrassmannRing ring_;
  std::vector<SchubertElement> coeffs_;
  mutable std::optional<SchubertElement> zero_;
};

// Rewrites every power xi^m with m > k through the defining relation
// xi^{k+1} = -(c_1(S) xi^k + ... + c_{k+1}(S)) until the xi-degree is at
// most k.
inline XiPolynomial reduce_xi(const XiPolynomial& p) {
  const GrassmannRing& ring = p.ring();
  const int k = ring.k();
  std::vector<SchubertElement> cs;
  for (int m = 0; m <= p.xi_degree(); ++m) cs.push_back(p.coeff(m));
  for (int m = static_cast<int>(cs.size()) - 1; m > k; --m) {
    SchubertElement head = cs[static_cast<std::size_t>(m)];
    if (head.is_zero()) continue;
    cs[static_cast<std::size_t>(m)] = SchubertElement(ring);
    for (int i = 1; i <= k + 1; ++i)
      cs[static_cast<std::size_t>(m - i)] -= chern_S(ring, i) * head;
  }
  if (static_cast<int>(cs.size()) > k + 1) cs.resize(static_cast<std::size_t>(k) + 1, SchubertElement(ring));
  return XiPolynomial(ring, std::move(cs));
}

// Integration over the fiber: the coefficient of xi^k in the reduced form.
inline SchubertElement pushforward(const XiPolynomial& p) {
  return reduce_xi(p).coeff(p.ring().k());
}

// Pushforward of (d xi)^{r+1+alpha}, evaluated in the given ambient ring.
// The ambient parameter n = ambient.r() may exceed r, which leaves room for
// the image classes below the ambient top degree.
inline SchubertElement bilt_pushforward(const GrassmannRing& ambient, int r, int d,
                                        int alpha) {
  if (r < ambient.k()) throw ArgumentError("pushforward: requires r >= k");
  if (d < 1) throw ArgumentError("pushforward: requires d >= 1");
  if (alpha < 0) throw ArgumentError("pushforward: requires alpha >= 0");
  const int power = r + 1 + alpha;
  const Rational scale(int_pow(Integer(d), static_cast<unsigned>(power)));
  return pushforward(XiPolynomial::xi_power(ambient, power) * scale);
}

}  // namespace chow
