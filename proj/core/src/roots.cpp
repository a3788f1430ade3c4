#include "mw/roots.hpp"

namespace mw {

namespace {

// a[n - 2k] = -scale(k) * sum_{j=1..k} a[n - 2(k - j)] / (2j + 1)
template <class Scale>
std::vector<Rational> chebyshev_recurrence(int n, Scale&& scale) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  a[static_cast<std::size_t>(n)] = Rational(1);
  for (int k = 1; 2 * k <= n; ++k) {
    Rational s;
    for (int j = 1; j <= k; ++j)
      s += a[static_cast<std::size_t>(n - 2 * (k - j))] / Rational(2 * j + 1);
    a[static_cast<std::size_t>(n - 2 * k)] = -(scale(k) * s);
  }
  return a;
}

}  // namespace

std::vector<Rational> LiteralChebyshevRule::coefficients(int n) const {
  if (n < 1) throw std::invalid_argument("chebyshev: n must be positive");
  return chebyshev_recurrence(n, [](int) { return Rational(1); });
}

std::vector<Rational> QuadratureChebyshevRule::coefficients(int n) const {
  if (n < 1) throw std::invalid_argument("chebyshev: n must be positive");
  return chebyshev_recurrence(n, [n](int k) { return Rational(n) / Rational(2 * k); });
}

const ChebyshevRule& default_chebyshev_rule() {
  static const LiteralChebyshevRule rule;
  return rule;
}

const ChebyshevRule& chebyshev_rule(const std::string& name) {
  static const LiteralChebyshevRule literal;
  static const QuadratureChebyshevRule quadrature;
  if (name == literal.name()) return literal;
  if (name == quadrature.name()) return quadrature;
  throw std::invalid_argument("unknown Chebyshev rule: " + name);
}

}  // namespace mw
