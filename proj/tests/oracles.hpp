// Test-side reference computations written independently of the library.
#ifndef IDD_TESTS_ORACLES_HPP
#define IDD_TESTS_ORACLES_HPP

#include "idd/rational.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// i!/(i-m)! read literally, with 1/(i-m)! = 0 for i - m < 0.
inline idd::Rational factorial_ratio(int i, int m) {
  if (i - m < 0) return 0;
  return idd::Rational(factorial(i), factorial(i - m));
}

/// Rank modulo a prime, on integer rows (each row scaled by its lcm of denominators).
inline std::size_t rank_mod_p(const std::vector<std::vector<idd::Rational>>& rows, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : rows) {
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<std::uint64_t> out;
    for (const auto& x : r) {
      mpz_class v = x.numerator() * (l / x.denominator());
      mpz_class red;
      mpz_fdiv_r_ui(red.get_mpz_t(), v.get_mpz_t(), p);
      out.push_back(red.get_ui());
    }
    m.push_back(out);
  }
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    unsigned __int128 b = a;
    while (e) {
      if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
      b = (b * b) % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t iv = inv(m[rank][c]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>((static_cast<unsigned __int128>(m[r][c]) * iv) % p);
      for (std::size_t j = c; j < cols; ++j)
        m[r][j] = static_cast<std::uint64_t>((m[r][j] + static_cast<unsigned __int128>(p - f) * m[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

#endif
