#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hat {

// Element of Z_n, always stored reduced. Products go through 128-bit
// intermediates so any modulus that fits in int64 is safe.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return n_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;
  Residue pow(std::uint64_t e) const;

  bool operator==(const Residue& o) const = default;
  bool operator==(std::int64_t x) const;

 private:
  std::int64_t v_;
  std::int64_t n_;
};

std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t n);

bool is_unit(const Residue& x);
Residue inverse(const Residue& x);
std::int64_t mul_order(const Residue& x);
Residue geom_sum(const Residue& x, std::int64_t k);

enum class Family { EvenRadius, OddRadius, Metacirculant4 };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct ResidueParams {
  Family family;
  int m;
  std::int64_t n;
  std::int64_t r;
  std::int64_t t;
  // r^0 .. r^{m-1} mod n
  std::vector<std::int64_t> pw;

  std::int64_t rpow(std::int64_t i) const;
  // r + r^3 + ... + r^{m-1}
  std::int64_t odd_power_sum() const;
  // 1 + r + ... + r^{i-1}
  std::int64_t prefix_sum(int i) const;
};

ResidueParams validate(Family family, std::int64_t m, std::int64_t n,
                       std::int64_t r, std::int64_t t = 0);

inline ResidueParams even_params(std::int64_t m, std::int64_t n,
                                 std::int64_t r, std::int64_t t) {
  return validate(Family::EvenRadius, m, n, r, t);
}

std::string describe(const ResidueParams& p);

}  // namespace hat
