#include "hat/residue.hpp"

#include <numeric>

#include "hat/errors.hpp"

namespace hat {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  __int128 p = static_cast<__int128>(mod(a, n)) * mod(b, n);
  return static_cast<std::int64_t>(p % n);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t n) {
  std::int64_t base = mod(a, n);
  std::int64_t acc = 1 % n;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, n);
    base = mulmod(base, base, n);
    e >>= 1;
  }
  return acc;
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : n_(modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
  v_ = mod(value, modulus);
}

Residue Residue::operator+(const Residue& o) const {
  return Residue(static_cast<std::int64_t>((static_cast<__int128>(v_) + o.v_) % n_), n_);
}

Residue Residue::operator-(const Residue& o) const {
  return Residue(v_ - o.v_, n_);
}

Residue Residue::operator*(const Residue& o) const {
  return Residue(mulmod(v_, o.v_, n_), n_);
}

Residue Residue::operator-() const { return Residue(-v_, n_); }

Residue Residue::pow(std::uint64_t e) const { return Residue(powmod(v_, e, n_), n_); }

bool Residue::operator==(std::int64_t x) const { return v_ == mod(x, n_); }

bool is_unit(const Residue& x) { return std::gcd(x.value(), x.modulus()) == 1; }

Residue inverse(const Residue& x) {
  if (!is_unit(x)) {
    throw NonUnit(std::to_string(x.value()) + " is not a unit mod " +
                  std::to_string(x.modulus()));
  }
  // extended Euclid on (a, n)
  std::int64_t a = x.value(), n = x.modulus();
  std::int64_t old_r = a, r = n, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return Residue(old_s, n);
}

std::int64_t mul_order(const Residue& x) {
  if (!is_unit(x)) {
    throw NonUnit(std::to_string(x.value()) + " is not a unit mod " +
                  std::to_string(x.modulus()));
  }
  Residue p = x;
  std::int64_t k = 1;
  while (!(p == 1)) {
    p = p * x;
    ++k;
  }
  return k;
}

Residue geom_sum(const Residue& x, std::int64_t k) {
  Residue sum(0, x.modulus());
  Residue term(1, x.modulus());
  for (std::int64_t i = 0; i < k; ++i) {
    sum = sum + term;
    term = term * x;
  }
  return sum;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::EvenRadius:
      return "even";
    case Family::OddRadius:
      return "odd";
    case Family::Metacirculant4:
      return "meta";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "even") return Family::EvenRadius;
  if (s == "odd") return Family::OddRadius;
  if (s == "meta") return Family::Metacirculant4;
  throw ParseError("unknown family '" + s + "'");
}

std::int64_t ResidueParams::rpow(std::int64_t i) const {
  return pw[static_cast<std::size_t>(mod(i, m))];
}

std::int64_t ResidueParams::odd_power_sum() const {
  std::int64_t s = 0;
  for (int i = 1; i < m; i += 2) s = mod(s + pw[i], n);
  return s;
}

std::int64_t ResidueParams::prefix_sum(int i) const {
  std::int64_t s = 0;
  for (int k = 0; k < i; ++k) s = mod(s + pw[k % m], n);
  return s;
}

ResidueParams validate(Family family, std::int64_t m, std::int64_t n,
                       std::int64_t r, std::int64_t t) {
  switch (family) {
    case Family::EvenRadius:
      if (m < 4 || m % 2 != 0) throw BadParity("EvenRadius needs even m >= 4");
      if (n < 4 || n % 2 != 0) throw BadParity("EvenRadius needs even n >= 4");
      break;
    case Family::OddRadius:
      if (m < 3) throw BadParity("OddRadius needs m >= 3");
      if (n < 3 || n % 2 == 0) throw BadParity("OddRadius needs odd n >= 3");
      break;
    case Family::Metacirculant4:
      if (m != 4) throw BadParity("Metacirculant4 needs m = 4");
      if (n < 3) throw BadParity("Metacirculant4 needs n >= 3");
      break;
  }
  if (m > 1'000'000) throw BadParity("m out of range");

  Residue rr(r, n), tt(t, n);
  if (!is_unit(rr)) {
    throw NonUnit("r = " + std::to_string(rr.value()) + " is not a unit mod " +
                  std::to_string(n));
  }
  Residue rm = rr.pow(static_cast<std::uint64_t>(m));
  if (family == Family::EvenRadius) {
    if (!(rm == 1)) throw RelationFailed("r^m=1");
    if (!(tt * (rr - Residue(1, n)) == 0)) throw RelationFailed("t(r-1)=0");
    Residue lhs = geom_sum(rr, m) + tt + tt;
    if (!(lhs == 0)) throw RelationFailed("1+r+...+r^(m-1)+2t=0");
  } else {
    if (!(rm == 1) && !(rm == -1)) throw RelationFailed("r^m=+-1");
    if (!(tt == 0)) throw RelationFailed("t=0");
  }

  ResidueParams p{family, static_cast<int>(m), n, rr.value(), tt.value(), {}};
  p.pw.resize(static_cast<std::size_t>(m));
  std::int64_t acc = 1 % n;
  for (int i = 0; i < m; ++i) {
    p.pw[i] = acc;
    acc = mulmod(acc, p.r, n);
  }
  return p;
}

std::string describe(const ResidueParams& p) {
  switch (p.family) {
    case Family::EvenRadius:
      return "X_e(" + std::to_string(p.m) + "," + std::to_string(p.n) + ";" +
             std::to_string(p.r) + "," + std::to_string(p.t) + ")";
    case Family::OddRadius:
      return "X_o(" + std::to_string(p.m) + "," + std::to_string(p.n) + ";" +
             std::to_string(p.r) + ")";
    case Family::Metacirculant4:
      return "M(" + std::to_string(p.r) + ";4," + std::to_string(p.n) + ")";
  }
  return "?";
}

}  // namespace hat
