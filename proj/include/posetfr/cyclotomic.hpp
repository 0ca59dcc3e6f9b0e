#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "posetfr/bigint.hpp"
#include "posetfr/errors.hpp"

namespace posetfr {

class Cyclotomic;

// The ring of integers with a primitive N-th root of unity adjoined,
// Z[x]/Phi_N(x). Phi_N is computed exactly by peeling Phi_d out of x^N - 1
// for every proper divisor d. Elements are coefficient vectors of length
// deg Phi_N in canonical (fully reduced) form, so equality is vector equality
// and an element is a rational integer exactly when all higher coefficients
// vanish.
class CyclotomicField {
  public:
    static std::shared_ptr<const CyclotomicField> make(std::uint32_t n);

    std::uint32_t order() const noexcept { return n_; }
    int degree() const noexcept { return static_cast<int>(phi_.size()) - 1; }
    const std::vector<BigInt>& minimal_polynomial() const noexcept { return phi_; }

    Cyclotomic zero() const;
    Cyclotomic one() const;
    Cyclotomic integer(BigInt v) const;
    Cyclotomic zeta(std::uint64_t e) const;  // zeta^(e mod N)
    // sum over e of counts[e] * zeta^e; counts has length N.
    Cyclotomic from_counts(std::span<const BigInt> counts) const;
    Cyclotomic from_counts(std::span<const std::int64_t> counts) const;

    // Remainder of p (ascending coefficients) modulo Phi_N.
    std::vector<BigInt> reduce(std::vector<BigInt> p) const;

  private:
    explicit CyclotomicField(std::uint32_t n);

    std::uint32_t n_;
    std::vector<BigInt> phi_;                      // monic, ascending
    std::vector<std::vector<BigInt>> zeta_table_;  // canonical zeta^e, e in [0, N)
    std::weak_ptr<const CyclotomicField> self_;
};

class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(std::shared_ptr<const CyclotomicField> field, std::vector<BigInt> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {}

    const std::shared_ptr<const CyclotomicField>& field() const noexcept { return field_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;
    BigInt as_integer() const;  // throws non_integer_coefficient

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string to_string() const;  // "3 - 2*z^2" style, z the primitive root

  private:
    void check_same(const Cyclotomic& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<BigInt> c_;
};

}  // namespace posetfr
