#ifndef MATKIT_GF_HPP
#define MATKIT_GF_HPP

#include <cstdint>
#include <vector>

#include "matkit/errors.hpp"

namespace matkit {

/// Table-driven finite field of order q in {2,3,4,5,7,8,9}. Elements are
/// encoded 0..q-1; for prime powers the base-p digits of the code are the
/// polynomial coefficients, so GF(4) has 2 = w and 3 = w+1 for the
/// generator w. Field axioms are checked exhaustively at construction.
class FiniteField {
  public:
    explicit FiniteField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; a must be nonzero.
    std::uint8_t inv(std::uint8_t a) const;

  private:
    void build_tables();
    void check_axioms() const;

    int q_ = 0;
    int p_ = 0;  // characteristic
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Shared immutable field instances; throws UnsupportedField for other q.
const FiniteField& gf(int q);

bool is_supported_field(int q);

}  // namespace matkit

#endif
