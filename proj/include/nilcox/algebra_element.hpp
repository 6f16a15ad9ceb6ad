#pragma once
/// @file algebra_element.hpp
/// @brief Integer linear combinations of basis words.

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "nilcox/basis_word.hpp"
#include "nilcox/errors.hpp"

namespace nilcox {

/// An element of NC_A(n,d): a finite sum of basis words with nonzero
/// arbitrary-precision integer coefficients. The zero element keeps its
/// context but stores no terms.
class AlgebraElement {
public:
  explicit AlgebraElement(const NcaContext& ctx) : ctx_(ctx) {}

  static AlgebraElement zero(const NcaContext& ctx) {
    return AlgebraElement(ctx);
  }

  static AlgebraElement unit(const NcaContext& ctx) {
    return from_word(BasisWord::one(ctx));
  }

  static AlgebraElement from_word(const BasisWord& b,
                                  const mpz_class& coeff = 1) {
    AlgebraElement out(b.context());
    out.add_term(b, coeff);
    return out;
  }

  const NcaContext& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisWord, mpz_class>& terms() const { return terms_; }

  /// Adds c times the basis word b, erasing the entry if it cancels.
  void add_term(const BasisWord& b, const mpz_class& c) {
    if (c == 0) return;
    if (!(b.context() == ctx_))
      throw DomainError("basis word context mismatch");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& rhs) {
    require_same_context(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& rhs) {
    require_same_context(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
    return *this;
  }

  AlgebraElement& operator*=(const mpz_class& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= scalar;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement lhs,
                                  const AlgebraElement& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend AlgebraElement operator-(AlgebraElement lhs,
                                  const AlgebraElement& rhs) {
    lhs -= rhs;
    return lhs;
  }

  friend AlgebraElement operator*(const mpz_class& scalar, AlgebraElement x) {
    x *= scalar;
    return x;
  }

  bool operator==(const AlgebraElement& rhs) const {
    return ctx_ == rhs.ctx_ && terms_ == rhs.terms_;
  }

  /// True when the element lies in the augmentation ideal, i.e. has no
  /// Plain(identity) term.
  bool in_augmentation_ideal() const {
    return terms_.find(BasisWord::one(ctx_)) == terms_.end();
  }

  /// If the element is a single basis word with coefficient 1, returns it.
  const BasisWord* single_word() const {
    if (terms_.size() != 1) return nullptr;
    const auto& [b, c] = *terms_.begin();
    return c == 1 ? &b : nullptr;
  }

  /// Prints "c*[letters]" terms joined by " + "; zero prints "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.get_str() + "*" + b.to_string();
    }
    return out;
  }

private:
  void require_same_context(const AlgebraElement& rhs) const {
    if (!(ctx_ == rhs.ctx_)) throw DomainError("algebra context mismatch");
  }

  NcaContext ctx_;
  std::map<BasisWord, mpz_class> terms_;
};

} // namespace nilcox
