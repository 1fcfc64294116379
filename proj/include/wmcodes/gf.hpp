#ifndef WMCODES_GF_HPP
#define WMCODES_GF_HPP

#include <cstdint>
#include <vector>

#include "wmcodes/errors.hpp"

namespace wmc {

/// Canonical element encoding: c0 + c1*p + c2*p^2 in [0, q).
/// Prime-subfield elements encode as themselves, so -1 always maps to p-1.
using Fel = std::uint8_t;

/// Arithmetic context for GF(q), q = p^r with p prime and r in {1,2,3}.
///
/// All operations are table-driven and pure; a Field is immutable after
/// construction and safe to share across threads.  Instances are interned:
/// Field::get(q) returns the same object for the same q, so contexts can be
/// compared by address.
///
/// Moduli (extension fields): GF(4) = X^2+X+1, GF(9) = X^2+1,
/// GF(25) = X^2+X+1; any other field takes the first irreducible monic
/// polynomial in coefficient order (c_{r-1},...,c1,c0).  Irreducibility is
/// verified at construction by an exhaustive root check (sufficient for
/// degree <= 3).
class Field {
  public:
    /// Interned context for GF(q).  Throws std::invalid_argument for
    /// unsupported q (p > 127, or an extension degree we do not build).
    static const Field& get(unsigned q);

    unsigned p() const { return p_; }
    unsigned r() const { return r_; }
    unsigned q() const { return q_; }

    /// Coefficients c0..c_{r-1} of the monic modulus; empty when r = 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Fel add(Fel a, Fel b) const { return add_[a * q_ + b]; }
    Fel sub(Fel a, Fel b) const { return add_[a * q_ + neg_[b]]; }
    Fel neg(Fel a) const { return neg_[a]; }
    Fel mul(Fel a, Fel b) const { return mul_[a * q_ + b]; }

    /// Multiplicative inverse; throws division_by_zero_error at 0.
    Fel inv(Fel a) const;

    /// The transposition involution: 0 -> 0 and x -> x^{-1} otherwise.
    Fel dagger(Fel a) const { return dag_[a]; }

    /// z mod p, embedded in the prime subfield (so -1 -> p-1).
    Fel embed(long long z) const;

    Fel pow(Fel a, unsigned long long e) const;

    bool operator==(const Field& o) const { return this == &o; }
    bool operator!=(const Field& o) const { return this != &o; }

    // Raw tables for enumeration kernels (indexed a*q+b).
    const Fel* add_table() const { return add_.data(); }
    const Fel* mul_table() const { return mul_.data(); }

  private:
    Field(unsigned p, unsigned r);

    unsigned p_, r_, q_;
    std::vector<unsigned> modulus_;
    std::vector<Fel> add_, mul_, neg_, inv_, dag_;
};

/// Checked scalar: a value paired with its context.  Mixing contexts throws
/// field_mismatch_error.
struct FieldElement {
    Fel v = 0;
    const Field* f = nullptr;

    FieldElement() = default;
    FieldElement(const Field& fld, Fel val) : v(val), f(&fld) {}

    FieldElement operator+(FieldElement o) const { return {ctx(o), ctx(o).add(v, o.v)}; }
    FieldElement operator-(FieldElement o) const { return {ctx(o), ctx(o).sub(v, o.v)}; }
    FieldElement operator*(FieldElement o) const { return {ctx(o), ctx(o).mul(v, o.v)}; }
    FieldElement operator/(FieldElement o) const { return {ctx(o), ctx(o).mul(v, ctx(o).inv(o.v))}; }
    FieldElement operator-() const { return {*f, f->neg(v)}; }
    FieldElement inv() const { return {*f, f->inv(v)}; }
    FieldElement dagger() const { return {*f, f->dagger(v)}; }
    bool operator==(FieldElement o) const { return f == o.f && v == o.v; }

  private:
    const Field& ctx(FieldElement o) const {
        if (f == nullptr || f != o.f)
            throw field_mismatch_error("field elements from different contexts");
        return *f;
    }
};

}  // namespace wmc

#endif
