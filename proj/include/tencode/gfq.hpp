#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tencode {

/// Field elements are encoded as integers c_0 + c_1 p + ... + c_{m-1} p^{m-1}
/// where (c_i) are the coefficients of the polynomial representative.
using Elem = std::uint8_t;
using Vec = std::vector<Elem>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * @brief GF(p^m) with table arithmetic.
 *
 * Elements are residues modulo a monic irreducible polynomial of degree m over
 * GF(p).  q = p^m is limited to 256 so that an element fits in a byte.
 */
class Field {
public:
    /// Builds GF(p^m) from the coefficient list [c_0, ..., c_m] of a monic modulus.
    static FieldPtr create(int p, const std::vector<int>& modulus);
    static FieldPtr prime(int p);
    /// GF(q) with the first monic irreducible modulus in coefficient order
    /// (x^2+x+1 for q = 4, x^3+x+1 for q = 8).
    static FieldPtr of_order(int q);

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool is_prime() const { return m_ == 1; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Absolute trace to GF(p), returned as an element of the prime subfield.
    Elem trace(Elem a) const;
    /// Frobenius a -> a^{p^k}.
    Elem frobenius(Elem a, int k) const;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& c) const;
    /// Element of the prime subfield with integer value v mod p.
    Elem from_int(std::int64_t v) const;
    /// x, i.e. the class of the indeterminate.  Primitive for the default binary moduli, not in general
    /// (x^2 + 1 over GF(3)).
    Elem generator() const;

    std::string describe() const;

    bool operator==(const Field& o) const { return p_ == o.p_ && modulus_ == o.modulus_; }

private:
    Field(int p, std::vector<int> modulus);

    int p_, m_, q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Value type wrapper for ad hoc element arithmetic; mixing fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr f, Elem v);

    const FieldPtr& field() const { return f_; }
    Elem value() const { return v_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement trace() const;
    bool operator==(const FieldElement& o) const;

private:
    void check(const FieldElement& o) const;
    FieldPtr f_;
    Elem v_;
};

/// Basis (B_1, ..., B_m) of GF(p^m) over GF(p).
struct FieldBasis {
    FieldPtr field;
    std::vector<Elem> elems;
};

/// Checks that the elements form a basis over the prime field.
bool is_basis(const Field& f, const std::vector<Elem>& elems);
FieldBasis polynomial_basis(const FieldPtr& f);
/// The unique basis with trace(B_i * B'_j) = delta_ij.
FieldBasis dual_basis(const FieldBasis& b);
/// Coordinates (in GF(p)) of a with respect to the basis.
std::vector<Elem> expand(const FieldBasis& b, Elem a);

} // namespace tencode
