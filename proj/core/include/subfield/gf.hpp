#ifndef SUBFIELD_GF_HPP
#define SUBFIELD_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subfield/errors.hpp"

namespace subfield {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Element of F_{p^{e*m}}. The code is the mixed-radix value sum c_i p^i of
/// the coordinate vector (c_0, ..., c_{em-1}) over F_p in the power basis of
/// the modulus. Two elements are equal iff they share a spec and a code.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(std::uint64_t code, const FieldSpec* spec) : code_(code), spec_(spec) {}

    std::uint64_t code() const { return code_; }
    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;

    bool operator==(const FieldElement& o) const {
        return code_ == o.code_ && spec_ == o.spec_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

  private:
    std::uint64_t code_ = 0;
    const FieldSpec* spec_ = nullptr;
};

FieldElement pow(const FieldElement& x, std::uint64_t k);
FieldElement inv(const FieldElement& x);

/// Immutable description of F_{p^{e*m}} with distinguished subfield
/// F_q, q = p^e, realized as F_p[x]/(modulus) with deg(modulus) = e*m.
/// Thread-safe to share; all element operations are pure.
class FieldSpec {
  public:
    /// Largest field order for which lookup tables (and hence power
    /// notation, subfield listings, coordinate solves) are built.
    static constexpr std::uint64_t kTableCap = 1ull << 20;

    /// Builds a field. When modulus is omitted, the monic irreducible
    /// polynomial of degree e*m over F_p with the smallest mixed-radix
    /// code of its non-leading coefficients is chosen, so the result is
    /// deterministic. Coefficients are listed low to high and must omit
    /// or include the leading 1 consistently: a supplied modulus has
    /// exactly e*m + 1 entries and ends in 1.
    static FieldSpecPtr build(std::uint64_t p, unsigned e, unsigned m,
                              std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned m() const { return m_; }
    unsigned degree() const { return deg_; }
    /// |F_{q^m}| = p^{e*m}
    std::uint64_t order() const { return order_; }
    /// |F_q| = p^e
    std::uint64_t subfield_order() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElement element(std::uint64_t code) const;
    FieldElement zero() const { return FieldElement(0, this); }
    FieldElement one() const { return FieldElement(1, this); }
    FieldElement from_prime_residue(std::uint64_t c) const { return element(c % p_); }

    bool has_tables() const { return !exp_.empty(); }
    FieldElement primitive_element() const;

    // Code-level arithmetic, used by enumeration-heavy callers.
    std::uint64_t add_code(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_code(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_code(std::uint64_t a) const;
    std::uint64_t mul_code(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv_code(std::uint64_t a) const;
    std::uint64_t pow_code(std::uint64_t a, std::uint64_t k) const;

    /// x in F_q, i.e. x^q = x.
    bool in_base_field(const FieldElement& x) const;
    bool in_base_code(std::uint64_t code) const;

    /// All q codes of F_q in increasing order. Requires tables.
    const std::vector<std::uint64_t>& base_field_codes() const;

    /// x^q (the generator of Gal(F_{q^m}/F_q)).
    FieldElement frobenius_q(const FieldElement& x) const;

    /// Absolute trace F_{p^{e*m}} -> F_p: sum of x^{p^k}, k < e*m.
    /// Returned as a residue mod p.
    std::uint64_t absolute_trace(const FieldElement& x) const;

    /// Trace F_q -> F_p of an element of the subfield: sum of x^{p^k}, k < e.
    std::uint64_t subfield_trace(const FieldElement& x) const;

    /// Default gamma for the pair identification of quadratic extensions:
    /// the primitive element if it lies outside F_q, else primitive + 1.
    FieldElement default_gamma() const;

    /// Splits eps = alpha*gamma + beta with alpha, beta in F_q (m = 2).
    std::pair<FieldElement, FieldElement> decompose_pair(const FieldElement& eps,
                                                         const FieldElement& gamma) const;
    FieldElement compose_pair(const FieldElement& alpha, const FieldElement& beta,
                              const FieldElement& gamma) const;

    /// Coordinates of x in the F_q-basis {1, g, ..., g^{m-1}}, g the
    /// primitive element. Entry codes all lie in F_q. Requires tables.
    std::vector<std::uint64_t> fq_coordinates(const FieldElement& x) const;

    /// Parses "0", "1", "a", "a^k" (powers of the primitive element) or a
    /// decimal element code.
    FieldElement parse_element(const std::string& text) const;
    /// Canonical text: power notation when tables exist, else the code.
    std::string format_element(const FieldElement& x) const;

    ~FieldSpec();

  private:
    FieldSpec() = default;
    void check_same_spec(const FieldElement& x) const;

    std::uint64_t p_ = 0;
    unsigned e_ = 0, m_ = 0, deg_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t modulus_mask_ = 0;  // p = 2 only

    std::uint64_t primitive_code_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[i] = code of g^i, i < order-1
    std::vector<std::uint32_t> log_;  // inverse of exp_, log_[0] unused
    std::vector<std::uint8_t> in_base_;
    std::vector<std::uint64_t> base_codes_;
    std::vector<std::uint16_t> add_table_;  // odd p, order <= kAddTableCap

    // Solve machinery for F_q-coordinates: columns of basis_matrix_ are the
    // F_p coefficient vectors of g^i * b_j; inverse stored row-major mod p.
    std::vector<std::uint64_t> fq_basis_;            // e codes, F_p-basis of F_q
    std::vector<std::vector<std::uint64_t>> minv_;   // deg x deg over F_p

    static constexpr std::uint64_t kAddTableCap = 1024;

    std::uint64_t mul_generic(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t add_generic(std::uint64_t a, std::uint64_t b) const;
    void build_tables();
    void build_coordinate_solver();
};

/// Parses a comma-separated list of elements.
std::vector<FieldElement> parse_word(const FieldSpec& spec, const std::string& text);
std::string format_word(std::span<const FieldElement> word);

}  // namespace subfield

#endif
