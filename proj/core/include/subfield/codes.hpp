#ifndef SUBFIELD_CODES_HPP
#define SUBFIELD_CODES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "subfield/metric.hpp"
#include "subfield/numeric.hpp"
#include "subfield/poly.hpp"

namespace subfield {

/// Default ceiling on the number of words any exhaustive routine will visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 26;

/// Streamable spanning set: the words are all sums of scalar multiples of
/// the rows, with scalars drawn from a fixed code list. A linear code uses
/// all q^m field elements as scalars, an additive code the prime subfield,
/// a subfield restriction the base field F_q.
///
/// Words are produced in the mixed-radix order of the scalar-index vector,
/// index 0 least significant, so word 0 is the zero word and enumeration can
/// restart from any offset. Chunked enumeration over disjoint offset ranges
/// yields each word exactly once.
struct GeneratorBasis {
    FieldSpecPtr spec;
    int n = 0;                                     // word length
    std::vector<std::vector<std::uint64_t>> rows;  // element codes, all of length n
    std::vector<std::uint64_t> scalars;            // scalar element codes

    std::uint64_t word_count() const;  // scalars^rows, throws TooLargeError past 2^63
    std::uint64_t require_within(std::uint64_t cap) const;

    /// Calls fn with each word (as element codes) for `count` consecutive
    /// indices starting at `offset`.
    void for_each(std::uint64_t offset, std::uint64_t count,
                  const std::function<void(std::span<const std::uint64_t>)>& fn) const;
};

/// [n, k] linear code over F_{q^m}, held as a row-reduced generator matrix.
class LinearCode {
  public:
    /// Row-reduces the given spanning rows. Dependent rows are dropped and
    /// recorded (k shrinks); supplying only zero rows is an error.
    static LinearCode from_generator(FieldSpecPtr spec,
                                     std::vector<std::vector<FieldElement>> rows);

    /// Cyclic code of length n with generator polynomial g (must divide
    /// x^n - 1 over F_{q^m}); k = n - deg g.
    static LinearCode cyclic(FieldSpecPtr spec, int n, const FieldPoly& g);

    /// Gabidulin code: rows (g_j^{q^i})_{j<n} for i < k, with evaluation
    /// points F_q-linearly independent and n <= m.
    static LinearCode gabidulin(FieldSpecPtr spec, int n, int k,
                                std::vector<FieldElement> points);

    int length() const { return n_; }
    int dimension() const { return k_; }
    bool rank_was_reduced() const { return rank_reduced_; }
    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::vector<FieldElement>>& generator() const { return gen_; }
    BigInt size() const;  // (q^m)^k

    /// (n-k) x n parity check matrix H with G H^T = 0.
    std::vector<std::vector<FieldElement>> parity_check() const;

    bool contains(std::span<const FieldElement> word) const;

    GeneratorBasis enumeration_basis() const;

  private:
    LinearCode() = default;
    FieldSpecPtr spec_;
    std::vector<std::vector<FieldElement>> gen_;  // RREF
    int n_ = 0, k_ = 0;
    bool rank_reduced_ = false;
};

/// F_p-linear (additive) code over F_{q^m}, given by independent F_p-generators.
class AdditiveCode {
  public:
    static AdditiveCode from_generators(FieldSpecPtr spec,
                                        std::vector<std::vector<FieldElement>> rows);
    /// A linear code viewed as an additive code: its rows scaled by the
    /// power basis of the field give e*m*k F_p-generators.
    static AdditiveCode from_linear(const LinearCode& code);

    int length() const { return n_; }
    int generator_count() const { return r_; }
    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::vector<FieldElement>>& generators() const { return gen_; }
    BigInt size() const;  // p^r

    bool contains(std::span<const FieldElement> word) const;
    bool same_code(const AdditiveCode& other) const;

    GeneratorBasis enumeration_basis() const;

  private:
    AdditiveCode() = default;
    FieldSpecPtr spec_;
    std::vector<std::vector<FieldElement>> gen_;
    int n_ = 0, r_ = 0;
};

/// Exact BR-weight census of a code plus its Pareto frontier.
struct BRDistanceSet {
    std::map<BRWeight, BigInt> distribution;  // includes (0,0); sums to |C|
    std::vector<BRWeight> minima;             // frontier of the nonzero support
};

BRDistanceSet br_distribution(const GeneratorBasis& basis,
                              std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);
BRDistanceSet br_distribution(const LinearCode& code,
                              std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);
BRDistanceSet br_distribution(const AdditiveCode& code,
                              std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);

/// Pairwise BR-distance set for an arbitrary word list (no linearity assumed).
std::vector<BRWeight> br_minimal_distances_pairwise(
    std::span<const std::vector<FieldElement>> words);

Rational min_lambda_distance(const BRDistanceSet& dist, const Lambda& lambda);
/// Minimum Hamming distance derived from the census (base + roof counts).
int min_hamming_distance(const BRDistanceSet& dist);

struct SubfieldRestriction {
    std::vector<std::vector<FieldElement>> basis;  // over F_q, entries in F_q
    int dimension = 0;
    std::optional<int> min_hamming;  // set when enumerable under the cap
};

/// C intersected with F_q^n, solved by F_q-linear algebra on the expanded
/// parity system (no enumeration cap for the basis itself).
SubfieldRestriction restriction_to_subfield(const LinearCode& code,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// F_p-dual under the trace-symplectic pairing sum tr(a_i b'_i - a'_i b_i)
/// after identifying eps = a*gamma + b coordinate-wise (m = 2 only).
AdditiveCode trace_symplectic_dual(const LinearCode& code,
                                   std::optional<FieldElement> gamma = std::nullopt);
AdditiveCode trace_symplectic_dual(const AdditiveCode& code,
                                   std::optional<FieldElement> gamma = std::nullopt);

struct MldVerdict {
    bool is_optimal = false;
    Rational d_lambda;
    int singleton_rhs = 0;     // n - k
    BigInt distance_floor{0};  // floor((d_lambda - 1) / lambda)
};

MldVerdict is_mlambda_d(const LinearCode& code, const Lambda& lambda,
                        std::uint64_t cap = kDefaultEnumerationCap);

struct DensityResult {
    int trials = 0;
    int mld_count = 0;
    int resamples = 0;
    double fraction = 0.0;
};

/// Monte Carlo estimate of the probability that a uniformly drawn full-rank
/// k x n generator matrix spans an MlambdaD code. Deterministic per seed.
DensityResult mrd_density_experiment(const FieldSpecPtr& spec, int n, int k,
                                     const Lambda& lambda, int trials, std::uint64_t seed,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace subfield

#endif
