#ifndef SUBFIELD_METRIC_HPP
#define SUBFIELD_METRIC_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "subfield/gf.hpp"
#include "subfield/numeric.hpp"

namespace subfield {

/// Exact rational weight parameter, lambda >= 1/2. Operations that are only
/// meaningful for lambda >= 1 (Singleton, MlambdaD, MRD comparisons) call
/// require_at_least_one themselves.
class Lambda {
  public:
    explicit Lambda(Rational value);
    Lambda(long num, long den);
    static Lambda parse(const std::string& text);  // "num/den" or "num"

    const Rational& value() const { return value_; }
    bool is_integer() const { return value_.get_den() == 1; }
    void require_at_least_one(const std::string& op) const;
    std::string str() const { return value_.get_str(); }

  private:
    Rational value_;
};

/// Pair (count of entries in F_q \ {0}, count of entries outside F_q).
struct BRWeight {
    int base = 0;
    int roof = 0;

    friend auto operator<=>(const BRWeight&, const BRWeight&) = default;

    /// Component-wise dominance: this <= o in both coordinates.
    bool dominates_below(const BRWeight& o) const { return base <= o.base && roof <= o.roof; }
};

std::string format_br(const BRWeight& w);
std::string format_br_set(std::span<const BRWeight> ws);

BRWeight br_weight(std::span<const FieldElement> v);
BRWeight br_distance(std::span<const FieldElement> x, std::span<const FieldElement> y);

/// s + lambda * t for a BR pair (s, t), as an exact rational.
Rational lambda_value(const BRWeight& w, const Lambda& lambda);
Rational lambda_weight(std::span<const FieldElement> v, const Lambda& lambda);
Rational lambda_distance(std::span<const FieldElement> x, std::span<const FieldElement> y,
                         const Lambda& lambda);

int hamming_weight(std::span<const FieldElement> v);
int hamming_distance(std::span<const FieldElement> x, std::span<const FieldElement> y);

/// Dimension over F_q of the span of the entries of v inside F_{q^m}.
int rank_weight(std::span<const FieldElement> v);

/// Minimal elements of S under the component-wise partial order.
std::vector<BRWeight> pareto_minima(std::span<const BRWeight> s);
/// Maximal elements of S under the component-wise partial order.
std::vector<BRWeight> pareto_maxima(std::span<const BRWeight> s);

/// Largest value s + lambda*t with s, t >= 0, s + t <= n that is strictly
/// below `bound`. Requires bound > 0 (weight 0 is always achievable).
Rational largest_weight_below(int n, const Lambda& lambda, const Rational& bound);

}  // namespace subfield

#endif
