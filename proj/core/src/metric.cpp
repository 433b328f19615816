#include "subfield/metric.hpp"

#include <algorithm>

namespace subfield {

Lambda::Lambda(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    if (value_ < Rational(1, 2))
        throw LambdaTooSmallError("lambda must be >= 1/2, got " + value_.get_str());
}

Lambda::Lambda(long num, long den) : Lambda(Rational(num, den)) {}

Lambda Lambda::parse(const std::string& text) { return Lambda(parse_rational(text)); }

void Lambda::require_at_least_one(const std::string& op) const {
    if (value_ < 1)
        throw LambdaTooSmallError(op + " requires lambda >= 1, got " + value_.get_str());
}

std::string format_br(const BRWeight& w) {
    return "(" + std::to_string(w.base) + "," + std::to_string(w.roof) + ")";
}

std::string format_br_set(std::span<const BRWeight> ws) {
    std::vector<BRWeight> sorted(ws.begin(), ws.end());
    std::sort(sorted.begin(), sorted.end());
    std::string out = "{";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i)
            out += ",";
        out += format_br(sorted[i]);
    }
    return out + "}";
}

BRWeight br_weight(std::span<const FieldElement> v) {
    BRWeight w;
    for (const auto& x : v) {
        if (x.is_zero())
            continue;
        const FieldSpec* spec = x.spec();
        if (spec->in_base_code(x.code()))
            ++w.base;
        else
            ++w.roof;
    }
    return w;
}

BRWeight br_distance(std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size())
        throw LengthMismatchError("distance of words of different length");
    BRWeight w;
    for (std::size_t i = 0; i < x.size(); ++i) {
        FieldElement d = x[i] - y[i];
        if (d.is_zero())
            continue;
        if (d.spec()->in_base_code(d.code()))
            ++w.base;
        else
            ++w.roof;
    }
    return w;
}

Rational lambda_value(const BRWeight& w, const Lambda& lambda) {
    return Rational(w.base) + lambda.value() * Rational(w.roof);
}

Rational lambda_weight(std::span<const FieldElement> v, const Lambda& lambda) {
    return lambda_value(br_weight(v), lambda);
}

Rational lambda_distance(std::span<const FieldElement> x, std::span<const FieldElement> y,
                         const Lambda& lambda) {
    return lambda_value(br_distance(x, y), lambda);
}

int hamming_weight(std::span<const FieldElement> v) {
    int w = 0;
    for (const auto& x : v)
        if (!x.is_zero())
            ++w;
    return w;
}

int hamming_distance(std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size())
        throw LengthMismatchError("distance of words of different length");
    int w = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] - y[i]).is_zero())
            ++w;
    return w;
}

int rank_weight(std::span<const FieldElement> v) {
    if (v.empty())
        return 0;
    const FieldSpec* spec = v.front().spec();
    // rows: F_q-coordinate vectors of the entries; eliminate over F_q
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(v.size());
    for (const auto& x : v) {
        if (x.spec() != spec)
            throw SpecMismatchError("rank weight of mixed-spec word");
        if (!x.is_zero())
            rows.push_back(spec->fq_coordinates(x));
    }
    const unsigned m = spec->m();
    int rank = 0;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<unsigned> pivot_pos;
    for (auto& row : rows) {
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::uint64_t c = row[pivot_pos[k]];
            if (c) {
                for (unsigned i = 0; i < m; ++i)
                    row[i] = spec->sub_code(row[i], spec->mul_code(c, pivots[k][i]));
            }
        }
        unsigned pos = m;
        for (unsigned i = 0; i < m; ++i)
            if (row[i]) {
                pos = i;
                break;
            }
        if (pos == m)
            continue;
        std::uint64_t ilead = spec->inv_code(row[pos]);
        for (unsigned i = 0; i < m; ++i)
            row[i] = spec->mul_code(row[i], ilead);
        pivots.push_back(row);
        pivot_pos.push_back(pos);
        ++rank;
        if (rank == static_cast<int>(m))
            break;
    }
    return rank;
}

std::vector<BRWeight> pareto_minima(std::span<const BRWeight> s) {
    if (s.empty())
        throw EmptySetError("pareto_minima of empty set");
    std::vector<BRWeight> uniq(s.begin(), s.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<BRWeight> out;
    for (const auto& w : uniq) {
        bool dominated = false;
        for (const auto& o : uniq) {
            if (o != w && o.dominates_below(w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(w);
    }
    return out;
}

std::vector<BRWeight> pareto_maxima(std::span<const BRWeight> s) {
    if (s.empty())
        throw EmptySetError("pareto_maxima of empty set");
    std::vector<BRWeight> uniq(s.begin(), s.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<BRWeight> out;
    for (const auto& w : uniq) {
        bool dominated = false;
        for (const auto& o : uniq) {
            if (o != w && w.dominates_below(o)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(w);
    }
    return out;
}

Rational largest_weight_below(int n, const Lambda& lambda, const Rational& bound) {
    if (bound <= 0)
        throw InvalidArgumentError("largest_weight_below requires a positive bound");
    Rational best(-1);
    for (int t = 0; t <= n; ++t) {
        Rational lt = lambda.value() * t;
        if (lt >= bound)
            break;
        // largest integer s strictly below bound - lambda*t
        BigInt s = rational_ceil(bound - lt) - 1;
        if (s < 0)
            continue;
        BigInt cap(n - t);
        if (s > cap)
            s = cap;
        Rational v = Rational(s) + lt;
        if (v > best)
            best = v;
    }
    return best;
}

}  // namespace subfield
