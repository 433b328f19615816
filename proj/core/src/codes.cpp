#include "subfield/codes.hpp"

#include <algorithm>
#include <thread>

#include "subfield/rng.hpp"

namespace subfield {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Matrix = std::vector<std::vector<u64>>;

// In-place reduced row echelon form over the field (or any subfield closed
// under its operations, which covers F_p and F_q systems as well).
// Returns the pivot columns; zero rows are removed.
std::vector<int> rref(Matrix& m, const FieldSpec& spec) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[sel], m[row]);
        u64 ilead = spec.inv_code(m[row][col]);
        for (std::size_t c = 0; c < ncols; ++c)
            m[row][c] = spec.mul_code(m[row][c], ilead);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            u64 f = m[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                m[r][c] = spec.sub_code(m[r][c], spec.mul_code(f, m[row][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

// Kernel basis {x : m x^T = 0} with entries in the same closed subfield.
Matrix kernel_basis(Matrix m, const FieldSpec& spec, std::size_t ncols) {
    std::vector<int> pivots = rref(m, spec);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    Matrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<u64> v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] = spec.neg_code(m[i][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix to_codes(const std::vector<std::vector<FieldElement>>& rows) {
    Matrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<u64> v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            v[i] = r[i].code();
        m.push_back(std::move(v));
    }
    return m;
}

std::vector<std::vector<FieldElement>> to_elements(const Matrix& m, const FieldSpec* spec) {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(m.size());
    for (const auto& r : m) {
        std::vector<FieldElement> v;
        v.reserve(r.size());
        for (u64 c : r)
            v.emplace_back(c, spec);
        rows.push_back(std::move(v));
    }
    return rows;
}

void check_rows(const FieldSpecPtr& spec, const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty())
        throw InvalidArgumentError("no generator rows given");
    const std::size_t n = rows[0].size();
    if (n == 0)
        throw InvalidArgumentError("generator rows must be nonempty");
    for (const auto& r : rows) {
        if (r.size() != n)
            throw LengthMismatchError("generator rows of unequal length");
        for (const auto& x : r)
            if (x.spec() != spec.get())
                throw SpecMismatchError("generator entry from a different field spec");
    }
}

}  // namespace

// ---- GeneratorBasis ----

std::uint64_t GeneratorBasis::word_count() const {
    u128 total = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        total *= scalars.size();
        if (total > (u128(1) << 63))
            throw TooLargeError("code has more than 2^63 words");
    }
    return static_cast<u64>(total);
}

std::uint64_t GeneratorBasis::require_within(std::uint64_t cap) const {
    u64 total = word_count();
    if (total > cap)
        throw TooLargeError("code with " + std::to_string(total) +
                            " words exceeds the enumeration cap " + std::to_string(cap));
    return total;
}

void GeneratorBasis::for_each(std::uint64_t offset, std::uint64_t count,
                              const std::function<void(std::span<const std::uint64_t>)>& fn) const {
    if (count == 0)
        return;
    const FieldSpec& sp = *spec;
    const std::size_t k = rows.size();
    const u64 radix = scalars.size();
    const std::size_t nn = static_cast<std::size_t>(n);

    std::vector<u64> digits(k, 0);
    u64 t = offset;
    for (std::size_t j = 0; j < k; ++j) {
        digits[j] = t % radix;
        t /= radix;
    }
    if (t != 0)
        throw InvalidArgumentError("enumeration offset out of range");

    std::vector<u64> word(nn, 0);
    for (std::size_t j = 0; j < k; ++j) {
        if (digits[j] == 0)
            continue;
        u64 s = scalars[digits[j]];
        for (std::size_t i = 0; i < nn; ++i)
            word[i] = sp.add_code(word[i], sp.mul_code(s, rows[j][i]));
    }

    // delta[j][d] = (scalars[d+1 mod radix] - scalars[d]) * rows[j]
    const bool use_table = k > 0 && radix * k * nn <= (1ull << 22);
    std::vector<std::vector<std::vector<u64>>> delta;
    if (use_table) {
        delta.assign(k, std::vector<std::vector<u64>>(radix, std::vector<u64>(nn)));
        for (std::size_t j = 0; j < k; ++j) {
            for (u64 d = 0; d < radix; ++d) {
                u64 ds = sp.sub_code(scalars[(d + 1) % radix], scalars[d]);
                for (std::size_t i = 0; i < nn; ++i)
                    delta[j][d][i] = sp.mul_code(ds, rows[j][i]);
            }
        }
    }

    for (u64 step = 0;; ++step) {
        fn(std::span<const u64>(word.data(), nn));
        if (step + 1 == count)
            break;
        std::size_t j = 0;
        while (true) {
            if (j == k)
                throw InvalidArgumentError("enumeration past the last word");
            u64 old = digits[j];
            if (use_table) {
                const auto& dv = delta[j][old];
                for (std::size_t i = 0; i < nn; ++i)
                    word[i] = sp.add_code(word[i], dv[i]);
            } else {
                u64 ds = sp.sub_code(scalars[(old + 1) % radix], scalars[old]);
                for (std::size_t i = 0; i < nn; ++i)
                    word[i] = sp.add_code(word[i], sp.mul_code(ds, rows[j][i]));
            }
            u64 next = old + 1 == radix ? 0 : old + 1;
            digits[j] = next;
            if (next != 0)
                break;
            ++j;
        }
    }
}

// ---- LinearCode ----

LinearCode LinearCode::from_generator(FieldSpecPtr spec,
                                      std::vector<std::vector<FieldElement>> rows) {
    check_rows(spec, rows);
    const int given = static_cast<int>(rows.size());
    Matrix m = to_codes(rows);
    rref(m, *spec);
    if (m.empty())
        throw InvalidArgumentError("generator rows span only the zero word");
    LinearCode code;
    code.spec_ = std::move(spec);
    code.n_ = static_cast<int>(m[0].size());
    code.k_ = static_cast<int>(m.size());
    code.rank_reduced_ = code.k_ < given;
    code.gen_ = to_elements(m, code.spec_.get());
    return code;
}

LinearCode LinearCode::cyclic(FieldSpecPtr spec, int n, const FieldPoly& g) {
    if (n < 1)
        throw InvalidArgumentError("cyclic code length must be positive");
    FieldPoly gg = g;
    poly_trim(gg);
    if (gg.empty())
        throw InvalidArgumentError("zero generator polynomial");
    if (!(gg.back() == spec->one()))
        throw InvalidArgumentError("generator polynomial must be monic");
    const int deg = poly_degree(gg);
    if (deg > n)
        throw InvalidArgumentError("generator polynomial degree exceeds length");
    if (!poly_divides(gg, poly_xn_minus_one(*spec, n), *spec))
        throw NotADivisorError("generator polynomial does not divide x^n - 1");
    const int k = n - deg;
    std::vector<std::vector<FieldElement>> rows;
    for (int i = 0; i < k; ++i) {
        std::vector<FieldElement> row(static_cast<std::size_t>(n), spec->zero());
        for (int j = 0; j <= deg; ++j)
            row[static_cast<std::size_t>(i + j)] = gg[static_cast<std::size_t>(j)];
        rows.push_back(std::move(row));
    }
    return from_generator(std::move(spec), std::move(rows));
}

LinearCode LinearCode::gabidulin(FieldSpecPtr spec, int n, int k,
                                 std::vector<FieldElement> points) {
    if (n > static_cast<int>(spec->m()))
        throw LengthExceedsDegreeError("Gabidulin length exceeds extension degree m");
    if (k < 1 || k > n)
        throw InvalidArgumentError("Gabidulin dimension must satisfy 1 <= k <= n");
    if (static_cast<int>(points.size()) != n)
        throw InvalidArgumentError("need exactly n evaluation points");
    if (rank_weight(points) != n)
        throw DependentPointsError("evaluation points are F_q-linearly dependent");
    std::vector<std::vector<FieldElement>> rows;
    std::vector<FieldElement> cur = points;
    for (int i = 0; i < k; ++i) {
        rows.push_back(cur);
        for (auto& x : cur)
            x = spec->frobenius_q(x);
    }
    return from_generator(std::move(spec), std::move(rows));
}

BigInt LinearCode::size() const { return big_pow(spec_->order(), static_cast<unsigned long>(k_)); }

std::vector<std::vector<FieldElement>> LinearCode::parity_check() const {
    // pivots of the RREF generator
    std::vector<int> pivots;
    {
        int row = 0;
        for (int col = 0; col < n_ && row < k_; ++col) {
            if (!gen_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivots.push_back(col);
                ++row;
            }
        }
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<FieldElement>> h;
    for (int c = 0; c < n_; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)])
            continue;
        std::vector<FieldElement> row(static_cast<std::size_t>(n_), spec_->zero());
        row[static_cast<std::size_t>(c)] = spec_->one();
        for (int i = 0; i < k_; ++i)
            row[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] =
                -gen_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        h.push_back(std::move(row));
    }
    return h;
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw LengthMismatchError("word length differs from code length");
    std::vector<FieldElement> w(word.begin(), word.end());
    int row = 0;
    for (int col = 0; col < n_ && row < k_; ++col) {
        const auto& grow = gen_[static_cast<std::size_t>(row)];
        if (grow[static_cast<std::size_t>(col)].is_zero())
            continue;
        FieldElement coef = w[static_cast<std::size_t>(col)];
        if (!coef.is_zero())
            for (int i = col; i < n_; ++i)
                w[static_cast<std::size_t>(i)] =
                    w[static_cast<std::size_t>(i)] - coef * grow[static_cast<std::size_t>(i)];
        ++row;
    }
    for (const auto& x : w)
        if (!x.is_zero())
            return false;
    return true;
}

GeneratorBasis LinearCode::enumeration_basis() const {
    GeneratorBasis b;
    b.spec = spec_;
    b.n = n_;
    b.rows = to_codes(gen_);
    b.scalars.resize(spec_->order());
    for (u64 c = 0; c < spec_->order(); ++c)
        b.scalars[c] = c;
    return b;
}

// ---- AdditiveCode ----

AdditiveCode AdditiveCode::from_generators(FieldSpecPtr spec,
                                           std::vector<std::vector<FieldElement>> rows) {
    check_rows(spec, rows);
    const std::size_t n = rows[0].size();
    const unsigned deg = spec->degree();
    const u64 p = spec->p();
    // flatten to F_p digits, reduce, unflatten; RREF is canonical so the
    // stored generators identify the code uniquely
    Matrix flat;
    for (const auto& r : rows) {
        std::vector<u64> v(n * deg);
        for (std::size_t i = 0; i < n; ++i) {
            u64 c = r[i].code();
            for (unsigned s = 0; s < deg; ++s) {
                v[i * deg + s] = c % p;
                c /= p;
            }
        }
        flat.push_back(std::move(v));
    }
    rref(flat, *spec);  // digit entries lie in the prime subfield
    AdditiveCode code;
    code.spec_ = std::move(spec);
    code.n_ = static_cast<int>(n);
    code.r_ = static_cast<int>(flat.size());
    Matrix m;
    for (const auto& v : flat) {
        std::vector<u64> row(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            u64 c = 0;
            for (unsigned s = deg; s-- > 0;)
                c = c * p + v[i * deg + s];
            row[i] = c;
        }
        m.push_back(std::move(row));
    }
    code.gen_ = to_elements(m, code.spec_.get());
    return code;
}

AdditiveCode AdditiveCode::from_linear(const LinearCode& code) {
    const FieldSpecPtr& spec = code.spec();
    std::vector<std::vector<FieldElement>> rows;
    u64 basis_code = 1;
    for (unsigned s = 0; s < spec->degree(); ++s) {
        FieldElement xs = spec->element(basis_code);
        for (const auto& r : code.generator()) {
            std::vector<FieldElement> row;
            row.reserve(r.size());
            for (const auto& x : r)
                row.push_back(xs * x);
            rows.push_back(std::move(row));
        }
        basis_code *= spec->p();
    }
    return from_generators(spec, std::move(rows));
}

BigInt AdditiveCode::size() const { return big_pow(spec_->p(), static_cast<unsigned long>(r_)); }

bool AdditiveCode::contains(std::span<const FieldElement> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw LengthMismatchError("word length differs from code length");
    const unsigned deg = spec_->degree();
    const u64 p = spec_->p();
    const std::size_t ncols = static_cast<std::size_t>(n_) * deg;
    auto flatten = [&](std::span<const FieldElement> w) {
        std::vector<u64> v(ncols);
        for (std::size_t i = 0; i < w.size(); ++i) {
            u64 c = w[i].code();
            for (unsigned s = 0; s < deg; ++s) {
                v[i * deg + s] = c % p;
                c /= p;
            }
        }
        return v;
    };
    std::vector<u64> v = flatten(word);
    // generators are already in F_p RREF; reduce v against them
    for (const auto& grow : gen_) {
        std::vector<u64> g = flatten(grow);
        std::size_t pivot = ncols;
        for (std::size_t c = 0; c < ncols; ++c)
            if (g[c]) {
                pivot = c;
                break;
            }
        if (pivot == ncols)
            continue;
        u64 coef = v[pivot];
        if (coef) {
            for (std::size_t c = 0; c < ncols; ++c)
                v[c] = (v[c] + (p - coef) * g[c]) % p;
        }
    }
    for (u64 c : v)
        if (c)
            return false;
    return true;
}

bool AdditiveCode::same_code(const AdditiveCode& other) const {
    return spec_ == other.spec_ && n_ == other.n_ && r_ == other.r_ && gen_ == other.gen_;
}

GeneratorBasis AdditiveCode::enumeration_basis() const {
    GeneratorBasis b;
    b.spec = spec_;
    b.n = n_;
    b.rows = to_codes(gen_);
    b.scalars.resize(spec_->p());
    for (u64 c = 0; c < spec_->p(); ++c)
        b.scalars[c] = c;
    return b;
}

// ---- BR census ----

namespace {

struct Grid {
    int n;
    std::vector<u64> cells;  // (n+1) x (n+1)
    explicit Grid(int n_) : n(n_), cells(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0) {}
    void add(int base, int roof) { ++cells[static_cast<std::size_t>(base) * (n + 1) + roof]; }
    void merge(const Grid& o) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            cells[i] += o.cells[i];
    }
};

void census_range(const GeneratorBasis& basis, u64 offset, u64 count, Grid& grid) {
    const FieldSpec& sp = *basis.spec;
    basis.for_each(offset, count, [&](std::span<const u64> word) {
        int s = 0, t = 0;
        for (u64 c : word) {
            if (c == 0)
                continue;
            if (sp.in_base_code(c))
                ++s;
            else
                ++t;
        }
        grid.add(s, t);
    });
}

}  // namespace

BRDistanceSet br_distribution(const GeneratorBasis& basis, std::uint64_t cap, int threads) {
    const u64 total = basis.require_within(cap);
    Grid grid(basis.n);
    if (threads <= 1 || total < 4096) {
        census_range(basis, 0, total, grid);
    } else {
        const u64 nthreads = std::min<u64>(static_cast<u64>(threads), total);
        std::vector<Grid> grids(nthreads, Grid(basis.n));
        std::vector<std::thread> pool;
        for (u64 w = 0; w < nthreads; ++w) {
            u64 lo = total / nthreads * w + std::min<u64>(w, total % nthreads);
            u64 len = total / nthreads + (w < total % nthreads ? 1 : 0);
            pool.emplace_back(
                [&, lo, len, w]() { census_range(basis, lo, len, grids[static_cast<std::size_t>(w)]); });
        }
        for (auto& th : pool)
            th.join();
        for (const auto& g : grids)
            grid.merge(g);
    }
    BRDistanceSet out;
    std::vector<BRWeight> support;
    for (int s = 0; s <= basis.n; ++s) {
        for (int t = 0; t <= basis.n; ++t) {
            u64 c = grid.cells[static_cast<std::size_t>(s) * (basis.n + 1) + t];
            if (c == 0)
                continue;
            BRWeight w{s, t};
            out.distribution[w] = BigInt(static_cast<unsigned long>(c));
            if (!(s == 0 && t == 0))
                support.push_back(w);
        }
    }
    if (!support.empty())
        out.minima = pareto_minima(support);
    return out;
}

BRDistanceSet br_distribution(const LinearCode& code, std::uint64_t cap, int threads) {
    return br_distribution(code.enumeration_basis(), cap, threads);
}

BRDistanceSet br_distribution(const AdditiveCode& code, std::uint64_t cap, int threads) {
    return br_distribution(code.enumeration_basis(), cap, threads);
}

std::vector<BRWeight> br_minimal_distances_pairwise(
    std::span<const std::vector<FieldElement>> words) {
    std::vector<std::vector<FieldElement>> uniq(words.begin(), words.end());
    std::sort(uniq.begin(), uniq.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            if (a[i].code() != b[i].code())
                return a[i].code() < b[i].code();
        return a.size() < b.size();
    });
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() < 2)
        throw EmptySetError("pairwise distances need at least two distinct words");
    std::vector<BRWeight> dists;
    for (std::size_t i = 0; i < uniq.size(); ++i)
        for (std::size_t j = i + 1; j < uniq.size(); ++j)
            dists.push_back(br_distance(uniq[i], uniq[j]));
    return pareto_minima(dists);
}

Rational min_lambda_distance(const BRDistanceSet& dist, const Lambda& lambda) {
    if (dist.minima.empty())
        throw EmptySetError("no nonzero words: minimum distance undefined");
    Rational best = lambda_value(dist.minima.front(), lambda);
    for (const auto& w : dist.minima)
        best = std::min(best, lambda_value(w, lambda));
    return best;
}

int min_hamming_distance(const BRDistanceSet& dist) {
    if (dist.minima.empty())
        throw EmptySetError("no nonzero words: minimum distance undefined");
    int best = -1;
    for (const auto& w : dist.minima) {
        int h = w.base + w.roof;
        if (best < 0 || h < best)
            best = h;
    }
    return best;
}

// ---- subfield restriction ----

SubfieldRestriction restriction_to_subfield(const LinearCode& code, std::uint64_t cap) {
    const FieldSpecPtr& spec = code.spec();
    const int n = code.length();
    auto h = code.parity_check();
    // expand each F_{q^m} equation into m equations over F_q
    Matrix sys;
    for (const auto& row : h) {
        std::vector<std::vector<u64>> coords;
        coords.reserve(row.size());
        for (const auto& x : row)
            coords.push_back(spec->fq_coordinates(x));
        for (unsigned t = 0; t < spec->m(); ++t) {
            std::vector<u64> eq(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                eq[static_cast<std::size_t>(j)] = coords[static_cast<std::size_t>(j)][t];
            sys.push_back(std::move(eq));
        }
    }
    SubfieldRestriction out;
    Matrix basis;
    if (sys.empty()) {
        // k = n: restriction is all of F_q^n
        for (int i = 0; i < n; ++i) {
            std::vector<u64> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            basis.push_back(std::move(v));
        }
    } else {
        basis = kernel_basis(std::move(sys), *spec, static_cast<std::size_t>(n));
    }
    out.dimension = static_cast<int>(basis.size());
    out.basis = to_elements(basis, spec.get());

    if (out.dimension > 0) {
        GeneratorBasis gb;
        gb.spec = spec;
        gb.n = n;
        gb.rows = basis;
        gb.scalars = spec->base_field_codes();
        u128 words = 1;
        bool small = true;
        for (int i = 0; i < out.dimension; ++i) {
            words *= gb.scalars.size();
            if (words > cap) {
                small = false;
                break;
            }
        }
        if (small) {
            int best = -1;
            gb.for_each(0, static_cast<u64>(words), [&](std::span<const u64> word) {
                int wgt = 0;
                for (u64 c : word)
                    if (c)
                        ++wgt;
                if (wgt > 0 && (best < 0 || wgt < best))
                    best = wgt;
            });
            if (best > 0)
                out.min_hamming = best;
        }
    }
    return out;
}

// ---- trace-symplectic dual ----

namespace {

AdditiveCode dual_of_generators(const FieldSpecPtr& spec,
                                const std::vector<std::vector<FieldElement>>& gens, int n,
                                std::optional<FieldElement> gamma_opt) {
    if (spec->m() != 2)
        throw WrongExtensionDegreeError("trace-symplectic dual requires m = 2");
    FieldElement gamma = gamma_opt ? *gamma_opt : spec->default_gamma();
    if (gamma.spec() != spec.get())
        throw SpecMismatchError("gamma from a different field spec");
    if (spec->in_base_field(gamma))
        throw GammaInBaseFieldError("gamma must lie outside F_q");

    const unsigned deg = spec->degree();
    const u64 p = spec->p();
    const std::size_t ncols = static_cast<std::size_t>(n) * deg;

    // pair decomposition of the power basis elements x^s
    std::vector<std::pair<FieldElement, FieldElement>> unit_pairs;
    u64 bc = 1;
    for (unsigned s = 0; s < deg; ++s) {
        unit_pairs.push_back(spec->decompose_pair(spec->element(bc), gamma));
        bc *= p;
    }

    Matrix sys;
    for (const auto& g : gens) {
        std::vector<u64> row(ncols);
        for (int i = 0; i < n; ++i) {
            auto [ga, gb] = spec->decompose_pair(g[static_cast<std::size_t>(i)], gamma);
            for (unsigned s = 0; s < deg; ++s) {
                const auto& [ua, ub] = unit_pairs[s];
                FieldElement val = ga * ub - ua * gb;
                row[static_cast<std::size_t>(i) * deg + s] = spec->subfield_trace(val);
            }
        }
        sys.push_back(std::move(row));
    }

    Matrix kern = kernel_basis(std::move(sys), *spec, ncols);

    // regroup digit vectors into field elements
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& v : kern) {
        std::vector<FieldElement> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            u64 c = 0;
            for (unsigned s = deg; s-- > 0;)
                c = c * p + v[static_cast<std::size_t>(i) * deg + s];
            row.push_back(spec->element(c));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        // dual is {0}: represent as an additive code with no generators
        AdditiveCode zero = AdditiveCode::from_generators(
            spec, {std::vector<FieldElement>(static_cast<std::size_t>(n), spec->zero())});
        return zero;
    }
    return AdditiveCode::from_generators(spec, std::move(rows));
}

}  // namespace

AdditiveCode trace_symplectic_dual(const LinearCode& code, std::optional<FieldElement> gamma) {
    return dual_of_generators(code.spec(), AdditiveCode::from_linear(code).generators(),
                              code.length(), gamma);
}

AdditiveCode trace_symplectic_dual(const AdditiveCode& code, std::optional<FieldElement> gamma) {
    return dual_of_generators(code.spec(), code.generators(), code.length(), gamma);
}

// ---- optimality ----

MldVerdict is_mlambda_d(const LinearCode& code, const Lambda& lambda, std::uint64_t cap) {
    lambda.require_at_least_one("MlambdaD verdict");
    BRDistanceSet dist = br_distribution(code, cap);
    MldVerdict v;
    v.d_lambda = min_lambda_distance(dist, lambda);
    v.singleton_rhs = code.length() - code.dimension();
    v.distance_floor = rational_floor((v.d_lambda - 1) / lambda.value());
    v.is_optimal = v.distance_floor == v.singleton_rhs;
    return v;
}

DensityResult mrd_density_experiment(const FieldSpecPtr& spec, int n, int k,
                                     const Lambda& lambda, int trials, std::uint64_t seed,
                                     std::uint64_t cap) {
    lambda.require_at_least_one("density experiment");
    if (k < 1 || k > n)
        throw InvalidArgumentError("need 1 <= k <= n");
    DensityResult res;
    res.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(seed + static_cast<u64>(trial));
        std::vector<std::vector<FieldElement>> rows;
        while (true) {
            rows.clear();
            for (int i = 0; i < k; ++i) {
                std::vector<FieldElement> row;
                for (int j = 0; j < n; ++j)
                    row.push_back(spec->element(rng.below(spec->order())));
                rows.push_back(std::move(row));
            }
            LinearCode code = LinearCode::from_generator(spec, rows);
            if (code.dimension() == k) {
                if (is_mlambda_d(code, lambda, cap).is_optimal)
                    ++res.mld_count;
                break;
            }
            ++res.resamples;
        }
    }
    res.fraction = trials > 0 ? static_cast<double>(res.mld_count) / trials : 0.0;
    return res;
}

}  // namespace subfield
