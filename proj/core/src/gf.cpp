#include "subfield/gf.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

namespace subfield {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 mod) { return static_cast<u64>(u128(a) * b % mod); }

u64 powmod_u64(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2)
        return false;
    for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0)
            return n == s;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

u64 modinv_prime(u64 a, u64 p) { return powmod_u64(a % p, p - 2, p); }

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        fs.push_back(n);
    return fs;
}

// ---- dense polynomial arithmetic over F_p (coefficients low to high) ----

using Poly = std::vector<u64>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_rem(Poly r, const Poly& f, u64 p) {
    const std::size_t df = f.size() - 1;
    while (r.size() > df) {
        u64 c = r.back();
        if (c != 0) {
            std::size_t shift = r.size() - 1 - df;
            for (std::size_t i = 0; i <= df; ++i) {
                u64 sub = mulmod_u64(c, f[i], p);
                u64& coef = r[i + shift];
                coef = (coef + p - sub) % p;
            }
        }
        r.pop_back();
        while (r.size() > df && r.back() == 0)
            r.pop_back();
    }
    poly_trim(r);
    return r;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + u128(a[i]) * b[j]) % p;
        }
    }
    return poly_rem(std::move(c), f, p);
}

Poly poly_pow_mod(Poly base, u64 exp, const Poly& f, u64 p) {
    Poly r = {1};
    while (exp) {
        if (exp & 1)
            r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // reduce a mod b: scale b monic first
        u64 lead_inv = modinv_prime(b.back(), p);
        Poly bm = b;
        for (auto& c : bm)
            c = mulmod_u64(c, lead_inv, p);
        Poly r = a.size() >= bm.size() ? poly_rem(a, bm, p) : a;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^{p^k} mod f by k-fold p-th powering.
Poly x_power_pk(unsigned k, const Poly& f, u64 p) {
    Poly t = {0, 1};
    t = poly_rem(std::move(t), f, p);
    for (unsigned i = 0; i < k; ++i)
        t = poly_pow_mod(t, p, f, p);
    return t;
}

bool poly_is_irreducible(const Poly& f, u64 p) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 0)
        return false;
    if (n == 1)
        return true;
    Poly x = poly_rem({0, 1}, f, p);
    if (x_power_pk(n, f, p) != x)
        return false;
    for (u64 r : prime_factors(n)) {
        Poly t = x_power_pk(static_cast<unsigned>(n / r), f, p);
        // gcd(t - x, f) must be constant
        Poly diff = t;
        diff.resize(std::max(diff.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            diff[i] = (diff[i] + p - x[i]) % p;
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1)
            return false;
    }
    return true;
}

}  // namespace

// ---- FieldElement operators ----

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!spec_ || spec_ != o.spec_)
        throw SpecMismatchError("element addition across different field specs");
    return FieldElement(spec_->add_code(code_, o.code_), spec_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!spec_ || spec_ != o.spec_)
        throw SpecMismatchError("element subtraction across different field specs");
    return FieldElement(spec_->sub_code(code_, o.code_), spec_);
}

FieldElement FieldElement::operator-() const {
    if (!spec_)
        throw SpecMismatchError("negation of uninitialized element");
    return FieldElement(spec_->neg_code(code_), spec_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!spec_ || spec_ != o.spec_)
        throw SpecMismatchError("element multiplication across different field specs");
    return FieldElement(spec_->mul_code(code_, o.code_), spec_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (!spec_ || spec_ != o.spec_)
        throw SpecMismatchError("element division across different field specs");
    return FieldElement(spec_->mul_code(code_, spec_->inv_code(o.code_)), spec_);
}

FieldElement pow(const FieldElement& x, std::uint64_t k) {
    if (!x.spec())
        throw SpecMismatchError("power of uninitialized element");
    return FieldElement(x.spec()->pow_code(x.code(), k), x.spec());
}

FieldElement inv(const FieldElement& x) {
    if (!x.spec())
        throw SpecMismatchError("inverse of uninitialized element");
    return FieldElement(x.spec()->inv_code(x.code()), x.spec());
}

// ---- FieldSpec ----

FieldSpec::~FieldSpec() = default;

FieldSpecPtr FieldSpec::build(std::uint64_t p, unsigned e, unsigned m,
                              std::optional<std::vector<std::uint64_t>> modulus) {
    if (!is_prime_u64(p))
        throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (e < 1 || m < 1)
        throw InvalidArgumentError("extension degrees must be >= 1");
    const unsigned deg = e * m;

    u64 order = 1;
    for (unsigned i = 0; i < deg; ++i) {
        if (order > (1ull << 63) / p)
            throw TooLargeError("field order p^(e*m) exceeds 2^63");
        order *= p;
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->e_ = e;
    spec->m_ = m;
    spec->deg_ = deg;
    spec->order_ = order;
    u64 q = 1;
    for (unsigned i = 0; i < e; ++i)
        q *= p;
    spec->q_ = q;

    if (modulus) {
        Poly f = *modulus;
        if (f.size() != deg + 1)
            throw InvalidArgumentError("modulus must have degree e*m");
        for (u64 c : f)
            if (c >= p)
                throw InvalidArgumentError("modulus coefficients must be reduced mod p");
        if (f.back() != 1)
            throw InvalidArgumentError("modulus must be monic");
        if (!poly_is_irreducible(f, p))
            throw ReducibleModulusError("modulus is reducible over F_p");
        spec->modulus_ = std::move(f);
    } else {
        // smallest non-leading coefficient code, low digit least significant
        Poly f(deg + 1, 0);
        f[deg] = 1;
        bool found = false;
        // u64 loop is safe: the count of candidate polynomials is order <= 2^63
        for (u64 code = 0; code < order; ++code) {
            u64 c = code;
            for (unsigned i = 0; i < deg; ++i) {
                f[i] = c % p;
                c /= p;
            }
            if (poly_is_irreducible(f, p)) {
                found = true;
                break;
            }
        }
        if (!found)
            throw ReducibleModulusError("no irreducible modulus found");  // unreachable
        spec->modulus_ = f;
    }

    if (p == 2) {
        u64 mask = 0;
        for (unsigned i = 0; i <= deg; ++i)
            if (spec->modulus_[i])
                mask |= 1ull << i;
        spec->modulus_mask_ = mask;
    }

    if (order <= kTableCap)
        spec->build_tables();
    return spec;
}

FieldElement FieldSpec::element(std::uint64_t code) const {
    if (code >= order_)
        throw InvalidArgumentError("element code out of range");
    return FieldElement(code, this);
}

void FieldSpec::check_same_spec(const FieldElement& x) const {
    if (x.spec() != this)
        throw SpecMismatchError("element belongs to a different field spec");
}

// ---- code-level arithmetic ----

std::uint64_t FieldSpec::add_generic(std::uint64_t a, std::uint64_t b) const {
    u64 r = 0, place = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        u64 da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * place;
        place *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::add_code(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2)
        return a ^ b;
    if (!add_table_.empty())
        return add_table_[a * order_ + b];
    return add_generic(a, b);
}

std::uint64_t FieldSpec::neg_code(std::uint64_t a) const {
    if (p_ == 2)
        return a;
    u64 r = 0, place = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        u64 d = a % p_;
        a /= p_;
        r += (d == 0 ? 0 : p_ - d) * place;
        place *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::sub_code(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2)
        return a ^ b;
    return add_code(a, neg_code(b));
}

std::uint64_t FieldSpec::mul_generic(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0)
        return 0;
    if (p_ == 2) {
        // carryless multiply, then reduce by the modulus bitmask
        u128 prod = 0;
        u64 x = a;
        for (unsigned i = 0; x; ++i, x >>= 1) {
            if (x & 1)
                prod ^= u128(b) << i;
        }
        for (int bit = 2 * static_cast<int>(deg_) - 2; bit >= static_cast<int>(deg_); --bit) {
            if ((prod >> bit) & 1)
                prod ^= u128(modulus_mask_) << (bit - deg_);
        }
        return static_cast<u64>(prod);
    }
    Poly pa(deg_), pb(deg_);
    u64 ta = a, tb = b;
    for (unsigned i = 0; i < deg_; ++i) {
        pa[i] = ta % p_;
        ta /= p_;
        pb[i] = tb % p_;
        tb /= p_;
    }
    poly_trim(pa);
    poly_trim(pb);
    Poly pc = poly_mul_mod(pa, pb, modulus_, p_);
    u64 r = 0, place = 1;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        r += pc[i] * place;
        place *= p_;
    }
    return r;
}

std::uint64_t FieldSpec::mul_code(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0)
        return 0;
    if (!exp_.empty()) {
        u64 s = log_[a] + log_[b];
        if (s >= order_ - 1)
            s -= order_ - 1;
        return exp_[s];
    }
    return mul_generic(a, b);
}

std::uint64_t FieldSpec::inv_code(std::uint64_t a) const {
    if (a == 0)
        throw DivisionByZeroError("inverse of zero");
    if (!exp_.empty()) {
        u64 l = log_[a];
        return exp_[l == 0 ? 0 : order_ - 1 - l];
    }
    return pow_code(a, order_ - 2);
}

std::uint64_t FieldSpec::pow_code(std::uint64_t a, std::uint64_t k) const {
    if (k == 0)
        return 1;
    if (a == 0)
        return 0;
    if (!exp_.empty()) {
        u64 l = log_[a];
        u64 kk = k % (order_ - 1);
        return exp_[(l * kk) % (order_ - 1)];
    }
    u64 r = 1, base = a;
    while (k) {
        if (k & 1)
            r = mul_generic(r, base);
        base = mul_generic(base, base);
        k >>= 1;
    }
    return r;
}

// ---- table construction ----

void FieldSpec::build_tables() {
    const u64 group = order_ - 1;
    auto factors = prime_factors(group);

    u64 g = 0;
    for (u64 cand = 1; cand < order_; ++cand) {
        bool ok = true;
        for (u64 r : factors) {
            if (pow_code(cand, group / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0)
        throw InvalidArgumentError("no primitive element found");  // unreachable
    primitive_code_ = g;

    exp_.assign(group, 0);
    log_.assign(order_, 0);
    u64 cur = 1;
    for (u64 i = 0; i < group; ++i) {
        exp_[i] = static_cast<std::uint32_t>(cur);
        log_[cur] = static_cast<std::uint32_t>(i);
        cur = mul_generic(cur, g);
    }
    assert(cur == 1);

    in_base_.assign(order_, 0);
    in_base_[0] = 1;
    const u64 stride = group / (q_ - 1 == 0 ? 1 : q_ - 1);
    for (u64 j = 0; j + 1 <= q_ - 1; ++j)
        in_base_[exp_[(j * stride) % group]] = 1;
    base_codes_.clear();
    for (u64 c = 0; c < order_; ++c)
        if (in_base_[c])
            base_codes_.push_back(c);

    if (p_ != 2 && order_ <= kAddTableCap) {
        add_table_.assign(order_ * order_, 0);
        for (u64 a = 0; a < order_; ++a)
            for (u64 b = 0; b < order_; ++b)
                add_table_[a * order_ + b] = static_cast<std::uint16_t>(add_generic(a, b));
    }

    build_coordinate_solver();
}

void FieldSpec::build_coordinate_solver() {
    // F_p-basis of F_q by greedy elimination over the base-field codes
    std::vector<std::vector<u64>> pivots;     // reduced digit vectors
    std::vector<int> pivot_pos;
    fq_basis_.clear();
    for (u64 c : base_codes_) {
        if (c == 0)
            continue;
        std::vector<u64> v(deg_);
        u64 t = c;
        for (unsigned i = 0; i < deg_; ++i) {
            v[i] = t % p_;
            t /= p_;
        }
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            u64 coef = v[pivot_pos[k]];
            if (coef) {
                for (unsigned i = 0; i < deg_; ++i)
                    v[i] = (v[i] + p_ - mulmod_u64(coef, pivots[k][i], p_) % p_) % p_;
            }
        }
        int pos = -1;
        for (unsigned i = 0; i < deg_; ++i)
            if (v[i]) {
                pos = static_cast<int>(i);
                break;
            }
        if (pos < 0)
            continue;
        u64 inv_lead = modinv_prime(v[pos], p_);
        for (unsigned i = 0; i < deg_; ++i)
            v[i] = mulmod_u64(v[i], inv_lead, p_);
        pivots.push_back(v);
        pivot_pos.push_back(pos);
        fq_basis_.push_back(c);
        if (fq_basis_.size() == e_)
            break;
    }
    assert(fq_basis_.size() == e_);

    // M columns: digits of g^i * b_j for i < m, j < e; invert mod p
    std::vector<std::vector<u64>> mat(deg_, std::vector<u64>(2 * deg_, 0));
    for (unsigned i = 0; i < m_; ++i) {
        u64 gi = pow_code(primitive_code_, i);
        for (unsigned j = 0; j < e_; ++j) {
            u64 prod = mul_code(gi, fq_basis_[j]);
            for (unsigned row = 0; row < deg_; ++row) {
                mat[row][i * e_ + j] = prod % p_;
                prod /= p_;
            }
        }
    }
    for (unsigned i = 0; i < deg_; ++i)
        mat[i][deg_ + i] = 1;

    // Gauss-Jordan
    unsigned row = 0;
    for (unsigned col = 0; col < deg_ && row < deg_; ++col) {
        unsigned sel = row;
        while (sel < deg_ && mat[sel][col] == 0)
            ++sel;
        if (sel == deg_)
            continue;
        std::swap(mat[sel], mat[row]);
        u64 ilead = modinv_prime(mat[row][col], p_);
        for (unsigned c = 0; c < 2 * deg_; ++c)
            mat[row][c] = mulmod_u64(mat[row][c], ilead, p_);
        for (unsigned r = 0; r < deg_; ++r) {
            if (r == row || mat[r][col] == 0)
                continue;
            u64 f = mat[r][col];
            for (unsigned c = 0; c < 2 * deg_; ++c)
                mat[r][c] = (mat[r][c] + p_ - mulmod_u64(f, mat[row][c], p_)) % p_;
        }
        ++row;
    }
    assert(row == deg_);
    minv_.assign(deg_, std::vector<u64>(deg_, 0));
    for (unsigned r = 0; r < deg_; ++r)
        for (unsigned c = 0; c < deg_; ++c)
            minv_[r][c] = mat[r][deg_ + c];
}

FieldElement FieldSpec::primitive_element() const {
    if (exp_.empty())
        throw TooLargeError("primitive element requires field order <= 2^20");
    return FieldElement(primitive_code_, this);
}

bool FieldSpec::in_base_code(std::uint64_t code) const {
    if (!in_base_.empty())
        return in_base_[code] != 0;
    return pow_code(code, q_) == code;
}

bool FieldSpec::in_base_field(const FieldElement& x) const {
    check_same_spec(x);
    return in_base_code(x.code());
}

const std::vector<std::uint64_t>& FieldSpec::base_field_codes() const {
    if (in_base_.empty())
        throw TooLargeError("subfield listing requires field order <= 2^20");
    return base_codes_;
}

FieldElement FieldSpec::frobenius_q(const FieldElement& x) const {
    check_same_spec(x);
    return FieldElement(pow_code(x.code(), q_), this);
}

std::uint64_t FieldSpec::absolute_trace(const FieldElement& x) const {
    check_same_spec(x);
    u64 acc = x.code(), t = x.code();
    for (unsigned k = 1; k < deg_; ++k) {
        t = pow_code(t, p_);
        acc = add_code(acc, t);
    }
    assert(acc < p_);
    return acc;
}

std::uint64_t FieldSpec::subfield_trace(const FieldElement& x) const {
    check_same_spec(x);
    if (!in_base_code(x.code()))
        throw InvalidArgumentError("subfield trace requires an element of F_q");
    u64 acc = x.code(), t = x.code();
    for (unsigned k = 1; k < e_; ++k) {
        t = pow_code(t, p_);
        acc = add_code(acc, t);
    }
    assert(acc < p_);
    return acc;
}

FieldElement FieldSpec::default_gamma() const {
    if (m_ != 2)
        throw WrongExtensionDegreeError("pair identification requires m = 2");
    FieldElement g = primitive_element();
    if (in_base_field(g))
        g = g + one();
    return g;
}

std::pair<FieldElement, FieldElement> FieldSpec::decompose_pair(const FieldElement& eps,
                                                                const FieldElement& gamma) const {
    if (m_ != 2)
        throw WrongExtensionDegreeError("pair decomposition requires m = 2");
    check_same_spec(eps);
    check_same_spec(gamma);
    if (in_base_code(gamma.code()))
        throw GammaInBaseFieldError("gamma must lie outside F_q");
    FieldElement num = eps - frobenius_q(eps);
    FieldElement den = gamma - frobenius_q(gamma);
    FieldElement alpha = num / den;
    FieldElement beta = eps - alpha * gamma;
    assert(in_base_code(alpha.code()) && in_base_code(beta.code()));
    return {alpha, beta};
}

FieldElement FieldSpec::compose_pair(const FieldElement& alpha, const FieldElement& beta,
                                     const FieldElement& gamma) const {
    if (m_ != 2)
        throw WrongExtensionDegreeError("pair composition requires m = 2");
    check_same_spec(alpha);
    check_same_spec(beta);
    check_same_spec(gamma);
    if (in_base_code(gamma.code()))
        throw GammaInBaseFieldError("gamma must lie outside F_q");
    if (!in_base_code(alpha.code()) || !in_base_code(beta.code()))
        throw InvalidArgumentError("pair components must lie in F_q");
    return alpha * gamma + beta;
}

std::vector<std::uint64_t> FieldSpec::fq_coordinates(const FieldElement& x) const {
    check_same_spec(x);
    if (minv_.empty())
        throw TooLargeError("coordinate solve requires field order <= 2^20");
    std::vector<u64> digits(deg_);
    u64 t = x.code();
    for (unsigned i = 0; i < deg_; ++i) {
        digits[i] = t % p_;
        t /= p_;
    }
    std::vector<u64> y(deg_, 0);
    for (unsigned r = 0; r < deg_; ++r) {
        u64 acc = 0;
        for (unsigned c = 0; c < deg_; ++c)
            acc = (acc + mulmod_u64(minv_[r][c], digits[c], p_)) % p_;
        y[r] = acc;
    }
    std::vector<u64> coords(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
        u64 acc = 0;
        for (unsigned j = 0; j < e_; ++j) {
            // y entries are prime-subfield residues, i.e. valid codes
            acc = add_code(acc, mul_code(fq_basis_[j], y[i * e_ + j]));
        }
        coords[i] = acc;
    }
    return coords;
}

// ---- parsing and formatting ----

FieldElement FieldSpec::parse_element(const std::string& raw) const {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty element");
    if (s == "a") {
        return primitive_element();
    }
    if (s.rfind("a^", 0) == 0) {
        const std::string es = s.substr(2);
        u64 k = 0;
        auto [ptr, ec] = std::from_chars(es.data(), es.data() + es.size(), k);
        if (ec != std::errc() || ptr != es.data() + es.size())
            throw ParseError("bad exponent in '" + raw + "'");
        if (order_ >= 2 && k > order_ - 2)
            throw ExponentOutOfRangeError("exponent " + es + " out of range [0, " +
                                          std::to_string(order_ - 2) + "]");
        FieldElement g = primitive_element();
        return FieldElement(pow_code(g.code(), k), this);
    }
    u64 code = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), code);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("cannot parse element '" + raw + "'");
    if (code >= order_)
        throw ParseError("element code " + s + " out of range");
    return FieldElement(code, this);
}

std::string FieldSpec::format_element(const FieldElement& x) const {
    check_same_spec(x);
    if (x.code() == 0)
        return "0";
    if (x.code() == 1)
        return "1";
    if (!exp_.empty()) {
        u64 k = log_[x.code()];
        if (k == 1)
            return "a";
        return "a^" + std::to_string(k);
    }
    return std::to_string(x.code());
}

std::vector<FieldElement> parse_word(const FieldSpec& spec, const std::string& text) {
    std::string body = text;
    // strip one optional pair of parentheses
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw ParseError("empty word");
    body = body.substr(first, last - first + 1);
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<FieldElement> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(spec.parse_element(tok));
    if (out.empty())
        throw ParseError("empty word");
    return out;
}

std::string format_word(std::span<const FieldElement> word) {
    std::string out = "(";
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ",";
        out += word[i].spec()->format_element(word[i]);
    }
    out += ")";
    return out;
}

}  // namespace subfield
