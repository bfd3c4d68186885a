#include "bergefree/gf.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace bergefree::gf {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// Polynomials over GF(p), coefficients low-to-high, no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, std::int64_t p) {
    // m is monic.
    while (f.size() >= m.size()) {
        int lead = f.back();
        std::size_t shift = f.size() - m.size();
        if (lead != 0) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::int64_t v = f[shift + i] - static_cast<std::int64_t>(lead) * m[i];
                f[shift + i] = static_cast<int>(((v % p) + p) % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() < m.size()) break;
    }
    trim(f);
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<int>(
                (prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), m, p);
}

// x^(p^e) mod m via repeated Frobenius.
Poly poly_x_frobenius(int e, const Poly& m, std::int64_t p) {
    Poly g = poly_mod(Poly{0, 1}, m, p);
    for (int step = 0; step < e; ++step) {
        // g := g^p mod m, square-and-multiply on the exponent p.
        Poly result{1};
        Poly base = g;
        std::int64_t exp = p;
        while (exp > 0) {
            if (exp & 1) result = poly_mulmod(result, base, m, p);
            base = poly_mulmod(base, base, m, p);
            exp >>= 1;
        }
        g = std::move(result);
    }
    return g;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = static_cast<int>(((a[i] - b[i]) % p + p) % p);
    }
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    auto inv_mod_p = [p](std::int64_t x) {
        std::int64_t t = 0, newt = 1, r = p, newr = ((x % p) + p) % p;
        while (newr != 0) {
            std::int64_t quo = r / newr;
            std::swap(t, newt); newt -= quo * t;
            std::swap(r, newr); newr -= quo * r;
        }
        return ((t % p) + p) % p;
    };
    while (!b.empty()) {
        // reduce a mod b after making b monic
        std::int64_t lead_inv = inv_mod_p(b.back());
        Poly bm = b;
        for (auto& c : bm) c = static_cast<int>((c * lead_inv) % p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool has_root(const Poly& f, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t val = 0;
        for (std::size_t i = f.size(); i-- > 0;) {
            val = (val * x + f[i]) % p;
        }
        if (val == 0) return true;
    }
    return false;
}

// Irreducibility over GF(p). Degrees 2 and 3 reduce to root absence; higher
// degrees use the Rabin gcd test.
bool is_irreducible(const Poly& f, std::int64_t p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 1) return deg == 1;
    if (deg <= 3) return !has_root(f, p);
    Poly frob = poly_x_frobenius(deg, f, p);        // x^(p^deg) mod f
    Poly x = poly_mod(Poly{0, 1}, f, p);
    if (poly_sub(frob, x, p) != Poly{}) return false;
    for (int d = 2; d <= deg; ++d) {
        if (deg % d != 0 || !is_prime(d)) continue;
        Poly g = poly_x_frobenius(deg / d, f, p);   // x^(p^(deg/d)) mod f
        Poly diff = poly_sub(std::move(g), x, p);
        Poly common = poly_gcd(f, diff, p);
        if (common.size() > 1) return false;
    }
    return true;
}

constexpr std::int64_t kTableLimit = 1024;

} // namespace

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(std::int64_t p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (p == 2) throw std::invalid_argument("field characteristic must be odd");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        if (q_ > (std::int64_t{1} << 40) / p) {
            throw std::invalid_argument("field too large");
        }
        q_ *= p;
    }

    if (k == 1) {
        modulus_ = {0, 1}; // x
    } else {
        // Scan monic polynomials in lexicographic order of the low-to-high
        // coefficient list; the first irreducible one is the modulus.
        std::vector<int> lower(k, 0);
        bool found = false;
        while (!found) {
            Poly cand(lower.begin(), lower.end());
            cand.push_back(1);
            if (is_irreducible(cand, p)) {
                modulus_ = std::move(cand);
                found = true;
                break;
            }
            int pos = k - 1;
            while (pos >= 0 && lower[pos] == p - 1) lower[pos--] = 0;
            if (pos < 0) break;
            ++lower[pos];
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }

    if (k_ > 1 && q_ <= kTableLimit) {
        mul_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
        for (std::int64_t a = 0; a < q_; ++a) {
            for (std::int64_t b = a; b < q_; ++b) {
                auto r = static_cast<std::uint16_t>(mul_ranks(a, b));
                mul_table_[static_cast<std::size_t>(a * q_ + b)] = r;
                mul_table_[static_cast<std::size_t>(b * q_ + a)] = r;
            }
        }
        inv_table_.assign(static_cast<std::size_t>(q_), 0);
        std::int64_t one_rank = one().rank();
        for (std::int64_t a = 1; a < q_; ++a) {
            for (std::int64_t b = 1; b < q_; ++b) {
                if (mul_table_[static_cast<std::size_t>(a * q_ + b)] == one_rank) {
                    inv_table_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
                    break;
                }
            }
        }
    }
}

void FieldCtx::require_mine(Fe a) const {
    if (a.ctx() == this) return;
    if (a.ctx() != nullptr && compatible(*a.ctx())) return;
    throw std::invalid_argument("field element belongs to a different field");
}

bool FieldCtx::compatible(const FieldCtx& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

Fe FieldCtx::one() const {
    // coefficient list (1, 0, ..., 0); its rank has the constant term as the
    // most significant base-p digit.
    std::int64_t r = 1;
    for (int i = 1; i < k_; ++i) r *= p_;
    return Fe(this, r);
}

Fe FieldCtx::element(std::int64_t rank) const {
    if (rank < 0 || rank >= q_) throw std::out_of_range("element rank out of range");
    return Fe(this, rank);
}

std::vector<int> FieldCtx::coeffs_of(Fe a) const {
    require_mine(a);
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    std::int64_t r = a.rank();
    // rank packs the coefficient list big-endian: c[0] is the top digit.
    for (int i = k_ - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(r % p_);
        r /= p_;
    }
    return c;
}

Fe FieldCtx::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != k_) {
        throw std::invalid_argument("coefficient list must have length k");
    }
    std::int64_t r = 0;
    for (int i = 0; i < k_; ++i) {
        int c = coeffs[static_cast<std::size_t>(i)];
        if (c < 0 || c >= p_) throw std::invalid_argument("coefficient out of range");
        r = r * p_ + c;
    }
    return Fe(this, r);
}

std::vector<Fe> FieldCtx::elements() const {
    std::vector<Fe> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (std::int64_t r = 0; r < q_; ++r) out.emplace_back(this, r);
    return out;
}

std::vector<Fe> FieldCtx::nonzero_elements() const {
    std::vector<Fe> out;
    out.reserve(static_cast<std::size_t>(q_ - 1));
    for (std::int64_t r = 1; r < q_; ++r) out.emplace_back(this, r);
    return out;
}

Fe FieldCtx::add(Fe a, Fe b) const {
    require_mine(a);
    require_mine(b);
    if (k_ == 1) return Fe(this, (a.rank() + b.rank()) % p_);
    // Digit-wise addition in base p; positions are preserved.
    std::int64_t ra = a.rank(), rb = b.rank(), out = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((ra % p_ + rb % p_) % p_) * place;
        ra /= p_;
        rb /= p_;
        place *= p_;
    }
    return Fe(this, out);
}

Fe FieldCtx::neg(Fe a) const {
    require_mine(a);
    if (k_ == 1) return Fe(this, (p_ - a.rank()) % p_);
    std::int64_t ra = a.rank(), out = 0, place = 1;
    for (int i = 0; i < k_; ++i) {
        out += ((p_ - ra % p_) % p_) * place;
        ra /= p_;
        place *= p_;
    }
    return Fe(this, out);
}

Fe FieldCtx::sub(Fe a, Fe b) const { return add(a, neg(b)); }

std::int64_t FieldCtx::mul_ranks(std::int64_t a, std::int64_t b) const {
    if (k_ == 1) return (a * b) % p_;
    // Unpack, multiply as polynomials, reduce.
    Poly pa(static_cast<std::size_t>(k_)), pb(static_cast<std::size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
        pa[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
        a /= p_;
        pb[static_cast<std::size_t>(i)] = static_cast<int>(b % p_);
        b /= p_;
    }
    trim(pa);
    trim(pb);
    Poly prod = poly_mulmod(pa, pb, modulus_, p_);
    prod.resize(static_cast<std::size_t>(k_), 0);
    std::int64_t out = 0;
    for (int i = 0; i < k_; ++i) out = out * p_ + prod[static_cast<std::size_t>(i)];
    return out;
}

Fe FieldCtx::mul(Fe a, Fe b) const {
    require_mine(a);
    require_mine(b);
    if (!mul_table_.empty()) {
        return Fe(this, mul_table_[static_cast<std::size_t>(a.rank() * q_ + b.rank())]);
    }
    return Fe(this, mul_ranks(a.rank(), b.rank()));
}

Fe FieldCtx::inv(Fe a) const {
    require_mine(a);
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (!inv_table_.empty()) {
        return Fe(this, inv_table_[static_cast<std::size_t>(a.rank())]);
    }
    if (k_ == 1) {
        std::int64_t t = 0, newt = 1, r = p_, newr = a.rank();
        while (newr != 0) {
            std::int64_t quo = r / newr;
            std::swap(t, newt); newt -= quo * t;
            std::swap(r, newr); newr -= quo * r;
        }
        return Fe(this, ((t % p_) + p_) % p_);
    }
    return pow(a, q_ - 2);
}

Fe FieldCtx::pow(Fe a, std::int64_t e) const {
    require_mine(a);
    if (e < 0) return pow(inv(a), -e);
    Fe result = one();
    Fe base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::string FieldCtx::to_string(Fe a) const {
    auto c = coeffs_of(a);
    if (k_ == 1) return std::to_string(c[0]);
    std::string out;
    for (int i = 0; i < k_; ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(c[static_cast<std::size_t>(i)]);
    }
    return out;
}

Fe FieldCtx::parse(std::string_view text) const {
    std::vector<int> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
            throw std::invalid_argument("malformed field element: " + std::string(text));
        }
        c.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(c.size()) != k_) {
        throw std::invalid_argument("field element has wrong coefficient count: " +
                                    std::string(text));
    }
    return from_coeffs(c);
}

std::string FieldCtx::descriptor() const {
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::shared_ptr<const FieldCtx> make_field(std::int64_t p, int k) {
    return std::make_shared<const FieldCtx>(p, k);
}

std::shared_ptr<const FieldCtx> make_field(std::string_view descriptor) {
    std::int64_t p = 0;
    int k = 1;
    std::size_t caret = descriptor.find('^');
    std::string_view p_part = descriptor.substr(0, caret);
    auto [pp, pe] = std::from_chars(p_part.data(), p_part.data() + p_part.size(), p);
    if (pe != std::errc{} || pp != p_part.data() + p_part.size()) {
        throw std::invalid_argument("malformed field descriptor: " + std::string(descriptor));
    }
    if (caret != std::string_view::npos) {
        std::string_view k_part = descriptor.substr(caret + 1);
        auto [kp, ke] = std::from_chars(k_part.data(), k_part.data() + k_part.size(), k);
        if (ke != std::errc{} || kp != k_part.data() + k_part.size()) {
            throw std::invalid_argument("malformed field descriptor: " +
                                        std::string(descriptor));
        }
    }
    return make_field(p, k);
}

// ---------------------------------------------------------------------------
// Fe
// ---------------------------------------------------------------------------

namespace {
const FieldCtx& ctx_of(const Fe& a) {
    if (a.ctx() == nullptr) throw std::logic_error("element has no field context");
    return *a.ctx();
}
} // namespace

std::vector<int> Fe::coeffs() const { return ctx_of(*this).coeffs_of(*this); }
std::string Fe::str() const { return ctx_of(*this).to_string(*this); }

bool Fe::operator==(const Fe& o) const {
    if (ctx_ == o.ctx_) return rank_ == o.rank_;
    if (ctx_ == nullptr || o.ctx_ == nullptr) return false;
    return ctx_->compatible(*o.ctx_) && rank_ == o.rank_;
}

bool Fe::operator<(const Fe& o) const { return rank_ < o.rank_; }

Fe Fe::operator+(const Fe& o) const { return ctx_of(*this).add(*this, o); }
Fe Fe::operator-(const Fe& o) const { return ctx_of(*this).sub(*this, o); }
Fe Fe::operator*(const Fe& o) const { return ctx_of(*this).mul(*this, o); }
Fe Fe::operator-() const { return ctx_of(*this).neg(*this); }

// ---------------------------------------------------------------------------
// SeededRng
// ---------------------------------------------------------------------------

std::uint64_t SeededRng::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % n;
}

// ---------------------------------------------------------------------------
// Identity oracles
// ---------------------------------------------------------------------------

namespace {

constexpr std::int64_t kExhaustiveLimit = 7;

Fe sq(const FieldCtx& F, Fe a) { return F.mul(a, a); }

} // namespace

std::optional<std::vector<Fe>> oracle_ruzsa(const FieldCtx& F,
                                            std::int64_t sample_budget,
                                            std::uint64_t seed) {
    auto nz = F.nonzero_elements();
    // alpha, beta, gamma free; delta forced by alpha + beta = gamma + delta.
    // a1, a2, a3 free; a4 forced by the linear hypothesis.
    auto check = [&](Fe alpha, Fe beta, Fe gamma, Fe a1, Fe a2,
                     Fe a3) -> std::optional<std::vector<Fe>> {
        Fe delta = F.sub(F.add(alpha, beta), gamma);
        if (delta.is_zero()) return std::nullopt;
        Fe lhs = F.add(F.mul(alpha, a1), F.mul(beta, a2));
        Fe a4 = F.mul(F.inv(delta), F.sub(lhs, F.mul(gamma, a3)));
        if (a4.is_zero()) return std::nullopt;
        Fe lhs_sq = F.add(F.mul(alpha, sq(F, a1)), F.mul(beta, sq(F, a2)));
        Fe rhs_sq = F.add(F.mul(gamma, sq(F, a3)), F.mul(delta, sq(F, a4)));
        if (!(lhs_sq == rhs_sq)) return std::nullopt;
        Fe concl_l = F.mul(F.mul(alpha, beta), sq(F, F.sub(a1, a2)));
        Fe concl_r = F.mul(F.mul(gamma, delta), sq(F, F.sub(a3, a4)));
        if (concl_l == concl_r) return std::nullopt;
        return std::vector<Fe>{alpha, beta, gamma, delta, a1, a2, a3, a4};
    };

    if (F.q() <= kExhaustiveLimit) {
        for (Fe alpha : nz)
            for (Fe beta : nz)
                for (Fe gamma : nz)
                    for (Fe a1 : nz)
                        for (Fe a2 : nz)
                            for (Fe a3 : nz)
                                if (auto bad = check(alpha, beta, gamma, a1, a2, a3))
                                    return bad;
        return std::nullopt;
    }
    SeededRng rng(seed);
    auto draw = [&] { return nz[rng.next_below(nz.size())]; };
    for (std::int64_t i = 0; i < sample_budget; ++i) {
        if (auto bad = check(draw(), draw(), draw(), draw(), draw(), draw())) return bad;
    }
    return std::nullopt;
}

std::optional<std::vector<Fe>> oracle_sidon(const FieldCtx& F,
                                            std::int64_t sample_budget,
                                            std::uint64_t seed) {
    auto nz = F.nonzero_elements();
    auto check = [&](Fe a1, Fe a2, Fe a3) -> std::optional<std::vector<Fe>> {
        Fe a4 = F.sub(F.add(a1, a2), a3);
        if (a4.is_zero()) return std::nullopt;
        Fe lhs_sq = F.add(sq(F, a1), sq(F, a2));
        Fe rhs_sq = F.add(sq(F, a3), sq(F, a4));
        if (!(lhs_sq == rhs_sq)) return std::nullopt;
        bool same = (a1 == a3 && a2 == a4) || (a1 == a4 && a2 == a3);
        if (same) return std::nullopt;
        return std::vector<Fe>{a1, a2, a3, a4};
    };

    if (F.q() <= kExhaustiveLimit) {
        for (Fe a1 : nz)
            for (Fe a2 : nz)
                for (Fe a3 : nz)
                    if (auto bad = check(a1, a2, a3)) return bad;
        return std::nullopt;
    }
    SeededRng rng(seed);
    auto draw = [&] { return nz[rng.next_below(nz.size())]; };
    for (std::int64_t i = 0; i < sample_budget; ++i) {
        if (auto bad = check(draw(), draw(), draw())) return bad;
    }
    return std::nullopt;
}

std::optional<std::vector<Fe>> oracle_triangle(const FieldCtx& F,
                                               std::int64_t sample_budget,
                                               std::uint64_t seed) {
    auto all = F.elements();
    auto nz = F.nonzero_elements();
    // alpha, beta, gamma distinct (zero allowed); a1, a2 free; a3 forced by
    // the linear hypothesis since beta != gamma.
    auto check = [&](Fe alpha, Fe beta, Fe gamma, Fe a1,
                     Fe a2) -> std::optional<std::vector<Fe>> {
        if (alpha == beta || beta == gamma || alpha == gamma) return std::nullopt;
        Fe rhs = F.sub(F.sub(F.mul(beta, a2), F.mul(alpha, F.sub(a2, a1))),
                       F.mul(gamma, a1));
        Fe a3 = F.mul(F.inv(F.sub(beta, gamma)), rhs);
        if (a3.is_zero()) return std::nullopt;
        Fe lin = F.add(F.add(F.mul(alpha, F.sub(a2, a1)), F.mul(beta, F.sub(a3, a2))),
                       F.mul(gamma, F.sub(a1, a3)));
        if (!lin.is_zero()) return std::nullopt; // cannot happen; guards the solve
        Fe quad = F.add(
            F.add(F.mul(alpha, F.sub(sq(F, a2), sq(F, a1))),
                  F.mul(beta, F.sub(sq(F, a3), sq(F, a2)))),
            F.mul(gamma, F.sub(sq(F, a1), sq(F, a3))));
        if (!quad.is_zero()) return std::nullopt;
        if (a1 == a2 && a2 == a3) return std::nullopt;
        return std::vector<Fe>{alpha, beta, gamma, a1, a2, a3};
    };

    if (F.q() <= kExhaustiveLimit) {
        for (Fe alpha : all)
            for (Fe beta : all)
                for (Fe gamma : all)
                    for (Fe a1 : nz)
                        for (Fe a2 : nz)
                            if (auto bad = check(alpha, beta, gamma, a1, a2)) return bad;
        return std::nullopt;
    }
    SeededRng rng(seed);
    auto draw_any = [&] { return all[rng.next_below(all.size())]; };
    auto draw_nz = [&] { return nz[rng.next_below(nz.size())]; };
    for (std::int64_t i = 0; i < sample_budget; ++i) {
        if (auto bad = check(draw_any(), draw_any(), draw_any(), draw_nz(), draw_nz())) {
            return bad;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Fe>> oracle_threepairs(const FieldCtx& F,
                                                 std::int64_t sample_budget,
                                                 std::uint64_t seed) {
    auto nz = F.nonzero_elements();
    // alpha, beta, (a1, b1), a2, a3 free; b2, b3 forced by the linear chain.
    auto check = [&](Fe alpha, Fe beta, Fe a1, Fe b1, Fe a2,
                     Fe a3) -> std::optional<std::vector<Fe>> {
        if (F.add(alpha, beta).is_zero()) return std::nullopt;
        Fe beta_inv = F.inv(beta);
        Fe level = F.add(F.mul(alpha, a1), F.mul(beta, b1));
        Fe level_sq = F.add(F.mul(alpha, sq(F, a1)), F.mul(beta, sq(F, b1)));
        Fe b2 = F.mul(beta_inv, F.sub(level, F.mul(alpha, a2)));
        if (b2.is_zero()) return std::nullopt;
        if (!(F.add(F.mul(alpha, sq(F, a2)), F.mul(beta, sq(F, b2))) == level_sq)) {
            return std::nullopt;
        }
        Fe b3 = F.mul(beta_inv, F.sub(level, F.mul(alpha, a3)));
        if (b3.is_zero()) return std::nullopt;
        if (!(F.add(F.mul(alpha, sq(F, a3)), F.mul(beta, sq(F, b3))) == level_sq)) {
            return std::nullopt;
        }
        bool coincide = (a1 == a2 && b1 == b2) || (a1 == a3 && b1 == b3) ||
                        (a2 == a3 && b2 == b3);
        if (coincide) return std::nullopt;
        return std::vector<Fe>{alpha, beta, a1, a2, a3, b1, b2, b3};
    };

    if (F.q() <= kExhaustiveLimit) {
        for (Fe alpha : nz)
            for (Fe beta : nz)
                for (Fe a1 : nz)
                    for (Fe b1 : nz)
                        for (Fe a2 : nz)
                            for (Fe a3 : nz)
                                if (auto bad = check(alpha, beta, a1, b1, a2, a3))
                                    return bad;
        return std::nullopt;
    }
    SeededRng rng(seed);
    auto draw = [&] { return nz[rng.next_below(nz.size())]; };
    for (std::int64_t i = 0; i < sample_budget; ++i) {
        if (auto bad = check(draw(), draw(), draw(), draw(), draw(), draw())) return bad;
    }
    return std::nullopt;
}

} // namespace bergefree::gf
