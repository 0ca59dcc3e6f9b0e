#include "posetfr/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace posetfr {

namespace {

void trim(std::vector<BigInt>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of p by a monic divisor d; remainder must come out zero.
std::vector<BigInt> divide_monic_exact(std::vector<BigInt> p, const std::vector<BigInt>& d) {
    trim(p);
    const std::size_t dd = d.size() - 1;
    std::vector<BigInt> q;
    if (p.size() < d.size()) {
        require(p.empty(), Errc::internal, "cyclotomic division has a remainder");
        return q;
    }
    q.assign(p.size() - dd, 0);
    // classic long division, highest degree first
    for (std::size_t qi = q.size(); qi-- > 0;) {
        const BigInt coef = p[qi + dd];
        if (coef == 0) continue;
        q[qi] = coef;
        for (std::size_t j = 0; j <= dd; ++j) p[qi + j] -= coef * d[j];
    }
    trim(p);
    require(p.empty(), Errc::internal, "cyclotomic division has a remainder");
    return q;
}

}  // namespace

CyclotomicField::CyclotomicField(std::uint32_t n) : n_(n) {
    require(n >= 1, Errc::precondition, "root order must be positive");
    // Phi_d for all divisors d of n, smallest first.
    std::vector<std::uint32_t> divs;
    for (std::uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::vector<std::vector<BigInt>> phis(divs.size());
    for (std::size_t k = 0; k < divs.size(); ++k) {
        const std::uint32_t d = divs[k];
        std::vector<BigInt> p(static_cast<std::size_t>(d) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(d)] = 1;  // x^d - 1
        for (std::size_t j = 0; j < k; ++j)
            if (d % divs[j] == 0) p = divide_monic_exact(std::move(p), phis[j]);
        phis[k] = std::move(p);
    }
    phi_ = std::move(phis.back());

    zeta_table_.resize(n_);
    for (std::uint32_t e = 0; e < n_; ++e) {
        std::vector<BigInt> p(static_cast<std::size_t>(e) + 1, 0);
        p[static_cast<std::size_t>(e)] = 1;
        zeta_table_[e] = reduce(std::move(p));
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::make(std::uint32_t n) {
    auto f = std::shared_ptr<CyclotomicField>(new CyclotomicField(n));
    f->self_ = f;
    return f;
}

std::vector<BigInt> CyclotomicField::reduce(std::vector<BigInt> p) const {
    const std::size_t deg = static_cast<std::size_t>(degree());
    for (std::size_t i = p.size(); i-- > deg;) {
        const BigInt coef = p[i];
        if (coef == 0) continue;
        p[i] = 0;
        for (std::size_t j = 0; j < deg; ++j) p[i - deg + j] -= coef * phi_[j];
    }
    p.resize(deg, 0);
    return p;
}

Cyclotomic CyclotomicField::zero() const { return integer(0); }

Cyclotomic CyclotomicField::one() const { return integer(1); }

Cyclotomic CyclotomicField::integer(BigInt v) const {
    std::vector<BigInt> c(static_cast<std::size_t>(degree()), 0);
    c[0] = std::move(v);
    return Cyclotomic(self_.lock(), std::move(c));
}

Cyclotomic CyclotomicField::zeta(std::uint64_t e) const {
    return Cyclotomic(self_.lock(), zeta_table_[e % n_]);
}

Cyclotomic CyclotomicField::from_counts(std::span<const BigInt> counts) const {
    require(counts.size() == n_, Errc::precondition, "counts vector must have length N");
    std::vector<BigInt> acc(static_cast<std::size_t>(degree()), 0);
    for (std::uint32_t e = 0; e < n_; ++e) {
        if (counts[e] == 0) continue;
        const auto& z = zeta_table_[e];
        for (std::size_t j = 0; j < z.size(); ++j) acc[j] += counts[e] * z[j];
    }
    return Cyclotomic(self_.lock(), std::move(acc));
}

Cyclotomic CyclotomicField::from_counts(std::span<const std::int64_t> counts) const {
    std::vector<BigInt> big(counts.begin(), counts.end());
    return from_counts(std::span<const BigInt>(big));
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    require(field_ && o.field_ && field_->order() == o.field_->order(), Errc::precondition,
            "cyclotomic operands live in different fields");
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

bool Cyclotomic::is_one() const { return is_integer() && c_[0] == 1; }

bool Cyclotomic::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

BigInt Cyclotomic::as_integer() const {
    require(is_integer(), Errc::non_integer_coefficient,
            "cyclotomic value is not a rational integer: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same(o);
    std::vector<BigInt> conv(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) conv[i + j] += c_[i] * o.c_[j];
    }
    c_ = field_->reduce(std::move(conv));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (i == 0 || v != 1) os << v.str();
        if (i > 0) {
            if (v != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace posetfr
