#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "posetfr/bigint.hpp"
#include "posetfr/errors.hpp"

namespace posetfr {

// A ring context supplies the element type plus arithmetic, so moduli and
// variable tables can live in the context instead of every element. The
// polynomial layer is written against this duck-typed surface:
//   using Elem; static constexpr bool is_field, is_ordered;
//   zero(), one(), from_int(), add(), sub(), mul(), neg(), eq(), is_zero(),
//   str(); ordered rings additionally provide cmp().

struct IntRing {
    using Elem = BigInt;
    static constexpr bool is_field = false;
    static constexpr bool is_ordered = true;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    int cmp(const Elem& a, const Elem& b) const { return a < b ? -1 : (a == b ? 0 : 1); }
    std::string str(const Elem& a) const { return a.str(); }
};

struct RationalRing {
    using Elem = BigRat;
    static constexpr bool is_field = true;
    static constexpr bool is_ordered = true;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const { return v; }
    Elem from_fraction(const BigInt& num, const BigInt& den) const { return Elem(num, den); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    int cmp(const Elem& a, const Elem& b) const { return a < b ? -1 : (a == b ? 0 : 1); }
    std::string str(const Elem& a) const {
        std::ostringstream os;
        os << a;
        return os.str();
    }
};

// Integers modulo a prime, with a runtime modulus (default 10007).
struct ModRing {
    using Elem = std::int64_t;
    static constexpr bool is_field = true;
    static constexpr bool is_ordered = false;

    explicit ModRing(std::int64_t prime = 10007) : p(prime) {
        require(p >= 2, Errc::bad_instance, "modulus must be at least 2");
    }

    std::int64_t p;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        Elem r = static_cast<Elem>(v % p);
        return r < 0 ? r + p : r;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return ((a - b) % p + p) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<__int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    std::string str(Elem a) const { return std::to_string(a); }
};

// Sparse multivariate polynomial over the integers: exponent vector -> coeff.
// Keys all share the ring's variable count and zero coefficients are pruned,
// so map equality is polynomial identity.
struct MultiPoly {
    std::map<std::vector<std::uint16_t>, BigInt> terms;
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
};

struct SymbolicRing {
    using Elem = MultiPoly;
    static constexpr bool is_field = false;
    static constexpr bool is_ordered = false;

    explicit SymbolicRing(std::vector<std::string> variable_names)
        : names(std::move(variable_names)) {}

    std::vector<std::string> names;

    std::size_t arity() const { return names.size(); }

    Elem zero() const { return {}; }
    Elem one() const { return from_int(1); }
    Elem from_int(long v) const {
        Elem e;
        if (v != 0) e.terms.emplace(std::vector<std::uint16_t>(arity(), 0), v);
        return e;
    }
    Elem variable(std::size_t idx) const {
        Elem e;
        std::vector<std::uint16_t> key(arity(), 0);
        key.at(idx) = 1;
        e.terms.emplace(std::move(key), 1);
        return e;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [k, v] : b.terms) {
            auto [it, fresh] = r.terms.emplace(k, v);
            if (!fresh) {
                it->second += v;
                if (it->second == 0) r.terms.erase(it);
            }
        }
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        std::vector<std::uint16_t> key(arity(), 0);
        for (const auto& [ka, va] : a.terms)
            for (const auto& [kb, vb] : b.terms) {
                for (std::size_t i = 0; i < key.size(); ++i)
                    key[i] = static_cast<std::uint16_t>(ka[i] + kb[i]);
                auto [it, fresh] = r.terms.emplace(key, va * vb);
                if (!fresh) {
                    it->second += va * vb;
                    if (it->second == 0) r.terms.erase(it);
                }
            }
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& [k, v] : r.terms) v = -v;
        return r;
    }
    bool eq(const Elem& a, const Elem& b) const { return a.terms == b.terms; }
    bool is_zero(const Elem& a) const { return a.terms.empty(); }
    std::string str(const Elem& a) const {
        if (a.terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : a.terms) {
            BigInt c = v;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            bool has_vars = false;
            std::ostringstream vs;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (has_vars) vs << "*";
                vs << names[i];
                if (k[i] > 1) vs << "^" << k[i];
                has_vars = true;
            }
            if (!has_vars || c != 1) os << c.str();
            if (has_vars && c != 1) os << "*";
            if (has_vars) os << vs.str();
            first = false;
        }
        return os.str();
    }
};

}  // namespace posetfr
