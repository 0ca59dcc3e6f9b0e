#include "posetfr/group_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace posetfr {

AmbientSpace::AmbientSpace(Poset poset, std::vector<std::vector<std::uint32_t>> factors)
    : poset_(std::move(poset)), factors_(std::move(factors)) {
    require(factors_.size() == static_cast<std::size_t>(poset_.size()), Errc::bad_instance,
            "one cyclic factor list per poset element is required");
    coord_order_.assign(factors_.size(), 1);
    for (int i = 0; i < poset_.size(); ++i) {
        const auto& fl = factors_[static_cast<std::size_t>(i)];
        require(!fl.empty(), Errc::bad_instance,
                "coordinate " + poset_.name(i) + " has no cyclic factors");
        for (std::uint32_t m : fl) {
            require(m >= 1, Errc::bad_instance, "cyclic order must be at least 1");
            exponent_ = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(exponent_, m));
            auto& h = coord_order_[static_cast<std::size_t>(i)];
            if (h > UINT64_MAX / m) overflow_ = true;
            h *= m;
        }
    }
    for (int i = 0; i < poset_.size(); ++i)
        for (std::uint32_t m : factors_[static_cast<std::size_t>(i)])
            slots_.push_back(Slot{i, m, 0, exponent_ / m});
    // first slot most significant: stride = product of later orders
    std::uint64_t stride = 1;
    for (std::size_t f = slots_.size(); f-- > 0;) {
        slots_[f].stride = stride;
        if (stride > UINT64_MAX / slots_[f].order) overflow_ = true;
        stride = overflow_ ? stride : stride * slots_[f].order;
    }
    size_ = stride;
    field_ = CyclotomicField::make(exponent_);
}

bool AmbientSpace::all_coordinates_at_least(std::uint64_t h) const {
    return std::all_of(coord_order_.begin(), coord_order_.end(),
                       [&](std::uint64_t v) { return v >= h; });
}

std::uint64_t AmbientSpace::size() const {
    require(!overflow_, Errc::too_large, "|H| exceeds 64 bits");
    return size_;
}

std::uint64_t AmbientSpace::checked_size(std::uint64_t cap) const {
    require(!overflow_ && size_ <= cap, Errc::too_large,
            "|H| exceeds the enumeration cap of " + std::to_string(cap));
    return size_;
}

std::vector<Codeword> AmbientSpace::enumerate(std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    std::vector<Codeword> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(word(i));
    return out;
}

Codeword AmbientSpace::word(std::uint64_t index) const {
    Codeword w;
    w.digits.reserve(slots_.size());
    for (const Slot& s : slots_) w.digits.push_back(digit(index, s));
    return w;
}

std::uint64_t AmbientSpace::index_of(const Codeword& w) const {
    require(w.digits.size() == slots_.size(), Errc::bad_instance,
            "codeword shape does not match the space");
    std::uint64_t idx = 0;
    for (std::size_t f = 0; f < slots_.size(); ++f) {
        require(w.digits[f] < slots_[f].order, Errc::bad_instance, "residue out of range");
        idx += w.digits[f] * slots_[f].stride;
    }
    return idx;
}

ElementSet AmbientSpace::support(std::uint64_t index) const {
    std::uint64_t mask = 0;
    for (const Slot& s : slots_)
        if (digit(index, s) != 0) mask |= 1ull << s.elem;
    return poset_.set_from_mask(mask);
}

ElementSet AmbientSpace::support(const Codeword& w) const { return support(index_of(w)); }

int AmbientSpace::pweight(std::uint64_t index) const {
    return poset_.down_closure(support(index)).size();
}

int AmbientSpace::dual_pweight(std::uint64_t index) const {
    return poset_.up_closure(support(index)).size();
}

std::vector<std::uint8_t> AmbientSpace::weight_table(std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    std::vector<std::uint8_t> wt(total);
    for (std::uint64_t i = 0; i < total; ++i) wt[i] = static_cast<std::uint8_t>(pweight(i));
    return wt;
}

std::vector<std::uint8_t> AmbientSpace::dual_weight_table(std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    std::vector<std::uint8_t> wt(total);
    for (std::uint64_t i = 0; i < total; ++i) wt[i] = static_cast<std::uint8_t>(dual_pweight(i));
    return wt;
}

std::uint32_t AmbientSpace::pair_exponent(std::uint64_t alpha, std::uint64_t beta) const {
    std::uint64_t e = 0;
    for (const Slot& s : slots_) {
        const std::uint64_t a = digit(alpha, s), b = digit(beta, s);
        e = (e + s.zeta_weight * ((a * b) % s.order)) % exponent_;
    }
    return static_cast<std::uint32_t>(e);
}

Cyclotomic AmbientSpace::char_eval(std::uint64_t alpha, std::uint64_t beta) const {
    return field_->zeta(pair_exponent(alpha, beta));
}

Cyclotomic AmbientSpace::char_eval(const Codeword& alpha, const Codeword& beta) const {
    return char_eval(index_of(alpha), index_of(beta));
}

std::uint64_t AmbientSpace::op(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t idx = 0;
    for (const Slot& s : slots_) idx += ((digit(a, s) + digit(b, s)) % s.order) * s.stride;
    return idx;
}

std::uint64_t AmbientSpace::inverse(std::uint64_t a) const {
    std::uint64_t idx = 0;
    for (const Slot& s : slots_) {
        const std::uint32_t d = digit(a, s);
        idx += (d == 0 ? 0 : s.order - d) * s.stride;
    }
    return idx;
}

Codeword AmbientSpace::op(const Codeword& a, const Codeword& b) const {
    return word(op(index_of(a), index_of(b)));
}

Codeword AmbientSpace::inverse(const Codeword& a) const { return word(inverse(index_of(a))); }

bool AmbientSpace::is_subgroup(std::span<const std::uint32_t> elems) const {
    if (elems.empty()) return false;
    std::set<std::uint32_t> s(elems.begin(), elems.end());
    if (!s.count(0)) return false;
    for (std::uint32_t a : s)
        for (std::uint32_t b : s)
            if (!s.count(static_cast<std::uint32_t>(op(a, inverse(b))))) return false;
    return true;
}

std::vector<std::uint32_t> AmbientSpace::span_of(std::span<const std::uint32_t> gens,
                                                 std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    std::vector<char> in(total, 0);
    std::vector<std::uint32_t> members{0};
    in[0] = 1;
    std::vector<std::uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t x : frontier)
            for (std::uint32_t g : gens) {
                require(g < total, Errc::bad_instance, "generator index out of range");
                const auto y = static_cast<std::uint32_t>(op(x, g));
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::vector<std::uint32_t>> AmbientSpace::subgroups(std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<std::vector<std::uint32_t>> queue{{0}};
    seen.insert(queue.front());
    // BFS over the subgroup lattice: extend a subgroup S by one outside element
    // g; the closure is the union of cosets S + k*g.
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::vector<std::uint32_t> s = queue[qi];
        std::vector<char> in(total, 0);
        for (std::uint32_t x : s) in[x] = 1;
        for (std::uint32_t g = 1; g < total; ++g) {
            if (in[g]) continue;
            std::vector<std::uint32_t> t = s;
            std::vector<char> tin = in;
            std::uint64_t shift = g;
            while (shift != 0) {
                for (std::uint32_t x : s) {
                    const auto y = static_cast<std::uint32_t>(op(x, shift));
                    if (!tin[y]) {
                        tin[y] = 1;
                        t.push_back(y);
                    }
                }
                shift = op(shift, g);
            }
            std::sort(t.begin(), t.end());
            if (seen.insert(t).second) queue.push_back(std::move(t));
        }
    }
    std::vector<std::vector<std::uint32_t>> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<std::uint32_t> AmbientSpace::dual_code(std::span<const std::uint32_t> code,
                                                   std::uint64_t cap) const {
    const std::uint64_t total = checked_size(cap);
    require(is_subgroup(code), Errc::not_a_subgroup, "dual code requires a subgroup");
    std::vector<std::uint32_t> out;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool trivial_on_code = true;
        for (std::uint32_t d : code)
            if (pair_exponent(a, d) != 0) {
                trivial_on_code = false;
                break;
            }
        if (trivial_on_code) out.push_back(static_cast<std::uint32_t>(a));
    }
    return out;
}

}  // namespace posetfr
