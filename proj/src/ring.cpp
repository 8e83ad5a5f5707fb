#include "vgb/ring.hpp"

#include <algorithm>
#include <numeric>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

void compositions(std::size_t s, std::size_t d, std::vector<Exponent>& current, std::size_t pos,
                  std::vector<MultiIndex>& out) {
    if (pos + 1 == s) {
        current[pos] = static_cast<Exponent>(d);
        out.emplace_back(current);
        return;
    }
    for (std::size_t k = 0; k <= d; ++k) {
        current[pos] = static_cast<Exponent>(k);
        compositions(s, d - k, current, pos + 1, out);
    }
}

std::string x_name(const MultiIndex& a) {
    std::string out = "x[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
    }
    return out + "]";
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<MultiIndex> enumerate_nds(std::size_t s, std::size_t d) {
    if (s == 0 || d == 0) throw DomainError("N_d^s needs s >= 1 and d >= 1");
    std::vector<MultiIndex> out;
    std::vector<Exponent> current(s, 0);
    compositions(s, d, current, 0, out);
    std::sort(out.begin(), out.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return cmp_gamma_vars(a, b) < 0; });
    return out;
}

RingPtr Ring::base(std::size_t s) {
    if (s == 0) throw DomainError("S needs at least one variable");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Base;
    r->s_ = s;
    for (std::size_t i = 1; i <= s; ++i) r->names_.push_back("y" + std::to_string(i));
    r->grading_.assign(s, 1);
    for (std::size_t i = 0; i < s; ++i) r->by_name_[r->names_[i]] = i;
    return r;
}

RingPtr Ring::veronese(std::size_t s, std::size_t d) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Veronese;
    r->s_ = s;
    r->d_ = d;
    r->veronese_index_ = enumerate_nds(s, d);
    for (std::size_t i = 0; i < r->veronese_index_.size(); ++i) {
        r->names_.push_back(x_name(r->veronese_index_[i]));
        r->by_name_[r->names_.back()] = i;
        r->by_index_[r->veronese_index_[i]] = i;
    }
    r->grading_.assign(r->names_.size(), 1);
    return r;
}

RingPtr Ring::joint(std::size_t s, std::size_t d) {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Joint;
    r->s_ = s;
    r->d_ = d;
    r->veronese_index_ = enumerate_nds(s, d);
    for (std::size_t i = 0; i < r->veronese_index_.size(); ++i) {
        r->names_.push_back(x_name(r->veronese_index_[i]));
        r->by_index_[r->veronese_index_[i]] = i;
    }
    r->grading_.assign(r->names_.size(), static_cast<std::int64_t>(d));
    for (std::size_t i = 1; i <= s; ++i) {
        r->names_.push_back("y" + std::to_string(i));
        r->grading_.push_back(1);
    }
    for (std::size_t i = 0; i < r->names_.size(); ++i) r->by_name_[r->names_[i]] = i;
    return r;
}

RingPtr Ring::custom(std::vector<std::string> names, std::vector<std::int64_t> grading) {
    if (names.empty()) throw DomainError("a ring needs at least one variable");
    if (grading.empty()) grading.assign(names.size(), 1);
    if (grading.size() != names.size()) throw DimensionError("grading length differs from variable count");
    for (auto g : grading)
        if (g <= 0) throw DomainError("gradings must be positive");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Custom;
    r->names_ = std::move(names);
    r->grading_ = std::move(grading);
    for (std::size_t i = 0; i < r->names_.size(); ++i) {
        if (!r->by_name_.emplace(r->names_[i], i).second)
            throw DomainError("duplicate variable name '" + r->names_[i] + "'");
    }
    return r;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Ring::veronese_position(const MultiIndex& a) const {
    auto it = by_index_.find(a);
    if (it == by_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Ring::y_position(std::size_t i) const {
    if (kind_ == Kind::Base && i < s_) return i;
    if (kind_ == Kind::Joint && i < s_) return veronese_index_.size() + i;
    throw DomainError("ring " + describe() + " has no variable y" + std::to_string(i + 1));
}

TermOrder Ring::default_order() const {
    switch (kind_) {
    case Kind::Veronese:
        return TermOrder::gamma(s_, d_);
    case Kind::Joint: {
        std::size_t n = veronese_index_.size();
        std::vector<std::size_t> pos(n);
        std::iota(pos.begin(), pos.end(), std::size_t{0});
        std::vector<std::size_t> front(s_);
        std::iota(front.begin(), front.end(), n);
        return TermOrder::elimination(nvars(), std::move(front), TermOrder::gamma(s_, d_).embed(pos, nvars()));
    }
    default:
        return TermOrder::grevlex(nvars());
    }
}

bool Ring::operator==(const Ring& other) const noexcept {
    return kind_ == other.kind_ && s_ == other.s_ && d_ == other.d_ && names_ == other.names_ &&
           grading_ == other.grading_;
}

std::string Ring::describe() const {
    switch (kind_) {
    case Kind::Base:
        return "S(s=" + std::to_string(s_) + ")";
    case Kind::Veronese:
        return "R(s=" + std::to_string(s_) + ",d=" + std::to_string(d_) + ")";
    case Kind::Joint:
        return "R(s=" + std::to_string(s_) + ",d=" + std::to_string(d_) + ")*S";
    case Kind::Custom: {
        std::string out = "K[";
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (i) out += ',';
            out += names_[i];
        }
        return out + "]";
    }
    }
    return "?";
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b))
        throw RingMismatch("ring mismatch: " + (a ? a->describe() : "null") + " vs " + (b ? b->describe() : "null"));
}

}  // namespace vgb
