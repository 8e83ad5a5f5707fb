#include "vgb/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "vgb/errors.hpp"
#include "vgb/ring.hpp"

namespace vgb {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

std::string join(std::span<const std::size_t> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

void check_permutation_like(std::span<const std::size_t> vars, std::size_t nvars) {
    std::vector<char> seen(nvars, 0);
    for (std::size_t v : vars) {
        if (v >= nvars) throw DimensionError("variable position " + std::to_string(v) + " out of range");
        if (seen[v]) throw DomainError("variable position " + std::to_string(v) + " listed twice");
        seen[v] = 1;
    }
}

}  // namespace

struct TermOrder::Impl {
    Kind kind = Kind::Lex;
    std::size_t nvars = 0;
    std::vector<std::size_t> vars;  // lex: most significant first; revlex: largest first
    bool all_vars = false;
    std::size_t s = 0;
    std::size_t d = 0;
    std::vector<std::int64_t> weights;
    std::optional<TermOrder> first;   // tie-breaker (Weighted) or front order (Block)
    std::optional<TermOrder> second;  // back order (Block)
    std::vector<std::size_t> front;
    std::string fingerprint;
};

std::strong_ordering cmp_lex(const MultiIndex& a, const MultiIndex& b, std::span<const std::size_t> significance) {
    check_same_length(a, b);
    if (significance.empty()) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
    for (std::size_t v : significance)
        if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_rlex(const MultiIndex& a, const MultiIndex& b, std::span<const std::size_t> var_order) {
    check_same_length(a, b);
    if (var_order.empty()) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    std::uint64_t da = 0, db = 0;
    for (std::size_t v : var_order) {
        da += a[v];
        db += b[v];
    }
    if (da != db) return da <=> db;
    for (std::size_t k = var_order.size(); k-- > 0;) {
        std::size_t v = var_order[k];
        if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_gamma_vars(const MultiIndex& a, const MultiIndex& b) {
    check_same_length(a, b);
    if (a.degree() != b.degree())
        throw DomainError("x" + a.to_string() + " and x" + b.to_string() + " are not variables of the same R^[d]");
    // x_a < x_b  iff  gamma(b) <_lex gamma(a), or equal gammas and b <_lex a.
    auto by_gamma = cmp_lex(gamma(b), gamma(a));
    if (by_gamma != 0) return by_gamma;
    return cmp_lex(b, a);
}

TermOrder TermOrder::lex(std::size_t nvars) { return lex(nvars, identity(nvars)); }

TermOrder TermOrder::lex(std::size_t nvars, std::vector<std::size_t> significance) {
    check_permutation_like(significance, nvars);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Lex;
    impl->nvars = nvars;
    impl->all_vars = significance.size() == nvars;
    impl->fingerprint = "lex[" + join(significance) + "]/" + std::to_string(nvars);
    impl->vars = std::move(significance);
    return TermOrder(std::move(impl));
}

TermOrder TermOrder::grevlex(std::size_t nvars) { return grevlex(nvars, identity(nvars)); }

TermOrder TermOrder::grevlex(std::size_t nvars, std::vector<std::size_t> largest_first) {
    check_permutation_like(largest_first, nvars);
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::GradedRevLex;
    impl->nvars = nvars;
    impl->all_vars = largest_first.size() == nvars;
    impl->fingerprint = "grevlex[" + join(largest_first) + "]/" + std::to_string(nvars);
    impl->vars = std::move(largest_first);
    return TermOrder(std::move(impl));
}

TermOrder TermOrder::gamma(std::size_t s, std::size_t d) {
    if (s == 0 || d == 0) throw DomainError("gamma order needs s >= 1 and d >= 1");
    std::size_t n = static_cast<std::size_t>(binomial(d + s - 1, s - 1));
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::GammaRevLex;
    impl->nvars = n;
    impl->all_vars = true;
    impl->s = s;
    impl->d = d;
    impl->vars.resize(n);
    // Position 0 is the smallest variable; revlex wants largest first.
    for (std::size_t i = 0; i < n; ++i) impl->vars[i] = n - 1 - i;
    impl->fingerprint = "gamma(s=" + std::to_string(s) + ",d=" + std::to_string(d) + ")";
    return TermOrder(std::move(impl));
}

TermOrder TermOrder::weighted(std::vector<std::int64_t> weights, TermOrder tie) {
    if (weights.size() != tie.nvars())
        throw DimensionError("weight vector of length " + std::to_string(weights.size()) + " for " +
                             std::to_string(tie.nvars()) + " variables");
    for (auto w : weights)
        if (w < 0) throw DomainError("weight vectors must be non-negative");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Weighted;
    impl->nvars = tie.nvars();
    impl->all_vars = true;
    std::string fp = "weighted(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) fp += ',';
        fp += std::to_string(weights[i]);
    }
    impl->fingerprint = fp + ";" + tie.fingerprint() + ")";
    impl->weights = std::move(weights);
    impl->first = std::move(tie);
    return TermOrder(std::move(impl));
}

TermOrder TermOrder::block(std::vector<std::size_t> front, TermOrder front_order, TermOrder back_order) {
    if (front_order.nvars() != back_order.nvars())
        throw DimensionError("block orders must act on the same variable count");
    check_permutation_like(front, front_order.nvars());
    std::sort(front.begin(), front.end());
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Block;
    impl->nvars = front_order.nvars();
    impl->all_vars = true;
    impl->fingerprint = "block{" + join(front) + "}(" + front_order.fingerprint() + ";" + back_order.fingerprint() + ")";
    impl->front = std::move(front);
    impl->first = std::move(front_order);
    impl->second = std::move(back_order);
    return TermOrder(std::move(impl));
}

TermOrder TermOrder::elimination(std::size_t nvars, std::vector<std::size_t> front, TermOrder back_order) {
    if (back_order.nvars() != nvars) throw DimensionError("back order acts on the wrong variable count");
    std::sort(front.begin(), front.end());
    auto front_order = grevlex(nvars, front);
    return block(std::move(front), std::move(front_order), std::move(back_order));
}

TermOrder::Kind TermOrder::kind() const noexcept { return impl_->kind; }

std::size_t TermOrder::nvars() const noexcept { return impl_->nvars; }

std::span<const std::int64_t> TermOrder::weights() const noexcept { return impl_->weights; }

const TermOrder& TermOrder::tie() const {
    if (impl_->kind != Kind::Weighted) throw DomainError("only weighted orders have a tie-breaker");
    return *impl_->first;
}

std::span<const std::size_t> TermOrder::front_block() const noexcept { return impl_->front; }

const TermOrder& TermOrder::front_order() const {
    if (impl_->kind != Kind::Block) throw DomainError("only block orders have a front order");
    return *impl_->first;
}

const TermOrder& TermOrder::back_order() const {
    if (impl_->kind != Kind::Block) throw DomainError("only block orders have a back order");
    return *impl_->second;
}

const std::string& TermOrder::fingerprint() const noexcept { return impl_->fingerprint; }

std::strong_ordering TermOrder::compare(const MultiIndex& a, const MultiIndex& b) const {
    const Impl& o = *impl_;
    if (a.size() != o.nvars || b.size() != o.nvars)
        throw DimensionError("term order on " + std::to_string(o.nvars) + " variables applied to vectors of length " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    switch (o.kind) {
    case Kind::Lex:
        for (std::size_t v : o.vars)
            if (a[v] != b[v]) return a[v] <=> b[v];
        return std::strong_ordering::equal;
    case Kind::GradedRevLex:
    case Kind::GammaRevLex: {
        std::uint64_t da = a.degree(), db = b.degree();
        if (!o.all_vars) {
            da = db = 0;
            for (std::size_t v : o.vars) {
                da += a[v];
                db += b[v];
            }
        }
        if (da != db) return da <=> db;
        for (std::size_t k = o.vars.size(); k-- > 0;) {
            std::size_t v = o.vars[k];
            if (a[v] != b[v]) return b[v] <=> a[v];
        }
        return std::strong_ordering::equal;
    }
    case Kind::Weighted: {
        auto wa = a.dot(o.weights), wb = b.dot(o.weights);
        if (wa != wb) return wa <=> wb;
        return o.first->compare(a, b);
    }
    case Kind::Block: {
        auto c = o.first->compare(a, b);
        if (c != 0) return c;
        return o.second->compare(a, b);
    }
    }
    return std::strong_ordering::equal;
}

bool TermOrder::eliminates(std::span<const std::size_t> front) const {
    std::vector<std::size_t> want(front.begin(), front.end());
    std::sort(want.begin(), want.end());
    if (want.empty()) return true;
    switch (impl_->kind) {
    case Kind::Block:
        return want == impl_->front;
    case Kind::Lex: {
        if (impl_->vars.size() < want.size()) return false;
        std::vector<std::size_t> head(impl_->vars.begin(), impl_->vars.begin() + static_cast<std::ptrdiff_t>(want.size()));
        std::sort(head.begin(), head.end());
        return head == want;
    }
    default:
        return false;
    }
}

TermOrder TermOrder::embed(std::span<const std::size_t> position_of, std::size_t new_nvars) const {
    const Impl& o = *impl_;
    if (position_of.size() != o.nvars) throw DimensionError("embedding map has the wrong length");
    auto map_vars = [&](std::span<const std::size_t> vars) {
        std::vector<std::size_t> out;
        out.reserve(vars.size());
        for (auto v : vars) out.push_back(position_of[v]);
        return out;
    };
    switch (o.kind) {
    case Kind::Lex:
        return lex(new_nvars, map_vars(o.vars));
    case Kind::GradedRevLex:
        return grevlex(new_nvars, map_vars(o.vars));
    case Kind::GammaRevLex: {
        auto impl = std::make_shared<Impl>(o);
        impl->nvars = new_nvars;
        impl->vars = map_vars(o.vars);
        check_permutation_like(impl->vars, new_nvars);
        impl->all_vars = impl->vars.size() == new_nvars;
        impl->fingerprint = "gamma(s=" + std::to_string(o.s) + ",d=" + std::to_string(o.d) + ")[" + join(impl->vars) +
                            "]/" + std::to_string(new_nvars);
        return TermOrder(std::move(impl));
    }
    case Kind::Weighted: {
        std::vector<std::int64_t> w(new_nvars, 0);
        for (std::size_t i = 0; i < o.nvars; ++i) w[position_of[i]] = o.weights[i];
        return weighted(std::move(w), o.first->embed(position_of, new_nvars));
    }
    case Kind::Block:
        return block(map_vars(o.front), o.first->embed(position_of, new_nvars),
                     o.second->embed(position_of, new_nvars));
    }
    throw DomainError("unknown order kind");
}

}  // namespace vgb
