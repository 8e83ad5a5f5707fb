#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vgb/multi_index.hpp"
#include "vgb/term_order.hpp"

namespace vgb {

/// All a in N^s with |a| = d, sorted ascending in the Gamma variable order.
/// Throws DomainError when s == 0 or d == 0.
std::vector<MultiIndex> enumerate_nds(std::size_t s, std::size_t d);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Describes one of the polynomial rings the library works in.
///
///  - Base:     S = K[y1..ys]
///  - Veronese: R^[d] = K[x_a : a in N_d^s], variables in ascending Gamma order
///  - Joint:    R^[d] (x) S, x variables first then y variables; used to
///              compute preimages under phi_d by elimination
///  - Custom:   arbitrary named variables (elimination rings, toy examples)
class Ring {
public:
    enum class Kind { Base, Veronese, Joint, Custom };

    static RingPtr base(std::size_t s);
    static RingPtr veronese(std::size_t s, std::size_t d);
    static RingPtr joint(std::size_t s, std::size_t d);
    static RingPtr custom(std::vector<std::string> names,
                          std::vector<std::int64_t> grading = {});

    Kind kind() const noexcept { return kind_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t d() const noexcept { return d_; }
    std::size_t nvars() const noexcept { return names_.size(); }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::span<const std::string> names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// Number of x variables (R^[d] part); zero for Base/Custom rings.
    std::size_t veronese_count() const noexcept { return veronese_index_.size(); }
    /// Multi-index of the x variable at position i.
    const MultiIndex& veronese_index(std::size_t i) const { return veronese_index_.at(i); }
    std::span<const MultiIndex> veronese_indices() const noexcept { return veronese_index_; }
    std::optional<std::size_t> veronese_position(const MultiIndex& a) const;
    /// Position of y_i (0-based) in Base and Joint rings.
    std::size_t y_position(std::size_t i) const;

    /// Positive integer degree of each variable; the input of the elimination
    /// in a Joint ring is homogeneous for deg x_a = d, deg y_i = 1.
    std::span<const std::int64_t> grading() const noexcept { return grading_; }

    /// grevlex for Base/Custom, Gamma for Veronese, elimination of y for Joint.
    TermOrder default_order() const;

    bool operator==(const Ring& other) const noexcept;

    std::string describe() const;

private:
    Ring() = default;

    Kind kind_ = Kind::Base;
    std::size_t s_ = 0;
    std::size_t d_ = 0;
    std::vector<std::string> names_;
    std::vector<MultiIndex> veronese_index_;
    std::vector<std::int64_t> grading_;
    std::unordered_map<std::string, std::size_t> by_name_;
    std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> by_index_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace vgb
