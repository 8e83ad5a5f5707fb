#pragma once

#include <string>
#include <vector>

#include "vgb/io.hpp"
#include "vgb/ring.hpp"

namespace vgb::test {

inline std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const RingPtr& ring,
                                         const TermOrder& order) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ring, order));
    return out;
}

inline std::vector<std::string> print_all(const std::vector<Polynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(to_string(p));
    return out;
}

inline MultiIndex var(const RingPtr& R, const MultiIndex& a) {
    return MultiIndex::unit(R->nvars(), *R->veronese_position(a));
}

}  // namespace vgb::test
