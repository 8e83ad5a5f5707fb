#include "vgb/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring, const TermOrder& order)
        : text_(text), ring_(ring), order_(order) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            advance();
        }
        terms.push_back(parse_term(negative));
        for (;;) {
            skip_space();
            if (at_end()) break;
            char op = peek();
            if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
            advance();
            terms.push_back(parse_term(op == '-'));
        }
        return Polynomial(ring_, order_, std::move(terms));
    }

private:
    Term parse_term(bool negative) {
        Term t{MultiIndex(ring_->nvars()), negative ? -1 : 1};
        parse_factor(t);
        for (;;) {
            skip_space();
            if (at_end() || peek() != '*') break;
            advance();
            parse_factor(t);
        }
        return t;
    }

    void parse_factor(Term& t) {
        skip_space();
        if (at_end()) fail("expected a coefficient or variable, found end of input");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_space();
            if (!at_end() && peek() == '/') {
                advance();
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
                auto [line, col] = position();
                std::string den = digits();
                if (mpz_class(den) == 0) throw ParseError("zero denominator", line, col);
                num += "/" + den;
            }
            t.coeff *= parse_coefficient(num);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            auto [line, col] = position();
            std::string name = identifier();
            std::size_t var = lookup(name, line, col);
            std::uint64_t exponent = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                advance();
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
                auto [el, ec] = position();
                std::string e = digits();
                if (e.size() > 10 || std::stoull(e) > std::numeric_limits<Exponent>::max())
                    throw ExponentOverflow("exponent " + e + " exceeds 32 bits at line " + std::to_string(el) +
                                           ", column " + std::to_string(ec));
                exponent = std::stoull(e);
            }
            std::uint64_t total = std::uint64_t{t.monomial[var]} + exponent;
            if (total > std::numeric_limits<Exponent>::max()) throw ExponentOverflow("exponent exceeds 32 bits");
            t.monomial.set(var, static_cast<Exponent>(total));
            return;
        }
        fail(std::string("expected a coefficient or variable, found '") + c + "'");
    }

    std::size_t lookup(const std::string& name, std::size_t line, std::size_t col) {
        if (auto idx = ring_->index_of(name)) return *idx;
        throw UnknownVariable("unknown variable '" + name + "' for ring " + ring_->describe() + " at line " +
                              std::to_string(line) + ", column " + std::to_string(col));
    }

    std::string identifier() {
        std::string out;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out += peek();
            advance();
        }
        skip_space();
        if (!at_end() && peek() == '[') {
            advance();
            out += '[';
            bool first = true;
            for (;;) {
                skip_space();
                if (!first) {
                    if (at_end()) fail("unterminated multi-index");
                    if (peek() == ']') break;
                    if (peek() != ',') fail("expected ',' or ']' in multi-index");
                    advance();
                    out += ',';
                    skip_space();
                }
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index entry");
                out += std::to_string(std::stoull(digits()));
                first = false;
            }
            advance();
            out += ']';
        }
        return out;
    }

    std::string digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        return out;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, line_, col_); }

    std::string_view text_;
    const RingPtr& ring_;
    const TermOrder& order_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

nlohmann::ordered_json term_json(const Term& t) {
    nlohmann::ordered_json j;
    j["coeff"] = to_string(t.coeff);
    j["exps"] = std::vector<Exponent>(t.monomial.entries().begin(), t.monomial.entries().end());
    return j;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const TermOrder& order) {
    return Parser(text, ring, order).parse();
}

std::string monomial_to_string(const MultiIndex& m, const Ring& ring) {
    std::vector<std::size_t> positions(m.size());
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    // x variables print by descending multi-index, y variables after them in order
    const std::size_t nx = ring.veronese_count();
    std::stable_sort(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(nx),
                     [&](std::size_t a, std::size_t b) { return ring.veronese_index(b) < ring.veronese_index(a); });
    std::string out;
    for (std::size_t i : positions) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        bool negative = t.coeff < 0;
        Coefficient mag = negative ? Coefficient(-t.coeff) : t.coeff;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t.monomial.is_zero()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += monomial_to_string(t.monomial, *f.ring());
        }
    }
    return out;
}

nlohmann::ordered_json ring_to_json(const Ring& ring) {
    nlohmann::ordered_json j;
    switch (ring.kind()) {
    case Ring::Kind::Base:
        j["kind"] = "S";
        j["s"] = ring.s();
        break;
    case Ring::Kind::Veronese:
        j["kind"] = "Rd";
        j["s"] = ring.s();
        j["d"] = ring.d();
        break;
    case Ring::Kind::Joint:
        j["kind"] = "joint";
        j["s"] = ring.s();
        j["d"] = ring.d();
        break;
    case Ring::Kind::Custom:
        j["kind"] = "custom";
        j["vars"] = std::vector<std::string>(ring.names().begin(), ring.names().end());
        j["grading"] = std::vector<std::int64_t>(ring.grading().begin(), ring.grading().end());
        break;
    }
    return j;
}

RingPtr ring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw DomainError("ring descriptor needs a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    auto get_size = [&](const char* key) {
        auto v = j.at(key).get<std::int64_t>();
        if (v < 1) throw DomainError(std::string("ring parameter ") + key + " must be >= 1");
        return static_cast<std::size_t>(v);
    };
    if (kind == "S") return Ring::base(get_size("s"));
    if (kind == "Rd") return Ring::veronese(get_size("s"), get_size("d"));
    if (kind == "joint") return Ring::joint(get_size("s"), get_size("d"));
    if (kind == "custom") {
        std::vector<std::int64_t> grading;
        if (j.contains("grading")) grading = j.at("grading").get<std::vector<std::int64_t>>();
        return Ring::custom(j.at("vars").get<std::vector<std::string>>(), std::move(grading));
    }
    throw DomainError("unknown ring kind '" + kind + "'");
}

nlohmann::ordered_json index_table(const Ring& ring) {
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& a : ring.veronese_indices())
        table.push_back(std::vector<Exponent>(a.entries().begin(), a.entries().end()));
    return table;
}

nlohmann::ordered_json terms_to_json(const Polynomial& f) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : f.terms()) terms.push_back(term_json(t));
    return terms;
}

nlohmann::ordered_json polynomial_to_json(const Polynomial& f) {
    nlohmann::ordered_json j;
    j["ring"] = ring_to_json(*f.ring());
    if (f.ring()->veronese_count() > 0) j["index"] = index_table(*f.ring());
    j["terms"] = terms_to_json(f);
    return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j, const RingPtr& ring, const TermOrder& order) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>(), ring, order);
    const nlohmann::json& terms = j.is_object() ? j.at("terms") : j;
    if (!terms.is_array()) throw DomainError("polynomial JSON must be a string, a term list or {\"terms\": [...]}");
    std::vector<Term> out;
    for (const auto& t : terms) {
        Coefficient c = t.at("coeff").is_string() ? parse_coefficient(t.at("coeff").get<std::string>())
                                                  : Coefficient(t.at("coeff").get<long>());
        auto exps = t.at("exps").get<std::vector<std::int64_t>>();
        if (exps.size() != ring->nvars())
            throw DimensionError("term has " + std::to_string(exps.size()) + " exponents, ring has " +
                                 std::to_string(ring->nvars()) + " variables");
        std::vector<Exponent> e;
        for (auto v : exps) {
            if (v < 0) throw DomainError("negative exponent");
            if (v > static_cast<std::int64_t>(std::numeric_limits<Exponent>::max()))
                throw ExponentOverflow("exponent exceeds 32 bits");
            e.push_back(static_cast<Exponent>(v));
        }
        out.push_back({MultiIndex(std::move(e)), std::move(c)});
    }
    return Polynomial(ring, order, std::move(out));
}

}  // namespace vgb
