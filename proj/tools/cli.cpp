#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "vgb/errors.hpp"
#include "vgb/io.hpp"
#include "vgb/toric.hpp"

namespace vgb::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Input {
    std::string path;
    std::string text;
};

Input read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {path, ss.str()};
}

std::string digest(const std::vector<std::string>& parts) {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& p : parts) {
        for (unsigned char c : p) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

// JSON parse errors report a byte offset; convert it to line/column.
[[noreturn]] void rethrow_json(const nlohmann::json::parse_error& e, const std::string& text) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError("malformed JSON", line, col);
}

struct IdealInput {
    RingPtr ring;
    std::vector<Polynomial> generators;
};

// Text ideal files: an optional header line "ring: S s", "ring: Rd s d" or
// "vars: a b c", then one polynomial per line. '#' starts a comment.
IdealInput parse_text_ideal(const std::string& text) {
    IdealInput out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<std::size_t, std::string>> bodies;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream words(line);
        std::string head;
        words >> head;
        if (head == "ring:" || head == "vars:") {
            if (out.ring) throw ParseError("duplicate ring header", lineno, 1);
            if (head == "vars:") {
                std::vector<std::string> names;
                for (std::string w; words >> w;) names.push_back(w);
                if (names.empty()) throw ParseError("empty variable list", lineno, 1);
                out.ring = Ring::custom(std::move(names));
            } else {
                std::string kind;
                std::size_t s = 0, d = 0;
                words >> kind >> s;
                if (kind == "S" && s > 0) {
                    out.ring = Ring::base(s);
                } else if (kind == "Rd" && s > 0 && (words >> d) && d > 0) {
                    out.ring = Ring::veronese(s, d);
                } else {
                    throw ParseError("ring header must be 'ring: S s' or 'ring: Rd s d'", lineno, 1);
                }
            }
            continue;
        }
        bodies.emplace_back(lineno, line);
    }
    if (!out.ring) throw ParseError("missing ring header", 1, 1);
    for (const auto& [no, body] : bodies) {
        try {
            out.generators.push_back(parse_polynomial(body, out.ring));
        } catch (const ParseError& e) {
            std::string msg = e.what();
            msg = msg.substr(0, msg.rfind(" at line "));
            throw ParseError(msg, no, e.column());
        }
    }
    return out;
}

IdealInput parse_ideal(const Input& input) {
    auto first = input.text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || input.text[first] != '{') return parse_text_ideal(input.text);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(input.text);
    } catch (const nlohmann::json::parse_error& e) {
        rethrow_json(e, input.text);
    }
    IdealInput out;
    out.ring = ring_from_json(j.at("ring"));
    for (const auto& p : j.at("polynomials")) out.generators.push_back(polynomial_from_json(p, out.ring, out.ring->default_order()));
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != item.size()) throw ParseError("bad integer '" + item + "' in list", 1, 1);
        out.push_back(v);
    }
    return out;
}

TermOrder tie_order(const std::string& name, const Ring& ring) {
    if (name == "lex") return TermOrder::lex(ring.nvars());
    if (name == "grevlex") return TermOrder::grevlex(ring.nvars());
    if (name == "gamma") {
        if (ring.kind() != Ring::Kind::Veronese) throw DomainError("the gamma order needs an R^[d] ring");
        return TermOrder::gamma(ring.s(), ring.d());
    }
    throw DomainError("unknown order '" + name + "'");
}

struct OrderChoice {
    TermOrder order;
    std::vector<std::size_t> front;
};

OrderChoice parse_order(const std::string& spec, const Ring& ring) {
    if (spec.rfind("weighted:", 0) == 0) {
        std::string rest = spec.substr(9);
        std::string tie = ring.kind() == Ring::Kind::Veronese ? "gamma" : "grevlex";
        auto slash = rest.find('/');
        if (slash != std::string::npos) {
            tie = rest.substr(slash + 1);
            rest.erase(slash);
        }
        return {TermOrder::weighted(parse_int_list(rest), tie_order(tie, ring)), {}};
    }
    if (spec.rfind("block:", 0) == 0) {
        std::vector<std::size_t> front;
        std::stringstream ss(spec.substr(6));
        for (std::string name; std::getline(ss, name, ',');) {
            auto idx = ring.index_of(name);
            if (!idx) throw UnknownVariable("unknown variable '" + name + "' in block order");
            front.push_back(*idx);
        }
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < ring.nvars(); ++i)
            if (std::find(front.begin(), front.end(), i) == front.end()) rest.push_back(i);
        return {TermOrder::elimination(ring.nvars(), front, TermOrder::grevlex(ring.nvars(), rest)), front};
    }
    return {tie_order(spec, ring), {}};
}

Json polys_json(std::span<const Polynomial> polys) {
    Json arr = Json::array();
    for (const auto& p : polys) {
        Json j;
        j["text"] = to_string(p);
        j["terms"] = terms_to_json(p);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json basis_json(const RingPtr& ring, std::span<const Polynomial> polys) {
    Json j;
    j["ring"] = ring_to_json(*ring);
    if (ring->veronese_count() > 0) j["index"] = index_table(*ring);
    j["polynomials"] = polys_json(polys);
    return j;
}

Json checks_json(std::span<const Check> checks) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return arr;
}

Json monomials_json(std::span<const MultiIndex> ms, const Ring& ring) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(monomial_to_string(m, ring));
    return arr;
}

std::string coefficient_text(const Coefficient& c) { return to_string(c); }

Json bounds_json(const Bounds& b) {
    return Json{{"s", b.s},
                {"a", b.a},
                {"delta", b.delta},
                {"paper", b.paper},
                {"paper_exact", coefficient_text(b.paper_exact)},
                {"ert_rough", coefficient_text(b.ert_rough)},
                {"ert_stated", b.ert_stated},
                {"verdicts",
                 Json{{"paper_below_rough", b.paper_below_rough},
                      {"a_plus_2_le_delta", b.a_plus_2_le_delta},
                      {"paper_above_stated", b.paper_above_stated},
                      {"delta_odd", b.delta_odd},
                      {"a_ge_delta", b.a_ge_delta}}}};
}

Json stats_json(const GroebnerOptions& opts, const GroebnerStats& st) {
    return Json{{"spair_cap", opts.spair_cap},
                {"coefficient_bit_cap", opts.coefficient_bit_cap},
                {"spairs_reduced", st.spairs_reduced},
                {"zero_reductions", st.zero_reductions},
                {"pairs_pruned", st.pairs_pruned}};
}

bool is_polynomial_object(const Json& j) { return j.is_object() && j.contains("text") && j.contains("terms"); }

void render_text(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : j.items()) {
        if (key == "terms" || key == "index") continue;
        if (value.is_object()) {
            if (key == "ring" || value.empty()) {
                out << pad << "ring: " << value.dump() << "\n";
                continue;
            }
            out << pad << key << ":\n";
            render_text(value, out, indent + 1);
        } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) {
                       return v.is_number() || v.is_boolean();
                   })) {
            out << pad << key << ": " << value.dump() << "\n";
        } else if (value.is_array()) {
            out << pad << key << " (" << value.size() << "):\n";
            for (const auto& item : value) {
                if (is_polynomial_object(item)) {
                    out << pad << "  " << item["text"].get<std::string>() << "\n";
                } else if (item.is_object() && item.contains("passed")) {
                    out << pad << "  [" << (item["passed"].get<bool>() ? "pass" : "FAIL") << "] "
                        << item["name"].get<std::string>() << ": " << item["detail"].get<std::string>() << "\n";
                } else if (item.is_string()) {
                    out << pad << "  " << item.get<std::string>() << "\n";
                } else {
                    out << pad << "  " << item.dump() << "\n";
                }
            }
        } else if (value.is_string()) {
            out << pad << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << pad << key << ": " << value.dump() << "\n";
        }
    }
}

struct Report {
    std::string command;
    std::vector<std::string> digest_parts;
    Json outputs = Json::object();
    Json budget = Json::object();
    int exit_code = Ok;
};

void emit(const Report& r, double ms, bool json, std::ostream& out) {
    Json j;
    j["command"] = r.command;
    j["inputs_digest"] = digest(r.digest_parts);
    j["outputs"] = r.outputs;
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << ms;
    j["timing_ms"] = std::stod(t.str());
    j["budget"] = r.budget;
    if (json) {
        out << j.dump(2) << "\n";
    } else {
        render_text(j, out, 0);
    }
}

int certificate_exit(std::span<const Check> checks) { return all_passed(checks) ? Ok : Failed; }

// gbasis ----------------------------------------------------------------

Report cmd_gbasis(const Input& input, const std::string& order_spec) {
    Report r{"gbasis", {"gbasis", order_spec, input.text}};
    auto ideal = parse_ideal(input);
    auto choice = parse_order(order_spec, *ideal.ring);
    GroebnerOptions opts;
    Ideal I(ideal.ring, ideal.generators);
    const auto& res = I.groebner(choice.order, opts);
    r.outputs = basis_json(ideal.ring, res.basis);
    r.outputs["metadata"] = Json{{"order", choice.order.fingerprint()},
                                 {"spair_count", res.stats.spairs_reduced},
                                 {"reduced", true}};
    if (!choice.front.empty()) {
        std::vector<Polynomial> kept;
        for (const auto& g : res.basis) {
            bool free = std::none_of(choice.front.begin(), choice.front.end(),
                                     [&](std::size_t v) { return g.leading_monomial()[v] > 0; });
            if (free) kept.push_back(g);
        }
        Json names = Json::array();
        for (auto v : choice.front) names.push_back(ideal.ring->name(v));
        r.outputs["elimination"] = Json{{"eliminated", names}, {"polynomials", polys_json(kept)}};
    }
    r.budget = stats_json(opts, res.stats);
    return r;
}

// veronese-gb ----------------------------------------------------------

Report cmd_veronese_gb(std::size_t s, std::size_t d, bool verify) {
    Report r{"veronese-gb", {"veronese-gb", std::to_string(s), std::to_string(d), verify ? "verify" : ""}};
    GroebnerOptions opts;
    auto ring = Ring::veronese(s, d);
    if (verify) {
        auto cert = verify_quad_gb(s, d, opts);
        r.outputs = basis_json(ring, cert.basis);
        r.outputs["metadata"] = Json{{"order", TermOrder::gamma(s, d).fingerprint()}, {"reduced", true}};
        r.outputs["certificate"] = checks_json(cert.checks);
        r.exit_code = certificate_exit(cert.checks);
    } else {
        auto basis = build_g_gamma(s, d);
        r.outputs = basis_json(ring, basis);
        r.outputs["metadata"] = Json{{"order", TermOrder::gamma(s, d).fingerprint()}, {"reduced", true}};
    }
    r.budget = stats_json(opts, {});
    return r;
}

// pullback -------------------------------------------------------------

bool all_monomials(const std::vector<Polynomial>& gens) {
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

Json pullback_json(const PullbackResult& res, const RingPtr& ring) {
    Json j = basis_json(ring, res.groebner_basis);
    bool reduced = res.groebner_basis == res.reduced_basis;
    j["metadata"] = Json{{"order", res.order.fingerprint()}, {"reduced", reduced}};
    if (!reduced) j["reduced_polynomials"] = polys_json(res.reduced_basis);
    j["method"] = to_string(res.method);
    j["max_degree"] = res.max_degree;
    j["quadratic"] = res.quadratic();
    Json bound{{"bound", res.bound}, {"bound_met", res.bound_met}};
    if (res.driving_ideal && !res.driving_ideal->is_zero()) {
        bound["a"] = res.driving_ideal->max_exponent();
        bound["driving_ideal"] = monomials_json(res.driving_ideal->generators(), *res.driving_ideal->ring());
    }
    j["bound"] = bound;
    if (!res.weights.empty()) j["weights"] = res.weights;
    if (res.m) {
        j["m"] = Json{{"generators", monomials_json(res.m->generators, *ring)},
                      {"degree_cap", res.m->degree_cap},
                      {"complete", res.m->complete},
                      {"completeness", res.m->completeness}};
    }
    j["certificate"] = checks_json(res.certificate);
    return j;
}

Report cmd_pullback(const Input& input, std::size_t d, const std::string& omega, const std::string& method,
                    std::optional<std::size_t> cap, bool strict) {
    Report r{"pullback", {"pullback", input.text, std::to_string(d), omega, method, cap ? std::to_string(*cap) : ""}};
    auto ideal = parse_ideal(input);
    if (ideal.ring->kind() != Ring::Kind::Base) throw RingMismatch("pullback expects an ideal of S (ring kind S)");
    const std::size_t s = ideal.ring->s();
    auto ring = Ring::veronese(s, d);
    PullbackOptions opts;
    opts.degree_cap = cap;
    Ideal I(ideal.ring, ideal.generators);

    if (omega.empty()) {
        if (!all_monomials(ideal.generators))
            throw PreconditionError("the ideal is not monomial; pass --omega w1,..,ws with in_w(I) monomial");
        std::vector<MultiIndex> ms;
        for (const auto& g : ideal.generators) ms.push_back(g.leading_monomial());
        MonomialIdeal M(ideal.ring, ms);
        if (method == "oracle") {
            KernelOracle oracle(s, d, opts.groebner);
            auto pre = oracle.preimage(Ideal(ideal.ring, M.as_polynomials(ideal.ring->default_order())));
            const auto& G = pre.groebner_basis(oracle.order());
            r.outputs = basis_json(ring, G);
            r.outputs["metadata"] = Json{{"order", oracle.order().fingerprint()}, {"reduced", true}};
            r.outputs["method"] = "elimination-oracle";
            r.outputs["max_degree"] = max_degree(G);
            r.outputs["quadratic"] = max_degree(G) <= 2;
            r.budget = stats_json(opts.groebner, oracle.graph_stats());
            return r;
        }
        opts.cross_check = method == "both";
        auto res = pullback_monomial(M, d, opts);
        r.outputs = pullback_json(res, ring);
        r.budget = stats_json(opts.groebner, res.stats);
        if (res.m && !res.m->complete) {
            r.exit_code = strict ? PartialResult : Ok;
        } else {
            r.exit_code = certificate_exit(res.certificate);
        }
        return r;
    }

    auto w = parse_int_list(omega);
    if (method == "constructive")
        throw PreconditionError("--omega needs --method oracle or both; the constructive method takes a monomial ideal");
    auto res = pullback_homogeneous(I, d, w, opts);
    r.outputs = pullback_json(res, ring);
    r.budget = stats_json(opts.groebner, res.stats);
    r.exit_code = certificate_exit(res.certificate);
    return r;
}

// toric ----------------------------------------------------------------

Configuration parse_configuration(const Input& input) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(input.text);
    } catch (const nlohmann::json::parse_error& e) {
        rethrow_json(e, input.text);
    }
    auto points = j.at("points").get<std::vector<LatticePoint>>();
    if (j.contains("lambda") && !j["lambda"].is_null()) {
        std::vector<Coefficient> lambda;
        for (const auto& v : j["lambda"])
            lambda.push_back(v.is_string() ? parse_coefficient(v.get<std::string>()) : Coefficient(v.get<long>()));
        return make_configuration(std::move(points), std::move(lambda));
    }
    return make_configuration(std::move(points));
}

Report cmd_toric(const Input& input, std::optional<std::size_t> d) {
    Report r{"toric", {"toric", input.text, d ? std::to_string(*d) : ""}};
    auto A = parse_configuration(input);
    GroebnerOptions opts;
    Json lambda = Json::array();
    for (const auto& l : A.lambda) lambda.push_back(coefficient_text(l));
    if (!d) {
        auto S = Ring::base(A.size());
        Ideal P = toric_ideal(A, opts);
        const auto& res = P.groebner(S->default_order());
        r.outputs = basis_json(S, res.basis);
        r.outputs["metadata"] = Json{{"order", S->default_order().fingerprint()}, {"reduced", true}};
        r.outputs["lambda"] = lambda;
        r.budget = stats_json(opts, res.stats);
        return r;
    }
    ToricOptions topts;
    topts.groebner = opts;
    auto cert = verify_toric_veronese(A, *d, topts);
    auto S = Ring::base(A.size());
    r.outputs["lambda"] = lambda;
    r.outputs["toric_ideal"] = basis_json(S, cert.toric_basis);
    r.outputs["omega"] = cert.omega;
    r.outputs["pullback"] = pullback_json(cert.pullback, Ring::veronese(A.size(), *d));
    Json pairs = Json::array();
    auto ring = Ring::veronese(A.size(), *d);
    for (auto [i, j] : cert.linear_pairs) pairs.push_back(ring->name(i) + " - " + ring->name(j));
    r.outputs["veronese"] = Json{{"points", cert.veronese.multiset.points.size()},
                                 {"distinct", cert.veronese.distinct.size()},
                                 {"linear_binomials", pairs},
                                 {"rank_a", cert.rank_a},
                                 {"rank_ad", cert.rank_ad}};
    r.outputs["certificate"] = checks_json(cert.checks);
    r.budget = stats_json(opts, cert.pullback.stats);
    r.exit_code = certificate_exit(cert.checks);
    return r;
}

// bounds ---------------------------------------------------------------

Report cmd_bounds(const Input& input, const std::string& omega) {
    Report r{"bounds", {"bounds", input.text, omega}};
    auto ideal = parse_ideal(input);
    if (ideal.ring->kind() != Ring::Kind::Base) throw RingMismatch("bounds expects an ideal of S (ring kind S)");
    Ideal I(ideal.ring, ideal.generators);
    MonomialIdeal M(ideal.ring);
    std::string source;
    if (!omega.empty()) {
        auto w = parse_int_list(omega);
        auto in = initial_ideal(I, w, ideal.ring->default_order());
        if (!in.is_monomial) throw PreconditionError("in_w(I) is not monomial for this weight vector");
        M = *in.monomial;
        source = "in_w(I)";
    } else if (all_monomials(ideal.generators)) {
        std::vector<MultiIndex> ms;
        for (const auto& g : ideal.generators) ms.push_back(g.leading_monomial());
        M = MonomialIdeal(ideal.ring, ms);
        source = "I";
    } else {
        M = initial_ideal(I, ideal.ring->default_order());
        source = "in_grevlex(I)";
    }
    r.outputs["monomial_ideal"] = monomials_json(M.generators(), *ideal.ring);
    r.outputs["source"] = source;
    r.outputs["bounds"] = bounds_json(bounds(M));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadratic Groebner bases for Veronese subrings", "vgb"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit the JSON report");

    std::string file, order = "grevlex", omega, method = "constructive";
    std::size_t s = 0, d = 0;
    std::optional<std::size_t> cap, veronese_d;
    bool verify = false, strict = false;
    std::string out_path;

    auto* gb = app.add_subcommand("gbasis", "Reduced Groebner basis of an ideal file");
    gb->add_option("file", file, "Ideal file (JSON or text)")->required();
    gb->add_option("--order", order, "lex | grevlex | gamma | weighted:w1,..[/tie] | block:v1,..");
    gb->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* vgb_cmd = app.add_subcommand("veronese-gb", "The quadratic basis G_Gamma of Ker phi_d");
    vgb_cmd->add_option("--s", s)->required()->check(CLI::PositiveNumber);
    vgb_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    vgb_cmd->add_flag("--verify", verify, "Run S-pair and elimination checks");
    vgb_cmd->add_option("--out", out_path);

    auto* pb = app.add_subcommand("pullback", "Groebner basis of phi_d^{-1}(I)");
    pb->add_option("file", file)->required();
    pb->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    pb->add_option("--omega", omega, "Weight vector w1,..,ws with in_w(I) monomial");
    pb->add_option("--method", method)->check(CLI::IsMember({"constructive", "oracle", "both"}));
    pb->add_option("--degree-cap", cap, "Degree cap for M(I)");
    pb->add_flag("--strict", strict, "Exit nonzero when M(I) is only partial");
    pb->add_option("--out", out_path);

    auto* tor = app.add_subcommand("toric", "Toric ideal of a configuration");
    tor->add_option("file", file)->required();
    tor->add_option("--veronese", veronese_d, "Also check the pullback to R^[d] for this d")->check(CLI::PositiveNumber);
    tor->add_option("--out", out_path);

    auto* bd = app.add_subcommand("bounds", "Lower bounds on d for an ideal");
    bd->add_option("file", file)->required();
    bd->add_option("--omega", omega);
    bd->add_option("--out", out_path);

    for (auto* sub : {gb, vgb_cmd, pb, tor, bd}) sub->add_flag("--json", json, "Emit the JSON report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    auto start = std::chrono::steady_clock::now();
    try {
        Report report;
        if (gb->parsed()) {
            report = cmd_gbasis(read_file(file), order);
        } else if (vgb_cmd->parsed()) {
            report = cmd_veronese_gb(s, d, verify);
        } else if (pb->parsed()) {
            report = cmd_pullback(read_file(file), d, omega, method, cap, strict);
        } else if (tor->parsed()) {
            report = cmd_toric(read_file(file), veronese_d);
        } else {
            report = cmd_bounds(read_file(file), omega);
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (out_path.empty()) {
            emit(report, ms, json, out);
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot write " + out_path);
            emit(report, ms, json, f);
        }
        return report.exit_code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const UnknownVariable& e) {
        err << "parse error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const ExponentOverflow& e) {
        err << "parse error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return ParseFailure;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return BudgetFailure;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return PreconditionFailure;
    } catch (const NotAConfiguration& e) {
        err << "not a configuration: " << e.what() << "\n";
        return NotAConfigurationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Failed;
    }
}

}  // namespace vgb::cli
