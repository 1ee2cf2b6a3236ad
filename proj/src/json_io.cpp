#include "csreal/json_io.hpp"

#include "csreal/render.hpp"

#include <charconv>
#include <stdexcept>

namespace csreal {
namespace {

std::string coords_csv(const Root& r) {
    std::string s;
    for (size_t i = 0; i < r.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r.coords[i]);
    }
    return s;
}

std::vector<int> parse_csv(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        int v = 0;
        auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || p != piece.data() + piece.size())
            throw std::invalid_argument("bad integer list: '" + s + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Var parse_var(const OrbitContext& ctx, const std::string& s) {
    auto root_slot = [&](const std::string& body) {
        Root r{parse_csv(body)};
        if (static_cast<int>(r.coords.size()) != ctx.root_system().rank())
            throw std::invalid_argument("variable root has wrong rank: '" + s + "'");
        return ctx.zindex(r);
    };
    if (s.rfind("zbar[", 0) == 0 && s.back() == ']')
        return zbarvar(root_slot(s.substr(5, s.size() - 6)));
    if (s.rfind("z[", 0) == 0 && s.back() == ']')
        return zvar(root_slot(s.substr(2, s.size() - 3)));
    if (s.size() >= 2 && s[0] == 'j') {
        int k = 0;
        auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
        if (ec == std::errc() && p == s.data() + s.size() && k >= 1 &&
            k <= ctx.root_system().rank())
            return jvar(k - 1);
    }
    throw std::invalid_argument("unknown variable: '" + s + "'");
}

nlohmann::json terms_to_json(const Polynomial& p, const VarNamer& name) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& [v, e] : m) mono[name(v)] = e;
        arr.push_back({{"coeff", to_string(c)}, {"monomial", mono}});
    }
    return arr;
}

Polynomial terms_from_json(const nlohmann::json& arr, const OrbitContext& ctx) {
    if (!arr.is_array()) throw std::invalid_argument("term list must be an array");
    Polynomial p;
    for (const auto& t : arr) {
        Rational c = parse_rational(t.at("coeff").get<std::string>());
        Monomial m;
        for (const auto& [key, e] : t.at("monomial").items()) {
            int exp = e.get<int>();
            if (exp <= 0) throw std::invalid_argument("monomial exponents must be positive");
            m[parse_var(ctx, key)] += exp;
        }
        p.add_term(m, c);
    }
    return p;
}

std::string convention_name(Convention c) {
    return c == Convention::Formal ? "formal" : "fock";
}

}  // namespace

std::string generator_name(const RootSystem& rs, GenId g) {
    if (g.cartan) return "H" + std::to_string(g.index + 1);
    return "E[" + coords_csv(rs.all_roots()[g.index]) + "]";
}

GenId parse_generator(const RootSystem& rs, const std::string& s) {
    if (s.size() >= 2 && s[0] == 'H') {
        int k = 0;
        auto [p, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
        if (ec == std::errc() && p == s.data() + s.size() && k >= 1 && k <= rs.rank())
            return GenId::H(k - 1);
        throw std::invalid_argument("bad Cartan generator: '" + s + "'");
    }
    if (s.rfind("E[", 0) == 0 && s.back() == ']') {
        Root r{parse_csv(s.substr(2, s.size() - 3))};
        if (static_cast<int>(r.coords.size()) != rs.rank() || !rs.is_root(r))
            throw std::invalid_argument("not a root: '" + s + "'");
        return GenId::E(rs.root_index(r));
    }
    throw std::invalid_argument("bad generator: '" + s + "' (expected H1 or E[1,1])");
}

nlohmann::json operator_to_json(const OrbitContext& ctx, Convention conv, GenId g,
                                const DiffOp& op) {
    const RootSystem& rs = ctx.root_system();
    VarNamer name = default_namer(ctx);

    nlohmann::json parabolic = nlohmann::json::array();
    for (int i : ctx.parabolic().excluded) parabolic.push_back("a" + std::to_string(i + 1));

    nlohmann::json weight;
    if (ctx.symbolic_weight()) {
        weight = "symbolic";
    } else {
        weight = nlohmann::json::array();
        for (int k = 0; k < rs.rank(); ++k)
            weight.push_back(to_string(ctx.weight_poly(k).constant_value()));
    }

    nlohmann::json derivs = nlohmann::json::object();
    for (const auto& [zi, q] : op.derivatives())
        derivs[rs.render_root(ctx.delta_plus().at(zi))] = terms_to_json(q, name);

    return {{"algebra", rs.lie_type().name()},
            {"parabolic", parabolic},
            {"weight", weight},
            {"convention", convention_name(conv)},
            {"generator", generator_name(rs, g)},
            {"operator", {{"scalar", terms_to_json(op.scalar(), name)},
                          {"derivatives", derivs}}}};
}

DiffOp operator_from_json(const nlohmann::json& doc, const OrbitContext& ctx) {
    const RootSystem& rs = ctx.root_system();
    if (doc.at("algebra").get<std::string>() != rs.lie_type().name())
        throw std::invalid_argument("operator document is for a different algebra");
    const auto& op = doc.at("operator");
    DiffOp out(terms_from_json(op.at("scalar"), ctx));
    for (const auto& [key, arr] : op.at("derivatives").items()) {
        Root r = rs.parse_root(key);
        out.add_derivative(ctx.zindex(r), terms_from_json(arr, ctx));
    }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) e["residual"] = c.detail;
        checks.push_back(std::move(e));
    }
    return {{"pass", report.all_pass()},
            {"passed", report.pass_count()},
            {"total", static_cast<int>(report.checks.size())},
            {"checks", checks}};
}

}  // namespace csreal
