/*
   Copyright 2026 The qgha Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <qgha/qgha.hpp>

namespace {

using json = nlohmann::ordered_json;
using namespace qgha;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitQZero = 3;

struct Options {
    std::string verb;
    std::string field = "Q";
    std::string q = "1";
    std::string f = "h";
    std::string g = "1";
    std::string expr, left, right, module, other, alpha, beta;
    unsigned k = 1;
    std::size_t dim = 1;
    unsigned max_xy = 4;
    unsigned max_h = 8;
    std::size_t max_period = 0;
    std::size_t n = 8;
    std::size_t count = 0;
    unsigned ext_bound = kDefaultExtensionBound;
    std::uint64_t search_bound = kDefaultSearchBound;
    bool json = false;
};

template <Field F>
std::string str(const F& field, const Elem<F>& e) {
    return field.format(e);
}

template <Field F>
json elems(const F& field, const std::vector<Elem<F>>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(str(field, e));
    return out;
}

template <Field F>
json matrix_json(const Matrix<F>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(str(m.field(), m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

template <Field F>
std::string matrix_text(const Matrix<F>& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "  [";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + str(m.field(), m(r, c));
        out += "]\n";
    }
    return out;
}

template <Field F>
json module_json(const Algebra<F>& alg, const ModuleSpec<F>& s, const MatrixRep<F>& r) {
    const F& field = alg.field();
    json j;
    j["family"] = to_string(s.family);
    j["dim"] = s.dim();
    if (s.family == Family::C) {
        j["alpha"] = str(field, s.alpha);
    } else {
        j["lambda"] = {{"period", s.mu->orbit.period()}, {"values", elems(field, s.mu->orbit.values)}};
        j["mu"] = {{"anchor", str(field, s.mu->anchor)}, {"period", s.mu->period}};
        j["gamma"] = str(field, s.gamma);
    }
    j["matrices"] = {{"X", matrix_json(r.X)}, {"Y", matrix_json(r.Y)}, {"H", matrix_json(r.H)}};
    return j;
}

template <Field F>
std::string module_label(const F& field, const ModuleSpec<F>& s) {
    if (s.family == Family::C)
        return "C(alpha=" + str(field, s.alpha) + ",n=" + std::to_string(s.n) + ")";
    return std::string(to_string(s.family)) + "(alpha=" + str(field, s.mu->orbit.values[0]) +
           ",beta=" + str(field, s.mu->anchor) + ",gamma=" + str(field, s.gamma) + ")";
}

/// "A(alpha=1,beta=3,gamma=2)", "B(...)" or "C(alpha=0,n=2)".
template <Field F>
ModuleSpec<F> parse_module(const Algebra<F>& alg, const std::string& text) {
    const F& field = alg.field();
    auto fail = [&](std::size_t at, const std::string& msg) -> SyntaxError { return SyntaxError(at, msg); };
    std::size_t pos = text.find_first_not_of(' ');
    if (pos == std::string::npos) throw fail(0, "empty module spec");
    const char fam = text[pos];
    if (fam != 'A' && fam != 'B' && fam != 'C') throw fail(pos, "module family must be A, B or C");
    const std::size_t open = text.find('(', pos);
    const std::size_t close = text.rfind(')');
    if (open != pos + 1) throw fail(pos + 1, "expected '('");
    if (close == std::string::npos || close < open) throw fail(text.size(), "expected ')'");
    std::optional<std::string> alpha, beta, gamma, n;
    std::size_t at = open + 1;
    while (at < close) {
        std::size_t end = text.find(',', at);
        if (end == std::string::npos || end > close) end = close;
        const std::string item = text.substr(at, end - at);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw fail(at, "expected key=value");
        std::string key = item.substr(0, eq);
        key.erase(0, key.find_first_not_of(' '));
        key.erase(key.find_last_not_of(' ') + 1);
        const std::string value = item.substr(eq + 1);
        if (key == "alpha") alpha = value;
        else if (key == "beta") beta = value;
        else if (key == "gamma") gamma = value;
        else if (key == "n") n = value;
        else throw fail(at, "unknown key '" + key + "'");
        at = end + 1;
    }
    if (!alpha) throw fail(open, "missing alpha");
    const Elem<F> a = parse_scalar(*alpha, field);
    if (fam == 'C') {
        if (!n) throw fail(open, "missing n");
        std::size_t dim = 0;
        try {
            dim = static_cast<std::size_t>(std::stoul(*n));
        } catch (const std::exception&) {
            throw fail(open, "n must be a nonnegative integer");
        }
        return make_c_spec<F>(a, dim);
    }
    if (!beta || !gamma) throw fail(open, "families A and B need alpha, beta and gamma");
    return make_ab_spec(alg, fam == 'A' ? Family::A : Family::B, a, parse_scalar(*beta, field),
                        parse_scalar(*gamma, field));
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

template <Field F>
int run(const Options& o, const F& field) {
    const Algebra<F> alg(field, parse_scalar(o.q, field), parse_poly(o.f, field), parse_poly(o.g, field));
    const std::string& v = o.verb;

    if (v == "normalize" || v == "multiply") {
        const PBWElement<F> r = v == "normalize"
                                    ? parse_element(o.expr, alg)
                                    : parse_element(o.left, alg) * parse_element(o.right, alg);
        emit(o, {{"result", to_string(r)}}, to_string(r) + "\n");
        return 0;
    }
    if (v == "theta") {
        const std::string t = to_string(alg.theta(o.k));
        emit(o, {{"k", o.k}, {"result", t}}, t + "\n");
        return 0;
    }
    if (v == "verify-relations") {
        json residuals;
        std::string text;
        bool ok = true;
        if (!o.module.empty()) {
            const auto spec = parse_module(alg, o.module);
            const auto rep = build_matrix_rep(alg, spec);
            const auto res = verify_relations(alg, rep);
            ok = res.ok();
            residuals = {{"hx", matrix_json(res.hx)}, {"yh", matrix_json(res.yh)}, {"yx", matrix_json(res.yx)}};
            text = "HX - X f(H):\n" + matrix_text(res.hx) + "YH - f(H) Y:\n" + matrix_text(res.yh) +
                   "YX - qXY - g(H):\n" + matrix_text(res.yx);
        } else {
            const auto x = alg.x(), y = alg.y(), h = alg.h();
            const auto fh = alg.poly(alg.f());
            const auto hx = h * x - x * fh;
            const auto yh = y * h - fh * y;
            const auto yx = y * x - (x * y) * alg.q() - alg.poly(alg.g());
            ok = hx.is_zero() && yh.is_zero() && yx.is_zero();
            residuals = {{"hx", to_string(hx)}, {"yh", to_string(yh)}, {"yx", to_string(yx)}};
            text = "hx - x f(h) = " + to_string(hx) + "\nyh - f(h) y = " + to_string(yh) +
                   "\nyx - qxy - g(h) = " + to_string(yx) + "\n";
        }
        emit(o, {{"status", ok ? "ok" : "failed"}, {"residuals", residuals}}, (ok ? "ok\n" : "failed\n") + text);
        return 0;
    }
    if (v == "conformal") {
        const auto w = conformal_witness(alg);
        if (!w) {
            emit(o, {{"status", "not-conformal"}}, "not conformal\n");
            return 0;
        }
        emit(o, {{"status", "conformal"}, {"witness", {{"a", to_string(w->a)}, {"Z", to_string(w->Z)}}}},
             "conformal\na = " + to_string(w->a) + "\nZ = " + to_string(w->Z) + "\n");
        return 0;
    }
    if (v == "center") {
        const auto basis = center_basis_truncated(alg, o.max_xy, o.max_h);
        json b = json::array();
        std::string text;
        for (const auto& z : basis) {
            b.push_back(to_string(z));
            text += to_string(z) + "\n";
        }
        emit(o, {{"status", "ok"}, {"basis", b}}, text);
        return 0;
    }
    if (v == "domain") {
        const auto d = domain_check(alg);
        if (d.is_domain) {
            emit(o, {{"status", "domain"}}, "domain\n");
            return 0;
        }
        const std::string l = to_string(d.witness->left), r = to_string(d.witness->right);
        emit(o, {{"status", "zero-divisor"}, {"witness", {{"left", l}, {"right", r}}}},
             "zero divisors\nleft  = " + l + "\nright = " + r + "\n");
        return 0;
    }
    if (v == "orbits") {
        std::size_t max_period = o.max_period;
        if (max_period == 0) {
            if constexpr (std::is_same_v<F, GaloisField>) max_period = field.size();
            else max_period = 1;
        }
        json arr = json::array();
        std::string text;
        for (const auto& orb : enumerate_lambda_orbits(field, alg.f(), max_period)) {
            arr.push_back({{"period", orb.period()}, {"values", elems(field, orb.values)}});
            text += std::to_string(orb.period()) + ":";
            for (const auto& e : orb.values) text += " " + str(field, e);
            text += "\n";
        }
        emit(o, arr, text);
        return 0;
    }
    if (v == "mu") {
        const auto orbit = orbit_from(alg, parse_scalar(o.alpha, field));
        const auto mu = make_mu(alg, orbit, parse_scalar(o.beta, field));
        std::size_t count = o.count;
        if (count == 0) count = mu.period ? orbit.period() * static_cast<std::size_t>(mu.period) : orbit.period();
        std::vector<Elem<F>> seq;
        for (std::size_t i = 0; i < count; ++i) seq.push_back(mu_value(alg, mu, static_cast<long long>(i)));
        std::string text = "lambda period " + std::to_string(orbit.period()) + "\nmu period " +
                           std::to_string(mu.period) + "\nmu:";
        for (const auto& e : seq) text += " " + str(field, e);
        emit(o,
             {{"period", orbit.period()},
              {"values", elems(field, orbit.values)},
              {"anchor", str(field, mu.anchor)},
              {"muPeriod", mu.period},
              {"sequence", elems(field, seq)}},
             text + "\n");
        return 0;
    }
    if (v == "nu") {
        const auto a = parse_scalar(o.alpha, field);
        const auto nu = nu_table(alg, a, o.n);
        std::string text;
        for (std::size_t i = 0; i < nu.size(); ++i) text += std::to_string(i) + " " + str(field, nu[i]) + "\n";
        emit(o, {{"alpha", str(field, a)}, {"values", elems(field, nu)}}, text);
        return 0;
    }
    if (v == "build-module") {
        const auto spec = parse_module(alg, o.module);
        const auto rep = build_matrix_rep(alg, spec);
        emit(o, module_json(alg, spec, rep),
             module_label(field, spec) + " dim " + std::to_string(spec.dim()) + "\nX:\n" + matrix_text(rep.X) +
                 "Y:\n" + matrix_text(rep.Y) + "H:\n" + matrix_text(rep.H));
        return 0;
    }
    if (v == "check-simple") {
        const auto spec = parse_module(alg, o.module);
        const auto cert = is_simple_structural(alg, spec);
        json s = {{"simple", cert.simple}, {"reason", cert.reason}};
        if (cert.vanishing_index) s["vanishingIndex"] = *cert.vanishing_index;
        std::string brute = "skipped";
        if constexpr (std::is_same_v<F, GaloisField>) {
            try {
                brute = is_simple_bruteforce(build_matrix_rep(alg, spec), o.search_bound) ? "simple" : "not-simple";
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SearchSpaceTooLarge) throw;
            }
        }
        emit(o, {{"structural", s}, {"bruteforce", brute}},
             std::string(cert.simple ? "simple" : "not simple") + " (" + cert.reason + ")\nbrute force: " + brute +
                 "\n");
        return 0;
    }
    if (v == "check-iso") {
        const auto s1 = parse_module(alg, o.module);
        const auto s2 = parse_module(alg, o.other);
        const bool structural = iso_structural(alg, s1, s2);
        const IsoVerdict brute = iso_bruteforce(build_matrix_rep(alg, s1), build_matrix_rep(alg, s2));
        emit(o, {{"structural", structural}, {"bruteforce", to_string(brute)}},
             std::string("structural: ") + (structural ? "isomorphic" : "not-isomorphic") +
                 "\nbrute force: " + to_string(brute) + "\n");
        return 0;
    }
    if (v == "enumerate") {
        if constexpr (std::is_same_v<F, GaloisField>) {
            json arr = json::array();
            std::string text;
            for (const auto& s : enumerate_simples(alg, o.dim)) {
                arr.push_back(module_json(alg, s, build_matrix_rep(alg, s)));
                text += module_label(field, s) + "\n";
            }
            emit(o, arr, text);
            return 0;
        } else {
            if (alg.q().is_zero()) throw Error(ErrorCode::QZero, "classification needs q != 0");
            throw Error(ErrorCode::UnsupportedField, "enumeration needs a finite field");
        }
    }
    throw CLI::ValidationError("unknown verb " + v);
}

int fail(const Options& o, const std::string& code, const std::string& message, int status) {
    std::cerr << "error: " << message << "\n";
    if (o.json) std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact computations in quantum generalized Heisenberg algebras"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "Q, GF(p), GF(p^k) with optional mod=...")->capture_default_str();
        sub->add_option("--q", o.q, "parameter q")->capture_default_str();
        sub->add_option("--f", o.f, "polynomial f(h)")->capture_default_str();
        sub->add_option("--g", o.g, "polynomial g(h)")->capture_default_str();
        sub->add_option("--ext-bound", o.ext_bound, "largest accepted extension degree")->capture_default_str();
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->callback([&o, sub] { o.verb = sub->get_name(); });
        return sub;
    };

    auto* normalize = common(app.add_subcommand("normalize", "PBW normal form of an expression"));
    normalize->add_option("--expr", o.expr)->required();
    auto* multiply = common(app.add_subcommand("multiply", "product of two expressions"));
    multiply->add_option("--left", o.left)->required();
    multiply->add_option("--right", o.right)->required();
    auto* verify = common(app.add_subcommand("verify-relations", "check the defining relations"));
    verify->add_option("--module", o.module, "module spec, e.g. A(alpha=1,beta=3,gamma=1)");
    auto* theta = common(app.add_subcommand("theta", "theta_k"));
    theta->add_option("--k", o.k)->required();
    common(app.add_subcommand("conformal", "solve g = sigma(a) - q a"));
    auto* center = common(app.add_subcommand("center", "truncated center basis"));
    center->add_option("--max-xy", o.max_xy)->capture_default_str();
    center->add_option("--max-h", o.max_h)->capture_default_str();
    common(app.add_subcommand("domain", "domain test with zero-divisor witness"));
    auto* orbits = common(app.add_subcommand("orbits", "periodic lambda orbits"));
    orbits->add_option("--max-period", o.max_period, "0 means every period");
    auto* mu = common(app.add_subcommand("mu", "mu sequence through (alpha, beta)"));
    mu->add_option("--alpha", o.alpha)->required();
    mu->add_option("--beta", o.beta)->required();
    mu->add_option("--count", o.count, "number of terms; 0 means one full period");
    auto* nu = common(app.add_subcommand("nu", "nu_alpha(0..n)"));
    nu->add_option("--alpha", o.alpha)->required();
    nu->add_option("--n", o.n)->capture_default_str();
    auto* build = common(app.add_subcommand("build-module", "matrices of a module"));
    build->add_option("--module", o.module)->required();
    auto* simple = common(app.add_subcommand("check-simple", "structural and brute-force simplicity"));
    simple->add_option("--module", o.module)->required();
    simple->add_option("--search-bound", o.search_bound)->capture_default_str();
    auto* iso = common(app.add_subcommand("check-iso", "isomorphism of two modules"));
    iso->add_option("--module", o.module)->required();
    iso->add_option("--other", o.other)->required();
    auto* enumerate = common(app.add_subcommand("enumerate", "simple modules of a given dimension"));
    enumerate->add_option("--dim", o.dim)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const FieldSpec spec = parse_field_spec(o.field);
        if (spec.is_finite()) {
            const GaloisField field(spec, o.ext_bound);
            return run(o, field);
        }
        const RationalField field;
        return run(o, field);
    } catch (const SyntaxError& e) {
        return fail(o, "SyntaxError", e.what(), kExitUsage);
    } catch (const Error& e) {
        return fail(o, std::string(to_string(e.code())), e.what(),
                    e.code() == ErrorCode::QZero ? kExitQZero : kExitDomain);
    } catch (const CLI::Error& e) {
        return fail(o, "Usage", e.what(), kExitUsage);
    }
}
