#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "presentation.hpp"
#include "skewalg/skewalg.hpp"

namespace skewalg::cli {

namespace {

// ---------------------------------------------------------------- output

void render_text(const json& j, std::ostream& os, const std::string& indent = "");

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_matrix(const json& v) {
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& r) { return r.is_array(); });
}

void render_value(const json& v, std::ostream& os, const std::string& indent) {
    if (is_matrix(v)) {
        os << "\n";
        for (const auto& row : v) {
            os << indent << "  ";
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << scalar_text(row[i]);
            os << "\n";
        }
    } else if (v.is_array()) {
        std::string sep;
        os << (indent.empty() && v.empty() ? "" : "");
        for (const auto& e : v) {
            os << sep << (e.is_object() ? e.dump() : scalar_text(e));
            sep = ", ";
        }
        os << "\n";
    } else if (v.is_object()) {
        os << "\n";
        render_text(v, os, indent + "  ");
    } else {
        os << scalar_text(v) << "\n";
    }
}

void render_text(const json& j, std::ostream& os, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        os << indent << it.key() << ":";
        if (!is_matrix(it.value()) && !it.value().is_object()) os << " ";
        render_value(it.value(), os, indent);
    }
}

void emit(const json& j, bool as_json, std::ostream& os) {
    if (as_json) {
        os << j.dump(2) << "\n";
        return;
    }
    if (j.is_object() && j.size() == 1 && !j.begin().value().is_object()) {
        render_value(j.begin().value(), os, "");
        return;
    }
    render_text(j, os);
}

// ---------------------------------------------------------------- parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    if (trim(s).empty()) return out;
    for (auto& part : split(s, sep)) out.push_back(trim(part));
    return out;
}

std::shared_ptr<const FiniteField> make_field(const std::string& literal) {
    auto [q, k] = parse_field_literal(literal);
    return std::make_shared<const FiniteField>(q, k);
}

std::vector<elem> parse_elems(const FiniteField& F, const std::string& s) {
    std::vector<elem> out;
    for (const auto& t : split_list(s)) out.push_back(F.parse(t));
    return out;
}

json elems_json(const FiniteField& F, const std::vector<elem>& v) {
    json a = json::array();
    for (elem e : v) a.push_back(F.to_string(e));
    return a;
}

json matrix_json(const FiniteField& F, const Matrix<elem>& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(elems_json(F, row));
    return a;
}

json zq_matrix_json(const Matrix<std::uint32_t>& m) {
    json a = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (auto v : row) r.push_back(std::to_string(v));
        a.push_back(r);
    }
    return a;
}

/// y^(q^i) text <-> coefficient vectors.
LinearizedPoly parse_linearized(const FiniteField& F, const std::string& text) {
    const OreRing plain(std::shared_ptr<const FiniteField>(&F, [](const FiniteField*) {}), 0);
    const Poly p = plain.parse(text, "y");
    LinearizedPoly out;
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (p[e] == 0) continue;
        std::size_t i = 0, qi = 1;
        while (qi < e) {
            qi *= F.q();
            ++i;
        }
        if (qi != e) throw std::invalid_argument("exponent " + std::to_string(e) + " is not a power of q");
        if (out.size() <= i) out.resize(i + 1, 0);
        out[i] = p[e];
    }
    return out;
}

std::string linearized_string(const FiniteField& F, const LinearizedPoly& g) {
    std::string out;
    for (std::size_t i = g.size(); i-- > 0;) {
        if (g[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (g[i] != 1) out += F.to_string(g[i]) + "*";
        std::size_t e = 1;
        for (std::size_t t = 0; t < i; ++t) e *= F.q();
        out += e == 1 ? "y" : "y^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- shared options

struct RingOpts {
    std::string field;
    long long sigma = 1;
    std::string w = "0";
};

void add_ring_opts(CLI::App* c, RingOpts& o) {
    c->add_option("--field", o.field, "field literal, e.g. GF(4) or GF(2^2)")->required();
    c->add_option("--sigma", o.sigma, "sigma = Frobenius^l")->capture_default_str();
    c->add_option("--w", o.w, "inner derivation element (0 for delta = 0)")->capture_default_str();
}

OreRing make_ring(const RingOpts& o) {
    auto F = make_field(o.field);
    return OreRing(F, o.sigma, F->parse(o.w));
}

json polys_json(const OreRing& A, const std::vector<Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(A.to_string(p));
    return a;
}

// ---------------------------------------------------------------- PBW dispatch

enum class FieldKind { rational, gaussian, finite };

struct PBWOpts {
    std::string presentation;
    std::string a, b, f, by, gens, point, candidates, points, mode = "leading", domain;
    unsigned degree = 2;
    std::size_t samples = 50;
};

template <class K>
json pbw_poly_list(const PBWRing<K>& R, const std::vector<typename PBWRing<K>::Poly>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(R.to_string(p));
    return a;
}

template <class K>
std::vector<typename PBWRing<K>::Poly> parse_pbw_list(const PBWRing<K>& R, const std::string& s) {
    std::vector<typename PBWRing<K>::Poly> out;
    for (const auto& t : split_list(s)) out.push_back(R.parse(t));
    return out;
}

template <class K>
std::vector<typename K::value_type> parse_point(const K& F, const std::string& s) {
    std::vector<typename K::value_type> out;
    for (const auto& t : split_list(s)) out.push_back(parse_expression(FieldExpr<K>{F}, t));
    return out;
}

template <class K>
json point_json(const K& F, const std::vector<typename K::value_type>& Z) {
    json a = json::array();
    for (const auto& z : Z) a.push_back(F.to_string(z));
    return a;
}

template <class K>
json run_spbw(const std::string& cmd, const K& F, const json& pres, const PBWOpts& o, std::uint64_t seed) {
    PBWRing<K> R = build_presentation(F, pres);
    json out;
    if (cmd == "mul") {
        out["product"] = R.to_string(R.mul(R.parse(o.a), R.parse(o.b)));
    } else if (cmd == "divide") {
        const auto f = R.parse(o.f);
        const auto by = parse_pbw_list(R, o.by);
        if (o.mode != "leading" && o.mode != "full") throw CLI::ValidationError("--mode", "must be leading or full");
        auto res = o.mode == "full" ? R.divide(f, by) : R.divide_leading(f, by);
        out["quotients"] = pbw_poly_list(R, res.quotients);
        out["remainder"] = R.to_string(res.remainder);
    } else if (cmd == "groebner") {
        auto G = R.groebner_left(parse_pbw_list(R, o.gens));
        out["basis"] = pbw_poly_list(R, G.basis);
        out["complete"] = G.complete;
    } else if (cmd == "closure") {
        auto G = R.two_sided_closure(parse_pbw_list(R, o.gens));
        out["basis"] = pbw_poly_list(R, G.basis);
        out["complete"] = G.complete;
    } else if (cmd == "reduce") {
        const auto G = R.groebner_left(parse_pbw_list(R, o.gens));
        out["remainder"] = R.to_string(R.reduce(R.parse(o.f), G.basis));
    } else if (cmd == "info") {
        out["vars"] = R.vars();
        out["field"] = F.name();
        out["quasi_commutative"] = R.is_quasi_commutative();
        out["bijective"] = R.is_bijective();
    } else if (cmd == "roots" || cmd == "variety" || cmd == "ideal" || cmd == "normal" || cmd == "center" || cmd == "nullstellensatz") {
        if (cmd == "normal") {
            auto res = normality_test(R, R.parse(o.f));
            out["normal"] = res.normal;
            if (!res.normal) out["failure"] = res.failure;
            out["left_witnesses"] = pbw_poly_list(R, res.left_witness);
            out["right_witnesses"] = pbw_poly_list(R, res.right_witness);
            return out;
        }
        if (cmd == "center") {
            json a = json::array();
            for (const auto& e : center_basis(R, o.degree)) {
                const std::string m = R.monomial_string(e);
                a.push_back(m.empty() ? "1" : m);
            }
            out["center_monomials"] = a;
            return out;
        }
        PointOracle<K> O(R);
        std::vector<std::vector<typename K::value_type>> domain;
        auto load_domain = [&](const std::string& fallback_points) {
            if (!o.candidates.empty() || !fallback_points.empty()) {
                for (const auto& pt : split_list(o.candidates.empty() ? fallback_points : o.candidates, ';')) domain.push_back(parse_point(F, pt));
                return;
            }
            if constexpr (std::is_same_v<K, FiniteField>) {
                if (o.domain.empty() || o.domain == "full") {
                    domain = all_points(F, R.nvars());
                    return;
                }
            }
            throw std::domain_error("an infinite field needs an explicit candidate list (--candidates)");
        };
        if (cmd == "roots") {
            const auto f = R.parse(o.f);
            const auto Z = parse_point(F, o.point);
            out["root"] = O.root_test(f, Z);
            out["normal_form"] = R.to_string(O.normal_form(f, Z));
        } else if (cmd == "variety") {
            load_domain("");
            json pts = json::array();
            for (const auto& Z : O.vanishing_set(parse_pbw_list(R, o.gens), domain)) pts.push_back(point_json(F, Z));
            out["points"] = pts;
            out["count"] = pts.size();
        } else if (cmd == "ideal") {
            load_domain(o.points);
            if (!o.f.empty()) out["member"] = O.in_ideal_of_points(R.parse(o.f), domain);
            out["generators_up_to_degree"] = o.degree;
            out["generators"] = pbw_poly_list(R, ideal_of_points_truncated(O, domain, o.degree));
            out["truncated"] = true;
        } else {
            if constexpr (std::is_same_v<K, FiniteField>) {
                auto rep = nullstellensatz_check(R, parse_pbw_list(R, o.gens), o.degree, o.samples, seed);
                out["points_in_variety"] = rep.points_in_variety;
                out["radical_instances"] = rep.radical_instances;
                out["radical_holds"] = rep.radical_holds;
                out["radical_found_by_search"] = rep.radical_found_by_search;
                out["center_side_available"] = rep.center_side_available;
                out["center_generators"] = rep.center_generators;
                out["center_points"] = rep.center_points;
                out["center_side_tested"] = rep.center_side_tested;
                out["center_side_contained"] = rep.center_side_contained;
                out["unexercised"] = rep.unexercised;
            } else {
                throw std::domain_error("the Nullstellensatz check needs a finite field");
            }
        }
    } else {
        throw CLI::ValidationError("spbw", "unknown command " + cmd);
    }
    return out;
}

json dispatch_spbw(const std::string& cmd, const PBWOpts& o, std::uint64_t seed) {
    const json pres = read_json_file(o.presentation);
    const std::string field = pres.value("field", std::string("Q"));
    if (field == "Q") return run_spbw(cmd, RationalField{}, pres, o, seed);
    if (field == "Q(i)") return run_spbw(cmd, GaussianRationalField{}, pres, o, seed);
    auto [q, k] = parse_field_literal(field);
    return run_spbw(cmd, FiniteField(q, k), pres, o, seed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in skew polynomial rings, skew cyclic codes and skew PBW extensions", "skewalg"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::uint64_t seed = 1;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized sampling")->capture_default_str();

    std::function<json()> action;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        return parent->add_subcommand(name, desc);
    };

    // ---- field
    auto* field = app.add_subcommand("field", "finite field queries");
    field->require_subcommand(1);
    std::string field_lit;
    long long field_sigma = -1;
    {
        auto* info = leaf(field, "info", "parameters, modulus and elements");
        info->add_option("field", field_lit, "field literal")->required();
        info->add_option("--sigma", field_sigma, "also list the fixed field of Frobenius^l");
        info->callback([&] {
            action = [&] {
                auto F = make_field(field_lit);
                json o;
                o["q"] = F->q();
                o["k"] = F->k();
                o["size"] = F->size();
                o["modulus"] = F->modulus();
                o["generator"] = F->to_string(F->generator());
                if (F->size() <= 256) o["elements"] = elems_json(*F, F->elements());
                if (field_sigma >= 0) o["fixed_field"] = elems_json(*F, OreRing(F, field_sigma).fixed_field());
                return o;
            };
        });
    }

    // ---- poly
    auto* poly = app.add_subcommand("poly", "arithmetic in F[x; sigma, delta]");
    poly->require_subcommand(1);
    RingOpts ro;
    std::string pa, pb, pz, pu;
    unsigned pi = 0;
    auto poly_leaf = [&](const std::string& name, const std::string& desc, bool need_b, std::function<json(const OreRing&)> body) {
        auto* c = leaf(poly, name, desc);
        add_ring_opts(c, ro);
        c->add_option("--a", pa, "polynomial")->required();
        if (need_b) c->add_option("--b", pb, "second polynomial")->required();
        c->callback([&, body] { action = [&, body] { return body(make_ring(ro)); }; });
        return c;
    };
    poly_leaf("mul", "a * b", true, [&](const OreRing& A) {
        json o;
        o["product"] = A.to_string(A.mul(A.parse(pa), A.parse(pb)));
        return o;
    });
    poly_leaf("divmod", "right division a = q b + r", true, [&](const OreRing& A) {
        auto [q, r] = A.right_divmod(A.parse(pa), A.parse(pb));
        json o;
        o["quotient"] = A.to_string(q);
        o["remainder"] = A.to_string(r);
        return o;
    });
    poly_leaf("ldivmod", "left division a = b q + r", true, [&](const OreRing& A) {
        auto [q, r] = A.left_divmod(A.parse(pa), A.parse(pb));
        json o;
        o["quotient"] = A.to_string(q);
        o["remainder"] = A.to_string(r);
        return o;
    });
    poly_leaf("gcrd", "greatest common right divisor with Bezout data", true, [&](const OreRing& A) {
        auto g = A.gcrd_ext(A.parse(pa), A.parse(pb));
        json o;
        o["gcrd"] = A.to_string(g.g);
        o["u"] = A.to_string(g.u);
        o["v"] = A.to_string(g.v);
        return o;
    });
    poly_leaf("lclm", "least common left multiple", true, [&](const OreRing& A) {
        json o;
        o["lclm"] = A.to_string(A.lclm(A.parse(pa), A.parse(pb)));
        return o;
    });
    poly_leaf("annihilator", "monic generator of {h : h a in A b}", true, [&](const OreRing& A) {
        json o;
        o["annihilator"] = A.to_string(A.annihilator_poly(A.parse(pa), A.parse(pb)));
        return o;
    });
    poly_leaf("similar", "similarity test for monic a, b", true, [&](const OreRing& A) {
        auto s = A.similarity_test(A.parse(pa), A.parse(pb), seed);
        json o;
        o["similar"] = s.similar;
        o["exhaustive"] = s.exhaustive;
        if (s.similar) o["B"] = matrix_json(A.field(), s.B);
        return o;
    });
    poly_leaf("eval", "right evaluation at --z", false, [&](const OreRing& A) {
        const elem z = A.field().parse(pz);
        const Poly g = A.parse(pa);
        json o;
        o["value"] = A.field().to_string(A.right_eval(g, z));
        o["by_division"] = A.field().to_string(A.right_eval_by_division(g, z));
        return o;
    })->add_option("--z", pz, "field element")->required();
    poly_leaf("opeval", "operator evaluation at --z", false, [&](const OreRing& A) {
        json o;
        o["value"] = A.field().to_string(A.operator_eval(A.parse(pa), A.field().parse(pz)));
        return o;
    })->add_option("--z", pz, "field element")->required();
    poly_leaf("factor", "factorization into irreducibles", false, [&](const OreRing& A) {
        json o;
        o["factors"] = polys_json(A, A.factor_irreducible(A.parse(pa)));
        return o;
    });
    poly_leaf("bound", "bound polynomial", false, [&](const OreRing& A) {
        json o;
        o["bound"] = A.to_string(A.bound_polynomial(A.parse(pa)));
        return o;
    });
    poly_leaf("twosided", "two-sidedness test with witness", false, [&](const OreRing& A) {
        auto w = A.two_sided_test(A.parse(pa));
        json o;
        o["two_sided"] = w.two_sided;
        if (w.two_sided) {
            o["c"] = A.field().to_string(w.c);
            o["t"] = w.t;
            o["h"] = A.has_delta() ? A.without_delta().to_string(w.h, "y") : A.to_string(w.h);
        }
        return o;
    });
    {
        auto* c = leaf(poly, "norm", "N_i(z)");
        add_ring_opts(c, ro);
        c->add_option("--i", pi, "index")->required();
        c->add_option("--z", pz, "field element")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["norm"] = A.field().to_string(A.norm(pi, A.field().parse(pz)));
                return o;
            };
        });
    }
    {
        auto* c = leaf(poly, "conjugate", "z^u");
        add_ring_opts(c, ro);
        c->add_option("--z", pz, "field element")->required();
        c->add_option("--u", pu, "nonzero field element")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["conjugate"] = A.field().to_string(A.conjugate(A.field().parse(pz), A.field().parse(pu)));
                return o;
            };
        });
    }
    {
        auto* c = leaf(poly, "conjugacy", "conjugacy class and centralizer of z");
        add_ring_opts(c, ro);
        c->add_option("--z", pz, "field element")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                const elem z = A.field().parse(pz);
                json o;
                o["class"] = elems_json(A.field(), A.conjugacy_class(z));
                o["centralizer"] = elems_json(A.field(), A.centralizer(z));
                return o;
            };
        });
    }

    // ---- algset
    auto* alg = app.add_subcommand("algset", "root sets and minimal polynomials");
    alg->require_subcommand(1);
    std::string apoints, apoly;
    std::size_t arows = 0;
    auto alg_points_leaf = [&](const std::string& name, const std::string& desc, std::function<json(const OreRing&, const std::vector<elem>&)> body) {
        auto* c = leaf(alg, name, desc);
        add_ring_opts(c, ro);
        c->add_option("--points", apoints, "comma-separated field elements")->required();
        c->add_option("--rows", arows, "number of rows (default: number of points)");
        c->callback([&, body] {
            action = [&, body] {
                const OreRing A = make_ring(ro);
                return body(A, parse_elems(A.field(), apoints));
            };
        });
    };
    alg_points_leaf("minpoly", "minimal polynomial of a point set", [&](const OreRing& A, const std::vector<elem>& X) {
        json o;
        o["minpoly"] = A.to_string(minimal_polynomial(A, X));
        return o;
    });
    alg_points_leaf("ideal", "monic generator of the left ideal of points", [&](const OreRing& A, const std::vector<elem>& X) {
        json o;
        o["generator"] = A.to_string(ideal_of_points(A, X));
        return o;
    });
    alg_points_leaf("rank", "rank of a point set", [&](const OreRing& A, const std::vector<elem>& X) {
        json o;
        o["rank"] = rank_of_set(A, X);
        return o;
    });
    alg_points_leaf("vandermonde", "Vandermonde matrix", [&](const OreRing& A, const std::vector<elem>& X) {
        const auto V = vandermonde(A, X, arows ? arows : X.size());
        json o;
        o["matrix"] = matrix_json(A.field(), V);
        o["rank"] = rank(A.field(), V);
        return o;
    });
    alg_points_leaf("wronskian", "Wronskian matrix", [&](const OreRing& A, const std::vector<elem>& X) {
        const auto W = wronskian(A, X, arows ? arows : X.size());
        json o;
        o["matrix"] = matrix_json(A.field(), W);
        o["rank"] = rank(A.field(), W);
        return o;
    });
    {
        auto* c = leaf(alg, "vanishing", "right vanishing set of a polynomial");
        add_ring_opts(c, ro);
        c->add_option("--poly", apoly, "polynomial")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["points"] = elems_json(A.field(), vanishing_set(A, A.parse(apoly)));
                return o;
            };
        });
        auto* w = leaf(alg, "wpoly", "W-polynomial test");
        add_ring_opts(w, ro);
        w->add_option("--poly", apoly, "monic polynomial")->required();
        w->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["w_polynomial"] = is_W_polynomial(A, A.parse(apoly));
                return o;
            };
        });
    }

    // ---- codes
    auto* codes = app.add_subcommand("codes", "skew cyclic codes");
    codes->require_subcommand(1);
    std::string cmod, cdiv, cemit = "G,H", cpoly, cg, ch;
    std::size_t cn = 0;
    {
        auto* c = leaf(codes, "build", "code A g / A f");
        add_ring_opts(c, ro);
        c->add_option("--modulus", cmod, "monic modulus f")->required();
        c->add_option("--divisor", cdiv, "monic right divisor g of f")->required();
        c->add_option("--emit", cemit, "comma list of G,H,dual,idempotent")->capture_default_str();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                const SkewCyclicCode C(A, A.parse(cmod), A.parse(cdiv));
                const LinearCode L = C.linear_code();
                json o;
                o["length"] = C.length();
                o["dimension"] = C.dim();
                for (const auto& what : split_list(cemit)) {
                    if (what == "G") {
                        o["G"] = matrix_json(A.field(), C.generator_matrix());
                    } else if (what == "H") {
                        o["H"] = matrix_json(A.field(), L.parity_check());
                    } else if (what == "dual") {
                        const auto& F = A.field();
                        const bool cyclic_setting = !A.has_delta() && A.s() == C.length() && C.modulus() == xn_minus_one(A, C.length());
                        if (cyclic_setting) {
                            const SkewCyclicCode D = dual_skew_cyclic(C);
                            o["dual_divisor"] = A.to_string(D.divisor());
                        }
                        o["dual_G"] = matrix_json(F, L.dual().generator());
                    } else if (what == "idempotent") {
                        o["idempotent"] = A.to_string(generating_idempotent(C));
                    } else {
                        throw CLI::ValidationError("--emit", "unknown item " + what);
                    }
                }
                return o;
            };
        });
    }
    {
        auto* c = leaf(codes, "theta", "Theta anti-isomorphism modulo x^n - 1");
        add_ring_opts(c, ro);
        c->add_option("--poly", cpoly, "polynomial")->required();
        c->add_option("--n", cn, "n = order of sigma")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["theta"] = A.to_string(theta(A, A.parse(cpoly), cn));
                return o;
            };
        });
        auto* m = leaf(codes, "rmatrix", "matrix of right multiplication modulo x^n - 1");
        add_ring_opts(m, ro);
        m->add_option("--poly", cpoly, "polynomial")->required();
        m->add_option("--n", cn, "n = order of sigma")->required();
        m->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["matrix"] = matrix_json(A.field(), right_mult_matrix(A, A.parse(cpoly), cn));
                return o;
            };
        });
        auto* b = leaf(codes, "bezout", "generating idempotent from complementary divisors g, h");
        add_ring_opts(b, ro);
        b->add_option("--g", cg, "divisor")->required();
        b->add_option("--cofactor", ch, "complementary divisor h with x^n - 1 = h g")->required();
        b->add_option("--n", cn, "n")->required();
        b->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                const Poly e = bezout_idempotent(A, A.parse(cg), A.parse(ch), cn);
                json o;
                o["idempotent"] = A.to_string(e);
                o["generator"] = A.to_string(idempotent_to_generator(A, e, cn));
                return o;
            };
        });
        auto* g = leaf(codes, "generator", "minimal generator gcrd(e, x^n - 1) of an idempotent");
        add_ring_opts(g, ro);
        g->add_option("--e", cpoly, "idempotent")->required();
        g->add_option("--n", cn, "n")->required();
        g->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["generator"] = A.to_string(idempotent_to_generator(A, A.parse(cpoly), cn));
                return o;
            };
        });
    }

    // ---- evalcodes
    auto* ev = app.add_subcommand("evalcodes", "evaluation codes and distances");
    ev->require_subcommand(1);
    std::string esupport, ekind = "MDS", etype, emetric = "hamming", eword;
    std::size_t ek = 1;
    auto build_eval_code = [&](const OreRing& A) {
        std::string type = etype;
        if (type.empty()) type = ekind == "MRD" ? "operator" : "remainder";
        const auto Z = parse_elems(A.field(), esupport);
        if (type == "remainder") return remainder_code(A, Z, ek);
        if (type == "operator") return operator_code(A, Z, ek);
        throw CLI::ValidationError("--type", "must be remainder or operator");
    };
    auto eval_leaf = [&](const std::string& name, const std::string& desc, std::function<json(const OreRing&)> body) {
        auto* c = leaf(ev, name, desc);
        add_ring_opts(c, ro);
        c->add_option("--support", esupport, "comma-separated support")->required();
        c->add_option("--k", ek, "dimension")->required();
        c->add_option("--type", etype, "remainder or operator");
        c->callback([&, body] { action = [&, body] { return body(make_ring(ro)); }; });
        return c;
    };
    eval_leaf("code", "generator matrix", [&](const OreRing& A) {
        const LinearCode C = build_eval_code(A);
        json o;
        o["G"] = matrix_json(A.field(), C.generator());
        o["dimension"] = C.dim();
        return o;
    });
    eval_leaf("distance", "minimum distance", [&](const OreRing& A) {
        const LinearCode C = build_eval_code(A);
        if (emetric != "hamming" && emetric != "rank") throw CLI::ValidationError("--metric", "must be hamming or rank");
        const auto d = min_distance(A, C, emetric == "rank" ? Metric::rank : Metric::hamming);
        json o;
        o["distance"] = d.distance;
        o["witness"] = elems_json(A.field(), d.witness);
        return o;
    })->add_option("--metric", emetric, "hamming or rank")->capture_default_str();
    eval_leaf("certify", "MDS / MRD certification", [&](const OreRing& A) {
        if (ekind != "MDS" && ekind != "MRD") throw CLI::ValidationError("--kind", "must be MDS or MRD");
        const LinearCode C = build_eval_code(A);
        const auto r = certify(A, C, ekind == "MDS" ? CodeKind::MDS : CodeKind::MRD);
        json o;
        o["kind"] = ekind;
        o["holds"] = r.holds;
        o["distance"] = r.distance;
        o["singleton_bound"] = r.bound;
        o["cross_checked"] = r.cross_checked;
        o["cross_check_agrees"] = r.cross_check;
        o["witness"] = elems_json(A.field(), r.witness);
        return o;
    })->add_option("--kind", ekind, "MDS or MRD")->capture_default_str();
    {
        auto* c = leaf(ev, "rank", "rank of a word over the fixed field");
        add_ring_opts(c, ro);
        c->add_option("--word", eword, "comma-separated coordinates")->required();
        c->callback([&] {
            action = [&] {
                const OreRing A = make_ring(ro);
                json o;
                o["rank"] = rank_of_word(A, parse_elems(A.field(), eword));
                return o;
            };
        });
    }

    // ---- linearized
    auto* lin = app.add_subcommand("linearized", "q-linearized polynomials");
    lin->require_subcommand(1);
    std::string lfield, lpoly, lpoly2, lbasis;
    auto lin_leaf = [&](const std::string& name, const std::string& desc, std::function<json(const FiniteField&)> body) {
        auto* c = leaf(lin, name, desc);
        c->add_option("--field", lfield, "field literal")->required();
        c->callback([&, body] { action = [&, body] { return body(*make_field(lfield)); }; });
        return c;
    };
    lin_leaf("dickson", "Dickson matrix", [&](const FiniteField& F) {
        json o;
        o["dickson"] = matrix_json(F, dickson_matrix(F, parse_linearized(F, lpoly)));
        return o;
    })->add_option("--poly", lpoly, "linearized polynomial in y, e.g. y^2+w*y")->required();
    lin_leaf("evalmatrix", "matrix of the evaluation map over Z_q (columns = images of the basis)", [&](const FiniteField& F) {
        const auto X = lbasis.empty() ? canonical_basis(F) : parse_elems(F, lbasis);
        const auto g = parse_linearized(F, lpoly);
        json o;
        o["matrix"] = zq_matrix_json(evaluation_matrix(F, g, X));
        o["dickson_identity"] = dickson_identity_holds(F, g, X);
        return o;
    })->add_option("--poly", lpoly, "linearized polynomial")->required();
    {
        auto* c = lin_leaf("moore", "Moore matrix of a basis", [&](const FiniteField& F) {
            const auto X = lbasis.empty() ? canonical_basis(F) : parse_elems(F, lbasis);
            const auto M = moore_matrix(F, X);
            json o;
            o["moore"] = matrix_json(F, M);
            o["determinant"] = F.to_string(determinant(F, M));
            return o;
        });
        c->add_option("--basis", lbasis, "comma-separated basis (default 1, a, ..., a^(k-1))");
        lin->get_subcommand("evalmatrix")->add_option("--basis", lbasis, "basis");
        auto* k = lin_leaf("compose", "composition a o b", [&](const FiniteField& F) {
            json o;
            o["composition"] = linearized_string(F, compose(F, parse_linearized(F, lpoly), parse_linearized(F, lpoly2)));
            return o;
        });
        k->add_option("--a", lpoly, "outer polynomial")->required();
        k->add_option("--b", lpoly2, "inner polynomial")->required();
        lin_leaf("check", "matrix algebra isomorphism check for the field's q and k", [&](const FiniteField& F) {
            const auto rep = matrix_algebra_check(F.q(), F.k(), seed);
            json o;
            o["elements"] = rep.elements;
            o["distinct_images"] = rep.distinct_images;
            o["pairs_checked"] = rep.pairs_checked;
            o["exhaustive_pairs"] = rep.exhaustive_pairs;
            o["additive"] = rep.additive;
            o["multiplicative"] = rep.multiplicative;
            o["xk_to_identity"] = rep.xk_to_identity;
            o["isomorphism"] = rep.isomorphism();
            return o;
        });
    }

    // ---- spbw / spbwsets
    PBWOpts po;
    auto* spbw = app.add_subcommand("spbw", "skew PBW arithmetic, division and Groebner bases");
    spbw->require_subcommand(1);
    auto* sets = app.add_subcommand("spbwsets", "roots, varieties and ideals of points");
    sets->require_subcommand(1);
    auto pbw_leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* c = leaf(parent, name, desc);
        c->add_option("--presentation", po.presentation, "presentation JSON file")->required()->check(CLI::ExistingFile);
        c->callback([&, name] { action = [&, name] { return dispatch_spbw(name, po, seed); }; });
        return c;
    };
    pbw_leaf(spbw, "info", "presentation summary");
    {
        auto* c = pbw_leaf(spbw, "mul", "product a * b");
        c->add_option("--a", po.a)->required();
        c->add_option("--b", po.b)->required();
        auto* d = pbw_leaf(spbw, "divide", "division f = sum q_i f_i + h");
        d->add_option("--f", po.f)->required();
        d->add_option("--by", po.by, "comma-separated divisors")->required();
        d->add_option("--mode", po.mode, "leading (reduce the leading term only) or full")->capture_default_str();
        auto* g = pbw_leaf(spbw, "groebner", "left Groebner basis");
        g->add_option("--gens", po.gens)->required();
        auto* cl = pbw_leaf(spbw, "closure", "left Groebner basis of the two-sided ideal");
        cl->add_option("--gens", po.gens)->required();
        auto* rd = pbw_leaf(spbw, "reduce", "remainder modulo the left ideal of --gens");
        rd->add_option("--f", po.f)->required();
        rd->add_option("--gens", po.gens)->required();
    }
    {
        auto* r = pbw_leaf(sets, "roots", "root test at a point");
        r->add_option("--f", po.f)->required();
        r->add_option("--point", po.point, "comma-separated coordinates")->required();
        auto* v = pbw_leaf(sets, "variety", "vanishing set of generators");
        v->add_option("--gens", po.gens)->required();
        v->add_option("--domain", po.domain, "full: every point of K^n (default for finite fields)")->check(CLI::IsMember({"full"}));
        v->add_option("--candidates", po.candidates, "points separated by ';'");
        auto* i = pbw_leaf(sets, "ideal", "ideal of a finite point set");
        i->add_option("--points", po.points, "points separated by ';'")->required();
        i->add_option("--f", po.f, "membership query");
        i->add_option("--degree", po.degree, "degree bound for generators")->capture_default_str();
        auto* n = pbw_leaf(sets, "normal", "normality test");
        n->add_option("--f", po.f)->required();
        auto* c = pbw_leaf(sets, "center", "central monomials");
        c->add_option("--degree", po.degree)->capture_default_str();
        auto* ns = pbw_leaf(sets, "nullstellensatz", "checkable Nullstellensatz consequences");
        ns->add_option("--gens", po.gens)->required();
        ns->add_option("--degree", po.degree)->capture_default_str();
        ns->add_option("--samples", po.samples)->capture_default_str();
    }

    const bool wants_json = std::find(args.begin(), args.end(), "json") != args.end() &&
                            std::find(args.begin(), args.end(), "--format") != args.end();
    auto report = [&](const std::string& kind, const std::string& msg, int code) {
        if (wants_json || format == "json") {
            json e;
            e["error"] = {{"kind", kind}, {"message", msg}, {"exit_code", code}};
            out << e.dump(2) << "\n";
        } else {
            err << "error (" << kind << "): " << msg << "\n";
        }
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what(), exit_usage);
    }
    if (!action) return report("usage", "no command selected", exit_usage);
    try {
        emit(action(), format == "json", out);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what(), exit_usage);
    } catch (const guard_exceeded& e) {
        return report("guard", e.what(), exit_guard);
    } catch (const std::domain_error& e) {
        return report("domain", e.what(), exit_domain);
    } catch (const std::invalid_argument& e) {
        return report("domain", e.what(), exit_domain);
    } catch (const std::exception& e) {
        return report("internal", e.what(), exit_internal);
    }
}

}  // namespace skewalg::cli
