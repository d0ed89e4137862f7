#include "cqs/collections.hpp"
#include "cqs/dp2.hpp"
#include "cqs/eckardt.hpp"
#include "cqs/mckay.hpp"
#include "cqs/resolution.hpp"
#include "cqs/surface.hpp"
#include "cqs/tilting.hpp"
#include "cqs/toric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace cqs;
using nlohmann::json;

namespace {

struct CheckFailed {};

std::string list_str(const std::vector<long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << text;
}

std::string collection_name(std::string s) {
    for (auto& c : s)
        if (c == '-') c = '_';
    return s;
}

int cmd_hj(long r, long a) {
    std::cout << list_str(hj_expand(CyclicType::make(r, a))) << "\n";
    return 0;
}

int cmd_series(long r, long a, bool as_json) {
    auto t = CyclicType::make(r, a);
    auto hj = hj_expand(t);
    auto is = i_series(t), js = j_series(t);
    if (as_json) {
        json j{{"r", r}, {"a", a}, {"hj", hj}, {"i", is}, {"j", js}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "hj=" << list_str(hj) << "\ni=" << list_str(is) << "\nj=" << list_str(js) << "\n";
    for (long s = 0; s <= t.n() + 1; ++s) std::cout << "h(" << s << ")=" << list_str(h_series(t, s)) << "\n";
    return 0;
}

int cmd_quiver(long r, long a, const std::string& dot) {
    auto q = mckay_quiver(CyclicType::make(r, a));
    if (!dot.empty()) write_file(dot, to_dot(q));
    else std::cout << to_dot(q);
    std::cout << "vertices=" << r << " solid=" << q.solid_count() << " dashed=" << q.dashed_count() << "\n";
    return 0;
}

int cmd_psi(long r, long a, std::optional<long> w, bool oracle) {
    auto t = CyclicType::make(r, a);
    bool ok = true;
    std::optional<SectionDivisors> sd;
    if (oracle) sd = section_divisors(t);
    for (long i = 0; i < r; ++i) {
        if (w && mod(*w, r) != i) continue;
        auto f = psi_simple(t, i);
        std::cout << "i=" << i << " psi=" << f.str();
        if (oracle) {
            auto o = psi_toric_oracle(t, i, *sd);
            std::cout << " oracle=" << o.str() << " match=" << (o == f ? "true" : "false");
            ok = ok && o == f;
        }
        std::cout << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_resolve_cone(long x1, long y1, long x2, long y2) {
    LVec u{x1, y1}, w{x2, y2};
    auto nf = normal_form_2d(u, w);
    std::cout << "type=1/" << nf.r << "(1," << nf.a_raw << ") canonical_a=" << nf.a << "\n";
    if (nf.r == 1) {
        std::cout << "smooth\n";
        return 0;
    }
    const auto& g = nf.basis_change;
    long d = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    std::vector<LVec> inv{{g[1][1] * d, -g[0][1] * d}, {-g[1][0] * d, g[0][0] * d}};
    auto rays = resolve_2d(CyclicType::make(nf.r, nf.a_raw));
    std::cout << "rays:";
    for (auto& v : rays) {
        LVec o{inv[0][0] * v[0] + inv[0][1] * v[1], inv[1][0] * v[0] + inv[1][1] * v[1]};
        std::cout << " (" << o[0] << "," << o[1] << ")";
    }
    std::cout << "\nhj=" << list_str(hj_expand(CyclicType::make(nf.r, nf.a_raw))) << "\n";
    return 0;
}

int cmd_jk_fan(long k) {
    auto rep = jk_fan_verify(k);
    for (auto& c : rep.checks) std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << (c.detail.empty() ? "" : " " + c.detail) << "\n";
    return rep.all_pass() ? 0 : 1;
}

json clique_json(const Dp2Data& d, const Clique& c) {
    json a = json::array();
    for (int x : c) a.push_back(d.vecs[x]);
    return a;
}

int cmd_dp2(const std::string& what, const std::string& json_path) {
    const auto& d = dp2_data();
    json out;
    if (what == "count") {
        std::cout << "vectors=" << d.vecs.size() << " dual_pairs=" << d.dual_pairs() << " cliques=" << d.cliques.size()
                  << " exc_sets=" << d.exc_sets.size() << "\n";
        out = {{"vectors", d.vecs.size()}, {"dual_pairs", d.dual_pairs()}, {"cliques", d.cliques.size()},
               {"exc_sets", d.exc_sets.size()}};
    } else if (what == "cliques") {
        out = json::array();
        for (auto& c : d.cliques) out.push_back(clique_json(d, c));
        std::cout << "cliques=" << d.cliques.size() << "\n";
    } else if (what == "exc-sets") {
        out = json::array();
        for (auto& s : d.exc_sets) {
            json a = json::array();
            for (int x : s) a.push_back(d.vecs[x]);
            out.push_back(a);
        }
        std::cout << "exc_sets=" << d.exc_sets.size() << "\n";
    } else if (what == "clique-cover") {
        long mode_i = 0, mode_ii = 0;
        std::map<std::string, long> hist;
        bool ok = true;
        for (auto& c : d.cliques) {
            auto s1 = disjoint_exc_sets(d, c, false);
            mode_i += !s1.empty();
            mode_ii += !disjoint_exc_sets(d, c, true).empty();
            for (int s : s1) {
                auto p = classify_clique_images(d, c, d.exc_sets[s]);
                ok = ok && allowed_pattern(p);
                ++hist[pattern_str(p)];
            }
        }
        ok = ok && mode_i == static_cast<long>(d.cliques.size()) && mode_ii == static_cast<long>(d.cliques.size());
        std::cout << "mode_i=" << mode_i << "/" << d.cliques.size() << " mode_ii=" << mode_ii << "/" << d.cliques.size()
                  << "\n";
        for (auto& [p, n] : hist) std::cout << "pattern " << p << " pairs=" << n << "\n";
        std::cout << "allowed_patterns_only=" << (ok ? "true" : "false") << "\n";
        out = {{"mode_i", mode_i}, {"mode_ii", mode_ii}, {"patterns", hist}, {"pass", ok}};
        if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
        return ok ? 0 : 1;
    } else {
        throw ValidationError("unknown dp2 subcommand '" + what + "'");
    }
    if (!json_path.empty()) write_file(json_path, out.dump(2) + "\n");
    return 0;
}

int report_validation(const ValidationReport& r) {
    for (auto& c : r.checks) std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "valid=" << (r.pass() ? "true" : "false") << "\n";
    return r.pass() ? 0 : 1;
}

int cmd_eckardt(const std::string& what, const std::string& path) {
    if (what == "build-a") {
        auto c = build_config_a(default_seed_a());
        auto r = validate_config(c);
        if (!path.empty()) write_file(path, to_json(c).dump(2) + "\n");
        else std::cout << to_json(c).dump(2) << "\n";
        return report_validation(r);
    }
    if (what == "validate") {
        std::ifstream f(path);
        if (!f) throw ValidationError("cannot read '" + path + "'");
        json j;
        try {
            j = json::parse(f);
        } catch (const json::exception& e) {
            throw ValidationError(std::string("malformed JSON: ") + e.what());
        }
        auto c = config_from_json(j);
        auto r = validate_config(c);
        auto cls = lattice_classes(c);
        std::array<LClass, 7> e7;
        for (int i = 0; i < 7; ++i) {
            e7[i] = LClass(8, 0);
            e7[i][i + 1] = 1;
        }
        std::cout << "pattern=" << pattern_str(classify_clique_images(dp2_data(), cls, e7)) << "\n";
        return report_validation(r);
    }
    throw ValidationError("unknown eckardt subcommand '" + what + "'");
}

int cmd_surface(long k, bool inter, bool classes) {
    auto s = build_surface(k);
    if (!inter && !classes) inter = classes = true;
    if (classes) {
        for (int c = 0; c < s.curve_count(); ++c) std::cout << s.label[c] << " = " << pic_str(s.basis, s.curve[c]) << "\n";
        std::cout << "K = " << pic_str(s.basis, s.K) << "\nD = " << pic_str(s.basis, s.D) << "\n";
        auto d = discrepancies_closed_form(k);
        auto ds = discrepancies_solved(s);
        std::cout << "discrepancy F: " << rat_str(d.d) << "\n";
        for (size_t j = 0; j < d.dj.size(); ++j) std::cout << "discrepancy d_" << j + 1 << ": " << rat_str(d.dj[j]) << "\n";
        auto r = ranks(k);
        std::cout << "rank Pic=" << r.picard << " K0=" << r.k_theory << " rho(X)=" << r.rho_X << "\n";
        bool ok = d.d == ds.d && d.dj == ds.dj;
        std::cout << "discrepancies_match=" << (ok ? "true" : "false") << "\n";
        if (!ok) return 1;
    }
    if (inter) {
        std::cout << "curve";
        for (int c = 0; c < s.curve_count(); ++c) std::cout << "," << s.label[c];
        std::cout << "\n";
        for (int a = 0; a < s.curve_count(); ++a) {
            std::cout << s.label[a];
            for (int b = 0; b < s.curve_count(); ++b) std::cout << "," << pic_dot(s.curve[a], s.curve[b]);
            std::cout << "\n";
        }
        std::cout << "K.K=" << pic_dot(s.K, s.K) << " D.D=" << pic_dot(s.D, s.D) << " D.K=" << pic_dot(s.D, s.K) << "\n";
    }
    return 0;
}

int cmd_gram(long k, const std::string& label, const std::string& csv) {
    auto s = build_surface(k);
    auto c = build_collection(k, collection_name(label));
    auto g = gram(s, c);
    std::string text = "label";
    for (auto& o : c.objects) text += "," + o.label();
    text += "\n";
    bool tri = true;
    for (size_t a = 0; a < g.size(); ++a) {
        text += c.objects[a].label();
        for (size_t b = 0; b < g.size(); ++b) {
            text += "," + std::to_string(g[a][b]);
            if ((a == b && g[a][b] != 1) || (b < a && g[a][b] != 0)) tri = false;
        }
        text += "\n";
    }
    if (!csv.empty()) write_file(csv, text);
    else std::cout << text;
    auto det = det_of(g);
    std::cout << "size=" << g.size() << " unit_upper_triangular=" << (tri ? "true" : "false") << " det=" << det.get_str()
              << "\n";
    return tri && det == 1 ? 0 : 1;
}

int cmd_tables(long k) {
    auto rep = verify_tables(k);
    std::map<std::string, std::pair<long, long>> tally;
    for (auto& e : rep.entries) {
        auto& t = tally[e.table];
        ++t.first;
        t.second += e.ok;
    }
    for (auto& [t, n] : tally) std::cout << t << ": " << n.second << "/" << n.first << " entries match\n";
    for (auto& e : rep.mismatches())
        std::cout << "MISMATCH " << e.table << " (" << e.from << ", " << e.to << ") expected " << e.expected << " got "
                  << e.got << "\n";
    return rep.all_ok() ? 0 : 1;
}

int cmd_tilting(long k, const std::string& label) {
    auto s = build_surface(k);
    auto c = build_collection(k, collection_name(label));
    auto rep = universal_extension_tilting(s, c);
    std::cout << "collection=" << c.label << " objects=" << c.objects.size() << " steps=" << rep.steps.size() << "\n";
    for (auto& st : rep.steps)
        std::cout << "step " << c.objects[st.to].label() << " <- " << rep.summands[st.from].label << "^" << st.r.str() << "\n";
    for (auto& sm : rep.summands)
        if (sm.label != c.objects[sm.index].label()) std::cout << "summand " << sm.label << " = " << sm.provenance << "\n";
    std::cout << "certified_pairs=" << rep.certified_pairs << "/" << c.objects.size() * c.objects.size() << "\n";
    for (auto& u : rep.undetermined)
        std::cout << "undetermined (" << rep.summands[u.a].label << ", " << rep.summands[u.b].label << ") degree "
                  << u.degree << " dim " << u.dim.str() << "\n";
    std::cout << "undetermined=" << rep.undetermined.size() << "\n";
    return rep.undetermined.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic quotient singularities and the jk surfaces"};
    app.require_subcommand(1);
    int code = 0;
    long r = 0, a = 0, k = 0, x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    bool as_json = false, oracle = false, verify = false, inter = false, classes = false;
    std::string path, what, collection = "sigma-mut";
    std::optional<long> weight;

    auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion");
    hj->add_option("R", r)->required();
    hj->add_option("A", a)->required();
    hj->callback([&] { code = cmd_hj(r, a); });

    auto* series = app.add_subcommand("series", "I, J and H series");
    series->add_option("R", r)->required();
    series->add_option("A", a)->required();
    series->add_flag("--json", as_json);
    series->callback([&] { code = cmd_series(r, a, as_json); });

    auto* quiver = app.add_subcommand("quiver", "McKay quiver");
    quiver->add_option("R", r)->required();
    quiver->add_option("A", a)->required();
    quiver->add_option("--dot", path);
    quiver->callback([&] { code = cmd_quiver(r, a, path); });

    auto* psi = app.add_subcommand("psi", "images of the simples");
    psi->add_option("R", r)->required();
    psi->add_option("A", a)->required();
    psi->add_option("--i", weight);
    psi->add_flag("--oracle", oracle);
    psi->callback([&] { code = cmd_psi(r, a, weight, oracle); });

    auto* cone = app.add_subcommand("resolve-cone", "resolve the cone spanned by two lattice vectors");
    cone->add_option("X1", x1)->required();
    cone->add_option("Y1", y1)->required();
    cone->add_option("X2", x2)->required();
    cone->add_option("Y2", y2)->required();
    cone->callback([&] { code = cmd_resolve_cone(x1, y1, x2, y2); });

    auto* fan = app.add_subcommand("jk-fan", "fan-level checks of the jk resolution");
    fan->add_option("K", k)->required();
    fan->add_flag("--verify", verify);
    fan->callback([&] { code = cmd_jk_fan(k); });

    auto* dp2 = app.add_subcommand("dp2", "degree two del Pezzo lattice");
    dp2->add_option("WHAT", what)->required()->check(CLI::IsMember({"count", "cliques", "exc-sets", "clique-cover"}));
    dp2->add_option("--json", path);
    dp2->callback([&] { code = cmd_dp2(what, path); });

    auto* eck = app.add_subcommand("eckardt", "plane configurations");
    eck->add_option("WHAT", what)->required()->check(CLI::IsMember({"build-a", "validate"}));
    eck->add_option("PATH", path);
    eck->callback([&] {
        if (what == "validate" && path.empty()) throw ValidationError("validate needs a PATH");
        code = cmd_eckardt(what, path);
    });

    auto* jk = app.add_subcommand("jk", "the jk surfaces and their collections");
    jk->require_subcommand(1);
    auto* surf = jk->add_subcommand("surface", "curve classes and intersections");
    surf->add_option("K", k)->required();
    surf->add_flag("--intersections", inter);
    surf->add_flag("--classes", classes);
    surf->callback([&] { code = cmd_surface(k, inter, classes); });
    auto* gr = jk->add_subcommand("gram", "Gram matrix of a collection");
    gr->add_option("K", k)->required();
    gr->add_option("--collection", collection)
        ->required()
        ->check(CLI::IsMember({"sigma", "sigma-mut", "stack", "stack-shift", "stack-mut"}));
    gr->add_option("--csv", path);
    gr->callback([&] { code = cmd_gram(k, collection, path); });
    auto* tb = jk->add_subcommand("tables", "reproduce the Hom tables");
    tb->add_option("K", k)->required();
    tb->callback([&] { code = cmd_tables(k); });
    auto* tl = jk->add_subcommand("tilting", "universal extension tilting");
    tl->add_option("K", k)->required();
    tl->add_option("--collection", collection)->check(CLI::IsMember({"sigma-mut", "stack-mut"}));
    tl->callback([&] { code = cmd_tilting(k, collection); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
