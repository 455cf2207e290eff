// Command-line driver: Springer torus tables, Schubert structure constants,
// xi images against the reference tables, and the orthogonal-Grassmannian
// ring reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "flagrep/golden.hpp"
#include "flagrep/invariants.hpp"
#include "flagrep/ogring.hpp"
#include "flagrep/schubert.hpp"
#include "flagrep/springer.hpp"
#include "flagrep/ximap.hpp"

using namespace flagrep;
using nlohmann::ordered_json;

namespace {

rootsys::RootDatum datum_for_label(const std::string& group, int rank) {
    if (group.size() == 2 && isdigit(group[1]))
        return rootsys::build_root_datum(group[0], group[1] - '0');
    if (group.size() == 1 && rank > 0) return rootsys::build_root_datum(group[0], rank);
    throw Error("bad group selector '" + group + "' (use e.g. G2, F4, E6, E7, or D --rank n)");
}

std::vector<int> parse_word_arg(const std::string& s) {
    std::vector<int> w;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            w.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) w.push_back(std::stoi(cur));
    return w;
}

int run_theta(const std::string& group, int rank, const std::string& weight,
              const std::string& format, const std::string& data_dir, bool check) {
    rootsys::RootDatum rd = datum_for_label(group, rank);
    auto lambda = springer::minimal_dynkin_weight(rd);
    if (!weight.empty()) {
        std::string expect = "omega" + [&] {
            for (int i = 0; i < rd.rank; ++i)
                if (lambda[i] == 1) return std::to_string(i + 1);
            return std::string("?");
        }();
        if (weight != expect)
            throw Error("this engine tabulates " + expect + " for " + rd.label());
    }
    springer::TorusMap tm = springer::theta_for_group(rd);
    bool all_match = true;
    std::vector<std::string> status(tm.coords.size(), "computed");
    if (check) {
        auto table = golden::load_theta_table(data_dir, rd.label());
        for (size_t i = 0; i < tm.coords.size(); ++i) {
            bool ok = table.coordinates[i].str() == tm.coords[i].str();
            status[i] = ok ? "match" : "mismatch";
            all_match = all_match && ok;
        }
    }
    if (format == "json") {
        ordered_json out;
        out["group"] = rd.label();
        out["weight"] = "omega" + std::to_string(1 + static_cast<int>(
                            std::find(lambda.begin(), lambda.end(), 1) - lambda.begin()));
        out["coordinates"] = ordered_json::array();
        for (size_t i = 0; i < tm.coords.size(); ++i) {
            ordered_json c;
            c["name"] = "Theta" + std::to_string(i + 1);
            c["value"] = tm.coords[i].str();
            if (check) c["status"] = status[i];
            out["coordinates"].push_back(c);
        }
        std::cout << out.dump(1) << "\n";
    } else {
        for (size_t i = 0; i < tm.coords.size(); ++i) {
            std::cout << "Theta_" << (i + 1) << "(t) = " << tm.coords[i].str();
            if (check) std::cout << "   [" << status[i] << "]";
            std::cout << "\n";
        }
    }
    return all_match ? 0 : 1;
}

int run_duan(const std::string& group, int rank, const std::string& w, const std::string& u,
             const std::string& v, const std::string& cache_path) {
    rootsys::RootDatum rd = datum_for_label(group, rank);
    auto ww = parse_word_arg(w);
    auto uu = rootsys::weyl_from_word(rd, parse_word_arg(u));
    auto vv = rootsys::weyl_from_word(rd, parse_word_arg(v));
    if (static_cast<int>(ww.size()) != uu.length + vv.length) {
        std::cout << "0   (zero by grading: l(w) != l(u) + l(v))\n";
        return 0;
    }
    std::unique_ptr<schubert::ConstantCache> cache;
    if (!cache_path.empty()) cache = std::make_unique<schubert::ConstantCache>(cache_path);
    long c;
    if (cache) {
        auto key = schubert::ConstantCache::key(rd, rootsys::weyl_from_word(rd, ww).word,
                                                uu.word, vv.word);
        if (auto hit = cache->get(key)) {
            c = *hit;
        } else {
            c = schubert::structure_constant_with_word(rd, uu, vv, ww);
            cache->put(rd, rootsys::weyl_from_word(rd, ww).word, uu.word, vv.word, c);
        }
    } else {
        c = schubert::structure_constant_with_word(rd, uu, vv, ww);
    }
    std::cout << c << "\n";
    return 0;
}

int run_xi(const std::string& group, int parabolic, int ceiling, const std::string& format,
           const std::string& data_dir, int jobs) {
    rootsys::RootDatum rd = datum_for_label(group, 0);
    if (ceiling <= 0) {
        // desk-scale defaults; higher degrees are an explicit opt-in
        if (rd.type == 'E' && rd.rank == 7) ceiling = 6;
        else if (rd.type == 'E' && rd.rank == 6) ceiling = 10;
        else ceiling = 6;
    }
    auto lib = invariants::load_case_library(data_dir);
    auto table = golden::load_xi_table(data_dir, rd.label());
    // stream per-row progress on stderr so long runs remain observable
    auto progress = [&](const ximap::XiRow& row) {
        std::cerr << "row " << rd.label() << " P" << row.r << " " << row.generator << ": "
                  << row.status << "\n";
    };
    ximap::XiReport rep =
        ximap::report_section(rd, lib, table, parabolic, ceiling, jobs, progress);
    if (format == "json") {
        ordered_json out;
        out["group"] = rep.group;
        out["ceiling"] = rep.ceiling;
        out["rows"] = ordered_json::array();
        for (const auto& row : rep.rows) {
            ordered_json r;
            r["r"] = row.r;
            r["generator"] = row.generator;
            r["degree"] = row.degree;
            r["image"] = ordered_json::array();
            for (const auto& [w, c] : row.image.support) {
                ordered_json term;
                term["word"] = w.word;
                term["coeff"] = rat_str(c);
                r["image"].push_back(term);
            }
            r["paper"] = row.paper;
            r["status"] = row.status;
            out["rows"].push_back(r);
        }
        out["matched"] = rep.matched();
        out["mismatched"] = rep.mismatched();
        out["skipped"] = rep.skipped();
        std::cout << out.dump(1) << "\n";
    } else {
        for (const auto& row : rep.rows) {
            std::cout << rep.group << " P" << row.r << "  " << row.generator << "  ->  ";
            if (row.status == "skipped") {
                std::cout << "(skipped: degree " << row.degree << " above ceiling "
                          << rep.ceiling << ")\n";
                continue;
            }
            std::cout << row.computed << "   [" << row.status << "]";
            if (row.status != "match") std::cout << "   published: " << row.paper;
            std::cout << "\n";
        }
        std::cout << rep.matched() << " match, " << rep.mismatched() << " mismatch(paper), "
                  << rep.skipped() << " skipped\n";
    }
    return rep.mismatched() == 0 ? 0 : 1;
}

int run_ogring(int k, int n, bool stable, int trunc, bool hilbert, bool mod2, bool json_out) {
    ordered_json out;
    int status = 0;
    if (hilbert) {
        if (stable) {
            ogring::RingQ ring = ogring::RingQ::stable(k, trunc);
            out["stable"] = true;
            out["k"] = k;
            out["truncation"] = trunc;
            out["hilbert"] = ring.hilbert();
        } else {
            ogring::RingQ ring = ogring::RingQ::finite(k, n);
            out["k"] = k;
            out["n"] = n;
            out["hilbert"] = ring.hilbert();
            long total = 0;
            for (long h : ring.hilbert()) total += h;
            out["total"] = total;
        }
    }
    if (mod2) {
        auto rep = ogring::mod2_injectivity_check(k, trunc);
        ordered_json degrees = ordered_json::array();
        for (const auto& d : rep.degrees) {
            ordered_json dd;
            dd["weight"] = d.weight;
            dd["source_dim"] = d.source_dim;
            dd["rank"] = d.rank;
            dd["injective"] = d.injective;
            degrees.push_back(dd);
        }
        out["mod2_injectivity"] = {{"k", rep.k},
                                   {"truncation", rep.truncation},
                                   {"all_injective", rep.all_injective},
                                   {"images_match_displayed", rep.images_match_displayed},
                                   {"parity_core_holds", rep.parity_core_holds},
                                   {"degrees", degrees}};
        if (!rep.all_injective || !rep.images_match_displayed) status = 1;
    }
    if (json_out) {
        std::cout << out.dump(1) << "\n";
        return status;
    }
    if (out.contains("hilbert")) {
        std::cout << (stable ? "stable ring k=" + std::to_string(k) + " trunc=" +
                                   std::to_string(trunc)
                             : "OG(" + std::to_string(n - k) + "," + std::to_string(2 * n) + ")")
                  << " graded dimensions:";
        for (const auto& h : out["hilbert"]) std::cout << " " << h;
        if (out.contains("total")) std::cout << "  (total " << out["total"] << ")";
        std::cout << "\n";
    }
    if (out.contains("mod2_injectivity")) {
        const auto& m = out["mod2_injectivity"];
        std::cout << "mod-2 injectivity k=" << m["k"] << " trunc=" << m["truncation"]
                  << ": " << (m["all_injective"].get<bool>() ? "full rank in every degree"
                                                             : "RANK DEFECT")
                  << ", displayed images " << (m["images_match_displayed"].get<bool>() ? "hold" : "FAIL")
                  << "\n";
        for (const auto& d : m["degrees"])
            std::cout << "  weight " << d["weight"] << ": dim " << d["source_dim"] << ", rank "
                      << d["rank"] << (d["injective"].get<bool>() ? "" : "  <-- not injective")
                      << "\n";
    }
    return status;
}

int run_verify(const std::string& suite, const std::string& data_dir, int jobs,
               const std::string& cache_path) {
    int failures = 0;
    auto line = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    bool all = suite == "all";

    if (all || suite == "rank3-engines") {
        for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
            rootsys::RootDatum rd = rootsys::build_root_datum(t, r);
            schubert::CohomologyContext ctx(rd, rd.num_pos_roots());
            const auto& ball = ctx.ball();
            bool ok = true;
            long pairs = 0;
            for (int i = 0; i < ball.size() && ok; ++i)
                for (int j = 0; j < ball.size() && ok; ++j) {
                    if (ball.length(i) + ball.length(j) > rd.num_pos_roots()) continue;
                    schubert::SchubertClass a, b;
                    a.tag = b.tag = schubert::SpaceTag{rd.type, rd.rank, {}};
                    a.add(ball.element(i), 1);
                    b.add(ball.element(j), 1);
                    ok = ctx.cup_product(a, b, schubert::Engine::chevalley) ==
                         ctx.cup_product(a, b, schubert::Engine::duan);
                    ++pairs;
                }
            line("engine agreement " + rd.label() + " (" + std::to_string(pairs) + " pairs)", ok);
        }
    }
    if (all || suite == "typeD") {
        for (auto [n, k] : {std::pair<int, int>{4, 2}, {5, 2}, {5, 3}}) {
            rootsys::RootDatum rd = rootsys::build_root_datum('D', n);
            schubert::CohomologyContext ctx(rd, rd.num_pos_roots());
            bool ok = true;
            for (int i = 1; i <= k; ++i) ok = ok && ximap::verify_chern_identity_D(ctx, n, k, i);
            line("type-D generator identity OG(" + std::to_string(n - k) + "," +
                     std::to_string(2 * n) + ")",
                 ok);
        }
    }
    if (all || suite == "functoriality") {
        auto lib = invariants::load_case_library(data_dir);
        {
            rootsys::RootDatum g2 = rootsys::build_root_datum('G', 2);
            schubert::CohomologyContext ctx(g2, 6);
            bool ok = true;
            for (int r = 1; r <= 2; ++r)
                for (const auto& gen : lib.get("G2", r).generators)
                    ok = ok && ximap::functoriality_check(ctx, gen.poly, {1, 2}, {r});
            line("functoriality B in P_r (G2)", ok);
        }
        {
            rootsys::RootDatum f4 = rootsys::build_root_datum('F', 4);
            schubert::CohomologyContext ctx(f4, 6);
            bool ok = true;
            for (int r = 1; r <= 4; ++r)
                for (const auto& gen : lib.get("F4", r).generators)
                    ok = ok && ximap::functoriality_check(ctx, gen.poly, {1, 2, 3, 4}, {r});
            line("functoriality B in P_r (F4)", ok);
        }
    }
    if (all || suite == "golden") {
        for (const char* g : {"G2", "F4", "E6", "E7"}) {
            rootsys::RootDatum rd = datum_for_label(g, 0);
            springer::TorusMap tm = springer::theta_for_group(rd);
            auto table = golden::load_theta_table(data_dir, g);
            bool ok = true;
            for (size_t i = 0; i < tm.coords.size(); ++i)
                ok = ok && table.coordinates[i].str() == tm.coords[i].str();
            line(std::string("theta table ") + g, ok);
        }
        auto lib = invariants::load_case_library(data_dir);
        struct Sweep { const char* g; int ceiling; };
        for (auto [g, ceiling] : {Sweep{"G2", 6}, {"F4", 6}, {"E6", 10}, {"E7", 12}}) {
            rootsys::RootDatum rd = datum_for_label(g, 0);
            auto table = golden::load_xi_table(data_dir, g);
            ximap::XiReport rep = ximap::report_section(rd, lib, table, 0, ceiling, jobs);
            bool ok = rep.skipped() == 0;
            for (const auto& row : rep.rows)
                ok = ok && (row.status == "match" || row.status == "mismatch(paper)");
            line(std::string("xi rows stable (match or cross-engine mismatch): ") + g, ok);
            std::cout << "       " << rep.matched() << " match / " << rep.mismatched()
                      << " mismatch(paper)\n";
        }
    }
    if (suite == "cache-integrity") {
        if (cache_path.empty()) throw Error("cache-integrity needs --cache");
        schubert::ConstantCache cache(cache_path);
        size_t checked = cache.verify_sample(0.01, 20240817);
        line("cache integrity (" + std::to_string(checked) + " of " +
                 std::to_string(cache.size()) + " records resampled)",
             true);
    }
    return failures == 0 ? 0 : 1;
}

int run_selftest(const std::string& data_dir) {
    int failures = 0;
    auto line = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };
    {
        rootsys::RootDatum rd = rootsys::build_root_datum('G', 2);
        auto tm = springer::theta_for_group(rd);
        auto table = golden::load_theta_table(data_dir, "G2");
        line("G2 theta", tm.coords[0].str() == table.coordinates[0].str() &&
                             tm.coords[1].str() == table.coordinates[1].str());
    }
    {
        rootsys::RootDatum rd = rootsys::build_root_datum('A', 2);
        schubert::CohomologyContext ctx(rd, 3);
        schubert::SchubertClass a;
        a.tag = schubert::SpaceTag{'A', 2, {}};
        a.add(rootsys::weyl_simple(rd, 1), 1);
        auto sq = ctx.cup_product(a, a, schubert::Engine::duan);
        line("A2 duan square", sq.support.size() == 1 &&
                                   sq.support.begin()->first.word == std::vector<int>{2, 1});
    }
    {
        ogring::RingQ ring = ogring::RingQ::finite(2, 4);
        long total = 0;
        for (long h : ring.hilbert()) total += h;
        line("OG(2,8) Hilbert total 24", total == 24);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Schubert-calculus engine for representation-ring characteristic maps"};
    app.require_subcommand(1);
    std::string data_dir = golden::default_data_dir();
    app.add_option("--data-dir", data_dir, "data directory (case library + reference tables)");

    std::string group, weight, format = "text", cache_path, wword, uword, vword, suite = "all";
    int rank = 0, parabolic = 0, ceiling = 0, jobs = 1;
    int k = 2, n = 4, trunc = 8;
    bool stable = false, hilbert = false, mod2 = false, json_out = false, check = false;

    auto* theta = app.add_subcommand("theta", "Springer torus coordinates");
    theta->add_option("--group", group)->required();
    theta->add_option("--rank", rank);
    theta->add_option("--weight", weight);
    theta->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    theta->add_flag("--check-golden", check, "compare against the reference table");

    auto* duan = app.add_subcommand("duan", "Schubert structure constant via the Duan operator");
    duan->add_option("--group", group)->required();
    duan->add_option("--rank", rank);
    duan->add_option("--w", wword)->required();
    duan->add_option("--u", uword)->required();
    duan->add_option("--v", vword)->required();
    duan->add_option("--cache", cache_path);

    auto* xi = app.add_subcommand("xi", "xi images in the Schubert basis vs the reference table");
    xi->add_option("--group", group)->required();
    xi->add_option("--parabolic", parabolic);
    xi->add_option("--ceiling", ceiling, "degree ceiling (0 = desk-scale default)");
    xi->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    xi->add_option("--jobs", jobs);

    auto* og = app.add_subcommand("ogring", "orthogonal Grassmannian ring reports");
    og->add_option("--k", k);
    og->add_option("--n", n);
    og->add_flag("--stable", stable);
    og->add_option("--trunc", trunc);
    og->add_flag("--hilbert", hilbert);
    og->add_flag("--mod2-injectivity", mod2);
    og->add_flag("--json", json_out);

    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "rank3-engines", "typeD", "functoriality", "golden",
                               "cache-integrity"}));
    verify->add_option("--jobs", jobs);
    verify->add_option("--cache", cache_path);

    auto* selftest = app.add_subcommand("selftest", "quick sanity checks");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (theta->parsed()) return run_theta(group, rank, weight, format, data_dir, check);
        if (duan->parsed()) return run_duan(group, rank, wword, uword, vword, cache_path);
        if (xi->parsed()) return run_xi(group, parabolic, ceiling, format, data_dir, jobs);
        if (og->parsed()) return run_ogring(k, n, stable, trunc, hilbert, mod2, json_out);
        if (verify->parsed()) return run_verify(suite, data_dir, jobs, cache_path);
        if (selftest->parsed()) return run_selftest(data_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
