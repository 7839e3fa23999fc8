#include "besse/cli.hpp"

#include "besse/chern.hpp"
#include "besse/classify.hpp"
#include "besse/homology.hpp"
#include "besse/morse_bott.hpp"
#include "besse/rs_index.hpp"
#include "besse/seifert.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace besse::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string group_string(int free_rank, const std::vector<Int>& torsion) {
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) s += " + ";
        s += part;
    };
    if (free_rank == 1) append("Z");
    if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const Int& d : torsion) append("Z/" + d.str());
    return s.empty() ? "0" : s;
}

Json torsion_json(const std::vector<Int>& torsion) {
    Json t = Json::array();
    for (const Int& d : torsion) t.push_back(to_int64(d));
    return t;
}

struct DataOptions {
    std::string text;
    bool reverse = false;
};

SeifertData load_data(const DataOptions& opt, std::ostream& err) {
    SeifertData d = parse_seifert(opt.text);
    if (opt.reverse) d = reverse_orientation(d);
    Rational e = euler_number(d);
    if (e < 0)
        err << "warning: e = " << to_string(e)
            << " < 0; the Besse orientation has e > 0 (try --reverse-orientation)\n";
    return d;
}

int cmd_invariants(const DataOptions& opt, bool json, std::ostream& out, std::ostream& err) {
    SeifertData d = load_data(opt, err);
    Rational e = euler_number(d);
    Rational chi = orbifold_euler_char(d);
    ChernReport report = chern_report(d);  // throws when e = 0
    H2Presentation h2 = h2_presentation(d);
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["normalized"] = render(normalize(d));
        j["e"] = to_string(e);
        j["chi"] = to_string(chi);
        j["chi_over_e"] = to_string(report.chi_over_e);
        j["c1_trivial"] = report.trivial;
        j["h1"] = Json{{"free_rank", h2.free_rank}, {"torsion", torsion_json(h2.torsion)}};
        out << j.dump() << "\n";
    } else {
        out << "data: " << render(normalize(d)) << "\n";
        out << "e = " << to_string(e) << "\n";
        out << "chi = " << to_string(chi) << "\n";
        out << "chi/e = " << to_string(report.chi_over_e) << "\n";
        out << "c1 trivial: " << (report.trivial ? "yes" : "no") << "\n";
        out << "H_1 = " << group_string(h2.free_rank, h2.torsion) << "\n";
    }
    return 0;
}

int cmd_homology(const DataOptions& opt, bool json, std::ostream& out, std::ostream& err) {
    SeifertData d = load_data(opt, err);
    CWComplexData complex = chain_complex(d);
    HomologyGroups integral = homology_groups(complex, Coefficients::Integers);
    HomologyGroups mod2 = homology_groups(complex, Coefficients::Mod2);
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["b0_form"] = render(complex.source);
        Json groups = Json::array();
        for (int deg = 0; deg < 4; ++deg)
            groups.push_back(Json{{"degree", deg},
                                  {"free_rank", integral.free_rank[deg]},
                                  {"torsion", torsion_json(integral.torsion[deg])}});
        j["integral"] = groups;
        j["mod2_ranks"] = mod2.free_rank;
        out << j.dump() << "\n";
    } else {
        for (int deg = 0; deg < 4; ++deg)
            out << "H_" << deg << " = " << group_string(integral.free_rank[deg], integral.torsion[deg]) << "\n";
        out << "mod-2 ranks: (" << mod2.free_rank[0] << "," << mod2.free_rank[1] << ","
            << mod2.free_rank[2] << "," << mod2.free_rank[3] << ")\n";
    }
    return 0;
}

int cmd_chern(const DataOptions& opt, bool json, std::ostream& out, std::ostream& err) {
    SeifertData d = load_data(opt, err);
    ChernReport report = chern_report(d);
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["b0_form"] = render(b0_form(d));
        Json c1 = Json::array();
        for (const Int& v : report.c1) c1.push_back(to_int64(v));
        j["c1_vector"] = c1;
        j["chi_over_e"] = to_string(report.chi_over_e);
        j["integer_flag"] = report.integer_flag;
        j["divisibility"] = report.divisibility;
        j["trivial"] = report.trivial;
        if (report.lattice_witness) {
            Json w = Json::array();
            for (const Int& v : *report.lattice_witness) w.push_back(to_int64(v));
            j["lattice_witness"] = w;
        } else {
            j["lattice_witness"] = nullptr;
        }
        if (report.trivial) {
            TrivializationLedger ledger = trivialization_data(d);
            Json pairs = Json::array();
            for (const PairCorrection& c : ledger.pairs)
                pairs.push_back(Json{{"alpha", c.alpha},
                                     {"beta", c.beta},
                                     {"a", c.a},
                                     {"p", c.p},
                                     {"q", c.q},
                                     {"d_rotation", c.d_rotation}});
            j["trivialization"] = Json{{"b_corr", ledger.b_corr}, {"pairs", pairs}};
        }
        out << j.dump() << "\n";
    } else {
        out << "c1 vector: (";
        for (std::size_t i = 0; i < report.c1.size(); ++i) out << (i ? "," : "") << report.c1[i].str();
        out << ") in Z^" << report.c1.size() << "/im A_M\n";
        out << "chi/e = " << to_string(report.chi_over_e)
            << (report.integer_flag ? " (integer)" : " (not an integer)") << "\n";
        const auto pairs = normalize(d).pairs;
        for (std::size_t jx = 0; jx < pairs.size(); ++jx)
            out << "alpha_" << jx + 1 << " | (beta_" << jx + 1 << "*chi/e - 1): "
                << (report.divisibility[jx] ? "yes" : "no") << "\n";
        out << "c1 trivial: " << (report.trivial ? "yes" : "no") << "\n";
        if (report.lattice_witness) {
            out << "lattice witness: (";
            const auto& w = *report.lattice_witness;
            for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i].str();
            out << ")\n";
        }
        if (report.trivial) {
            TrivializationLedger ledger = trivialization_data(d);
            out << "b correction: " << ledger.b_corr << "\n";
            for (const PairCorrection& c : ledger.pairs)
                out << "pair (" << c.alpha << "," << c.beta << "): a=" << c.a << " p=" << c.p
                    << " q=" << c.q << " d_rotation=" << c.d_rotation << "\n";
        }
    }
    return 0;
}

Json classification_json(const ClassificationResult& r) {
    return Json{{"family", r.family.to_string()},
                {"data", render(r.data)},
                {"e", to_string(euler_number(r.data))},
                {"chi", to_string(orbifold_euler_char(r.data))},
                {"chi_over_e", to_string(r.certificate.chi_over_e)}};
}

int cmd_classify(const std::string& chi_mode, int max_alpha, int max_b, std::int64_t genus,
                 const std::vector<std::int64_t>& alphas, bool json, std::ostream& out) {
    std::vector<ClassificationResult> results;
    if (chi_mode == "pos") {
        results = classify_positive_chi(max_alpha);
    } else if (chi_mode == "zero") {
        results = classify_zero_chi(max_b);
    } else {
        results.push_back(negative_chi_family(genus, alphas));
    }
    if (json) {
        Json j = Json::array();
        for (const auto& r : results) j.push_back(classification_json(r));
        out << j.dump() << "\n";
    } else {
        for (const auto& r : results)
            out << r.family.to_string() << "  " << render(r.data)
                << "  e=" << to_string(euler_number(r.data))
                << " chi=" << to_string(orbifold_euler_char(r.data)) << "\n";
    }
    return 0;
}

int cmd_indices(const DataOptions& opt, std::int64_t max_period, bool json, std::ostream& out,
                std::ostream& err) {
    SeifertData d = load_data(opt, err);
    SeifertData norm = normalize(d);
    const bool degenerate = orbifold_euler_char(d) == 0;
    if (degenerate && !json)
        err << "note: chi = 0 is degenerate; every rotation path is constant and every index 0\n";
    struct Row {
        std::string orbit;
        std::int64_t m, index, grade;
    };
    std::vector<Row> rows;
    for (std::int64_t m = 1; m <= max_period; ++m) {
        OrbitId orbit = OrbitId::principal(m);
        rows.push_back({"principal", m, rs_index(d, orbit), grading(d, orbit)});
    }
    for (int j = 0; j < static_cast<int>(norm.pairs.size()); ++j)
        for (std::int64_t m = 1; m <= max_period; ++m) {
            OrbitId orbit = OrbitId::exceptional(j, m);
            std::string name = "exceptional[" + std::to_string(j + 1) + "](alpha=" +
                               std::to_string(norm.pairs[j].alpha) + ")";
            rows.push_back({name, m, rs_index(d, orbit), grading(d, orbit)});
        }
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["degenerate"] = degenerate;
        Json orbits = Json::array();
        for (const Row& r : rows)
            orbits.push_back(Json{{"orbit", r.orbit},
                                  {"multiplicity", r.m},
                                  {"rs_index", r.index},
                                  {"grading", r.grade}});
        j["orbits"] = orbits;
        out << j.dump() << "\n";
    } else {
        out << std::left << std::setw(28) << "orbit" << std::setw(6) << "m" << std::setw(10)
            << "rs_index" << "grading\n";
        for (const Row& r : rows)
            out << std::left << std::setw(28) << r.orbit << std::setw(6) << r.m << std::setw(10)
                << r.index << r.grade << "\n";
    }
    return 0;
}

int resolve_pmax(const SeifertData& d, int pmax) {
    if (pmax >= 0) return pmax;
    std::int64_t lcm = 1;
    for (const auto& [alpha, beta] : normalize(d).pairs) lcm = std::lcm(lcm, alpha);
    return static_cast<int>(3 * lcm);
}

void render_grid(const E1Page& page, std::ostream& out) {
    if (page.entries.empty()) {
        out << "(empty page)\n";
        return;
    }
    std::int64_t q_min = page.entries.begin()->first.second, q_max = q_min;
    for (const auto& [pq, rank] : page.entries) {
        q_min = std::min(q_min, pq.second);
        q_max = std::max(q_max, pq.second);
    }
    const int width = 4;
    auto emit = [&out](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };
    std::ostringstream header;
    header << std::setw(8) << "q \\ p" << " |";
    for (int p = 1; p <= page.p_max; ++p) header << std::setw(width) << p;
    emit(header.str());
    emit(std::string(8, '-') + "-+" + std::string(static_cast<std::size_t>(width) * page.p_max, '-'));
    for (std::int64_t q = q_max; q >= q_min; --q) {
        std::ostringstream line;
        line << std::setw(8) << q << " |";
        for (int p = 1; p <= page.p_max; ++p) {
            auto it = page.entries.find({p, q});
            if (it == page.entries.end())
                line << std::setw(width) << "";
            else
                line << std::setw(width) << it->second;
        }
        emit(line.str());
    }
}

Json entries_json(const E1Page& page) {
    Json entries = Json::array();
    for (const auto& [pq, rank] : page.entries)
        entries.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"rank", rank}});
    return entries;
}

int cmd_e1(const DataOptions& opt, int pmax, bool json, bool grid, std::ostream& out,
           std::ostream& err) {
    SeifertData d = load_data(opt, err);
    E1Page page = e1_page(d, resolve_pmax(d, pmax));
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["p_max"] = page.p_max;
        j["chi_over_e"] = page.chi_over_e;
        j["period_lcm"] = page.period_lcm;
        j["entries"] = entries_json(page);
        out << j.dump() << "\n";
    } else if (grid) {
        render_grid(page, out);
    } else {
        for (const auto& [pq, rank] : page.entries)
            out << "(" << pq.first << "," << pq.second << "): " << rank << "\n";
    }
    return 0;
}

std::string verdict_string(const SHResult& result, int p_max) {
    std::string v = result.lacunary ? "lacunary" : "non-lacunary";
    v += " (window p<=" + std::to_string(p_max) + ")";
    if (result.window_incomplete) v += " [window-incomplete]";
    return v;
}

int cmd_sh(const DataOptions& opt, int pmax, bool json, std::ostream& out, std::ostream& err) {
    SeifertData d = load_data(opt, err);
    E1Page page = e1_page(d, resolve_pmax(d, pmax));
    SHResult result = lacunarity_check(page);
    if (result.lacunary) result = sh_ranks(page);
    if (json) {
        Json j;
        j["data"] = opt.text;
        j["p_max"] = page.p_max;
        j["verdict"] = verdict_string(result, page.p_max);
        j["lacunary"] = result.lacunary;
        j["window_incomplete"] = result.window_incomplete;
        Json ranks = Json::array();
        for (auto it = result.ranks.rbegin(); it != result.ranks.rend(); ++it)
            ranks.push_back(Json{{"degree", it->first}, {"rank", it->second}});
        j["ranks"] = ranks;
        j["stable_range"] = Json::array({result.stable_min, result.stable_max});
        if (result.detected_period)
            j["detected_period"] = *result.detected_period;
        else
            j["detected_period"] = nullptr;
        Json diffs = Json::array();
        for (const auto& pd : result.potential_differentials)
            diffs.push_back(Json{{"from", Json::array({pd.from.first, pd.from.second})},
                                 {"to", Json::array({pd.to.first, pd.to.second})},
                                 {"r", pd.r}});
        j["potential_differentials"] = diffs;
        out << j.dump() << "\n";
        return result.lacunary ? 0 : 1;
    }
    if (!result.lacunary) {
        out << "verdict: " << verdict_string(result, page.p_max) << "\n";
        for (const auto& pd : result.potential_differentials)
            out << "potential d^" << pd.r << ": (" << pd.from.first << "," << pd.from.second
                << ") -> (" << pd.to.first << "," << pd.to.second << ")\n";
        err << "error: E1 page admits potential differentials; SH not determined\n";
        return 1;
    }
    for (auto it = result.ranks.rbegin(); it != result.ranks.rend(); ++it)
        out << it->first << ": " << it->second << "\n";
    out << "verdict: " << verdict_string(result, page.p_max) << "\n";
    if (result.detected_period) out << "period: " << *result.detected_period << "\n";
    return 0;
}

int cmd_ade(const std::string& type, bool json, std::ostream& out) {
    if (type.size() < 2) throw std::domain_error("expected a type like A3, D5 or E8");
    char series = type[0];
    int index = 0;
    try {
        index = std::stoi(type.substr(1));
    } catch (const std::exception&) {
        throw std::domain_error("expected a type like A3, D5 or E8");
    }
    SeifertData d = ade_link(series, index);
    if (json) {
        Json j;
        j["type"] = type;
        j["data"] = render(d);
        j["normalized"] = render(normalize(d));
        j["e"] = to_string(euler_number(d));
        j["chi"] = to_string(orbifold_euler_char(d));
        out << j.dump() << "\n";
    } else {
        out << render(d) << "\n";
    }
    return 0;
}

int cmd_ellipsoid(std::int64_t a, std::int64_t b, bool json, std::ostream& out, std::ostream& err) {
    SeifertData d = ellipsoid(a, b);
    Rational e = euler_number(d);
    bool expected = abs(e) == Rational(1, a * b);
    if (!expected)
        err << "warning: |e| = " << to_string(abs(e)) << " differs from 1/(a*b) = "
            << to_string(Rational(1, a * b)) << "\n";
    if (json) {
        Json j;
        j["a"] = a;
        j["b"] = b;
        j["data"] = render(d);
        j["e"] = to_string(e);
        j["euler_matches_reciprocal"] = expected;
        out << j.dump() << "\n";
    } else {
        out << render(d) << "\n";
    }
    return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of 3-dimensional Besse contact manifolds from Seifert data"};
    app.require_subcommand(1);

    DataOptions data;
    bool json = false;
    bool grid = false;
    int pmax = -1;
    int max_alpha = 8;
    int max_b = 5;
    std::int64_t genus = 1;
    std::int64_t max_period = 3;
    std::vector<std::int64_t> alphas;
    std::string chi_mode = "pos";
    std::string ade_type;
    std::int64_t ell_a = 1, ell_b = 1;

    auto add_data = [&](CLI::App* cmd) {
        cmd->add_option("data", data.text, "Seifert data \"(b,g;(a1,b1),...)\"")->required();
        cmd->add_flag("--reverse-orientation", data.reverse, "flip the orientation first");
        cmd->add_flag("--json", json, "machine-readable output");
    };

    add_data(app.add_subcommand("invariants", "Euler number, orbifold Euler characteristic, c1, H_1"));
    add_data(app.add_subcommand("homology", "integral and mod-2 homology"));
    add_data(app.add_subcommand("chern", "c1 representative, triviality tests, trivialization ledger"));

    auto* classify_cmd = app.add_subcommand("classify", "enumerate c1 = 0 Besse data");
    classify_cmd->add_option("--chi", chi_mode, "family: pos, zero or neg-family")
        ->check(CLI::IsMember({"pos", "zero", "neg-family"}));
    classify_cmd->add_option("--max-alpha", max_alpha, "bound on the alpha_j (pos)")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_option("--max-b", max_b, "bound on b (zero)")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--genus", genus, "genus (neg-family)")->check(CLI::NonNegativeNumber);
    classify_cmd->add_option("--alphas", alphas, "fiber multiplicities (neg-family)")->delimiter(',');
    classify_cmd->add_flag("--json", json, "machine-readable output");

    auto* indices_cmd = app.add_subcommand("indices", "Robbin-Salamon indices of closed Reeb orbits");
    add_data(indices_cmd);
    indices_cmd->add_option("--max-period", max_period, "largest multiplicity listed")
        ->check(CLI::PositiveNumber);

    auto* e1_cmd = app.add_subcommand("e1", "E1 page of the Morse-Bott spectral sequence");
    add_data(e1_cmd);
    e1_cmd->add_option("--pmax", pmax, "filtration window (default 3*lcm(alpha_j))")
        ->check(CLI::NonNegativeNumber);
    e1_cmd->add_flag("--grid", grid, "chart layout, p rightward and q upward");

    auto* sh_cmd = app.add_subcommand("sh", "positive symplectic homology ranks from a lacunary page");
    add_data(sh_cmd);
    sh_cmd->add_option("--pmax", pmax, "filtration window (default 3*lcm(alpha_j))")
        ->check(CLI::NonNegativeNumber);

    auto* ade_cmd = app.add_subcommand("ade", "Seifert data of a simple singularity link");
    ade_cmd->add_option("type", ade_type, "A<l>, D<l>, E6, E7 or E8")->required();
    ade_cmd->add_flag("--json", json, "machine-readable output");

    auto* ell_cmd = app.add_subcommand("ellipsoid", "Seifert data of the ellipsoid contact form");
    ell_cmd->add_option("a", ell_a, "first weight")->required();
    ell_cmd->add_option("b", ell_b, "second weight")->required();
    ell_cmd->add_flag("--json", json, "machine-readable output");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("invariants")) return cmd_invariants(data, json, out, err);
        if (app.got_subcommand("homology")) return cmd_homology(data, json, out, err);
        if (app.got_subcommand("chern")) return cmd_chern(data, json, out, err);
        if (app.got_subcommand("classify"))
            return cmd_classify(chi_mode, max_alpha, max_b, genus, alphas, json, out);
        if (app.got_subcommand("indices")) return cmd_indices(data, max_period, json, out, err);
        if (app.got_subcommand("e1")) return cmd_e1(data, pmax, json, grid, out, err);
        if (app.got_subcommand("sh")) return cmd_sh(data, pmax, json, out, err);
        if (app.got_subcommand("ade")) return cmd_ade(ade_type, json, out);
        if (app.got_subcommand("ellipsoid")) return cmd_ellipsoid(ell_a, ell_b, json, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace besse::cli
