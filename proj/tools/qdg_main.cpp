// qdg: compute, classify, verify, generate, and enumerate quantum discord of
// graph states from the command line.
//
// Exit codes: 0 ok, 1 internal error, 2 parse error, 3 dimension/domain
// error, 4 verification mismatch.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdg/classify.hpp"
#include "qdg/discord.hpp"
#include "qdg/entropy.hpp"
#include "qdg/errors.hpp"
#include "qdg/generators.hpp"
#include "qdg/io.hpp"
#include "qdg/oracle.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string input;
    std::string family;
    std::vector<double> params;
    int m = 0;
    int n = 0;
    std::string labeling; // "", "natural", "exhaustive", "random", or a file path
    std::string sign = "both";
    std::string format = "json";
    std::string output;
    std::string id;
    std::uint64_t seed = 1;
    long long trials = 10000;
    int order = 3;
    int graphs = 200;
    bool minimize = false;
};

std::vector<qdg::Sign> parse_signs(const std::string& sign) {
    if (sign == "l") return {qdg::Sign::laplacian};
    if (sign == "q") return {qdg::Sign::signless};
    if (sign == "both") return {qdg::Sign::laplacian, qdg::Sign::signless};
    throw qdg::ParseError("--sign must be l, q or both");
}

int param_at(const Options& opt, std::size_t k, const char* what) {
    if (k >= opt.params.size())
        throw qdg::ParseError(std::string("--params: missing ") + what + " for family " + opt.family);
    return static_cast<int>(opt.params[k]);
}

qdg::LabeledGraph make_family(const Options& opt) {
    using namespace qdg::gen;
    const std::string& f = opt.family;
    if (f == "complete") {
        const int m = opt.params.size() >= 2 ? param_at(opt, 0, "m") : opt.m;
        const int n = opt.params.size() >= 2 ? param_at(opt, 1, "n") : opt.n;
        return complete_graph(m, n);
    }
    if (f == "complete_bipartite") {
        const int n = !opt.params.empty() ? param_at(opt, 0, "n") : opt.n;
        return complete_bipartite(n);
    }
    if (f == "partially_symmetric_regular")
        return partially_symmetric_regular(param_at(opt, 0, "n"), param_at(opt, 1, "r"), opt.seed);
    if (f == "regular_normal_block")
        return regular_normal_block(param_at(opt, 0, "n"), param_at(opt, 1, "r"), opt.seed);
    if (f == "werner") return werner_graph(param_at(opt, 0, "d"));
    if (f == "k33_twisted") return k33_twisted();
    if (f == "separable_two_qubit") return separable_two_qubit();
    if (f == "random") {
        const int m = opt.params.size() >= 2 ? param_at(opt, 0, "m") : opt.m;
        const int n = opt.params.size() >= 2 ? param_at(opt, 1, "n") : opt.n;
        const double p = opt.params.size() >= 3 ? opt.params[2] : 0.5;
        return random_graph(m, n, p, opt.seed);
    }
    throw qdg::ParseError("unknown family \"" + f + "\" (families: complete, complete_bipartite, "
                          "partially_symmetric_regular, regular_normal_block, werner, k33_twisted, "
                          "separable_two_qubit, random)");
}

std::vector<int> read_permutation_file(const std::string& path, int N) {
    std::ifstream in(path);
    if (!in) throw qdg::ParseError("cannot open labeling file " + path);
    std::vector<int> perm;
    std::string token;
    while (in >> token) {
        if (token == "perm:") continue;
        try {
            perm.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw qdg::ParseError("labeling file " + path + ": bad token \"" + token + "\"");
        }
    }
    if (static_cast<int>(perm.size()) != N)
        throw qdg::ParseError("labeling file " + path + ": expected " + std::to_string(N) +
                              " entries, got " + std::to_string(perm.size()));
    return perm;
}

qdg::LabeledGraph load_graph(const Options& opt) {
    qdg::LabeledGraph lg = [&] {
        if (!opt.input.empty()) {
            if (opt.input == "-") return qdg::io::read_edge_list(std::cin);
            std::ifstream in(opt.input);
            if (!in) throw qdg::ParseError("cannot open input file " + opt.input);
            return qdg::io::read_edge_list(in);
        }
        if (!opt.family.empty()) return make_family(opt);
        throw qdg::ParseError("either --input or --family is required");
    }();
    if (opt.m > 0 && opt.n > 0 &&
        (opt.m != lg.labeling.m() || opt.n != lg.labeling.n())) {
        if (opt.m * opt.n != lg.graph.vertex_count())
            throw qdg::DimensionError("graph has " + std::to_string(lg.graph.vertex_count()) +
                                      " vertices, but m*n = " + std::to_string(opt.m * opt.n));
        std::vector<int> perm = lg.labeling.permutation();
        lg.labeling = qdg::ClusterLabeling(opt.m, opt.n, perm);
    }
    if (opt.labeling == "natural") {
        lg.labeling = qdg::ClusterLabeling::natural(lg.labeling.m(), lg.labeling.n());
    } else if (!opt.labeling.empty() && opt.labeling != "exhaustive" && opt.labeling != "random") {
        std::vector<int> perm = read_permutation_file(opt.labeling, lg.graph.vertex_count());
        lg.labeling = qdg::ClusterLabeling(lg.labeling.m(), lg.labeling.n(), perm);
    }
    return lg;
}

std::string default_id(const Options& opt) {
    if (!opt.id.empty()) return opt.id;
    if (!opt.family.empty()) return opt.family;
    if (!opt.input.empty() && opt.input != "-")
        return std::filesystem::path(opt.input).filename().string();
    return "-";
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw qdg::ParseError("cannot open output file " + opt.output);
    return file;
}

int cmd_compute(const Options& opt) {
    qdg::LabeledGraph lg = load_graph(opt);
    const std::string id = default_id(opt);
    std::vector<qdg::DiscordReport> reports;
    for (qdg::Sign s : parse_signs(opt.sign))
        reports.push_back(qdg::qd(lg.graph, lg.labeling, s));

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(qdg::io::to_json(r));
        out << arr.dump(2) << '\n';
    } else if (opt.format == "csv") {
        out << qdg::io::csv_header << '\n';
        for (const auto& r : reports) out << qdg::io::csv_row(id, r) << '\n';
    } else if (opt.format == "plain") {
        for (const auto& r : reports) out << qdg::io::plain_report(id, r);
    } else {
        throw qdg::ParseError("--format must be json, csv or plain");
    }
    return 0;
}

int cmd_classify(const Options& opt) {
    qdg::LabeledGraph lg = load_graph(opt);
    const int m = opt.m > 0 ? opt.m : lg.labeling.m();
    const int n = opt.n > 0 ? opt.n : lg.labeling.n();
    const int N = lg.graph.vertex_count();
    const bool exhaustive = opt.labeling == "random" ? false
                          : opt.labeling == "exhaustive" ? true
                                                         : N <= qdg::exhaustive_labeling_cap;

    json per_sign = json::array();
    for (qdg::Sign s : parse_signs(opt.sign)) {
        auto r = qdg::classify_labelings(lg.graph, m, n, s, exhaustive, opt.trials, opt.seed);
        per_sign.push_back(json{{"s", qdg::sign_value(s)},
                                {"min_qd", r.min_qd},
                                {"min_labeling", r.min_labeling},
                                {"max_qd", r.max_qd},
                                {"max_labeling", r.max_labeling},
                                {"zero_discord_found", r.zero_discord_found},
                                {"searched", r.searched},
                                {"mode", r.mode}});
    }
    json doc{{"graph_id", default_id(opt)}, {"m", m}, {"n", n}, {"per_sign", per_sign}};

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "plain") {
        out << doc["graph_id"].get<std::string>() << "  m=" << m << " n=" << n << '\n';
        for (const auto& e : per_sign)
            out << "  s=" << e["s"].get<int>() << ": min=" << e["min_qd"].get<long long>()
                << " max=" << e["max_qd"].get<long long>()
                << " zero_found=" << (e["zero_discord_found"].get<bool>() ? "yes" : "no")
                << " searched=" << e["searched"].get<long long>() << " ("
                << e["mode"].get<std::string>() << ")\n";
    } else {
        out << doc.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    auto equiv = qdg::oracle::exhaustive_equivalence(opt.order, opt.trials, opt.seed);
    auto agree = qdg::oracle::random_graph_agreement(opt.graphs, opt.m > 0 ? opt.m : 2,
                                                     opt.n > 0 ? opt.n : 4, opt.seed);
    json suites = json::array();
    suites.push_back(qdg::io::to_json(equiv));
    suites.push_back(json{{"checked", agree.checked},
                          {"mismatches", agree.mismatches},
                          {"mode", "sampled"},
                          {"seed", agree.seed}});

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    out << suites.dump(2) << '\n';
    std::cerr << "measure equivalence: " << equiv.checked << " checks, " << equiv.mismatches
              << " mismatches (" << equiv.mode << ")\n"
              << "qd vs matrix oracle: " << agree.checked << " checks, " << agree.mismatches
              << " mismatches\n";
    return equiv.mismatches + agree.mismatches > 0 ? 4 : 0;
}

int cmd_generate(const Options& opt) {
    if (opt.family.empty()) throw qdg::ParseError("generate requires --family");
    qdg::LabeledGraph lg = make_family(opt);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    qdg::io::write_edge_list(out, lg);
    return 0;
}

int cmd_enumerate(const Options& opt) {
    if (opt.m < 1 || opt.n < 1) throw qdg::ParseError("enumerate requires --m and --n");
    const auto signs = parse_signs(opt.sign);
    const bool csv = opt.format == "csv";
    if (!csv && opt.format != "json") throw qdg::ParseError("enumerate --format must be json or csv");

    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (csv) {
        out << qdg::io::csv_header;
        if (opt.minimize) out << ",min_qd_over_labelings";
        out << '\n';
    }

    long long processed = 0, skipped = 0;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        qdg::Graph g(1, {});
        try {
            g = qdg::io::parse_graph6(line);
            if (g.vertex_count() != opt.m * opt.n)
                throw qdg::DimensionError("graph on " + std::to_string(g.vertex_count()) +
                                          " vertices does not fit m*n");
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping line \"" << line << "\": " << e.what() << '\n';
            ++skipped;
            continue;
        }
        const auto lab = qdg::ClusterLabeling::natural(opt.m, opt.n);
        const auto decomp = qdg::block_decompose(g, lab);
        const bool has_state = g.total_degree() > 0;
        for (qdg::Sign s : signs) {
            const auto breakdown = qdg::collect_violations(decomp, s);
            std::optional<long long> min_qd;
            if (opt.minimize && has_state) {
                auto r = qdg::classify_labelings(g, opt.m, opt.n, s,
                                                 g.vertex_count() <= qdg::exhaustive_labeling_cap,
                                                 opt.trials, opt.seed);
                min_qd = r.min_qd;
            }
            if (csv) {
                out << line << ',' << opt.m << ',' << opt.n << ',' << qdg::sign_value(s) << ','
                    << breakdown.prop2_total << ',' << breakdown.prop3_total << ','
                    << breakdown.prop4_total << ',' << breakdown.prop5_total << ','
                    << breakdown.total() << ','
                    << (has_state ? (breakdown.total() == 0 ? "true" : "false") : "");
                if (opt.minimize) {
                    out << ',';
                    if (min_qd) out << *min_qd;
                }
                out << '\n';
            } else {
                json row{{"graph_id", line},
                         {"m", opt.m},
                         {"n", opt.n},
                         {"s", qdg::sign_value(s)},
                         {"prop2", breakdown.prop2_total},
                         {"prop3", breakdown.prop3_total},
                         {"prop4", breakdown.prop4_total},
                         {"prop5", breakdown.prop5_total},
                         {"qd", breakdown.total()}};
                if (has_state)
                    row["zero_discord"] = breakdown.total() == 0;
                else
                    row["zero_discord"] = nullptr;
                if (min_qd) row["min_qd_over_labelings"] = *min_qd;
                out << row.dump() << '\n';
            }
        }
        ++processed;
    }
    std::cerr << "enumerate: " << processed << " graphs, " << skipped << " lines skipped\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum discord of graph Laplacian states"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "edge-list file (\"-\" for stdin)");
        cmd->add_option("--family", opt.family, "generator family name");
        cmd->add_option("--params", opt.params, "family parameters, in family order");
        cmd->add_option("--m", opt.m, "cluster count");
        cmd->add_option("--n", opt.n, "cluster size");
        cmd->add_option("--labeling", opt.labeling,
                        "natural | exhaustive | random | permutation file");
        cmd->add_option("--sign", opt.sign, "l | q | both (default both)");
        cmd->add_option("--format", opt.format, "json | csv | plain");
        cmd->add_option("--output", opt.output, "write to file instead of stdout");
        cmd->add_option("--id", opt.id, "graph id used in reports");
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--trials", opt.trials, "sampling trial count");
    };

    CLI::App* compute = app.add_subcommand("compute", "quantum discord of one labeled graph");
    add_common(compute);
    CLI::App* classify = app.add_subcommand("classify", "min/max discord over vertex labelings");
    add_common(classify);
    CLI::App* verify = app.add_subcommand("verify", "combinatorial-vs-matrix oracle equivalence");
    add_common(verify);
    verify->add_option("--order", opt.order, "max binary-matrix order (exhaustive <= 3)");
    verify->add_option("--graphs", opt.graphs, "random graphs for the qd agreement suite");
    CLI::App* generate = app.add_subcommand("generate", "emit a family instance as an edge list");
    add_common(generate);
    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "census of graph6 graphs on stdin");
    add_common(enumerate_cmd);
    enumerate_cmd->add_flag("--min-labeling", opt.minimize,
                            "also report the per-labeling minimum discord");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (generate->parsed()) return cmd_generate(opt);
        if (enumerate_cmd->parsed()) return cmd_enumerate(opt);
    } catch (const qdg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qdg::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
