#include "qdg/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "qdg/errors.hpp"

namespace qdg::io {

namespace {

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

const char* condition_name(Condition c) {
    switch (c) {
    case Condition::prop2: return "prop2";
    case Condition::prop3: return "prop3";
    case Condition::prop4: return "prop4";
    case Condition::prop5: return "prop5";
    }
    return "?";
}

} // namespace

LabeledGraph read_edge_list(std::istream& in) {
    std::string line;
    int N = 0, m = 0, n = 0;
    bool have_header = false;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> loops;
    std::vector<int> perm;

    while (std::getline(in, line)) {
        if (blank_or_comment(line)) continue;
        std::istringstream ss(line);
        if (!have_header) {
            if (!(ss >> N >> m >> n)) throw ParseError("edge list: bad header, expected \"N m n\"");
            std::string rest;
            if (ss >> rest) throw ParseError("edge list: trailing tokens after header");
            if (N < 1 || m < 1 || n < 1) throw ParseError("edge list: nonpositive sizes in header");
            if (N != m * n)
                throw DimensionError("edge list: N = " + std::to_string(N) + " but m*n = " +
                                     std::to_string(m * n));
            have_header = true;
            continue;
        }
        std::string first;
        ss >> first;
        if (first == "perm:") {
            perm.clear();
            int p;
            while (ss >> p) perm.push_back(p);
            if (static_cast<int>(perm.size()) != N)
                throw ParseError("edge list: perm line must list all " + std::to_string(N) +
                                 " vertices");
            continue;
        }
        int u = 0, v = 0;
        std::istringstream edge_ss(line);
        if (!(edge_ss >> u >> v)) throw ParseError("edge list: bad edge line \"" + line + "\"");
        std::string rest;
        if (edge_ss >> rest) throw ParseError("edge list: trailing tokens on edge line");
        if (u == v)
            loops.push_back(u);
        else
            edges.emplace_back(u, v);
    }
    if (!have_header) throw ParseError("edge list: missing header line");

    try {
        Graph g(N, edges, loops);
        if (perm.empty()) return {std::move(g), ClusterLabeling::natural(m, n)};
        return {std::move(g), ClusterLabeling(m, n, perm)};
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const LabeledGraph& lg) {
    const auto& g = lg.graph;
    const auto& lab = lg.labeling;
    out << g.vertex_count() << ' ' << lab.m() << ' ' << lab.n() << '\n';
    if (!lab.is_natural()) {
        out << "perm:";
        for (int v : lab.permutation()) out << ' ' << v;
        out << '\n';
    }
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    for (int v : g.loops()) out << v << ' ' << v << '\n';
}

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw ParseError("graph6: empty line");

    const unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126) throw ParseError("graph6: long form (N > 62) not supported");
    if (first < 63 || first > 125) throw ParseError("graph6: invalid size character");
    const int n = first - 63;
    if (n == 0) throw ParseError("graph6: zero-vertex graph unsupported");

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " characters for n = " +
                         std::to_string(n) + ", got " + std::to_string(line.size()));

    std::vector<int> bitstream;
    bitstream.reserve(static_cast<std::size_t>(bits + 6));
    for (std::size_t k = 1; k < line.size(); ++k) {
        const unsigned char c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid data character");
        const int v = c - 63;
        for (int b = 5; b >= 0; --b) bitstream.push_back((v >> b) & 1);
    }
    for (std::size_t k = static_cast<std::size_t>(bits); k < bitstream.size(); ++k)
        if (bitstream[k]) throw ParseError("graph6: nonzero padding bits");

    // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    std::vector<std::pair<int, int>> edges;
    std::size_t at = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++at)
            if (bitstream[at]) edges.emplace_back(i + 1, j + 1);
    return Graph(n, edges);
}

nlohmann::json to_json(const DiscordReport& report) {
    nlohmann::json per_pair = nlohmann::json::array();
    for (const auto& e : report.breakdown.per_pair) {
        nlohmann::json entry;
        entry["condition"] = condition_name(e.condition);
        switch (e.condition) {
        case Condition::prop2:
        case Condition::prop5:
            entry["mu"] = e.mu;
            entry["nu_or_alpha_beta"] = e.nu;
            break;
        case Condition::prop3:
            entry["mu"] = nlohmann::json::array({e.mu, e.nu});
            entry["nu_or_alpha_beta"] = nlohmann::json::array({e.alpha, e.beta});
            break;
        case Condition::prop4:
            entry["mu"] = e.mu;
            entry["nu_or_alpha_beta"] = nlohmann::json::array({e.alpha, e.beta});
            break;
        }
        entry["i"] = e.i;
        entry["j"] = e.j;
        entry["value"] = e.value;
        per_pair.push_back(std::move(entry));
    }
    return nlohmann::json{{"m", report.m},
                          {"n", report.n},
                          {"s", sign_value(report.sign)},
                          {"prop2", report.breakdown.prop2_total},
                          {"prop3", report.breakdown.prop3_total},
                          {"prop4", report.breakdown.prop4_total},
                          {"prop5", report.breakdown.prop5_total},
                          {"qd", report.qd_total},
                          {"zero_discord", report.zero_discord()},
                          {"per_pair", std::move(per_pair)}};
}

nlohmann::json to_json(const oracle::EquivalenceSummary& summary) {
    return nlohmann::json{{"checked", summary.checked},
                          {"mismatches", summary.mismatches},
                          {"mode", summary.mode},
                          {"seed", summary.seed}};
}

nlohmann::json to_json(const oracle::EntropyReport& report) {
    return nlohmann::json{{"s_rho", report.s_rho},
                          {"s_rho_b", report.s_rho_b},
                          {"conditional", report.conditional},
                          {"discord_fixed_basis", report.discord_fixed_basis}};
}

const char* const csv_header = "graph_id,m,n,s,prop2,prop3,prop4,prop5,qd,zero_discord";

std::string csv_row(const std::string& graph_id, const DiscordReport& r) {
    std::ostringstream out;
    out << graph_id << ',' << r.m << ',' << r.n << ',' << sign_value(r.sign) << ','
        << r.breakdown.prop2_total << ',' << r.breakdown.prop3_total << ','
        << r.breakdown.prop4_total << ',' << r.breakdown.prop5_total << ',' << r.qd_total << ','
        << (r.zero_discord() ? "true" : "false");
    return out.str();
}

std::string plain_report(const std::string& graph_id, const DiscordReport& r) {
    std::ostringstream out;
    out << graph_id << "  m=" << r.m << " n=" << r.n
        << " state=" << (r.sign == Sign::laplacian ? "rho_l" : "rho_q") << " (s="
        << sign_value(r.sign) << ")\n"
        << "  prop2=" << r.breakdown.prop2_total << " prop3=" << r.breakdown.prop3_total
        << " prop4=" << r.breakdown.prop4_total << " prop5=" << r.breakdown.prop5_total << '\n'
        << "  QD=" << r.qd_total << (r.zero_discord() ? "  (zero discord)" : "") << '\n';
    return out.str();
}

} // namespace qdg::io
